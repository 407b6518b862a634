#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbg/graph.hpp"

namespace hbg {

enum class ExportFormat { Adjacency, Dot, Graph6 };

const char* to_string(ExportFormat format) noexcept;
// Throws UnsupportedFormat.
ExportFormat parse_export_format(std::string_view name);

// adjacency: "label: n1 n2 n3" per vertex, neighbors ascending.
// dot:       undirected graph, each edge once with the lower label first.
// graph6:    header-less graph6 line, vertex i is label i+1.
std::string export_graph(const HbGraph& graph, ExportFormat format);
// Throws InvalidSpec for an invalid spec.
std::string export_graph(const ChordIndexSpec& spec, ExportFormat format);

std::string encode_graph6(const std::vector<std::vector<int>>& adjacency);
// Returns 0-based adjacency lists, sorted. Throws ParseError.
std::vector<std::vector<int>> decode_graph6(std::string_view text);

// Parses the adjacency export back into 0-based neighbor lists. Throws ParseError.
std::vector<std::vector<int>> parse_adjacency(std::string_view text);

// Rebuilds an HbGraph from 0-based neighbor lists whose Hamiltonian cycle is
// 1 -> 2 -> ... -> n. Throws MalformedGraph.
HbGraph graph_from_adjacency(const std::vector<std::vector<int>>& adjacency);

}  // namespace hbg
