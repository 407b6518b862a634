#include "hbg/export.hpp"

#include <algorithm>
#include <sstream>

namespace hbg {

const char* to_string(ExportFormat format) noexcept {
    switch (format) {
    case ExportFormat::Adjacency: return "adjacency";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::Graph6: return "graph6";
    }
    return "adjacency";
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "adjacency" || name == "adj") return ExportFormat::Adjacency;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "graph6" || name == "g6") return ExportFormat::Graph6;
    throw Error(ErrorCode::UnsupportedFormat, "export format '" + std::string(name) + "'");
}

namespace {

std::vector<std::vector<int>> adjacency_of(const HbGraph& graph) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(graph.order()));
    for (int v = 0; v < graph.order(); ++v) {
        const auto nb = graph.neighbors0(v);
        adj[v].assign(nb.begin(), nb.end());
        std::sort(adj[v].begin(), adj[v].end());
    }
    return adj;
}

void put_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace

std::string encode_graph6(const std::vector<std::vector<int>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        for (int w : adjacency[v]) {
            if (w < 0 || static_cast<std::size_t>(w) >= n) {
                throw Error(ErrorCode::MalformedGraph, "neighbor out of range");
            }
            edge[v][w] = edge[w][v] = true;
        }
    }
    std::string out;
    put_size(out, n);
    int bits = 0;
    int acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (edge[i][j] ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

std::vector<std::vector<int>> decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    for (char c : text) {
        if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "graph6: byte outside 63..126");
    }
    std::size_t pos = 0;
    auto take = [&](int count) {
        std::size_t value = 0;
        for (int k = 0; k < count; ++k) {
            if (pos >= text.size()) throw Error(ErrorCode::ParseError, "graph6: truncated size field");
            value = (value << 6) | static_cast<std::size_t>(text[pos++] - 63);
        }
        return value;
    };
    if (text.empty()) throw Error(ErrorCode::ParseError, "graph6: empty input");
    std::size_t n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = (pairs + 5) / 6;
    if (text.size() - pos != need) {
        throw Error(ErrorCode::ParseError, "graph6: expected " + std::to_string(need) + " data bytes, got " +
                                               std::to_string(text.size() - pos));
    }
    std::vector<std::vector<int>> adj(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::string export_graph(const HbGraph& graph, ExportFormat format) {
    const auto adj = adjacency_of(graph);
    std::ostringstream out;
    switch (format) {
    case ExportFormat::Adjacency:
        for (std::size_t v = 0; v < adj.size(); ++v) {
            out << v + 1 << ":";
            for (int w : adj[v]) out << ' ' << w + 1;
            out << '\n';
        }
        break;
    case ExportFormat::Dot:
        out << "graph hbg {\n";
        for (std::size_t v = 0; v < adj.size(); ++v) {
            for (int w : adj[v]) {
                if (static_cast<std::size_t>(w) > v) out << "  " << v + 1 << " -- " << w + 1 << ";\n";
            }
        }
        out << "}\n";
        break;
    case ExportFormat::Graph6:
        out << encode_graph6(adj) << '\n';
        break;
    }
    return out.str();
}

std::string export_graph(const ChordIndexSpec& spec, ExportFormat format) {
    return export_graph(build_graph(spec), format);
}

std::vector<std::vector<int>> parse_adjacency(std::string_view text) {
    std::vector<std::vector<int>> adj;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fail = [&](const std::string& why) {
            return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
        };
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw fail("missing ':'");
        std::istringstream head(line.substr(0, colon));
        long label = 0;
        if (!(head >> label) || label != static_cast<long>(adj.size()) + 1) {
            throw fail("expected label " + std::to_string(adj.size() + 1));
        }
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> nb;
        long w = 0;
        while (rest >> w) {
            if (w < 1) throw fail("neighbor labels are 1-based");
            nb.push_back(static_cast<int>(w - 1));
        }
        if (!rest.eof()) throw fail("non-numeric neighbor");
        adj.push_back(std::move(nb));
    }
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (int w : adj[v]) {
            if (static_cast<std::size_t>(w) >= adj.size()) {
                throw Error(ErrorCode::ParseError, "neighbor " + std::to_string(w + 1) + " of " +
                                                       std::to_string(v + 1) + " is out of range");
            }
        }
    }
    return adj;
}

HbGraph graph_from_adjacency(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n < 4) throw Error(ErrorCode::MalformedGraph, "too few vertices");
    std::vector<Label> chord(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        auto nb = adjacency[v];
        std::sort(nb.begin(), nb.end());
        if (nb.size() != 3 || std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw Error(ErrorCode::MalformedGraph, "vertex " + std::to_string(v + 1) + " is not of degree 3");
        }
        const int prev = (v + n - 1) % n;
        const int next = (v + 1) % n;
        std::vector<int> rest;
        for (int w : nb) {
            if (w != prev && w != next) rest.push_back(w);
        }
        if (rest.size() != 1 || !std::binary_search(nb.begin(), nb.end(), prev) ||
            !std::binary_search(nb.begin(), nb.end(), next)) {
            throw Error(ErrorCode::MalformedGraph,
                        "vertex " + std::to_string(v + 1) + " does not follow the Hamiltonian cycle 1..n");
        }
        chord[static_cast<std::size_t>(v)] = rest[0] + 1;
    }
    return HbGraph::from_chord_map(chord);
}

}  // namespace hbg
