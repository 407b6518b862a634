#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbg/hbg.h"

namespace {

constexpr int kExitUsage = 3;

struct Failure {
    int exit_code;
};

[[noreturn]] void die(hbg_status status, const std::string& context) {
    std::cerr << "hbg: " << context << ": " << hbg_status_name(status) << ": " << hbg_last_error() << "\n";
    throw Failure{status == HBG_E_ORACLE_MISMATCH ? 1 : kExitUsage};
}

void check(hbg_status status, const std::string& context) {
    if (status != HBG_OK) die(status, context);
}

struct CString {
    char* p = nullptr;
    ~CString() { hbg_string_free(p); }
};

template <typename T>
struct CArray {
    T* p = nullptr;
    size_t n = 0;
    ~CArray() { hbg_array_free(p); }
};

using SpecPtr = std::unique_ptr<hbg_spec, decltype(&hbg_spec_free)>;
using OutcomePtr = std::unique_ptr<hbg_outcome, decltype(&hbg_outcome_free)>;
using CatalogPtr = std::unique_ptr<hbg_catalog, decltype(&hbg_catalog_free)>;
using FamilyPtr = std::unique_ptr<hbg_family, decltype(&hbg_family_free)>;

std::vector<int> parse_chords(const std::string& text) {
    CArray<int> chords;
    check(hbg_parse_chords(text.c_str(), &chords.p, &chords.n), "--chords");
    return {chords.p, chords.p + chords.n};
}

std::string join(const int* values, size_t n, const char* sep) {
    std::string out;
    for (size_t i = 0; i < n; ++i) out += (i ? sep : "") + std::to_string(values[i]);
    return out;
}

// Builds and validates; prints the violation report and exits 3 when invalid.
SpecPtr make_spec(int order, int sym, const std::string& chords_text) {
    const auto chords = parse_chords(chords_text);
    hbg_spec* raw = nullptr;
    check(hbg_spec_new(order, sym, chords.data(), chords.size(), &raw), "spec");
    SpecPtr spec(raw, hbg_spec_free);
    CString report;
    if (hbg_spec_validate(spec.get(), &report.p) != HBG_OK) {
        std::string text = report.p;
        if (!text.empty() && text.back() != '\n') text += '\n';
        std::cout << "valid: no\n" << text;
        throw Failure{kExitUsage};
    }
    return spec;
}

std::string catalog_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("HBG_CATALOG");
    return env ? env : "";
}

CatalogPtr open_catalog(const std::string& path) {
    if (path.empty()) return {nullptr, hbg_catalog_free};
    hbg_catalog* raw = nullptr;
    check(hbg_catalog_open(path.c_str(), &raw), "catalog " + path);
    return {raw, hbg_catalog_free};
}

void print_progress(uint64_t nodes, int depth, uint64_t prunes, void*) {
    std::fprintf(stderr, "progress: nodes %llu, depth %d, prunes %llu\n", static_cast<unsigned long long>(nodes),
                 depth, static_cast<unsigned long long>(prunes));
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) throw std::invalid_argument(text);
        std::size_t a_used = 0;
        std::size_t b_used = 0;
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        const int from = std::stoi(a, &a_used);
        const int to = std::stoi(b, &b_used);
        if (a_used != a.size() || b_used != b.size()) throw std::invalid_argument(text);
        return {from, to};
    } catch (const std::exception&) {
        std::cerr << "hbg: --orders expects A..B, got '" << text << "'\n";
        throw Failure{kExitUsage};
    }
}

struct SpecFlags {
    int order = 0;
    int sym = 1;
    std::string chords;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--order", order, "Order 2m of the graph")->required();
        cmd->add_option("--sym", sym, "Symmetry factor b")->required();
        cmd->add_option("--chords", chords, "Comma-separated odd chord indices d1,...,db")->required();
    }
};

int run_build(const SpecFlags& f, const std::string& format, const std::string& out_path) {
    auto spec = make_spec(f.order, f.sym, f.chords);
    int girth = 0;
    check(hbg_girth(spec.get(), &girth, nullptr, nullptr, nullptr), "girth");
    CString text;
    check(hbg_export(spec.get(), format.c_str(), &text.p), "export");
    std::cout << "valid: yes\n"
              << "order: " << f.order << "\n"
              << "girth: " << girth << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text.p;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text.p;
        if (!out.flush()) {
            std::cerr << "hbg: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        std::cout << "written: " << out_path << " (" << format << ")\n";
    }
    return 0;
}

int run_girth(const SpecFlags& f, bool oracle) {
    auto spec = make_spec(f.order, f.sym, f.chords);
    int girth = 0;
    int root = 0;
    CArray<int> witness;
    check(hbg_girth(spec.get(), &girth, &witness.p, &witness.n, &root), "girth");
    std::cout << "girth: " << girth << "\n"
              << "witness: " << join(witness.p, witness.n, " ") << "\n"
              << "root: " << root << "\n";
    if (oracle) {
        int reference = 0;
        check(hbg_girth_oracle(spec.get(), &reference), "oracle");
        std::cout << "oracle: " << reference << (reference == girth ? " (agrees)" : " (MISMATCH)") << "\n";
        if (reference != girth) return 1;
    }
    return 0;
}

struct SearchFlags {
    int girth = 6;
    int order = 0;
    int sym = 1;
    std::uint64_t budget = 0;
    bool no_canonical = false;
};

struct CommonFlags {
    unsigned threads = 0;
    std::string catalog;
    bool quiet = false;
    std::uint64_t progress_every = 0;
};

int run_search(const SearchFlags& f, const CommonFlags& c) {
    hbg_search_params p;
    hbg_search_params_init(&p);
    p.girth = f.girth;
    p.order = f.order;
    p.sym_factor = f.sym;
    p.budget = f.budget;
    p.prune_canonical = f.no_canonical ? 0 : 1;
    p.threads = c.threads;
    p.progress = c.quiet ? nullptr : print_progress;
    p.progress_every = c.progress_every;
    auto catalog = open_catalog(catalog_path(c.catalog));
    hbg_outcome* raw = nullptr;
    check(hbg_search(&p, &raw), "search");
    OutcomePtr outcome(raw, hbg_outcome_free);
    CString text;
    check(hbg_outcome_describe(outcome.get(), &text.p), "describe");
    std::cout << text.p;
    if (catalog) {
        check(hbg_catalog_append(catalog.get(), outcome.get()), "catalog append");
        std::cout << "catalog: appended to " << catalog_path(c.catalog) << "\n";
    }
    return static_cast<int>(hbg_outcome_verdict(outcome.get()));
}

struct ScanState {
    int inconclusive = 0;
};

void print_scan_line(int order, hbg_verdict verdict, const hbg_outcome* decisive, void* user) {
    auto* state = static_cast<ScanState*>(user);
    if (verdict == HBG_INCONCLUSIVE) ++state->inconclusive;
    std::cout << "order=" << order << " verdict=" << hbg_verdict_name(verdict)
              << " b=" << hbg_outcome_sym_factor(decisive);
    const int* chords = nullptr;
    const size_t n = hbg_outcome_witness(decisive, &chords);
    if (n > 0) std::cout << " chords=" << join(chords, n, ",");
    std::cout << std::endl;
}

int run_scan(int girth, const std::string& orders, const std::string& policy, const std::string& factors,
             std::uint64_t budget, bool no_canonical, const CommonFlags& c) {
    const auto [from, to] = parse_range(orders);
    hbg_scan_params p;
    hbg_scan_params_init(&p);
    p.girth = girth;
    p.order_from = from;
    p.order_to = to;
    std::vector<int> explicit_factors;
    if (policy == "ascending") {
        p.policy = HBG_SYM_ASCENDING;
    } else if (policy == "descending") {
        p.policy = HBG_SYM_DESCENDING;
    } else if (policy == "full") {
        p.policy = HBG_SYM_FULL_ONLY;
    } else if (policy == "explicit") {
        p.policy = HBG_SYM_EXPLICIT;
        if (factors.empty()) {
            std::cerr << "hbg: --sym-policy explicit needs --factors\n";
            return kExitUsage;
        }
        explicit_factors = parse_chords(factors);
    }
    p.factors = explicit_factors.data();
    p.factor_count = explicit_factors.size();
    p.budget = budget;
    p.prune_canonical = no_canonical ? 0 : 1;
    p.threads = c.threads;
    p.progress = c.quiet ? nullptr : print_progress;
    p.progress_every = c.progress_every;
    auto catalog = open_catalog(catalog_path(c.catalog));
    ScanState state;
    check(hbg_scan(&p, catalog.get(), print_scan_line, &state), "scan");
    return state.inconclusive > 0 ? 2 : 0;
}

int run_family(int sym, const std::string& chords_text, int spot_checks, long from) {
    const auto chords = parse_chords(chords_text);
    hbg_family* raw = nullptr;
    check(hbg_family_certify(sym, chords.data(), chords.size(), &raw), "family");
    FamilyPtr family(raw, hbg_family_free);
    hbg_family_info info;
    hbg_family_get(family.get(), &info);
    const long* cycle = nullptr;
    const size_t cycle_len = hbg_family_cover_cycle(family.get(), &cycle);
    std::cout << "chords: " << join(chords.data(), chords.size(), ",") << " (b = " << info.sym_factor << ")\n"
              << "girth: " << info.stable_girth << "\n"
              << "threshold: " << info.threshold_order << "\n"
              << "span: " << info.span_bound << "\n"
              << "root: " << info.witness_root << "\n"
              << "cover cycle:";
    for (size_t i = 0; i < cycle_len; ++i) std::cout << ' ' << cycle[i];
    std::cout << "\n";

    auto print_spots = [&](const char* title, const CArray<hbg_spot>& spots) {
        std::cout << title << ":\n";
        for (size_t i = 0; i < spots.n; ++i) {
            const auto& s = spots.p[i];
            std::cout << "  order " << s.order << ": ";
            if (s.girth == 0) {
                std::cout << "no member\n";
            } else {
                std::cout << "girth " << s.girth << (s.agrees ? "" : " (differs)") << "\n";
            }
        }
    };
    CArray<hbg_spot> spots;
    check(hbg_family_spot_check(family.get(), spot_checks, &spots.p, &spots.n), "spot checks");
    print_spots("spot checks", spots);
    bool all_agree = true;
    for (size_t i = 0; i < spots.n; ++i) all_agree = all_agree && spots.p[i].agrees;
    if (from > 0) {
        CArray<hbg_spot> below;
        check(hbg_family_check_below(family.get(), from, &below.p, &below.n), "--from");
        print_spots("below threshold", below);
        long first_stable = info.threshold_order;
        for (size_t i = below.n; i-- > 0 && below.p[i].agrees;) first_stable = below.p[i].order;
        std::cout << "stable from: " << first_stable << "\n";
    }
    std::cout << "certified: " << (all_agree ? "yes" : "no") << "\n";
    return all_agree ? 0 : 1;
}

int run_report(int girth, int until, const std::string& catalog_flag, const std::vector<std::string>& refs,
               bool json) {
    std::vector<std::string> names;
    std::vector<std::string> paths;
    for (const auto& r : refs) {
        const auto eq = r.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == r.size()) {
            std::cerr << "hbg: --ref expects name=path, got '" << r << "'\n";
            return kExitUsage;
        }
        names.push_back(r.substr(0, eq));
        paths.push_back(r.substr(eq + 1));
    }
    std::vector<hbg_reference_source> sources;
    for (size_t i = 0; i < names.size(); ++i) sources.push_back({names[i].c_str(), paths[i].c_str()});
    auto catalog = open_catalog(catalog_path(catalog_flag));
    CString text;
    check(hbg_report(catalog.get(), sources.data(), sources.size(), girth, until, json ? 1 : 0, &text.p), "report");
    std::cout << text.p;
    return 0;
}

int run_query(int girth, int order_min, int order_max, const std::string& verdict, const std::string& catalog_flag) {
    const auto path = catalog_path(catalog_flag);
    if (path.empty()) {
        std::cerr << "hbg: no catalog (use --catalog or HBG_CATALOG)\n";
        return kExitUsage;
    }
    int v = -1;
    if (verdict == "Exists") v = HBG_EXISTS;
    if (verdict == "NonExistent") v = HBG_NONEXISTENT;
    if (verdict == "Inconclusive") v = HBG_INCONCLUSIVE;
    auto catalog = open_catalog(path);
    CString text;
    size_t count = 0;
    check(hbg_catalog_query(catalog.get(), girth, order_min, order_max, v, &text.p, &count), "query");
    std::cout << text.p;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian bipartite trivalent graphs: construction, girth, search and catalog"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hbg_version()));

    CommonFlags common;
    auto add_common = [&](CLI::App* cmd, bool catalog) {
        cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
        cmd->add_flag("--quiet", common.quiet, "No progress lines on standard error");
        cmd->add_option("--progress-every", common.progress_every, "Nodes between progress lines");
        if (catalog) cmd->add_option("--catalog", common.catalog, "Catalog file (default: $HBG_CATALOG)");
    };

    SpecFlags build_flags;
    std::string format = "adjacency";
    std::string out_path;
    auto* build = app.add_subcommand("build", "Construct a graph from its chord indices and export it");
    build_flags.add_to(build);
    build->add_option("--format", format, "adjacency, dot or graph6")
        ->check(CLI::IsMember({"adjacency", "dot", "graph6"}));
    build->add_option("--out", out_path, "Output file (default: standard output)");

    SpecFlags girth_flags;
    bool oracle = false;
    auto* girth = app.add_subcommand("girth", "Girth and a shortest cycle");
    girth_flags.add_to(girth);
    girth->add_flag("--oracle", oracle, "Also run the all-vertices BFS and compare");

    SearchFlags sf;
    auto* search = app.add_subcommand("search", "Search chord indices for a (3, g) graph of one order and b");
    search->add_option("--girth", sf.girth, "Target girth (even, >= 6)")->required();
    search->add_option("--order", sf.order, "Order 2m")->required();
    search->add_option("--sym", sf.sym, "Symmetry factor b")->required();
    search->add_option("--budget", sf.budget, "Node budget (0 = unbounded)");
    search->add_flag("--no-canonical", sf.no_canonical, "Disable symmetry pruning");
    add_common(search, true);

    int scan_girth = 6;
    std::string scan_orders;
    std::string policy = "ascending";
    std::string factors;
    std::uint64_t scan_budget = 0;
    bool scan_no_canonical = false;
    auto* scan = app.add_subcommand("scan", "Search every even order in a range");
    scan->add_option("--girth", scan_girth, "Target girth (even, >= 6)")->required();
    scan->add_option("--orders", scan_orders, "Inclusive range A..B")->required();
    scan->add_option("--sym-policy", policy, "ascending, descending, full or explicit")
        ->check(CLI::IsMember({"ascending", "descending", "full", "explicit"}));
    scan->add_option("--factors", factors, "Symmetry factors for --sym-policy explicit");
    scan->add_option("--budget", scan_budget, "Node budget per search (0 = unbounded)");
    scan->add_flag("--no-canonical", scan_no_canonical, "Disable symmetry pruning");
    add_common(scan, true);

    int family_sym = 1;
    std::string family_chords;
    int spot_checks = 0;
    long family_from = 0;
    auto* family = app.add_subcommand("family", "Certify the girth of a chord tuple at every large order");
    family->add_option("--sym", family_sym, "Symmetry factor b")->required();
    family->add_option("--chords", family_chords, "Comma-separated odd chord indices")->required();
    family->add_option("--spot-checks", spot_checks, "Extra consecutive members checked directly");
    family->add_option("--from", family_from, "Also check every member from this order to the threshold");

    int report_girth = 6;
    int until = 0;
    std::vector<std::string> refs;
    bool json = false;
    auto* report = app.add_subcommand("report", "Compare catalog orders with reference lists");
    report->add_option("--girth", report_girth, "Girth")->required();
    report->add_option("--until", until, "Largest order considered")->required();
    report->add_option("--ref", refs, "Reference list name=path (CSV)");
    report->add_flag("--json", json, "Machine-readable output");
    report->add_option("--catalog", common.catalog, "Catalog file (default: $HBG_CATALOG)");

    int q_girth = -1;
    int q_min = -1;
    int q_max = -1;
    std::string q_verdict;
    auto* query = app.add_subcommand("query", "Print catalog records as JSON Lines");
    query->add_option("--girth", q_girth, "Girth");
    query->add_option("--min-order", q_min, "Smallest order");
    query->add_option("--max-order", q_max, "Largest order");
    query->add_option("--verdict", q_verdict, "Exists, NonExistent or Inconclusive")
        ->check(CLI::IsMember({"Exists", "NonExistent", "Inconclusive"}));
    query->add_option("--catalog", common.catalog, "Catalog file (default: $HBG_CATALOG)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) return run_build(build_flags, format, out_path);
        if (*girth) return run_girth(girth_flags, oracle);
        if (*search) return run_search(sf, common);
        if (*scan) return run_scan(scan_girth, scan_orders, policy, factors, scan_budget, scan_no_canonical, common);
        if (*family) return run_family(family_sym, family_chords, spot_checks, family_from);
        if (*report) return run_report(report_girth, until, common.catalog, refs, json);
        if (*query) return run_query(q_girth, q_min, q_max, q_verdict, common.catalog);
    } catch (const Failure& f) {
        return f.exit_code;
    }
    return kExitUsage;
}
