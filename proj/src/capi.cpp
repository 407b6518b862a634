#include "hbg/hbg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "hbg/catalog.hpp"
#include "hbg/export.hpp"
#include "hbg/family.hpp"
#include "hbg/girth.hpp"
#include "hbg/reference.hpp"
#include "hbg/search.hpp"

struct hbg_spec {
    hbg::ChordIndexSpec spec;
};

struct hbg_outcome {
    hbg::SearchOutcome outcome;
};

struct hbg_family {
    hbg::FamilyCertificate cert;
};

struct hbg_catalog {
    hbg::CatalogStore store;
};

namespace {

thread_local std::string last_error;

hbg_status status_of(hbg::ErrorCode code) {
    using hbg::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidSpec: return HBG_E_INVALID_SPEC;
    case ErrorCode::LabelOutOfRange: return HBG_E_LABEL_OUT_OF_RANGE;
    case ErrorCode::RootOutOfRange: return HBG_E_ROOT_OUT_OF_RANGE;
    case ErrorCode::MalformedGraph: return HBG_E_MALFORMED_GRAPH;
    case ErrorCode::DegenerateChords: return HBG_E_DEGENERATE_CHORDS;
    case ErrorCode::InvalidTask: return HBG_E_INVALID_TASK;
    case ErrorCode::InvalidRange: return HBG_E_INVALID_RANGE;
    case ErrorCode::VerificationFailed: return HBG_E_VERIFICATION_FAILED;
    case ErrorCode::CorruptStore: return HBG_E_CORRUPT_STORE;
    case ErrorCode::ParseError: return HBG_E_PARSE;
    case ErrorCode::OddOrderRejected: return HBG_E_ODD_ORDER;
    case ErrorCode::UnsupportedFormat: return HBG_E_UNSUPPORTED_FORMAT;
    case ErrorCode::OutOfTable: return HBG_E_OUT_OF_TABLE;
    case ErrorCode::Io: return HBG_E_IO;
    }
    return HBG_E_INTERNAL;
}

hbg_status fail(hbg_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <typename F>
hbg_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const hbg::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HBG_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HBG_E_INTERNAL, e.what());
    }
}

#define HBG_REQUIRE(ptr) \
    if (!(ptr)) return fail(HBG_E_NULL_ARGUMENT, #ptr " is null")

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

template <typename T, typename U>
T* dup_array(const std::vector<U>& v) {
    T* out = static_cast<T*>(std::malloc(sizeof(T) * (v.empty() ? 1 : v.size())));
    if (!out) throw std::bad_alloc();
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<T>(v[i]);
    return out;
}

hbg_verdict to_c(hbg::Verdict v) {
    switch (v) {
    case hbg::Verdict::Exists: return HBG_EXISTS;
    case hbg::Verdict::NonExistent: return HBG_NONEXISTENT;
    case hbg::Verdict::Inconclusive: return HBG_INCONCLUSIVE;
    }
    return HBG_INCONCLUSIVE;
}

hbg::SearchOptions options_from(unsigned threads, hbg_progress_fn progress, void* user, std::uint64_t every) {
    hbg::SearchOptions options;
    options.threads = threads;
    if (every) options.progress_every = every;
    if (progress) {
        options.progress = [progress, user](const hbg::SearchProgress& p) {
            progress(p.nodes, p.depth, p.prunes, user);
        };
    }
    return options;
}

hbg_status export_spots(const std::vector<hbg::SpotCheck>& checks, hbg_spot** spots, size_t* count) {
    auto* out = static_cast<hbg_spot*>(std::malloc(sizeof(hbg_spot) * (checks.empty() ? 1 : checks.size())));
    if (!out) throw std::bad_alloc();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        out[i] = hbg_spot{checks[i].order, checks[i].girth, checks[i].agrees ? 1 : 0};
    }
    *spots = out;
    *count = checks.size();
    return HBG_OK;
}

}  // namespace

extern "C" {

const char* hbg_version(void) { return "1.0.0"; }

const char* hbg_last_error(void) { return last_error.c_str(); }

const char* hbg_status_name(hbg_status status) {
    switch (status) {
    case HBG_OK: return "ok";
    case HBG_E_NULL_ARGUMENT: return "NullArgument";
    case HBG_E_ORACLE_MISMATCH: return "OracleMismatch";
    case HBG_E_INTERNAL: return "Internal";
    default: break;
    }
    if (status > HBG_OK && status <= HBG_E_IO) {
        return hbg::to_string(static_cast<hbg::ErrorCode>(status - 1));
    }
    return "Unknown";
}

const char* hbg_verdict_name(hbg_verdict verdict) {
    switch (verdict) {
    case HBG_EXISTS: return hbg::to_string(hbg::Verdict::Exists);
    case HBG_NONEXISTENT: return hbg::to_string(hbg::Verdict::NonExistent);
    case HBG_INCONCLUSIVE: return hbg::to_string(hbg::Verdict::Inconclusive);
    }
    return "Unknown";
}

void hbg_string_free(char* text) { std::free(text); }
void hbg_array_free(void* array) { std::free(array); }

hbg_status hbg_spec_new(int order, int sym_factor, const int* chords, size_t count, hbg_spec** out) {
    HBG_REQUIRE(out);
    if (count > 0) HBG_REQUIRE(chords);
    return guarded([&] {
        auto handle = std::make_unique<hbg_spec>();
        handle->spec.order = order;
        handle->spec.sym_factor = sym_factor;
        handle->spec.chords.assign(chords, chords + count);
        *out = handle.release();
        return HBG_OK;
    });
}

void hbg_spec_free(hbg_spec* spec) { delete spec; }
int hbg_spec_order(const hbg_spec* spec) { return spec ? spec->spec.order : 0; }
int hbg_spec_sym_factor(const hbg_spec* spec) { return spec ? spec->spec.sym_factor : 0; }

size_t hbg_spec_chords(const hbg_spec* spec, const int** chords) {
    if (!spec) return 0;
    if (chords) *chords = spec->spec.chords.data();
    return spec->spec.chords.size();
}

hbg_status hbg_spec_validate(const hbg_spec* spec, char** report) {
    HBG_REQUIRE(spec);
    return guarded([&] {
        const auto r = hbg::validate_spec(spec->spec);
        if (report) *report = dup_string(r.to_string());
        if (r.valid()) return HBG_OK;
        return fail(HBG_E_INVALID_SPEC, r.to_string());
    });
}

hbg_status hbg_parse_chords(const char* text, int** chords, size_t* count) {
    HBG_REQUIRE(text);
    HBG_REQUIRE(chords);
    HBG_REQUIRE(count);
    return guarded([&] {
        std::vector<int> values;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            const auto first = item.find_first_not_of(" \t");
            const auto last = item.find_last_not_of(" \t");
            if (first == std::string::npos) throw hbg::Error(hbg::ErrorCode::ParseError, "empty chord entry");
            item = item.substr(first, last - first + 1);
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size() || v < -1'000'000'000L || v > 1'000'000'000L) {
                throw hbg::Error(hbg::ErrorCode::ParseError, "'" + item + "' is not an integer");
            }
            values.push_back(static_cast<int>(v));
        }
        if (values.empty()) throw hbg::Error(hbg::ErrorCode::ParseError, "empty chord list");
        *chords = dup_array<int>(values);
        *count = values.size();
        return HBG_OK;
    });
}

hbg_status hbg_girth(const hbg_spec* spec, int* girth, int** witness, size_t* witness_len, int* root_used) {
    HBG_REQUIRE(spec);
    HBG_REQUIRE(girth);
    return guarded([&] {
        const auto r = hbg::girth_symmetric(spec->spec);
        *girth = r.girth;
        if (witness) {
            HBG_REQUIRE(witness_len);
            *witness = dup_array<int>(r.witness);
            *witness_len = r.witness.size();
        }
        if (root_used) *root_used = r.root_used;
        return HBG_OK;
    });
}

hbg_status hbg_girth_oracle(const hbg_spec* spec, int* girth) {
    HBG_REQUIRE(spec);
    HBG_REQUIRE(girth);
    return guarded([&] {
        *girth = hbg::girth_oracle(hbg::build_graph(spec->spec));
        return HBG_OK;
    });
}

hbg_status hbg_export(const hbg_spec* spec, const char* format, char** out) {
    HBG_REQUIRE(spec);
    HBG_REQUIRE(format);
    HBG_REQUIRE(out);
    return guarded([&] {
        const auto fmt = hbg::parse_export_format(format);
        *out = dup_string(hbg::export_graph(spec->spec, fmt));
        return HBG_OK;
    });
}

void hbg_search_params_init(hbg_search_params* params) {
    if (!params) return;
    *params = hbg_search_params{};
    params->girth = 6;
    params->sym_factor = 1;
    params->prune_canonical = 1;
}

hbg_status hbg_search(const hbg_search_params* params, hbg_outcome** out) {
    HBG_REQUIRE(params);
    HBG_REQUIRE(out);
    return guarded([&] {
        hbg::SearchTask task;
        task.girth = params->girth;
        task.order = params->order;
        task.sym_factor = params->sym_factor;
        task.budget = params->budget;
        task.prune_canonical = params->prune_canonical != 0;
        auto options = options_from(params->threads, params->progress, params->progress_user,
                                    params->progress_every);
        auto handle = std::make_unique<hbg_outcome>();
        handle->outcome = hbg::search(task, options);
        *out = handle.release();
        return HBG_OK;
    });
}

void hbg_outcome_free(hbg_outcome* outcome) { delete outcome; }

hbg_verdict hbg_outcome_verdict(const hbg_outcome* outcome) {
    return outcome ? to_c(outcome->outcome.verdict) : HBG_INCONCLUSIVE;
}

int hbg_outcome_order(const hbg_outcome* outcome) { return outcome ? outcome->outcome.task.order : 0; }

int hbg_outcome_sym_factor(const hbg_outcome* outcome) {
    return outcome ? outcome->outcome.task.sym_factor : 0;
}

size_t hbg_outcome_witness(const hbg_outcome* outcome, const int** chords) {
    if (!outcome || !outcome->outcome.witness) return 0;
    if (chords) *chords = outcome->outcome.witness->chords.data();
    return outcome->outcome.witness->chords.size();
}

int hbg_outcome_witness_girth(const hbg_outcome* outcome) {
    return outcome ? outcome->outcome.witness_girth : 0;
}

void hbg_outcome_stats(const hbg_outcome* outcome, hbg_search_stats* stats) {
    if (!outcome || !stats) return;
    const auto& s = outcome->outcome.stats;
    *stats = hbg_search_stats{s.nodes, s.girth_prunes, s.matching_prunes, s.canonical_prunes, s.solutions,
                              s.seconds};
}

hbg_status hbg_outcome_describe(const hbg_outcome* outcome, char** out) {
    HBG_REQUIRE(outcome);
    HBG_REQUIRE(out);
    return guarded([&] {
        const auto& o = outcome->outcome;
        std::ostringstream s;
        s << "task: girth >= " << o.task.girth << ", order " << o.task.order << ", b = " << o.task.sym_factor
          << (o.task.prune_canonical ? ", canonical pruning" : ", no canonical pruning");
        if (o.task.budget) s << ", budget " << o.task.budget;
        s << "\nverdict: " << hbg::to_string(o.verdict) << "\n";
        if (o.witness) {
            s << "witness: " << hbg::format_chords(o.witness->chords) << " (girth " << o.witness_girth
              << ", verified)\n";
        }
        s << "nodes: " << o.stats.nodes << ", girth prunes: " << o.stats.girth_prunes
          << ", matching prunes: " << o.stats.matching_prunes
          << ", canonical prunes: " << o.stats.canonical_prunes << "\n";
        if (o.certificate) {
            const auto& c = *o.certificate;
            s << "certificate: " << c.reduction << "; odd chord values " << c.value_min << ".." << c.value_max
              << "; " << c.leaves_refuted << " branches refuted\n";
            std::size_t levels = c.per_level.size();
            while (levels > 1 && c.per_level[levels - 1] == hbg::LevelStats{}) --levels;
            for (std::size_t i = 0; i < levels; ++i) {
                const auto& l = c.per_level[i];
                s << "  d" << i + 1 << ": nodes " << l.nodes << ", girth " << l.girth_prunes << ", matching "
                  << l.matching_prunes << ", canonical " << l.canonical_prunes << "\n";
            }
        }
        *out = dup_string(s.str());
        return HBG_OK;
    });
}

void hbg_scan_params_init(hbg_scan_params* params) {
    if (!params) return;
    *params = hbg_scan_params{};
    params->girth = 6;
    params->policy = HBG_SYM_ASCENDING;
    params->prune_canonical = 1;
}

hbg_status hbg_scan(const hbg_scan_params* params, hbg_catalog* catalog, hbg_scan_fn on_order, void* user) {
    HBG_REQUIRE(params);
    if (params->factor_count > 0) HBG_REQUIRE(params->factors);
    return guarded([&] {
        hbg::ScanRequest request;
        request.girth = params->girth;
        request.order_from = params->order_from;
        request.order_to = params->order_to;
        switch (params->policy) {
        case HBG_SYM_ASCENDING: request.policy = hbg::SymPolicy::Ascending; break;
        case HBG_SYM_DESCENDING: request.policy = hbg::SymPolicy::Descending; break;
        case HBG_SYM_FULL_ONLY: request.policy = hbg::SymPolicy::FullOnly; break;
        case HBG_SYM_EXPLICIT: request.policy = hbg::SymPolicy::Explicit; break;
        default: throw hbg::Error(hbg::ErrorCode::InvalidTask, "unknown symmetry policy");
        }
        request.explicit_factors.assign(params->factors, params->factors + params->factor_count);
        request.budget = params->budget;
        request.prune_canonical = params->prune_canonical != 0;
        auto options = options_from(params->threads, params->progress, params->progress_user,
                                    params->progress_every);
        hbg::scan_orders(request, options, [&](const hbg::ScanEntry& entry) {
            if (catalog) catalog->store.append(hbg::record_from_outcome(entry.decisive));
            if (on_order) {
                hbg_outcome view{entry.decisive};
                on_order(entry.order, to_c(entry.verdict), &view, user);
            }
        });
        return HBG_OK;
    });
}

hbg_status hbg_family_certify(int sym_factor, const int* chords, size_t count, hbg_family** out) {
    HBG_REQUIRE(out);
    if (count > 0) HBG_REQUIRE(chords);
    return guarded([&] {
        auto handle = std::make_unique<hbg_family>();
        handle->cert = hbg::stabilization(std::span<const int>(chords, count), sym_factor);
        *out = handle.release();
        return HBG_OK;
    });
}

void hbg_family_free(hbg_family* family) { delete family; }

void hbg_family_get(const hbg_family* family, hbg_family_info* info) {
    if (!family || !info) return;
    const auto& c = family->cert;
    *info = hbg_family_info{c.sym_factor, c.threshold_order, c.stable_girth, c.span_bound, c.witness_root};
}

size_t hbg_family_cover_cycle(const hbg_family* family, const long** labels) {
    if (!family) return 0;
    if (labels) *labels = family->cert.cover_cycle.data();
    return family->cert.cover_cycle.size();
}

hbg_status hbg_family_spot_check(const hbg_family* family, int extra, hbg_spot** spots, size_t* count) {
    HBG_REQUIRE(family);
    HBG_REQUIRE(spots);
    HBG_REQUIRE(count);
    return guarded([&] { return export_spots(hbg::spot_check(family->cert, extra), spots, count); });
}

hbg_status hbg_family_check_below(const hbg_family* family, long from, hbg_spot** spots, size_t* count) {
    HBG_REQUIRE(family);
    HBG_REQUIRE(spots);
    HBG_REQUIRE(count);
    return guarded([&] { return export_spots(hbg::check_below_threshold(family->cert, from), spots, count); });
}

hbg_status hbg_catalog_open(const char* path, hbg_catalog** out) {
    HBG_REQUIRE(path);
    HBG_REQUIRE(out);
    return guarded([&] {
        if (*path == '\0') throw hbg::Error(hbg::ErrorCode::Io, "empty catalog path");
        *out = new hbg_catalog{hbg::CatalogStore(path)};
        return HBG_OK;
    });
}

void hbg_catalog_free(hbg_catalog* catalog) { delete catalog; }

hbg_status hbg_catalog_append(hbg_catalog* catalog, const hbg_outcome* outcome) {
    HBG_REQUIRE(catalog);
    HBG_REQUIRE(outcome);
    return guarded([&] {
        catalog->store.append(hbg::record_from_outcome(outcome->outcome));
        return HBG_OK;
    });
}

hbg_status hbg_catalog_query(const hbg_catalog* catalog, int girth, int order_min, int order_max, int verdict,
                             char** jsonl, size_t* count) {
    HBG_REQUIRE(catalog);
    return guarded([&] {
        hbg::CatalogFilter filter;
        if (girth >= 0) filter.girth = girth;
        if (order_min >= 0) filter.order_min = order_min;
        if (order_max >= 0) filter.order_max = order_max;
        switch (verdict) {
        case HBG_EXISTS: filter.verdict = hbg::Verdict::Exists; break;
        case HBG_NONEXISTENT: filter.verdict = hbg::Verdict::NonExistent; break;
        case HBG_INCONCLUSIVE: filter.verdict = hbg::Verdict::Inconclusive; break;
        default: break;
        }
        const auto records = catalog->store.load(filter);
        if (jsonl) {
            std::string text;
            for (const auto& r : records) text += hbg::to_json_line(r) + "\n";
            *jsonl = dup_string(text);
        }
        if (count) *count = records.size();
        return HBG_OK;
    });
}

hbg_status hbg_report(const hbg_catalog* catalog, const hbg_reference_source* refs, size_t ref_count, int girth,
                      int until, int as_json, char** out) {
    HBG_REQUIRE(out);
    if (ref_count > 0) HBG_REQUIRE(refs);
    return guarded([&] {
        std::vector<hbg::CatalogRecord> records;
        if (catalog) records = catalog->store.load(hbg::CatalogFilter{girth, {}, {}, {}});
        std::vector<hbg::ReferenceList> lists;
        for (size_t i = 0; i < ref_count; ++i) {
            if (!refs[i].name || !refs[i].path) throw hbg::Error(hbg::ErrorCode::ParseError, "reference entry is null");
            lists.push_back(hbg::ingest_reference(refs[i].path, "csv", refs[i].name, girth));
        }
        const auto report = hbg::compare_report(records, lists, girth, until);
        *out = dup_string(as_json ? report.to_json() + "\n" : report.to_text());
        return HBG_OK;
    });
}

}  // extern "C"
