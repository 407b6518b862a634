#include "hbg/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hbg/girth.hpp"

namespace hbg {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NonExistent: return "NonExistent";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(const std::string& text) {
    if (text == "Exists") return Verdict::Exists;
    if (text == "NonExistent") return Verdict::NonExistent;
    if (text == "Inconclusive") return Verdict::Inconclusive;
    return std::nullopt;
}

LevelStats& LevelStats::operator+=(const LevelStats& o) {
    nodes += o.nodes;
    girth_prunes += o.girth_prunes;
    matching_prunes += o.matching_prunes;
    canonical_prunes += o.canonical_prunes;
    return *this;
}

void SearchStats::add(const SearchStats& o) {
    if (per_level.size() < o.per_level.size()) per_level.resize(o.per_level.size());
    for (std::size_t i = 0; i < o.per_level.size(); ++i) per_level[i] += o.per_level[i];
    nodes += o.nodes;
    girth_prunes += o.girth_prunes;
    matching_prunes += o.matching_prunes;
    canonical_prunes += o.canonical_prunes;
    solutions += o.solutions;
}

void validate_task(const SearchTask& task) {
    const int m = task.order / 2;
    std::string why;
    if (task.girth < 6 || task.girth % 2 != 0) {
        why = "girth target must be even and >= 6";
    } else if (task.order < 4 || task.order % 2 != 0) {
        why = "order must be even and >= 4";
    } else if (task.sym_factor < 1 || m % task.sym_factor != 0) {
        why = "symmetry factor must divide " + std::to_string(m);
    }
    if (!why.empty()) {
        throw Error(ErrorCode::InvalidTask,
                    "(g=" + std::to_string(task.girth) + ", order=" + std::to_string(task.order) +
                        ", b=" + std::to_string(task.sym_factor) + "): " + why);
    }
}

namespace {

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// Lexicographic comparison of the image of `chords` under v -> sign*v + shift
// (mod n) against `chords` itself: negative when the image is smaller.
int compare_image(const std::vector<int>& chords, int n, int sign, int shift) {
    const int b = static_cast<int>(chords.size());
    for (int i = 0; i < b; ++i) {
        const int u = 2 * i;                        // image vertex
        const int v = mod(static_cast<long>(sign) * (u - shift), n);  // preimage
        int w;
        if (v % 2 == 0) {
            w = mod(v + chords[static_cast<std::size_t>((v / 2) % b)], n);
        } else {
            // v is even-labelled (odd 0-based); find the class reaching it.
            w = -1;
            for (int j = 0; j < b; ++j) {
                const int d = chords[static_cast<std::size_t>(j)];
                if (mod(2L * j + d - v, 2 * b) == 0) {
                    w = mod(static_cast<long>(v) - d, n);
                    break;
                }
            }
        }
        const int image_w = mod(static_cast<long>(sign) * w + shift, n);
        const int d_image = mod(image_w - u, n);
        const int d_self = chords[static_cast<std::size_t>(i)];
        if (d_image != d_self) return d_image < d_self ? -1 : 1;
    }
    return 0;
}

std::vector<int> image_of(const std::vector<int>& chords, int n, int sign, int shift) {
    const int b = static_cast<int>(chords.size());
    std::vector<int> out(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
        const int u = 2 * i;
        const int v = mod(static_cast<long>(sign) * (u - shift), n);
        int w = -1;
        if (v % 2 == 0) {
            w = mod(v + chords[static_cast<std::size_t>((v / 2) % b)], n);
        } else {
            for (int j = 0; j < b; ++j) {
                const int d = chords[static_cast<std::size_t>(j)];
                if (mod(2L * j + d - v, 2 * b) == 0) {
                    w = mod(static_cast<long>(v) - d, n);
                    break;
                }
            }
        }
        out[static_cast<std::size_t>(i)] = mod(mod(static_cast<long>(sign) * w + shift, n) - u, n);
    }
    return out;
}

struct Problem {
    int n = 0;
    int m = 0;
    int b = 0;
    int girth = 0;
    int copies = 0;
    int lo = 0;  // chord values are the odd integers in [lo, hi]
    int hi = 0;
    bool canonical = false;
    bool count_all = false;
    std::uint64_t cap = 0;  // per-worker node cap, 0 = none
};

Problem make_problem(const SearchTask& task, bool count_all) {
    Problem p;
    p.n = task.order;
    p.m = task.order / 2;
    p.b = task.sym_factor;
    p.girth = task.girth;
    p.copies = p.m / p.b;
    // A chord d closes cycles of length d+1 and n-d+1 with the Hamiltonian cycle.
    p.lo = std::max(3, task.girth - 1);
    p.hi = std::min(p.n - 3, p.n - task.girth + 1);
    if (p.lo % 2 == 0) ++p.lo;
    p.canonical = task.prune_canonical;
    p.count_all = count_all;
    p.cap = task.budget;
    return p;
}

struct Shared {
    std::atomic<std::size_t> first_found{static_cast<std::size_t>(-1)};
    std::atomic<bool> stop_all{false};
    std::atomic<std::uint64_t> nodes_seen{0};
    std::mutex progress_mutex;
    const SearchOptions* options = nullptr;
};

class Worker {
public:
    Worker(const Problem& p, Shared& shared, std::size_t index)
        : p_(p),
          shared_(shared),
          index_(index),
          partner_(static_cast<std::size_t>(p.n), -1),
          stamp_a_(static_cast<std::size_t>(p.n), 0),
          stamp_b_(static_cast<std::size_t>(p.n), 0),
          dist_a_(static_cast<std::size_t>(p.n), 0),
          queue_(static_cast<std::size_t>(p.n)),
          values_(static_cast<std::size_t>(p.b), 0) {
        stats_.per_level.resize(static_cast<std::size_t>(p.b));
    }

    void apply_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            values_[i] = prefix[i];
            apply(static_cast<int>(i), prefix[i]);
        }
    }

    // Returns true when the search below must stop (witness, cap, abort).
    bool dfs(int level, int stop_level, std::vector<std::vector<int>>* prefixes) {
        if (level == stop_level && prefixes) {
            prefixes->emplace_back(values_.begin(), values_.begin() + level);
            return false;
        }
        if (level == p_.b) return leaf();

        auto& lvl = stats_.per_level[static_cast<std::size_t>(level)];
        int lo = p_.lo;
        int hi = p_.hi;
        if (p_.canonical) {
            // The lex-least image of a tuple starts with min(d_j, n - d_j).
            if (level == 0) {
                hi = std::min(hi, p_.m);
            } else {
                lo = std::max(lo, values_[0]);
                hi = std::min(hi, p_.n - values_[0]);
            }
            lvl.canonical_prunes += odd_count(p_.lo, p_.hi) - odd_count(lo, hi);
        }
        for (int d = lo; d <= hi; d += 2) {
            const int v0 = 2 * level;
            const int w0 = (v0 + d) % p_.n;
            if (partner_[static_cast<std::size_t>(w0)] >= 0) {
                ++lvl.matching_prunes;
                continue;
            }
            apply(level, d);
            if (closes_short_cycle(v0, w0)) {
                ++lvl.girth_prunes;
                undo(level, d);
                continue;
            }
            ++lvl.nodes;
            ++local_nodes_;
            if (p_.cap && local_nodes_ > p_.cap) {
                over_budget_ = true;
                undo(level, d);
                return true;
            }
            if ((local_nodes_ & 0xfff) == 0 && poll()) {
                undo(level, d);
                return true;
            }
            values_[static_cast<std::size_t>(level)] = d;
            const bool stop = dfs(level + 1, stop_level, prefixes);
            undo(level, d);
            if (stop) return true;
        }
        return false;
    }

    SearchStats finish() {
        flush_nodes();
        for (const auto& l : stats_.per_level) {
            stats_.nodes += l.nodes;
            stats_.girth_prunes += l.girth_prunes;
            stats_.matching_prunes += l.matching_prunes;
            stats_.canonical_prunes += l.canonical_prunes;
        }
        return stats_;
    }

    const std::optional<std::vector<int>>& found() const { return found_; }
    bool over_budget() const { return over_budget_; }
    bool aborted() const { return aborted_; }

private:
    static std::uint64_t odd_count(int lo, int hi) {
        if (hi < lo) return 0;
        const int first = lo % 2 ? lo : lo + 1;
        return first > hi ? 0 : static_cast<std::uint64_t>((hi - first) / 2 + 1);
    }

    bool leaf() {
        if (p_.canonical) {
            for (int sign : {1, -1}) {
                for (int shift = 0; shift < 2 * p_.b; ++shift) {
                    if (compare_image(values_, p_.n, sign, shift) < 0) {
                        ++stats_.per_level[static_cast<std::size_t>(p_.b - 1)].canonical_prunes;
                        return false;
                    }
                }
            }
        }
        ++stats_.solutions;
        if (!found_) found_ = values_;
        if (p_.count_all) return false;
        if (shared_.options->minimal_witness) {
            std::size_t cur = shared_.first_found.load();
            while (index_ < cur && !shared_.first_found.compare_exchange_weak(cur, index_)) {
            }
        } else {
            shared_.stop_all = true;
        }
        return true;
    }

    bool poll() {
        flush_nodes();
        if (shared_.stop_all.load(std::memory_order_relaxed) ||
            index_ > shared_.first_found.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return true;
        }
        return false;
    }

    void flush_nodes() {
        const std::uint64_t delta = local_nodes_ - reported_nodes_;
        reported_nodes_ = local_nodes_;
        if (!delta) return;
        const std::uint64_t before = shared_.nodes_seen.fetch_add(delta);
        const auto* options = shared_.options;
        if (options->progress && options->progress_every &&
            before / options->progress_every != (before + delta) / options->progress_every) {
            std::lock_guard lock(shared_.progress_mutex);
            std::uint64_t prunes = 0;
            int depth = 0;
            for (std::size_t i = 0; i < stats_.per_level.size(); ++i) {
                const auto& l = stats_.per_level[i];
                prunes += l.girth_prunes + l.matching_prunes + l.canonical_prunes;
                if (l.nodes) depth = static_cast<int>(i) + 1;
            }
            options->progress({before + delta, depth, prunes});
        }
    }

    void apply(int level, int d) {
        for (int k = 0; k < p_.copies; ++k) {
            const int v = 2 * level + 2 * p_.b * k;
            const int w = (v + d) % p_.n;
            partner_[static_cast<std::size_t>(v)] = w;
            partner_[static_cast<std::size_t>(w)] = v;
        }
    }

    void undo(int level, int d) {
        for (int k = 0; k < p_.copies; ++k) {
            const int v = 2 * level + 2 * p_.b * k;
            const int w = (v + d) % p_.n;
            partner_[static_cast<std::size_t>(v)] = -1;
            partner_[static_cast<std::size_t>(w)] = -1;
        }
    }

    // Is there a path of length <= girth-3 from v0 to w0 avoiding the new
    // chord? Every other copy of the class is a rotation of this one, so the
    // representative suffices. Meet in the middle: radius ceil(L/2) from v0,
    // floor(L/2) from w0.
    bool closes_short_cycle(int v0, int w0) {
        const int limit = p_.girth - 3;
        if (limit < 1) return false;
        const int ra = (limit + 1) / 2;
        const int rb = limit / 2;
        ++stamp_;
        if (stamp_ == 0) {
            std::fill(stamp_a_.begin(), stamp_a_.end(), 0);
            std::fill(stamp_b_.begin(), stamp_b_.end(), 0);
            stamp_ = 1;
        }
        const int n = p_.n;
        auto neighbors = [&](int x, int out[3]) {
            int c = 0;
            out[c++] = x == 0 ? n - 1 : x - 1;
            out[c++] = x + 1 == n ? 0 : x + 1;
            const int y = partner_[static_cast<std::size_t>(x)];
            if (y >= 0 && !((x == v0 && y == w0) || (x == w0 && y == v0))) out[c++] = y;
            return c;
        };

        std::size_t head = 0;
        std::size_t tail = 0;
        queue_[tail++] = v0;
        stamp_a_[static_cast<std::size_t>(v0)] = stamp_;
        dist_a_[static_cast<std::size_t>(v0)] = 0;
        while (head < tail) {
            const int x = queue_[head++];
            const int dx = dist_a_[static_cast<std::size_t>(x)];
            if (dx == ra) continue;
            int nb[3];
            const int c = neighbors(x, nb);
            for (int i = 0; i < c; ++i) {
                const int y = nb[i];
                if (y == w0) return true;
                if (stamp_a_[static_cast<std::size_t>(y)] == stamp_) continue;
                stamp_a_[static_cast<std::size_t>(y)] = stamp_;
                dist_a_[static_cast<std::size_t>(y)] = dx + 1;
                queue_[tail++] = y;
            }
        }
        if (rb == 0) return false;
        head = 0;
        tail = 0;
        queue_[tail++] = w0;
        stamp_b_[static_cast<std::size_t>(w0)] = stamp_;
        for (int depth = 0; depth < rb && head < tail; ++depth) {
            const std::size_t layer_end = tail;
            while (head < layer_end) {
                const int x = queue_[head++];
                int nb[3];
                const int c = neighbors(x, nb);
                for (int i = 0; i < c; ++i) {
                    const int y = nb[i];
                    if (stamp_a_[static_cast<std::size_t>(y)] == stamp_) return true;
                    if (stamp_b_[static_cast<std::size_t>(y)] == stamp_) continue;
                    stamp_b_[static_cast<std::size_t>(y)] = stamp_;
                    queue_[tail++] = y;
                }
            }
        }
        return false;
    }

    const Problem& p_;
    Shared& shared_;
    std::size_t index_;
    std::vector<int> partner_;
    std::vector<std::uint32_t> stamp_a_;
    std::vector<std::uint32_t> stamp_b_;
    std::vector<int> dist_a_;
    std::vector<int> queue_;
    std::uint32_t stamp_ = 0;
    std::vector<int> values_;
    SearchStats stats_;
    std::optional<std::vector<int>> found_;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t reported_nodes_ = 0;
    bool over_budget_ = false;
    bool aborted_ = false;
};

struct PartitionResult {
    SearchStats stats;
    std::optional<std::vector<int>> found;
    bool over_budget = false;
    bool aborted = false;
};

SearchOutcome run_search(const SearchTask& task, const SearchOptions& options) {
    validate_task(task);
    const auto started = std::chrono::steady_clock::now();
    const Problem problem = make_problem(task, options.count_all);
    Shared shared;
    shared.options = &options;

    // Partition by the first one or two chord values; the split depends only
    // on b so results do not depend on the thread count.
    const int split = problem.b >= 3 ? 2 : (problem.b == 2 ? 1 : 0);
    std::vector<std::vector<int>> prefixes;
    SearchStats total;
    bool prefix_over_budget = false;
    {
        Worker collector(problem, shared, 0);
        collector.dfs(0, split, &prefixes);
        prefix_over_budget = collector.over_budget();
        total = collector.finish();
    }

    std::vector<PartitionResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (shared.stop_all || i > shared.first_found.load()) {
                results[i].aborted = true;
                continue;
            }
            Worker worker(problem, shared, i);
            worker.apply_prefix(prefixes[i]);
            worker.dfs(split, -1, nullptr);
            results[i].stats = worker.finish();
            results[i].found = worker.found();
            results[i].over_budget = worker.over_budget();
            results[i].aborted = worker.aborted();
        }
    };
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size()))));
    if (!prefix_over_budget) {
        if (threads == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        }
    }

    SearchOutcome outcome;
    outcome.task = task;
    bool inconclusive = prefix_over_budget || (task.budget && total.nodes > task.budget);
    std::optional<std::vector<int>> witness;
    if (!inconclusive) {
        for (auto& r : results) {
            // Skipped or cancelled partitions only ever follow the reported
            // witness in minimal mode; in any-witness mode they are ignored.
            if (r.aborted) continue;
            total.add(r.stats);
            if (r.over_budget || (task.budget && total.nodes > task.budget)) {
                inconclusive = true;
                break;
            }
            if (r.found && !witness) {
                witness = r.found;
                if (!options.count_all) break;
            }
        }
        if (!witness && std::any_of(results.begin(), results.end(),
                                    [](const PartitionResult& r) { return r.aborted; })) {
            inconclusive = true;
        }
    }
    total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    outcome.stats = total;

    if (inconclusive) {
        outcome.verdict = Verdict::Inconclusive;
    } else if (witness) {
        outcome.verdict = Verdict::Exists;
        outcome.witness = ChordIndexSpec{task.order, task.sym_factor, *witness};
        outcome.witness_girth = girth_symmetric(*outcome.witness).girth;
        if (outcome.witness_girth < task.girth) {
            throw std::logic_error("search produced a witness below the girth target: " +
                                   to_string(*outcome.witness));
        }
    } else {
        outcome.verdict = Verdict::NonExistent;
        EnumerationCertificate cert;
        cert.reduction = task.prune_canonical
                             ? "dihedral relabelings of the Hamiltonian cycle (lex-least chord tuple)"
                             : "none";
        cert.per_level = total.per_level;
        cert.leaves_refuted = total.girth_prunes + total.matching_prunes + total.canonical_prunes;
        cert.value_min = problem.lo;
        cert.value_max = problem.hi;
        outcome.certificate = cert;
    }
    return outcome;
}

}  // namespace

SearchOutcome search(const SearchTask& task, const SearchOptions& options) {
    return run_search(task, options);
}

SearchOutcome certify_nonexistence(int girth, int order, int sym_factor, const SearchOptions& options) {
    SearchTask task;
    task.girth = girth;
    task.order = order;
    task.sym_factor = sym_factor;
    task.budget = 0;
    task.prune_canonical = true;
    return run_search(task, options);
}

std::vector<std::vector<int>> symmetric_images(const ChordIndexSpec& spec) {
    require_valid(spec);
    std::vector<std::vector<int>> out;
    for (int sign : {1, -1}) {
        for (int shift = 0; shift < 2 * spec.sym_factor; ++shift) {
            out.push_back(image_of(spec.chords, spec.order, sign, shift));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_canonical(const ChordIndexSpec& spec) {
    return symmetric_images(spec).front() == spec.chords;
}

std::vector<int> factors_for(int order, SymPolicy policy, const std::vector<int>& explicit_factors) {
    const int m = order / 2;
    std::vector<int> divisors;
    for (int b = 1; b <= m; ++b) {
        if (m % b == 0) divisors.push_back(b);
    }
    switch (policy) {
    case SymPolicy::Ascending: return divisors;
    case SymPolicy::Descending: std::reverse(divisors.begin(), divisors.end()); return divisors;
    case SymPolicy::FullOnly: return {m};
    case SymPolicy::Explicit: {
        std::vector<int> out;
        for (int b : explicit_factors) {
            if (b >= 1 && m % b == 0) out.push_back(b);
        }
        return out;
    }
    }
    return divisors;
}

std::vector<ScanEntry> scan_orders(const ScanRequest& request, const SearchOptions& options,
                                   const std::function<void(const ScanEntry&)>& on_entry) {
    if (request.order_from % 2 != 0 || request.order_to % 2 != 0 || request.order_from < 4 ||
        request.order_from > request.order_to) {
        throw Error(ErrorCode::InvalidRange, "order range must be even, >= 4 and ascending: " +
                                                 std::to_string(request.order_from) + ".." +
                                                 std::to_string(request.order_to));
    }
    std::vector<ScanEntry> entries;
    for (int order = request.order_from; order <= request.order_to; order += 2) {
        ScanEntry entry;
        entry.order = order;
        for (int b : factors_for(order, request.policy, request.explicit_factors)) {
            SearchTask task;
            task.girth = request.girth;
            task.order = order;
            task.sym_factor = b;
            task.budget = request.budget;
            task.prune_canonical = request.prune_canonical;
            entry.attempts.push_back(search(task, options));
            if (entry.attempts.back().verdict == Verdict::Exists) break;
        }
        entry.verdict = Verdict::Inconclusive;
        if (!entry.attempts.empty()) {
            entry.decisive = entry.attempts.back();
            if (entry.decisive.verdict == Verdict::Exists) {
                entry.verdict = Verdict::Exists;
            } else {
                for (const auto& a : entry.attempts) {
                    if (a.task.sym_factor == order / 2 && a.verdict == Verdict::NonExistent) {
                        entry.verdict = Verdict::NonExistent;
                        entry.decisive = a;
                    }
                }
            }
        }
        if (on_entry) on_entry(entry);
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace hbg
