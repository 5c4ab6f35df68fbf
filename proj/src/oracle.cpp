#include "pebble/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <unordered_map>

#include "pebble/util.hpp"

namespace pebble {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

// Pascal triangle with saturating entries, grown on demand (sweeps with an
// open-ended size cap rely on the per-level budget check, not on a
// preallocated table). Row r holds C(r, 0..min(r, cols)); only columns up to
// the vertex count are ever read.
class binomial_table {
  public:
    explicit binomial_table(int cols) : cols_(cols + 1) { ensure(0); }

    void ensure(int rows) {
        int have = static_cast<int>(table_.size() / cols_);
        if (rows < have) return;
        table_.resize(static_cast<std::size_t>(rows + 1) * cols_, 0);
        for (int r = have; r <= rows; ++r) {
            at(r, 0) = 1;
            for (int c = 1; c < cols_ && c <= r; ++c)
                at(r, c) = sat_add(at(r - 1, c), at(r - 1, c - 1));
        }
    }

    std::uint64_t choose(int r, int c) const {
        if (c < 0 || c > r) return 0;
        assert(c < cols_ && static_cast<std::size_t>(r) < table_.size() / cols_);
        return table_[static_cast<std::size_t>(r) * cols_ + c];
    }

  private:
    std::uint64_t& at(int r, int c) { return table_[static_cast<std::size_t>(r) * cols_ + c]; }
    int cols_;
    std::vector<std::uint64_t> table_;
};

// Number of configurations on k vertices with exactly m pebbles.
std::uint64_t compositions(const binomial_table& binom, int m, int k) {
    if (k == 0) return m == 0 ? 1 : 0;
    return binom.choose(m + k - 1, k - 1);
}

// Rank of a configuration within its size level, in lexicographic order of
// the count vector. With k_v vertices after position v and rem_v pebbles on
// positions v..n-1, the contribution of position v telescopes to
// C(rem_v + k_v, k_v) - C(rem_v - c_v + k_v, k_v) (hockey-stick identity),
// so a full rank costs O(n) table lookups.
std::uint64_t rank_config(const binomial_table& binom, const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    std::uint64_t rank = 0;
    int rem = 0;
    for (int v = 0; v < n; ++v) rem += c[v];
    for (int v = 0; v + 1 < n; ++v) {
        const int k = n - v - 1;
        rank += binom.choose(rem + k, k) - binom.choose(rem - c[v] + k, k);
        rem -= c[v];
    }
    return rank;
}

// Advances a count vector to the lexicographic successor within its size
// level; returns false after the last configuration (all pebbles at index 0).
bool next_config(std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    if (n == 1) return false;
    int mass = c[n - 1];
    for (int j = n - 2; j >= 0; --j) {
        if (mass > 0) {
            ++c[j];
            for (int t = j + 1; t < n - 1; ++t) c[t] = 0;
            c[n - 1] = mass - 1;
            return true;
        }
        mass += c[j];
    }
    return false;
}

class bitset64 {
  public:
    void reset(std::uint64_t bits) {
        words_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    }
    void set(std::uint64_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

  private:
    std::vector<std::uint64_t> words_;
};

void check_budget(const oracle_budget& budget, oracle_stats* stats, std::uint64_t need) {
    std::uint64_t total = sat_add(stats ? stats->cells : 0, need);
    if (total > budget.max_cells)
        throw budget_error("exhaustive search needs " +
                               (need == kSaturated ? std::string("more than 2^64")
                                                   : std::to_string(need)) +
                               " more configurations; budget allows " +
                               std::to_string(budget.max_cells) + " total",
                           total, budget.max_cells);
}

void validate_root(const graph& g, int root) {
    if (root < 0 || root >= g.n)
        throw config_error("root " + std::to_string(root + 1) + " outside 1.." + std::to_string(g.n));
}

int config_support(const std::vector<int>& c) {
    int s = 0;
    for (int x : c) s += (x > 0);
    return s;
}

}  // namespace

void for_each_unsolvable(const graph& g, int root, int target, int max_size,
                         const oracle_budget& budget, oracle_stats* stats,
                         const std::function<bool(int, const std::vector<int>&)>& visit) {
    validate_root(g, root);
    if (target < 1) throw config_error("pebbling target must be at least 1");
    const int n = g.n;
    oracle_stats local;
    if (!stats) stats = &local;

    binomial_table binom(n);
    bitset64 prev, cur;

    std::vector<int> c(n, 0), child(n, 0);
    for (int m = 0; m <= max_size; ++m) {
        binom.ensure(m + n);
        const std::uint64_t level_count = compositions(binom, m, n);
        check_budget(budget, stats, level_count);
        stats->cells += level_count;

        cur.reset(level_count);
        bool any_unsolvable = false;

        std::fill(c.begin(), c.end(), 0);
        c[n - 1] = m;
        std::uint64_t rank = 0;
        do {
            bool solvable = c[root] >= target;
            if (!solvable && m >= 2) {
                // A configuration is solvable iff some single move leads to a
                // solvable configuration one level down. Moves out of the
                // root are never needed to hit a root target (verified
                // exhaustively against an unpruned search in the test suite).
                for (int v = 0; v < n && !solvable; ++v) {
                    if (v == root || c[v] < 2) continue;
                    child = c;
                    child[v] -= 2;
                    for (int w : g.adj[v]) {
                        ++child[w];
                        if (prev.get(rank_config(binom, child))) { solvable = true; }
                        --child[w];
                        if (solvable) break;
                    }
                }
            }
            if (solvable) {
                cur.set(rank);
            } else {
                any_unsolvable = true;
                if (!visit(m, c)) return;
            }
            ++rank;
        } while (next_config(c));
        assert(rank == level_count);

        if (!any_unsolvable) return;  // solvability is preserved by adding pebbles
        std::swap(prev, cur);
    }
}

int rooted_pebbling_number(const graph& g, int root, const oracle_budget& budget,
                           oracle_stats* stats) {
    // Sweep sizes upward until a fully solvable level appears. Each level is
    // budget-checked before expansion, so pathological inputs fail fast
    // instead of looping forever.
    int last_unsolvable = -1;
    constexpr int kHardCap = 1 << 30;
    for_each_unsolvable(g, root, 1, kHardCap, budget, stats,
                        [&](int size, const std::vector<int>&) {
                            last_unsolvable = size;
                            return true;
                        });
    return last_unsolvable + 1;
}

pi_result pebbling_number(const graph& g, const oracle_budget& budget, oracle_stats* stats) {
    pi_result result;
    for (const auto& orbit : vertex_orbits(g)) {
        const int root = orbit.front();
        int last_size = -1;
        std::vector<int> last_config;
        for_each_unsolvable(g, root, 1, 1 << 30, budget, stats,
                            [&](int size, const std::vector<int>& c) {
                                last_size = size;
                                last_config = c;
                                return true;
                            });
        if (last_size + 1 > result.pi) {
            result.pi = last_size + 1;
            result.witness_root = root;
            result.witness = last_config;
        }
    }
    return result;
}

two_pebbling_tables two_pebbling_numbers(const graph& g, const oracle_budget& budget,
                                         oracle_stats* stats) {
    two_pebbling_tables t;
    t.pi = pebbling_number(g, budget, stats).pi;
    const int n = g.n;
    const int cap = 2 * t.pi - 1;

    std::vector<int> max_unsolvable(n + 1, -1);
    for (const auto& orbit : vertex_orbits(g)) {
        const int root = orbit.front();
        for_each_unsolvable(g, root, 2, cap, budget, stats,
                            [&](int size, const std::vector<int>& c) {
                                int s = config_support(c);
                                max_unsolvable[s] = std::max(max_unsolvable[s], size);
                                return true;
                            });
    }

    t.by_support.assign(n + 1, 0);
    t.monotone.assign(n + 1, 0);
    for (int s = 1; s <= n; ++s) t.by_support[s] = std::max(s, max_unsolvable[s] + 1);
    int suffix = 0;
    for (int s = n; s >= 1; --s) {
        suffix = std::max(suffix, t.by_support[s]);
        t.monotone[s] = suffix;
    }
    return t;
}

std::vector<std::vector<int>> enumerate_unsolvable(const graph& g, int root, int max_size,
                                                   std::size_t limit, const oracle_budget& budget,
                                                   oracle_stats* stats) {
    std::vector<std::vector<int>> out;
    if (limit == 0) return out;
    for_each_unsolvable(g, root, 1, max_size, budget, stats,
                        [&](int, const std::vector<int>& c) {
                            out.push_back(c);
                            return out.size() < limit;
                        });
    return out;
}

namespace {

struct dfs_context {
    const graph& g;
    int root;
    int target;
    const oracle_budget& budget;
    oracle_stats* stats;
    const std::vector<int>& dist;  // distances to root
    int shift;                     // bits per vertex in the memo key
    std::unordered_map<std::uint64_t, bool> memo;
};

std::uint64_t pack(const dfs_context& ctx, const std::vector<int>& c) {
    std::uint64_t key = 0;
    for (int v = 0; v < ctx.g.n; ++v) key = (key << ctx.shift) | static_cast<std::uint64_t>(c[v]);
    return key;
}

// Sound shortcuts: each vertex can independently deliver floor(c_v / 2^d)
// pebbles to the root by repeatedly halving its own stack along a shortest
// path (success certificate), while the weight sum c_v * 2^(D - d_v) never
// increases under any move, so falling short of target * 2^D is a failure
// certificate. Everything in between goes to the exhaustive recursion.
enum class quick { solvable, unsolvable, unknown };

quick quick_check(const dfs_context& ctx, const std::vector<int>& c) {
    int deliverable = 0;
    long long weight = 0;
    int max_d = 0;
    for (int v = 0; v < ctx.g.n; ++v) max_d = std::max(max_d, ctx.dist[v]);
    for (int v = 0; v < ctx.g.n; ++v) {
        deliverable += c[v] >> ctx.dist[v];
        weight += static_cast<long long>(c[v]) << (max_d - ctx.dist[v]);
    }
    if (deliverable >= ctx.target) return quick::solvable;
    if (weight < (static_cast<long long>(ctx.target) << max_d)) return quick::unsolvable;
    return quick::unknown;
}

bool dfs_solvable(dfs_context& ctx, std::vector<int>& c) {
    switch (quick_check(ctx, c)) {
        case quick::solvable: return true;
        case quick::unsolvable: return false;
        case quick::unknown: break;
    }
    const std::uint64_t key = pack(ctx, c);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    check_budget(ctx.budget, ctx.stats, 1);
    ctx.stats->cells += 1;

    bool solvable = false;
    for (int v = 0; v < ctx.g.n && !solvable; ++v) {
        if (v == ctx.root || c[v] < 2) continue;
        c[v] -= 2;
        for (int w : ctx.g.adj[v]) {
            ++c[w];
            if (dfs_solvable(ctx, c)) solvable = true;
            --c[w];
            if (solvable) break;
        }
        c[v] += 2;
    }
    ctx.memo.emplace(key, solvable);
    return solvable;
}

}  // namespace

bool is_solvable(const graph& g, const std::vector<int>& config, int root, int target,
                 const oracle_budget& budget, oracle_stats* stats) {
    validate_root(g, root);
    if (target < 1) throw config_error("pebbling target must be at least 1");
    if (static_cast<int>(config.size()) != g.n)
        throw config_error("configuration has " + std::to_string(config.size()) +
                           " entries for a graph on " + std::to_string(g.n) + " vertices");
    long long total = 0;
    for (int x : config) {
        if (x < 0) throw config_error("configuration entries must be non-negative");
        total += x;
    }

    const int shift = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(total))));
    if (shift * g.n > 64)
        throw budget_error("configuration too wide to memoize (" + std::to_string(g.n) +
                               " vertices x " + std::to_string(shift) + " bits)",
                           kSaturated, budget.max_cells);

    oracle_stats local;
    graph_metric metric = compute_metric(g);
    dfs_context ctx{g,      root,  target, budget, stats ? stats : &local,
                    metric.dist[root], shift, {}};
    std::vector<int> c = config;
    return dfs_solvable(ctx, c);
}

}  // namespace pebble
