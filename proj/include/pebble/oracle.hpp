#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

// Exhaustive-search budget, counted in enumerated configurations (one DP
// cell or DFS node each). The default comfortably covers every 7-12 vertex
// graph this toolkit targets while refusing runaway requests (e.g. a
// two-pebbling table for a long path) with a budget_error instead of hanging.
struct oracle_budget {
    std::uint64_t max_cells = 100'000'000ULL;
};

struct oracle_stats {
    std::uint64_t cells = 0;
};

// Exact t-solvability of one configuration: can 'target' pebbles be placed
// on 'root' via moves that remove two pebbles from a vertex and place one on
// a neighbor? Memoized DFS with two sound shortcuts: a success bound from
// per-vertex stack deliveries and a failure bound from the distance-weight
// function (both monotone certificates, so no pruning error is possible).
bool is_solvable(const graph& g, const std::vector<int>& config, int root, int target,
                 const oracle_budget& budget = {}, oracle_stats* stats = nullptr);

// Smallest k such that every configuration of k pebbles can place one pebble
// on 'root'. Computed by an ascending bottom-up sweep over exact sizes.
int rooted_pebbling_number(const graph& g, int root, const oracle_budget& budget = {},
                           oracle_stats* stats = nullptr);

struct pi_result {
    int pi = 0;
    int witness_root = 0;       // 0-based root realizing the maximum
    std::vector<int> witness;   // unsolvable configuration of size pi - 1
};

// Pebbling number: max of rooted values over one representative per vertex
// orbit (automorphic roots have identical rooted values).
pi_result pebbling_number(const graph& g, const oracle_budget& budget = {},
                          oracle_stats* stats = nullptr);

// Support-resolved two-pebbling data. by_support[s] (s = 1..n) is the least
// k such that every configuration with exactly s occupied vertices and k
// pebbles can place TWO pebbles on any root; monotone[s] is the weakly
// decreasing envelope max over s' >= s, which is what pebble-accumulating
// strategies need when extra pebbles may enlarge the support. Index 0 is
// unused. The sweep is capped at size 2*pi(G) - 1: splitting any 2*pi(G)
// pebbles into two halves of pi(G) and delivering one pebble with each half
// shows no larger configuration can be 2-unsolvable.
struct two_pebbling_tables {
    int pi = 0;
    std::vector<int> by_support;
    std::vector<int> monotone;
};
two_pebbling_tables two_pebbling_numbers(const graph& g, const oracle_budget& budget = {},
                                         oracle_stats* stats = nullptr);

// 1-unsolvable configurations for a fixed root in ascending order of size,
// lexicographic within a size, up to 'limit' entries or size 'max_size'.
std::vector<std::vector<int>> enumerate_unsolvable(const graph& g, int root, int max_size,
                                                   std::size_t limit,
                                                   const oracle_budget& budget = {},
                                                   oracle_stats* stats = nullptr);

// Low-level sweep behind the oracle entry points: visits every
// target-unsolvable configuration of each exact size 0..max_size in
// lexicographic order. Return false from the visitor to stop early. A fully
// solvable size level ends the sweep (adding a pebble keeps a configuration
// solvable, so nothing unsolvable exists above it).
void for_each_unsolvable(const graph& g, int root, int target, int max_size,
                         const oracle_budget& budget, oracle_stats* stats,
                         const std::function<bool(int size, const std::vector<int>& config)>& visit);

}  // namespace pebble
