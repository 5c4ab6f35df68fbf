#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/model.hpp"
#include "pebble/solver.hpp"

namespace pebble {

struct root_candidate {
    int root_g = 0, root_h = 0;  // 0-based
};

// One representative root per orbit-pair of the two factors, in
// lexicographic order (so the all-ones root comes first). Symmetric roots
// give isomorphic products, hence equal optima — solving representatives
// covers every root.
std::vector<root_candidate> candidate_roots(const graph& g, const graph& h);

// Checks a user gap schedule: finite, non-negative, strictly decreasing;
// appends the final exact stage (gap 0) when missing. Throws config_error
// on violations.
std::vector<double> validate_gap_schedule(std::vector<double> schedule);

struct stage_record {
    int gap_index = 0;
    int root_g = 0, root_h = 0;
    double gap = 0.0;
    solve_status status = solve_status::error;
    bool has_incumbent = false;
    std::int64_t objective = 0;
    bool has_dual_bound = false;
    std::int64_t dual_bound = 0;
    double seconds = 0.0;
};

struct search_options {
    std::vector<double> gap_schedule = {0.1, 0.05, 0.0};
    double time_budget_s = 0.0;  // <= 0: unlimited
    int jobs = 1;                // forwarded to the solver as its thread count
    std::string workdir;         // required; stage working dirs are created below it
    std::string cache_dir;       // optional: byte-identical replay of finished searches
    constraint_policy policy;
};

struct search_report {
    std::string mode;  // "orbit-search" or "exhaustive-baseline"
    std::string graph_g, graph_h;
    int root_count = 0;          // candidate roots considered
    int solve_count = 0;         // solver invocations actually made
    bool completed = false;      // false when the time budget ran out
    std::int64_t best_unsolvable = -1;  // largest verified feasible objective (N)
    std::int64_t bound = 0;             // 1 + N; valid only when completed
    std::vector<stage_record> stages;
    bool from_cache = false;

    std::string to_json() const;
    static search_report from_json(const std::string& text);
};

// The staged root search: the first candidate root is solved exactly to
// seed the incumbent maximum N, then each relaxation stage revisits only
// the roots whose proven upper bound still exceeds N. After the final
// exact stage every root is either solved or dominated, so 1 + N upper
// bounds the product's pebbling number.
search_report run_root_search(const graph& g, const graph& h, const pebbling_profile& pg,
                              const pebbling_profile& ph, const backend_probe& backend,
                              const search_options& opts);

// Control experiment: one exact solve per literal root pair (no orbit
// reduction, no staging). Must agree with run_root_search on the bound.
search_report run_exhaustive_baseline(const graph& g, const graph& h,
                                      const pebbling_profile& pg, const pebbling_profile& ph,
                                      const backend_probe& backend, const search_options& opts);

}  // namespace pebble
