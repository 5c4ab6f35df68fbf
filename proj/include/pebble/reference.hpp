#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/profile.hpp"

namespace pebble {

// The thirteen base graphs the bundled result tables were computed over,
// together with the pebbling data the toolkit ships for them. `true_pi` is
// the oracle-verified pebbling number the model must be fed; `printed_pi`
// is the value the published base-graph table lists, which disagrees for
// three graphs (both paths are listed as 2^n instead of 2^(n-1), and the
// 4x4 complete bipartite graph is listed as 12 instead of 8). Every product
// cell in the result tables is consistent with the true values, with a
// single exception noted at reference_rows().
struct base_graph_info {
    std::string spec;    // graph spec understood by parse_graph_spec
    std::string label;   // short display label used in the result tables
    int vertices = 0;
    int true_pi = 0;
    int printed_pi = 0;
    bool two_pebbling = false;  // whether the graph has the 2-pebbling property
};

const std::vector<base_graph_info>& reference_base_graphs();

// Lookup by spec or by display label (case-sensitive); nullptr if unknown.
const base_graph_info* find_base_graph(const std::string& spec_or_label);

// One published product instance. `graham` is the conjectured upper bound
// pi(G)*pi(H) exactly as printed; for every row it equals the product of
// the true pebbling numbers except path:12 x path:12, whose printed cell
// uses the (incorrect) printed path values, 4096^2. `bound` and `seconds`
// are -1 for the one instance the publication skipped (path:12 x path:12,
// which exhausted memory in their environment).
struct reference_row {
    std::string g;               // row graph spec
    std::string h;               // column graph spec
    std::int64_t bound = -1;     // published model bound
    std::int64_t graham = 0;     // printed conjecture product
    double seconds = -1.0;       // published runtime
    bool graham_verified = false;  // conjecture proved for this instance
    bool best_possible = false;    // conjecture bound known to be tight (or would be)
    bool skipped = false;
};

const std::vector<reference_row>& reference_rows();

// Order-insensitive lookup by spec names; nullptr if the pair is not in the
// published tables.
const reference_row* find_reference_row(const std::string& g, const std::string& h);

// Ready-to-use pebbling profile for one of the thirteen base graphs: true
// pebbling number, and for the three graphs without the 2-pebbling property
// the full support-resolved two-pebbling tables. Throws config_error for
// unknown specs.
pebbling_profile bundled_profile(const std::string& spec);
bool has_bundled_profile(const std::string& spec);

}  // namespace pebble
