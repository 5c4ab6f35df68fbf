#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/profile.hpp"

namespace pebble {

// The two orientations of the product. For side G the slices are copies of
// G indexed by frame vertices j in V(H); for side H the roles swap.
enum class side { G = 0, H = 1 };
inline const char* side_tag(side k) { return k == side::G ? "G" : "H"; }

enum class constraint_family {
    // Variable-defining families.
    slice_total,    // slice totals are column/row sums of the full configuration
    set_split,      // slice = pi * set + extra, extra <= pi - 1
    pair_def,       // pair = floor(extra / 2)
    set_level,      // y[s] = [total set count >= s]
    sat_def,        // sat = floor((slice - extra) / |K|)
    sat_level,      // x[t] = [sat >= t]
    coverage,       // covered = [c >= 1]
    support_def,    // support = number of covered vertices in the slice
    stack_bound,    // stack[d] = deliverable pebbles over d-hop moves
    stack_gate,     // indicator that the stack upper bound formula applies
    support_band,   // supportLess / supportMore / supportIs indicators
    twopeb_need,    // pebbles required to place 2 on the slice's root copy
    twopeb_gate,    // can2peb = [slice total >= requirement]
    root_need,      // lower bounds on pebbles deliverable to the root slice
    // Solvability cut families (strategy A: assemble sets / stacks across
    // slices; strategy B: funnel pebbles into the root slice).
    set_count_cap,     // total complete sets stay below pi(frame)
    set_completion,    // a saturated hub completes sets at nearby slices
    pair_transfer,     // spare pairs move across a bipartite frame link
    root_delivery_cap, // deliverable-to-root-slice total stays below pi(frame)
    star_discount,     // highly pebbled hub + star neighbors + 2-pebbling credit
    stack_discount,    // stacks pour into one slice, then 2-pebbling credit
    root_slice_ban,    // no complete set may sit on the root slice
    stack_delivery,    // stacks reach the root slice directly
    path_cascade,      // pebbles cascade along a slice path into the root slice
    root_path,         // root-slice deliveries merge along a frame path
    root_relay,        // in-slice relay paths raise the root-copy delivery floor
    cell_cap,          // a single cell stays below its product-distance cost
    frame_pattern,     // root-slice deliveries avoid every minimal solvable pattern
    delivery_tree,     // exact halving schedules along fixed shortest-path trees
};

const char* family_name(constraint_family f);

// Enumeration caps for the combinatorial cut families. Zero disables a
// family; -1 means "intrinsic caps only" where noted. Defaults were chosen
// so that the bundled benchmark instances reproduce within their time
// budgets; raising caps tightens bounds at the cost of larger models.
struct constraint_policy {
    int completion_max_targets = 3;      // set_completion: |S| cap (0 disables)
    int completion_max_new_sets = 2;     // set_completion: eta cap
    int transfer_max_sources = 3;        // pair_transfer: |S| cap (0 disables)
    int transfer_max_targets = 2;        // pair_transfer: |T| cap
    int star_max_leaves = -1;            // star_discount: |S| cap (-1 = pi(frame)-3 only)
    int cascade_paths_per_terminal = 1;  // path_cascade (0 disables)
    int cascade_max_length = -1;         // path_cascade: path length cap (-1 = diameter)
    int rootpath_paths_per_terminal = -1;  // root_path (0 disables, -1 = all)
    int rootpath_max_length = -1;          // root_path: length cap (-1 = diameter)
    int rootrelay_max_length = -1;       // root_relay: path length cap
                                         // (-1 = root eccentricity, 0 disables)
    int frame_pattern_state_limit = 8000000;  // frame_pattern: skip a side whose
                                              // capped distribution space is larger
    int delivery_tree_variants = 3;  // delivery_tree: shortest-path trees per slice
                                     // (0 disables)
    int delivery_split_orders = 2;  // delivery_tree: balanced-split schedules over
                                    // all shortest-path predecessors; 0 disables,
                                    // 1 = remainders to low-index predecessors,
                                    // 2 = both directions
    bool enable_cell_caps = true;
    bool enable_frame_patterns = true;
    bool enable_set_count_cap = true;    // disabling leaves the model unbounded
    bool enable_root_delivery_cap = true;
    bool enable_stack_discount = true;
    bool enable_root_slice_ban = true;
    bool enable_stack_delivery = true;

    void validate() const;
    std::string to_json() const;
    static constraint_policy from_json(const std::string& text);
    static constraint_policy load(const std::string& path);
};

struct side_parameters {
    int pi_k = 0;        // pi of the slice graph K
    int pi_frame = 0;    // pi of the frame graph
    int size_k = 0;      // |V(K)|
    int frame_n = 0;     // |V(frame)|
    int t_max = 0;       // saturation levels tracked: 0..t_max
    int diam_frame = 0;
    std::vector<std::vector<int>> dist_frame;
    std::vector<int> u_all;              // sorted union of both correction sets
    std::vector<int> u_need;             // correction supports (plain)
    std::vector<int> u_need_mon;         // correction supports (monotone)
    std::vector<std::int64_t> corr;      // aligned with u_need
    std::vector<std::int64_t> corr_mon;  // aligned with u_need_mon
    // Shortest-path parent trees of the slice graph rooted at its root vertex
    // (parent[root] = -1), one per delivery-tree variant after deduplication.
    std::vector<std::vector<int>> delivery_trees;
    // Shortest-path predecessors of every slice-graph vertex (empty for the
    // root); present only when the balanced-split schedule is enabled.
    std::vector<std::vector<int>> delivery_preds;
};

struct model_parameters {
    int ng = 0, nh = 0;
    int root_g = 0, root_h = 0;  // 0-based
    std::int64_t big_m = 0;      // 2 * pi(G) * pi(H)
    side_parameters sides[2];

    const side_parameters& of(side k) const { return sides[static_cast<int>(k)]; }
};

enum class var_kind { integer, binary };

struct var_info {
    std::string name;
    var_kind kind;
};

// Deterministic variable layout; indices are dense and stable so LP output
// and solution parsing agree byte-for-byte across runs.
struct variable_catalog {
    std::vector<var_info> vars;

    int n_c = 0;  // count of full-configuration variables (the objective)

    int c(int i, int j) const { return c0_ + i * nh_ + j; }
    int covered(int i, int j) const { return cov0_ + i * nh_ + j; }
    int slice(side k, int j) const { return blk(k).slice + j; }
    int set_(side k, int j) const { return blk(k).set_ + j; }
    int extra(side k, int j) const { return blk(k).extra + j; }
    int sat(side k, int j) const { return blk(k).sat + j; }
    int pair_(side k, int j) const { return blk(k).pair_ + j; }
    int support(side k, int j) const { return blk(k).support + j; }
    int stack(side k, int j, int d) const { return blk(k).stack + j * diam_[int(k)] + (d - 1); }
    int n2peb(side k, int j) const { return blk(k).n2peb + j; }
    int n2peb_mon(side k, int j) const { return blk(k).n2peb_mon + j; }
    int nroot(side k, int j) const { return blk(k).nroot + j; }
    int x(side k, int j, int t) const { return blk(k).x + j * (tmax_[int(k)] + 1) + t; }
    int y(side k, int s) const { return blk(k).y + s; }
    int goodstack(side k, int j, int d) const { return blk(k).goodstack + j * diam_[int(k)] + (d - 1); }
    int can2peb(side k, int j) const { return blk(k).can2peb + j; }
    int sup_less(side k, int j, int s) const { return blk(k).sup_less + j * nu_[int(k)] + u_index(k, s); }
    int sup_more(side k, int j, int s) const { return blk(k).sup_more + j * nu_[int(k)] + u_index(k, s); }
    int sup_is(side k, int j, int s) const { return blk(k).sup_is + j * nu_[int(k)] + u_index(k, s); }
    // Unary delivery indicators nrz[j][t] = [nroot >= t], t in [1, nrz_cap].
    int nrz(side k, int j, int t) const { return nrz_off_[int(k)][j] + (t - 1); }
    int nrz_cap(side k, int j) const { return nrz_cap_[int(k)][j]; }
    bool has_nrz(side k) const { return !nrz_off_[int(k)].empty(); }
    // Forwarded pebbles along delivery tree r of slice j; no slot for the
    // slice root (it forwards nothing).
    int fwd(side k, int r, int j, int v) const {
        const int i = static_cast<int>(k);
        return fwd_[i] + (r * fwd_frames_[i] + j) * fwd_stride_[i] +
               (v > fwd_root_[i] ? v - 1 : v);
    }
    int fwd_trees(side k) const { return fwd_trees_[static_cast<int>(k)]; }
    // Balanced-split forward along the p-th shortest-path predecessor of v
    // (p indexes side_parameters::delivery_preds[v]) in slice j, under
    // remainder order o (0 = low-index first, 1 = high-index first).
    int fdag(side k, int o, int j, int v, int p) const {
        const int i = static_cast<int>(k);
        return fdag_[i] + (o * fdag_frames_[i] + j) * fdag_stride_[i] + dag_off_[i][v] + p;
    }
    bool has_fdag(side k) const { return fdag_orders_[static_cast<int>(k)] > 0; }
    int fdag_orders(side k) const { return fdag_orders_[static_cast<int>(k)]; }

    int size() const { return static_cast<int>(vars.size()); }

    // Filled in by assemble_model.
    struct side_block {
        int slice = 0, set_ = 0, extra = 0, sat = 0, pair_ = 0, support = 0, stack = 0;
        int n2peb = 0, n2peb_mon = 0, nroot = 0;
        int x = 0, y = 0, goodstack = 0, can2peb = 0, sup_less = 0, sup_more = 0, sup_is = 0;
    };
    side_block blocks_[2];
    int c0_ = 0, cov0_ = 0, nh_ = 0;
    int diam_[2] = {0, 0}, tmax_[2] = {0, 0}, nu_[2] = {0, 0};
    std::vector<int> u_all_[2];
    std::vector<int> nrz_off_[2], nrz_cap_[2];  // empty when the side skips patterns
    int fwd_[2] = {0, 0}, fwd_stride_[2] = {0, 0}, fwd_frames_[2] = {0, 0};
    int fwd_root_[2] = {0, 0}, fwd_trees_[2] = {0, 0};
    int fdag_[2] = {0, 0}, fdag_stride_[2] = {0, 0}, fdag_frames_[2] = {0, 0};
    int fdag_orders_[2] = {0, 0};
    std::vector<int> dag_off_[2];  // per-vertex first edge slot, empty when unused

    int u_index(side k, int s) const;

  private:
    const side_block& blk(side k) const { return blocks_[static_cast<int>(k)]; }
};

struct linear_term {
    std::int64_t coef;
    int var;
};

enum class sense { le, ge, eq };

// One constraint row with integral coefficients (denominators are cleared
// during construction, so exact feasibility checking is pure integer math).
struct linear_constraint {
    std::string label;
    constraint_family family;
    std::vector<linear_term> terms;
    sense dir;
    std::int64_t rhs;
};

struct product_model {
    graph g, h;
    pebbling_profile profile_g, profile_h;
    constraint_policy policy;
    model_parameters params;
    variable_catalog catalog;
    std::vector<linear_constraint> constraints;

    std::int64_t objective(const std::vector<std::int64_t>& assignment) const;
};

// Builds the full integer program whose feasible points include every
// configuration from which the product root (root_g, root_h) cannot be
// reached; maximizing total pebbles over it therefore upper-bounds the
// largest unsolvable configuration size.
product_model assemble_model(const graph& g, const graph& h, const pebbling_profile& pg,
                             const pebbling_profile& ph, int root_g, int root_h,
                             const constraint_policy& policy = {});

// Canonical assignment of every model variable for a concrete configuration
// (flat product indexing, c[i*|V(H)|+j]). Unsolvable configurations must
// satisfy every constraint; the validity test suite enforces this against
// the oracle.
std::vector<std::int64_t> derive_assignment(const product_model& m, const std::vector<int>& config);

struct feasibility_report {
    bool feasible = true;
    std::int64_t objective = 0;
    std::vector<std::string> violations;  // "label: lhs <op> rhs" per failed row
};

// Exact integer feasibility check (128-bit accumulation, no tolerances).
feasibility_report check_feasibility(const product_model& m,
                                     const std::vector<std::int64_t>& assignment);

}  // namespace pebble
