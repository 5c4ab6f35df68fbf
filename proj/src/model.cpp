#include "pebble/model.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <climits>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pebble/util.hpp"

namespace pebble {

const char* family_name(constraint_family f) {
    switch (f) {
        case constraint_family::slice_total: return "slice-total";
        case constraint_family::set_split: return "set-split";
        case constraint_family::pair_def: return "pair-def";
        case constraint_family::set_level: return "set-level";
        case constraint_family::sat_def: return "saturation-def";
        case constraint_family::sat_level: return "saturation-level";
        case constraint_family::coverage: return "coverage";
        case constraint_family::support_def: return "support-def";
        case constraint_family::stack_bound: return "stack-bound";
        case constraint_family::stack_gate: return "stack-gate";
        case constraint_family::support_band: return "support-band";
        case constraint_family::twopeb_need: return "twopeb-need";
        case constraint_family::twopeb_gate: return "twopeb-gate";
        case constraint_family::root_need: return "root-need";
        case constraint_family::set_count_cap: return "set-count-cap";
        case constraint_family::set_completion: return "set-completion";
        case constraint_family::pair_transfer: return "pair-transfer";
        case constraint_family::root_delivery_cap: return "root-delivery-cap";
        case constraint_family::star_discount: return "star-discount";
        case constraint_family::stack_discount: return "stack-discount";
        case constraint_family::root_slice_ban: return "root-slice-ban";
        case constraint_family::stack_delivery: return "stack-delivery";
        case constraint_family::path_cascade: return "path-cascade";
        case constraint_family::root_path: return "root-path";
        case constraint_family::root_relay: return "root-relay";
        case constraint_family::cell_cap: return "cell-cap";
        case constraint_family::frame_pattern: return "frame-pattern";
        case constraint_family::delivery_tree: return "delivery-tree";
    }
    return "?";
}

void constraint_policy::validate() const {
    auto check = [](int v, const char* what) {
        if (v < -1)
            throw config_error(std::string("policy: ") + what + " must be -1, 0 or positive");
    };
    check(completion_max_targets, "completion_max_targets");
    check(completion_max_new_sets, "completion_max_new_sets");
    check(transfer_max_sources, "transfer_max_sources");
    check(transfer_max_targets, "transfer_max_targets");
    check(star_max_leaves, "star_max_leaves");
    check(cascade_paths_per_terminal, "cascade_paths_per_terminal");
    check(cascade_max_length, "cascade_max_length");
    check(rootpath_paths_per_terminal, "rootpath_paths_per_terminal");
    check(rootpath_max_length, "rootpath_max_length");
    check(rootrelay_max_length, "rootrelay_max_length");
    if (frame_pattern_state_limit < 0)
        throw config_error("policy: frame_pattern_state_limit must be non-negative");
    if (delivery_tree_variants < 0)
        throw config_error("policy: delivery_tree_variants must be non-negative");
    if (delivery_split_orders < 0 || delivery_split_orders > 2)
        throw config_error("policy: delivery_split_orders must be 0, 1 or 2");
}

std::string constraint_policy::to_json() const {
    nlohmann::ordered_json j;
    j["completion_max_targets"] = completion_max_targets;
    j["completion_max_new_sets"] = completion_max_new_sets;
    j["transfer_max_sources"] = transfer_max_sources;
    j["transfer_max_targets"] = transfer_max_targets;
    j["star_max_leaves"] = star_max_leaves;
    j["cascade_paths_per_terminal"] = cascade_paths_per_terminal;
    j["cascade_max_length"] = cascade_max_length;
    j["rootpath_paths_per_terminal"] = rootpath_paths_per_terminal;
    j["rootpath_max_length"] = rootpath_max_length;
    j["rootrelay_max_length"] = rootrelay_max_length;
    j["frame_pattern_state_limit"] = frame_pattern_state_limit;
    j["delivery_tree_variants"] = delivery_tree_variants;
    j["delivery_split_orders"] = delivery_split_orders;
    j["enable_cell_caps"] = enable_cell_caps;
    j["enable_frame_patterns"] = enable_frame_patterns;
    j["enable_set_count_cap"] = enable_set_count_cap;
    j["enable_root_delivery_cap"] = enable_root_delivery_cap;
    j["enable_stack_discount"] = enable_stack_discount;
    j["enable_root_slice_ban"] = enable_root_slice_ban;
    j["enable_stack_delivery"] = enable_stack_delivery;
    return j.dump(2) + "\n";
}

constraint_policy constraint_policy::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("policy JSON is malformed: ") + e.what());
    }
    if (!j.is_object()) throw config_error("policy JSON must be an object");
    constraint_policy p;
    auto as_int = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number_integer())
            throw config_error("policy JSON: '" + key + "' must be an integer");
        return v.get<int>();
    };
    auto as_bool = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_boolean()) throw config_error("policy JSON: '" + key + "' must be a boolean");
        return v.get<bool>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "completion_max_targets") p.completion_max_targets = as_int(value, key);
        else if (key == "completion_max_new_sets") p.completion_max_new_sets = as_int(value, key);
        else if (key == "transfer_max_sources") p.transfer_max_sources = as_int(value, key);
        else if (key == "transfer_max_targets") p.transfer_max_targets = as_int(value, key);
        else if (key == "star_max_leaves") p.star_max_leaves = as_int(value, key);
        else if (key == "cascade_paths_per_terminal")
            p.cascade_paths_per_terminal = as_int(value, key);
        else if (key == "cascade_max_length") p.cascade_max_length = as_int(value, key);
        else if (key == "rootpath_paths_per_terminal")
            p.rootpath_paths_per_terminal = as_int(value, key);
        else if (key == "rootpath_max_length") p.rootpath_max_length = as_int(value, key);
        else if (key == "rootrelay_max_length") p.rootrelay_max_length = as_int(value, key);
        else if (key == "frame_pattern_state_limit")
            p.frame_pattern_state_limit = as_int(value, key);
        else if (key == "delivery_tree_variants") p.delivery_tree_variants = as_int(value, key);
        else if (key == "delivery_split_orders") p.delivery_split_orders = as_int(value, key);
        else if (key == "enable_cell_caps") p.enable_cell_caps = as_bool(value, key);
        else if (key == "enable_frame_patterns") p.enable_frame_patterns = as_bool(value, key);
        else if (key == "enable_set_count_cap") p.enable_set_count_cap = as_bool(value, key);
        else if (key == "enable_root_delivery_cap")
            p.enable_root_delivery_cap = as_bool(value, key);
        else if (key == "enable_stack_discount") p.enable_stack_discount = as_bool(value, key);
        else if (key == "enable_root_slice_ban") p.enable_root_slice_ban = as_bool(value, key);
        else if (key == "enable_stack_delivery") p.enable_stack_delivery = as_bool(value, key);
        else throw config_error("policy JSON: unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

constraint_policy constraint_policy::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open policy file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

int variable_catalog::u_index(side k, int s) const {
    const auto& u = u_all_[static_cast<int>(k)];
    auto it = std::lower_bound(u.begin(), u.end(), s);
    assert(it != u.end() && *it == s);
    return static_cast<int>(it - u.begin());
}

std::int64_t product_model::objective(const std::vector<std::int64_t>& assignment) const {
    std::int64_t total = 0;
    for (int idx = 0; idx < catalog.n_c; ++idx) total += assignment[catalog.c0_ + idx];
    return total;
}

namespace {

// Smallest e with 2^e >= x (x >= 1).
int ceil_log2(int x) {
    assert(x >= 1);
    return static_cast<int>(std::bit_width(static_cast<unsigned>(x - 1)));
}

std::string join_1based(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += "x";
        out += std::to_string(vs[i] + 1);
    }
    return out;
}

// Visits every non-empty subset of the sorted pool with size <= cap,
// ordered by size then lexicographically, so emission is deterministic.
void for_each_subset(const std::vector<int>& pool, int cap,
                     const std::function<void(const std::vector<int>&)>& fn) {
    const int n = static_cast<int>(pool.size());
    cap = std::min(cap, n);
    std::vector<int> pick, idx;
    for (int size = 1; size <= cap; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        pick.resize(size);
        while (true) {
            for (int i = 0; i < size; ++i) pick[i] = pool[idx[i]];
            fn(pick);
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
}

// Effective cap: negative policy values mean "intrinsic cap only".
int effective_cap(int policy_cap, int intrinsic) {
    return policy_cap < 0 ? intrinsic : std::min(policy_cap, intrinsic);
}

// Visits every simple path root = v0 ~ v1 ~ ... ~ v_alpha with
// 1 <= alpha <= maxlen, depth-first in sorted neighbor order, so the
// enumeration is deterministic. The visitor receives the whole path
// including the root.
void for_each_relay_path(const graph& gr, int root, int maxlen,
                         const std::function<void(const std::vector<int>&)>& fn) {
    if (maxlen <= 0) return;
    std::vector<int> path{root};
    std::vector<char> used(gr.n, 0);
    used[root] = 1;
    long seen = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : gr.adj[v]) {
            if (used[w]) continue;
            if (++seen > 100000)
                throw config_error(
                    "relay path enumeration exceeded 100000 paths; lower "
                    "rootrelay_max_length");
            path.push_back(w);
            used[w] = 1;
            fn(path);
            if (static_cast<int>(path.size()) - 1 < maxlen) self(self, w);
            used[w] = 0;
            path.pop_back();
        }
    };
    dfs(dfs, root);
}

// Shortest-path predecessors of every vertex toward `root` (empty for the
// root itself); the basis for both the parent trees and the balanced split.
std::vector<std::vector<int>> delivery_predecessors(const graph& gr, int root) {
    const auto dist = compute_metric(gr).dist[root];
    std::vector<std::vector<int>> preds(gr.n);
    for (int v = 0; v < gr.n; ++v) {
        if (v == root) continue;
        for (int w : gr.adj[v])
            if (dist[w] == dist[v] - 1) preds[v].push_back(w);
    }
    return preds;
}

// Distinct shortest-path parent trees of `gr` rooted at `root`. Variant r
// steers every vertex toward its r-th shortest-path predecessor (clamped to
// the last one), and duplicate parent vectors collapse, so the result holds
// at most `variants` trees and always at least one when variants > 0.
std::vector<std::vector<int>> delivery_parent_trees(const graph& gr, int root, int variants) {
    std::vector<std::vector<int>> trees;
    if (variants <= 0) return trees;
    const auto preds = delivery_predecessors(gr, root);
    for (int r = 0; r < variants; ++r) {
        std::vector<int> parent(gr.n, -1);
        for (int v = 0; v < gr.n; ++v) {
            if (v == root) continue;
            const auto& ps = preds[v];
            parent[v] = ps[std::min(static_cast<std::size_t>(r), ps.size() - 1)];
        }
        if (std::find(trees.begin(), trees.end(), parent) == trees.end())
            trees.push_back(std::move(parent));
    }
    return trees;
}

// Exact bottom-up forwarding schedule along a parent tree: each vertex halves
// everything it accumulates toward its parent. Returns the pebble count
// arriving at the root; when fwd_out is non-null it receives each vertex's
// forwarded amount.
std::int64_t tree_delivery(const std::vector<int>& parent, int root,
                           const std::vector<std::int64_t>& cells,
                           std::vector<std::int64_t>* fwd_out) {
    const int n = static_cast<int>(parent.size());
    std::vector<int> depth(n, 0), order(n);
    for (int v = 0; v < n; ++v)
        for (int u = v; parent[u] >= 0; u = parent[u]) ++depth[v];
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });
    std::vector<std::int64_t> acc = cells;
    if (fwd_out) fwd_out->assign(n, 0);
    for (int v : order) {
        if (v == root) continue;
        const std::int64_t f = acc[v] / 2;
        acc[parent[v]] += f;
        if (fwd_out) (*fwd_out)[v] = f;
    }
    return acc[root];
}

// Balanced-split schedule over all shortest-path predecessors: every vertex
// forwards floor(acc/2) moves split as evenly as possible across its preds,
// with the remainder going to low-index predecessors when rem_order is 0 and
// to high-index ones when it is 1. Returns the pebbles arriving at the root;
// split_out[v] (aligned with preds[v]) receives the per-edge amounts.
std::int64_t balanced_delivery(const std::vector<std::vector<int>>& preds, int root,
                               int rem_order, const std::vector<std::int64_t>& cells,
                               std::vector<std::vector<std::int64_t>>* split_out) {
    const int n = static_cast<int>(preds.size());
    std::vector<int> depth(n, 0), order(n);
    for (int v = 0; v < n; ++v)
        for (int u = v; !preds[u].empty(); u = preds[u][0]) ++depth[v];
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });
    std::vector<std::int64_t> acc = cells;
    if (split_out) {
        split_out->assign(n, {});
        for (int v = 0; v < n; ++v) (*split_out)[v].assign(preds[v].size(), 0);
    }
    for (int v : order) {
        if (v == root) continue;
        const std::int64_t f = acc[v] / 2;
        const auto np = static_cast<std::int64_t>(preds[v].size());
        for (std::int64_t p = 0; p < np; ++p) {
            const std::int64_t pos = rem_order == 0 ? p : np - 1 - p;
            const std::int64_t share = f / np + (pos < f % np ? 1 : 0);
            acc[preds[v][static_cast<std::size_t>(p)]] += share;
            if (split_out) (*split_out)[v][static_cast<std::size_t>(p)] = share;
        }
    }
    return acc[root];
}

// All minimal root-solvable distributions on `gr`, with per-vertex values
// capped at 2^dist(v, root): a stack of 2^dist pebbles walks to the root by
// itself, so no minimal pattern exceeds the cap and any distribution that
// does is solvable outright. A distribution is solvable exactly when it
// dominates one of the returned patterns componentwise, which is what makes
// them usable as exclusion rows. Returns nothing when the capped space is
// bigger than state_limit; the root's own entry is always zero.
std::vector<std::vector<int>> minimal_solvable_patterns(const graph& gr, int root,
                                                        std::int64_t state_limit) {
    const auto dist = compute_metric(gr).dist[root];
    std::vector<int> cap(gr.n, 0);
    std::vector<std::int64_t> stride(gr.n, 0);
    std::int64_t states = 1;
    for (int v = 0; v < gr.n; ++v) {
        if (v == root) continue;
        if (dist[v] > 20) return {};
        cap[v] = 1 << dist[v];
        stride[v] = states;
        states *= cap[v] + 1;
        if (states > state_limit) return {};
    }

    // memo: 0 unknown, 1 unsolvable, 2 solvable.
    std::vector<std::int8_t> memo(static_cast<std::size_t>(states), 0);
    std::vector<int> val(gr.n, 0);
    auto solvable = [&](auto&& self, std::int64_t idx) -> bool {
        std::int8_t& slot = memo[static_cast<std::size_t>(idx)];
        if (slot) return slot == 2;
        bool ok = false;
        for (int v = 0; v < gr.n && !ok; ++v) {
            if (val[v] < 2) continue;
            for (int w : gr.adj[v]) {
                if (w == root || val[w] + 1 > cap[w]) {
                    ok = true;  // a pebble reaches the root, now or by stack walk
                    break;
                }
                val[v] -= 2;
                ++val[w];
                ok = self(self, idx - 2 * stride[v] + stride[w]);
                val[v] += 2;
                --val[w];
                if (ok) break;
            }
        }
        slot = ok ? 2 : 1;
        return ok;
    };

    std::vector<std::vector<int>> patterns;
    auto scan = [&](auto&& self, int v, std::int64_t idx) -> void {
        if (v == gr.n) {
            if (!solvable(solvable, idx)) return;
            for (int u = 0; u < gr.n; ++u)
                if (val[u] > 0 && solvable(solvable, idx - stride[u])) return;
            patterns.push_back(val);
            return;
        }
        if (v == root) {
            self(self, v + 1, idx);
            return;
        }
        for (val[v] = 0; val[v] <= cap[v]; ++val[v])
            self(self, v + 1, idx + val[v] * stride[v]);
        val[v] = 0;
    };
    scan(scan, 0, 0);
    return patterns;
}

struct emitter {
    product_model& m;
    const model_parameters& p;
    const variable_catalog& cat;

    void row(std::string label, constraint_family family, std::vector<linear_term> terms,
             sense dir, std::int64_t rhs) {
        m.constraints.push_back({std::move(label), family, std::move(terms), dir, rhs});
    }

    static std::string lbl(const char* stem, side k) {
        return std::string(stem) + "_" + side_tag(k);
    }
    static std::string lbl(const char* stem, side k, int j) {
        return lbl(stem, k) + "_" + std::to_string(j + 1);
    }
    static std::string lbl(const char* stem, side k, int j, int second) {
        return lbl(stem, k, j) + "_" + std::to_string(second);
    }

    const graph& frame_of(side k) const { return k == side::G ? m.h : m.g; }
    int frame_root(side k) const { return k == side::G ? p.root_h : p.root_g; }

    void defining();
    void strategy();
};

void emitter::defining() {
    // Slice totals: each slice variable equals the sum of its cells.
    for (side k : {side::G, side::H})
        for (int j = 0; j < p.of(k).frame_n; ++j) {
            std::vector<linear_term> t{{-1, cat.slice(k, j)}};
            if (k == side::G)
                for (int i = 0; i < p.ng; ++i) t.push_back({1, cat.c(i, j)});
            else
                for (int jj = 0; jj < p.nh; ++jj) t.push_back({1, cat.c(j, jj)});
            row(lbl("slicetotal", k, j), constraint_family::slice_total, std::move(t), sense::eq,
                0);
        }

    // Complete sets and leftovers: slice = pi*set + extra, extra <= pi-1.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j) {
            row(lbl("setsplit", k, j), constraint_family::set_split,
                {{1, cat.slice(k, j)},
                 {-static_cast<std::int64_t>(sp.pi_k), cat.set_(k, j)},
                 {-1, cat.extra(k, j)}},
                sense::eq, 0);
            row(lbl("extracap", k, j), constraint_family::set_split, {{1, cat.extra(k, j)}},
                sense::le, sp.pi_k - 1);
        }
    }

    // pair = floor(extra / 2).
    for (side k : {side::G, side::H})
        for (int j = 0; j < p.of(k).frame_n; ++j) {
            row(lbl("pairub", k, j), constraint_family::pair_def,
                {{2, cat.pair_(k, j)}, {-1, cat.extra(k, j)}}, sense::le, 0);
            row(lbl("pairlb", k, j), constraint_family::pair_def,
                {{2, cat.pair_(k, j)}, {-1, cat.extra(k, j)}}, sense::ge, -1);
        }

    // y[s] = [total set count >= s]. The lower bound divides by pi(frame),
    // the largest total the set-count cap permits.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        row(lbl("setlvl0", k), constraint_family::set_level, {{1, cat.y(k, 0)}}, sense::eq, 1);
        for (int s = 1; s < sp.pi_frame; ++s) {
            std::vector<linear_term> ub{{static_cast<std::int64_t>(s), cat.y(k, s)}};
            std::vector<linear_term> lb{{static_cast<std::int64_t>(sp.pi_frame), cat.y(k, s)}};
            for (int j = 0; j < sp.frame_n; ++j) {
                ub.push_back({-1, cat.set_(k, j)});
                lb.push_back({-1, cat.set_(k, j)});
            }
            row(lbl("setlvlub", k) + "_" + std::to_string(s), constraint_family::set_level,
                std::move(ub), sense::le, 0);
            row(lbl("setlvllb", k) + "_" + std::to_string(s), constraint_family::set_level,
                std::move(lb), sense::ge, 1 - s);
        }
    }

    // sat = floor((slice - extra) / |K|). Extra pebbles count toward neither
    // sets nor saturation, so a saturation level of t certifies that
    // t * |K| + extra pebbles sit on the slice; the completion cuts rely on
    // exactly that surplus when they spend extras on top of whole layers.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j) {
            row(lbl("satub", k, j), constraint_family::sat_def,
                {{static_cast<std::int64_t>(sp.size_k), cat.sat(k, j)},
                 {-1, cat.slice(k, j)},
                 {1, cat.extra(k, j)}},
                sense::le, 0);
            row(lbl("satlb", k, j), constraint_family::sat_def,
                {{static_cast<std::int64_t>(sp.size_k), cat.sat(k, j)},
                 {-1, cat.slice(k, j)},
                 {1, cat.extra(k, j)}},
                sense::ge, 1 - sp.size_k);
        }
    }

    // x[t] = [sat >= t]; the divisor t_max + 2 exceeds every saturation
    // level reachable inside the feasible region.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j) {
            row(lbl("satlvl0", k, j), constraint_family::sat_level, {{1, cat.x(k, j, 0)}},
                sense::eq, 1);
            for (int t = 1; t <= sp.t_max; ++t) {
                row(lbl("satlvlub", k, j, t), constraint_family::sat_level,
                    {{static_cast<std::int64_t>(t), cat.x(k, j, t)}, {-1, cat.sat(k, j)}},
                    sense::le, 0);
                row(lbl("satlvllb", k, j, t), constraint_family::sat_level,
                    {{static_cast<std::int64_t>(sp.t_max) + 2, cat.x(k, j, t)},
                     {-1, cat.sat(k, j)}},
                    sense::ge, 1 - t);
            }
        }
    }

    // covered = [c >= 1].
    for (int i = 0; i < p.ng; ++i)
        for (int j = 0; j < p.nh; ++j) {
            const std::string suffix = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            row("covub_" + suffix, constraint_family::coverage,
                {{1, cat.covered(i, j)}, {-1, cat.c(i, j)}}, sense::le, 0);
            row("covlb_" + suffix, constraint_family::coverage,
                {{p.big_m, cat.covered(i, j)}, {-1, cat.c(i, j)}}, sense::ge, 0);
        }

    // support = number of covered cells in the slice.
    for (side k : {side::G, side::H})
        for (int j = 0; j < p.of(k).frame_n; ++j) {
            std::vector<linear_term> t{{-1, cat.support(k, j)}};
            if (k == side::G)
                for (int i = 0; i < p.ng; ++i) t.push_back({1, cat.covered(i, j)});
            else
                for (int jj = 0; jj < p.nh; ++jj) t.push_back({1, cat.covered(j, jj)});
            row(lbl("suppdef", k, j), constraint_family::support_def, std::move(t), sense::eq, 0);
        }

    // stack[d]: 2^d-stacks the slice can deliver over d hops, after up to
    // 2^d - 1 pebbles per occupied vertex (bar one) are stranded. The gate
    // binary disarms the upper bound when the slice is too light for that
    // accounting, leaving stack pinned to zero by the second bound.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j)
            for (int d = 1; d <= sp.diam_frame; ++d) {
                const std::int64_t pw = 1LL << d;
                row(lbl("stackub", k, j, d), constraint_family::stack_bound,
                    {{pw, cat.stack(k, j, d)},
                     {-1, cat.slice(k, j)},
                     {pw - 1, cat.support(k, j)},
                     {p.big_m, cat.goodstack(k, j, d)}},
                    sense::le, pw - 1 + p.big_m);
                row(lbl("stackub2", k, j, d), constraint_family::stack_bound,
                    {{pw, cat.stack(k, j, d)}, {-p.big_m, cat.goodstack(k, j, d)}}, sense::le,
                    0);
                row(lbl("stacklb", k, j, d), constraint_family::stack_bound,
                    {{pw, cat.stack(k, j, d)},
                     {-1, cat.slice(k, j)},
                     {pw - 1, cat.support(k, j)}},
                    sense::ge, 0);
                row(lbl("sgateub", k, j, d), constraint_family::stack_gate,
                    {{p.big_m, cat.goodstack(k, j, d)},
                     {-1, cat.slice(k, j)},
                     {pw - 1, cat.support(k, j)}},
                    sense::le, p.big_m + pw - 1);
                row(lbl("sgatelb", k, j, d), constraint_family::stack_gate,
                    {{p.big_m, cat.goodstack(k, j, d)},
                     {-1, cat.slice(k, j)},
                     {pw - 1, cat.support(k, j)}},
                    sense::ge, pw - 1);
            }
    }

    // supportLess / supportMore / supportIs indicators for every tracked
    // support size, including the s = 0 sentinel used by the requirement
    // rows. Each forcing coefficient equals the largest value its numerator
    // can take (s+1 resp. |K|-s+1), so the rows stay feasible at the
    // support extremes 0 and |K|.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j)
            for (int s : sp.u_all) {
                row(lbl("sleub", k, j, s), constraint_family::support_band,
                    {{static_cast<std::int64_t>(sp.size_k) - s + 1, cat.sup_less(k, j, s)},
                     {1, cat.support(k, j)}},
                    sense::le, sp.size_k + 1);
                row(lbl("slelb", k, j, s), constraint_family::support_band,
                    {{static_cast<std::int64_t>(s) + 1, cat.sup_less(k, j, s)},
                     {1, cat.support(k, j)}},
                    sense::ge, s + 1);
                row(lbl("sgeub", k, j, s), constraint_family::support_band,
                    {{static_cast<std::int64_t>(s) + 1, cat.sup_more(k, j, s)},
                     {-1, cat.support(k, j)}},
                    sense::le, 1);
                row(lbl("sgelb", k, j, s), constraint_family::support_band,
                    {{static_cast<std::int64_t>(sp.size_k) - s + 1, cat.sup_more(k, j, s)},
                     {-1, cat.support(k, j)}},
                    sense::ge, 1 - s);
                row(lbl("sisub1", k, j, s), constraint_family::support_band,
                    {{1, cat.sup_is(k, j, s)}, {-1, cat.sup_more(k, j, s)}}, sense::le, 0);
                row(lbl("sisub2", k, j, s), constraint_family::support_band,
                    {{1, cat.sup_is(k, j, s)}, {-1, cat.sup_less(k, j, s)}}, sense::le, 0);
                row(lbl("sislb", k, j, s), constraint_family::support_band,
                    {{1, cat.sup_is(k, j, s)},
                     {-1, cat.sup_more(k, j, s)},
                     {-1, cat.sup_less(k, j, s)}},
                    sense::ge, -1);
            }
    }

    // Requirement to land two pebbles on a slice's root copy: default
    // 2*pi - support + 1, with table-driven corrections switched in by the
    // supportIs indicators (the s = 0 sentinel lowers it to 2*pi).
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        for (int j = 0; j < sp.frame_n; ++j) {
            std::vector<linear_term> t{{1, cat.n2peb(k, j)}, {1, cat.support(k, j)}};
            for (std::size_t a = 0; a < sp.u_need.size(); ++a)
                t.push_back({-sp.corr[a], cat.sup_is(k, j, sp.u_need[a])});
            row(lbl("needdef", k, j), constraint_family::twopeb_need, std::move(t), sense::eq,
                2LL * sp.pi_k + 1);

            std::vector<linear_term> tm{{1, cat.n2peb_mon(k, j)}, {1, cat.support(k, j)}};
            for (std::size_t a = 0; a < sp.u_need_mon.size(); ++a)
                tm.push_back({-sp.corr_mon[a], cat.sup_is(k, j, sp.u_need_mon[a])});
            row(lbl("needmdef", k, j), constraint_family::twopeb_need, std::move(tm), sense::eq,
                2LL * sp.pi_k + 1);
        }
    }

    // can2peb = [slice total >= requirement].
    for (side k : {side::G, side::H})
        for (int j = 0; j < p.of(k).frame_n; ++j) {
            row(lbl("gateon", k, j), constraint_family::twopeb_gate,
                {{p.big_m, cat.can2peb(k, j)}, {-1, cat.slice(k, j)}, {1, cat.n2peb(k, j)}},
                sense::ge, 1);
            row(lbl("gateoff", k, j), constraint_family::twopeb_gate,
                {{p.big_m, cat.can2peb(k, j)}, {-1, cat.slice(k, j)}, {1, cat.n2peb(k, j)}},
                sense::le, p.big_m);
        }

    // Deliverable-to-root-slice lower bounds: once the 2-pebbling
    // requirement is met, two pebbles arrive plus one per further
    // 1-pebbling price; pebbles already on the root copy are free.
    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        const std::int64_t pi_k = sp.pi_k;
        for (int j = 0; j < sp.frame_n; ++j) {
            row(lbl("rootneed", k, j), constraint_family::root_need,
                {{pi_k, cat.nroot(k, j)},
                 {-2 * pi_k, cat.can2peb(k, j)},
                 {-1, cat.slice(k, j)},
                 {1, cat.n2peb(k, j)}},
                sense::ge, 1 - pi_k);
            const int root_cell = (k == side::G) ? cat.c(p.root_g, j) : cat.c(j, p.root_h);
            row(lbl("rootcell", k, j), constraint_family::root_need,
                {{pi_k, cat.nroot(k, j)}, {-1, cat.slice(k, j)}, {1 - pi_k, root_cell}},
                sense::ge, 1 - pi_k);
        }
    }

    // Per-cell delivery credit: every cell of a slice can independently walk
    // floor(c / 2^dist) pebbles to the slice's root copy (the per-source
    // moves never interact), so the deliverable count is at least the sum of
    // those floors. Scaling by 2^ecc linearizes the floors: an occupied cell
    // contributes 2^(ecc-d)*c - (2^ecc - 2^(ecc-d)) >= 2^ecc * floor(c/2^d),
    // and the covered indicator zeroes out empty cells exactly.
    for (side k : {side::G, side::H}) {
        const graph& slice_graph = (k == side::G) ? m.g : m.h;
        const int slice_root = (k == side::G) ? p.root_g : p.root_h;
        const auto root_dist = compute_metric(slice_graph).dist[slice_root];
        int ecc = 0;
        for (int d : root_dist) ecc = std::max(ecc, d);
        const std::int64_t scale = std::int64_t{1} << ecc;
        for (int j = 0; j < p.of(k).frame_n; ++j) {
            std::vector<linear_term> t{{scale, cat.nroot(k, j)}};
            for (int i = 0; i < slice_graph.n; ++i) {
                const std::int64_t a = std::int64_t{1} << (ecc - root_dist[i]);
                const int cell = (k == side::G) ? cat.c(i, j) : cat.c(j, i);
                t.push_back({-a, cell});
                if (scale - a != 0) t.push_back({scale - a, cat.covered(
                        (k == side::G) ? i : j, (k == side::G) ? j : i)});
            }
            row(lbl("rootstack", k, j), constraint_family::root_need, std::move(t),
                sense::ge, 0);
        }

        // Relay paths inside the slice: walking the path toward the root
        // copy halves at every hop and each floor loses less than one
        // pebble, so the root copy receives at least
        // sum_i c_i / 2^i - (1 - 2^-alpha), i.e.
        // 2^alpha * nroot >= sum_i 2^(alpha-i) * c_i - (2^alpha - 1).
        if (m.policy.rootrelay_max_length != 0) {
            const int maxlen = m.policy.rootrelay_max_length < 0
                                   ? ecc
                                   : std::min(m.policy.rootrelay_max_length,
                                              slice_graph.n - 1);
            int count = 0;
            for_each_relay_path(
                slice_graph, slice_root, maxlen, [&](const std::vector<int>& path) {
                    ++count;
                    const int alpha = static_cast<int>(path.size()) - 1;
                    for (int j = 0; j < p.of(k).frame_n; ++j) {
                        std::vector<linear_term> t{{std::int64_t{1} << alpha,
                                                    cat.nroot(k, j)}};
                        for (int i = 0; i <= alpha; ++i) {
                            const int cell = (k == side::G) ? cat.c(path[i], j)
                                                            : cat.c(j, path[i]);
                            t.push_back({-(std::int64_t{1} << (alpha - i)), cell});
                        }
                        row(lbl("rootrelay", k, j, count), constraint_family::root_relay,
                            std::move(t), sense::ge, 1 - (std::int64_t{1} << alpha));
                    }
                });
        }

        // Exact forwarding schedules along fixed shortest-path trees: a
        // vertex that accumulates s pebbles can pass floor(s/2) to its
        // parent, so integral fwd values obeying 2*fwd_v >= c_v +
        // sum(children) - 1 reproduce the bottom-up floors exactly, and the
        // root copy collects its own cell plus its children's forwards.
        const auto& trees = p.of(k).delivery_trees;
        for (int r = 0; r < static_cast<int>(trees.size()); ++r) {
            const auto& parent = trees[r];
            std::vector<std::vector<int>> children(slice_graph.n);
            for (int v = 0; v < slice_graph.n; ++v)
                if (parent[v] >= 0) children[parent[v]].push_back(v);
            for (int j = 0; j < p.of(k).frame_n; ++j) {
                auto cell = [&](int v) { return (k == side::G) ? cat.c(v, j) : cat.c(j, v); };
                for (int v = 0; v < slice_graph.n; ++v) {
                    if (v == slice_root) continue;
                    std::vector<linear_term> t{{2, cat.fwd(k, r, j, v)}, {-1, cell(v)}};
                    for (int u : children[v]) t.push_back({-1, cat.fwd(k, r, j, u)});
                    row(lbl("fwd", k, j, v + 1) + "_" + std::to_string(r),
                        constraint_family::delivery_tree, std::move(t), sense::ge, -1);
                }
                std::vector<linear_term> t{{1, cat.nroot(k, j)}, {-1, cell(slice_root)}};
                for (int u : children[slice_root]) t.push_back({-1, cat.fwd(k, r, j, u)});
                row(lbl("deliv", k, j) + "_" + std::to_string(r),
                    constraint_family::delivery_tree, std::move(t), sense::ge, 0);
            }
        }

        // Balanced-split schedules: every vertex forwards at least half of
        // what it accumulates, split across all shortest-path predecessors
        // with spread at most one and the remainder pinned to one end of the
        // predecessor order (one schedule per order). Pinning the remainder
        // makes the split a deterministic function of the totals, so the
        // solver cannot steer odd pebbles away from waiting stacks, and a
        // split across parallel predecessors can beat every single tree.
        const auto& dpreds = p.of(k).delivery_preds;
        for (int o = 0; o < cat.fdag_orders(k); ++o) {
            std::vector<std::vector<std::pair<int, int>>> into(slice_graph.n);
            for (int v = 0; v < slice_graph.n; ++v)
                for (int pi = 0; pi < static_cast<int>(dpreds[v].size()); ++pi)
                    into[dpreds[v][pi]].push_back({v, pi});
            for (int j = 0; j < p.of(k).frame_n; ++j) {
                auto cell = [&](int v) { return (k == side::G) ? cat.c(v, j) : cat.c(j, v); };
                for (int v = 0; v < slice_graph.n; ++v) {
                    if (v == slice_root) continue;
                    const int np = static_cast<int>(dpreds[v].size());
                    std::vector<linear_term> t;
                    for (int pi = 0; pi < np; ++pi) t.push_back({2, cat.fdag(k, o, j, v, pi)});
                    for (auto [u, pi] : into[v]) t.push_back({-1, cat.fdag(k, o, j, u, pi)});
                    t.push_back({-1, cell(v)});
                    row(lbl("spfwd", k, j, v + 1) + "_" + std::to_string(o),
                        constraint_family::delivery_tree, std::move(t), sense::ge, -1);
                    auto seq = [&](int t_) { return o == 0 ? t_ : np - 1 - t_; };
                    for (int t_ = 0; t_ + 1 < np; ++t_) {
                        const int a = cat.fdag(k, o, j, v, seq(t_));
                        const int b = cat.fdag(k, o, j, v, seq(t_ + 1));
                        row(lbl("spord", k, j, v + 1) + "_" + std::to_string(o) + "_" +
                                std::to_string(t_),
                            constraint_family::delivery_tree, {{1, a}, {-1, b}}, sense::ge,
                            0);
                        row(lbl("spgap", k, j, v + 1) + "_" + std::to_string(o) + "_" +
                                std::to_string(t_),
                            constraint_family::delivery_tree, {{1, a}, {-1, b}}, sense::le,
                            1);
                    }
                    if (np >= 3)
                        row(lbl("spspan", k, j, v + 1) + "_" + std::to_string(o),
                            constraint_family::delivery_tree,
                            {{1, cat.fdag(k, o, j, v, seq(0))},
                             {-1, cat.fdag(k, o, j, v, seq(np - 1))}},
                            sense::le, 1);
                }
                std::vector<linear_term> t{{1, cat.nroot(k, j)}, {-1, cell(slice_root)}};
                for (auto [u, pi] : into[slice_root])
                    t.push_back({-1, cat.fdag(k, o, j, u, pi)});
                row(lbl("spdeliv", k, j) + "_" + std::to_string(o),
                    constraint_family::delivery_tree, std::move(t), sense::ge, 0);
            }
        }
    }

    // A cell holding 2^(d_G + d_H) pebbles walks them to the root on its
    // own along a product geodesic, so no unsolvable configuration reaches
    // that threshold anywhere.
    if (m.policy.enable_cell_caps) {
        const auto dg = compute_metric(m.g).dist[p.root_g];
        const auto dh = compute_metric(m.h).dist[p.root_h];
        for (int i = 0; i < p.ng; ++i)
            for (int j = 0; j < p.nh; ++j) {
                const int d = dg[i] + dh[j];
                if (d > 40) continue;  // cap far beyond any feasible total
                row("cellcap_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                    constraint_family::cell_cap, {{1, cat.c(i, j)}}, sense::le,
                    (std::int64_t{1} << d) - 1);
            }
    }
}

void emitter::strategy() {
    const constraint_policy& pol = m.policy;

    // Total complete sets stay below pi(frame); with that many, the frame
    // could 1-pebble its own root using whole sets as currency.
    if (pol.enable_set_count_cap)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            std::vector<linear_term> t;
            for (int j = 0; j < sp.frame_n; ++j) t.push_back({1, cat.set_(k, j)});
            row(lbl("setcap", k), constraint_family::set_count_cap, std::move(t), sense::le,
                sp.pi_frame - 1);
        }

    // A saturated hub slice ships stacks to nearby slices and completes eta
    // new sets there; combined with the y level this must not reach the
    // set-count cap.
    if (pol.completion_max_targets != 0 && pol.completion_max_new_sets != 0)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const int dmax = ceil_log2(sp.pi_k) - 1;
            if (dmax < 1) continue;
            const int scap = effective_cap(pol.completion_max_targets, sp.pi_frame);
            for (int v = 0; v < sp.frame_n; ++v) {
                std::vector<int> ball;
                for (int w = 0; w < sp.frame_n; ++w)
                    if (w != v && sp.dist_frame[v][w] <= dmax) ball.push_back(w);
                for_each_subset(ball, scap, [&](const std::vector<int>& S) {
                    int d = 0;
                    for (int w : S) d = std::max(d, sp.dist_frame[v][w]);
                    const int nmax = effective_cap(
                        pol.completion_max_new_sets,
                        std::min(static_cast<int>(S.size()), sp.pi_frame));
                    for (int eta = 1; eta <= nmax; ++eta) {
                        const int chi = (1 << d) - 1 + static_cast<int>(S.size()) - eta;
                        if (chi > sp.t_max) continue;
                        std::vector<linear_term> t{{1, cat.extra(k, v)}};
                        std::int64_t wsum = 0;
                        for (int w : S) {
                            const std::int64_t pw = 1LL << sp.dist_frame[v][w];
                            t.push_back({pw, cat.extra(k, w)});
                            wsum += pw;
                        }
                        t.push_back({p.big_m, cat.x(k, v, chi)});
                        t.push_back({p.big_m, cat.y(k, sp.pi_frame - eta)});
                        const std::int64_t rhs =
                            sp.pi_k * wsum + 2 * p.big_m - 1 -
                            static_cast<std::int64_t>(sp.size_k) *
                                (static_cast<int>(S.size()) - eta);
                        row(lbl("completion", k) + "_v" + std::to_string(v + 1) + "_n" +
                                std::to_string(eta) + "_S" + join_1based(S),
                            constraint_family::set_completion, std::move(t), sense::le, rhs);
                    }
                });
            }
        }

    // Spare pairs at slices S, each adjacent (in the frame) to every slice
    // in T, convert to singles at T and complete sets there.
    if (pol.transfer_max_sources != 0 && pol.transfer_max_targets != 0)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const graph& fr = frame_of(k);
            const int tcap = effective_cap(pol.transfer_max_targets, sp.pi_frame);
            const int scap = effective_cap(pol.transfer_max_sources, sp.frame_n);
            std::vector<int> all(sp.frame_n);
            for (int j = 0; j < sp.frame_n; ++j) all[j] = j;
            for_each_subset(all, tcap, [&](const std::vector<int>& T) {
                std::vector<int> common;
                for (int i = 0; i < sp.frame_n; ++i) {
                    if (std::find(T.begin(), T.end(), i) != T.end()) continue;
                    bool ok = true;
                    for (int j : T)
                        if (!fr.has_edge(i, j)) {
                            ok = false;
                            break;
                        }
                    if (ok) common.push_back(i);
                }
                for_each_subset(common, scap, [&](const std::vector<int>& S) {
                    std::vector<linear_term> t;
                    for (int i : S) t.push_back({1, cat.pair_(k, i)});
                    for (int j : T) t.push_back({1, cat.extra(k, j)});
                    for (int i : S) t.push_back({p.big_m, cat.x(k, i, 1)});
                    t.push_back({p.big_m, cat.y(k, sp.pi_frame - static_cast<int>(T.size()))});
                    const std::int64_t rhs =
                        static_cast<std::int64_t>(T.size()) * sp.pi_k +
                        p.big_m * static_cast<std::int64_t>(S.size()) + p.big_m - 1;
                    row(lbl("transfer", k) + "_S" + join_1based(S) + "_T" + join_1based(T),
                        constraint_family::pair_transfer, std::move(t), sense::le, rhs);
                });
            });
        }

    // Deliverable-to-root-slice totals stay below pi(frame).
    if (pol.enable_root_delivery_cap)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            std::vector<linear_term> t;
            for (int j = 0; j < sp.frame_n; ++j) t.push_back({1, cat.nroot(k, j)});
            row(lbl("rootcap", k), constraint_family::root_delivery_cap, std::move(t), sense::le,
                sp.pi_frame - 1);
        }

    // A heavy hub with star neighbors S: doubled spares from S plus full
    // sets everywhere else must still miss the hub's 2-pebbling threshold.
    if (pol.star_max_leaves != 0)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const graph& fr = frame_of(k);
            const int cap = effective_cap(pol.star_max_leaves, sp.pi_frame - 3);
            if (cap < 1) continue;
            for (int v = 0; v < sp.frame_n; ++v)
                for_each_subset(fr.adj[v], cap, [&](const std::vector<int>& S) {
                    std::vector<linear_term> t{{1, cat.slice(k, v)}, {-1, cat.n2peb(k, v)}};
                    for (int j : S) t.push_back({2, cat.extra(k, j)});
                    const std::int64_t rhs =
                        2LL * static_cast<std::int64_t>(S.size()) * sp.pi_k +
                        (static_cast<std::int64_t>(sp.pi_frame) - 2 -
                         static_cast<std::int64_t>(S.size())) *
                            sp.pi_k -
                        1;
                    row(lbl("star", k) + "_v" + std::to_string(v + 1) + "_S" + join_1based(S),
                        constraint_family::star_discount, std::move(t), sense::le, rhs);
                });
        }

    // Every other slice pours its distance-indexed stacks into slice v;
    // even so, v must miss its monotone 2-pebbling threshold.
    if (pol.enable_stack_discount)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const int rbar = frame_root(k);
            for (int v = 0; v < sp.frame_n; ++v) {
                if (v == rbar) continue;
                const int d = sp.dist_frame[v][rbar];
                std::vector<linear_term> t{{1, cat.slice(k, v)}, {-1, cat.n2peb_mon(k, v)}};
                for (int j = 0; j < sp.frame_n; ++j) {
                    if (j == rbar || j == v) continue;
                    t.push_back({1, cat.stack(k, j, sp.dist_frame[v][j])});
                }
                row(lbl("stackdisc", k) + "_v" + std::to_string(v + 1),
                    constraint_family::stack_discount, std::move(t), sense::le,
                    ((1LL << d) - 2) * sp.pi_k - 1);
            }
        }

    // No complete set may sit on the root slice (it would 1-pebble the root
    // copy immediately).
    if (pol.enable_root_slice_ban)
        for (side k : {side::G, side::H})
            row(lbl("sliceban", k), constraint_family::root_slice_ban,
                {{1, cat.set_(k, frame_root(k))}}, sense::eq, 0);

    // Stacks delivered straight into the root slice plus its own load stay
    // below pi.
    if (pol.enable_stack_delivery)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const int rbar = frame_root(k);
            std::vector<linear_term> t{{1, cat.slice(k, rbar)}};
            for (int j = 0; j < sp.frame_n; ++j) {
                if (j == rbar) continue;
                t.push_back({1, cat.stack(k, j, sp.dist_frame[j][rbar])});
            }
            row(lbl("stackdel", k), constraint_family::stack_delivery, std::move(t), sense::le,
                sp.pi_k - 1);
        }

    // Pebbles cascade along a simple frame path into the root slice: each
    // hop halves, and saturated slices along the way disarm the row via x.
    if (pol.cascade_paths_per_terminal != 0)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const graph& fr = frame_of(k);
            const int rbar = frame_root(k);
            const int maxlen = pol.cascade_max_length < 0
                                   ? sp.diam_frame
                                   : std::min(pol.cascade_max_length, sp.frame_n - 1);
            if (maxlen < 1) continue;
            const int per_terminal = pol.cascade_paths_per_terminal;
            std::vector<int> emitted(sp.frame_n, 0);
            std::vector<int> path{rbar};
            std::vector<char> in_path(sp.frame_n, 0);
            in_path[rbar] = 1;
            long paths_seen = 0;
            std::function<void()> dfs = [&]() {
                const int tail = path.back();
                for (int w : fr.adj[tail]) {
                    if (in_path[w]) continue;
                    path.push_back(w);
                    in_path[w] = 1;
                    if (++paths_seen > 100000)
                        throw config_error(
                            "path cascade enumeration exceeded 100000 paths; lower "
                            "cascade_paths_per_terminal or cascade_max_length");
                    const int alpha = static_cast<int>(path.size()) - 1;
                    if (per_terminal < 0 || emitted[w] < per_terminal) {
                        ++emitted[w];
                        const std::int64_t pa = 1LL << alpha;
                        std::vector<linear_term> t;
                        std::int64_t wsum = 0;
                        for (int i = 1; i <= alpha; ++i) {
                            const std::int64_t wt = 1LL << (alpha - i);
                            t.push_back({wt, cat.slice(k, path[i])});
                            wsum += wt;
                        }
                        t.push_back({pa, cat.slice(k, rbar)});
                        for (int i = 1; i <= alpha; ++i)
                            t.push_back({pa * p.big_m, cat.x(k, path[i], 1)});
                        const std::int64_t rhs = pa * sp.pi_k + pa * p.big_m * alpha - 1 +
                                                 static_cast<std::int64_t>(sp.size_k) * wsum;
                        std::string label = lbl("cascade", k) + "_t" + std::to_string(w + 1);
                        if (emitted[w] >= 2) label += "_" + std::to_string(emitted[w]);
                        row(std::move(label), constraint_family::path_cascade, std::move(t),
                            sense::le, rhs);
                    }
                    if (alpha < maxlen) dfs();
                    in_path[w] = 0;
                    path.pop_back();
                }
            };
            dfs();
        }

    // Deliveries to the root slice merge along a frame path toward the root
    // copy. Each slice pushes its deliverable pebbles onto its own vertex of
    // the root slice independently (slices are disjoint), and a halving walk
    // along the path then carries them inward: whenever the 2^(alpha-i)
    // weighted total reaches 2^alpha, one pebble arrives at the root. The
    // length-zero case pins the root slice's own delivery count to zero,
    // since one pebble delivered there already sits on the root.
    if (pol.rootpath_paths_per_terminal != 0)
        for (side k : {side::G, side::H}) {
            const auto& sp = p.of(k);
            const graph& fr = frame_of(k);
            const int rbar = frame_root(k);
            row(lbl("rootpath0", k), constraint_family::root_path,
                {{1, cat.nroot(k, rbar)}}, sense::eq, 0);
            const int maxlen = pol.rootpath_max_length < 0
                                   ? sp.diam_frame
                                   : std::min(pol.rootpath_max_length, sp.frame_n - 1);
            if (maxlen < 1) continue;
            const int per_terminal = pol.rootpath_paths_per_terminal;
            std::vector<int> emitted(sp.frame_n, 0);
            std::vector<int> path{rbar};
            std::vector<char> in_path(sp.frame_n, 0);
            in_path[rbar] = 1;
            long paths_seen = 0;
            // Shorter paths carry smaller right-hand sides, so enumerate by
            // length; a per-terminal cap then keeps shortest paths first.
            int want_len = 1;
            std::function<void()> dfs = [&]() {
                const int tail = path.back();
                for (int w : fr.adj[tail]) {
                    if (in_path[w]) continue;
                    path.push_back(w);
                    in_path[w] = 1;
                    if (++paths_seen > 100000)
                        throw config_error(
                            "root path enumeration exceeded 100000 paths; lower "
                            "rootpath_paths_per_terminal or rootpath_max_length");
                    const int alpha = static_cast<int>(path.size()) - 1;
                    if (alpha == want_len && (per_terminal < 0 || emitted[w] < per_terminal)) {
                        ++emitted[w];
                        std::vector<linear_term> t;
                        for (int i = 1; i <= alpha; ++i)
                            t.push_back({1LL << (alpha - i), cat.nroot(k, path[i])});
                        std::string label = lbl("rootpath", k) + "_t" + std::to_string(w + 1);
                        if (emitted[w] >= 2) label += "_" + std::to_string(emitted[w]);
                        row(std::move(label), constraint_family::root_path, std::move(t),
                            sense::le, (1LL << alpha) - 1);
                    }
                    if (alpha < want_len) dfs();
                    in_path[w] = 0;
                    path.pop_back();
                }
            };
            for (; want_len <= maxlen; ++want_len) dfs();
        }

    // Exact frame-side exclusion: the root-slice deliveries, read as a
    // pebble distribution on the frame, may not dominate any minimal
    // root-solvable pattern - dominating one would let the frame walk a
    // pebble onto the root. Unary indicators nrz[j][t] = [nroot >= t] turn
    // each forbidden pattern into one row over its support.
    for (side k : {side::G, side::H}) {
        if (!cat.has_nrz(k)) continue;
        const graph& fr = frame_of(k);
        const int rbar = frame_root(k);
        row(lbl("patroot", k), constraint_family::frame_pattern,
            {{1, cat.nroot(k, rbar)}}, sense::le, 0);
        for (int j = 0; j < fr.n; ++j) {
            if (j == rbar) continue;
            std::vector<linear_term> t{{1, cat.nroot(k, j)}};
            for (int lv = 1; lv <= cat.nrz_cap(k, j); ++lv)
                t.push_back({-1, cat.nrz(k, j, lv)});
            row(lbl("nrzdef", k, j), constraint_family::frame_pattern, std::move(t),
                sense::eq, 0);
            for (int lv = 1; lv < cat.nrz_cap(k, j); ++lv)
                row(lbl("nrzmono", k, j, lv), constraint_family::frame_pattern,
                    {{1, cat.nrz(k, j, lv + 1)}, {-1, cat.nrz(k, j, lv)}}, sense::le, 0);
        }
        const auto patterns =
            minimal_solvable_patterns(fr, rbar, pol.frame_pattern_state_limit);
        int count = 0;
        for (const auto& pat : patterns) {
            std::vector<linear_term> t;
            std::int64_t supp = 0;
            for (int j = 0; j < fr.n; ++j)
                if (pat[j] > 0) {
                    t.push_back({1, cat.nrz(k, j, pat[j])});
                    ++supp;
                }
            row(lbl("pattern", k) + "_" + std::to_string(++count),
                constraint_family::frame_pattern, std::move(t), sense::le, supp - 1);
        }
    }
}

void validate_assemble_inputs(const graph& g, const graph& h, const pebbling_profile& pg,
                              const pebbling_profile& ph, int root_g, int root_h,
                              const constraint_policy& policy) {
    policy.validate();
    auto check_profile = [](const graph& gr, const pebbling_profile& pr) {
        pr.validate();
        if (pr.n != gr.n)
            throw config_error("profile '" + pr.name + "' covers " + std::to_string(pr.n) +
                               " vertices but graph '" + gr.name + "' has " +
                               std::to_string(gr.n));
        if (pr.pi < gr.n)
            throw config_error("profile '" + pr.name +
                               "': pi below the vertex count is impossible (one pebble on every "
                               "non-root vertex is unsolvable)");
        if (!pr.has_tables() && !pr.has_two_pebbling_property)
            throw config_error("profile '" + pr.name +
                               "': exact two-pebbling tables are required unless the graph has "
                               "the two-pebbling property");
    };
    check_profile(g, pg);
    check_profile(h, ph);
    if (root_g < 0 || root_g >= g.n)
        throw config_error("root_g out of range for graph '" + g.name + "'");
    if (root_h < 0 || root_h >= h.n)
        throw config_error("root_h out of range for graph '" + h.name + "'");
}

}  // namespace

product_model assemble_model(const graph& g, const graph& h, const pebbling_profile& pg,
                             const pebbling_profile& ph, int root_g, int root_h,
                             const constraint_policy& policy) {
    validate_assemble_inputs(g, h, pg, ph, root_g, root_h, policy);

    product_model m;
    m.g = g;
    m.h = h;
    m.profile_g = pg;
    m.profile_h = ph;
    m.policy = policy;

    model_parameters& p = m.params;
    p.ng = g.n;
    p.nh = h.n;
    p.root_g = root_g;
    p.root_h = root_h;
    p.big_m = 2LL * pg.pi * ph.pi;

    for (side k : {side::G, side::H}) {
        const pebbling_profile& mine = (k == side::G) ? pg : ph;
        const pebbling_profile& other = (k == side::G) ? ph : pg;
        const graph& frame = (k == side::G) ? h : g;
        side_parameters& sp = p.sides[static_cast<int>(k)];
        sp.pi_k = mine.pi;
        sp.pi_frame = other.pi;
        sp.size_k = mine.n;
        sp.frame_n = frame.n;
        sp.t_max =
            static_cast<int>((static_cast<std::int64_t>(pg.pi) * ph.pi - 1) / mine.n);
        graph_metric metric = compute_metric(frame);
        sp.diam_frame = metric.diameter;
        sp.dist_frame = std::move(metric.dist);
        sp.u_need = mine.correction_supports();
        sp.u_need_mon = mine.correction_supports_mon();
        for (int s : sp.u_need) sp.corr.push_back(mine.correction(s));
        for (int s : sp.u_need_mon) sp.corr_mon.push_back(mine.correction_mon(s));
        sp.u_all = sp.u_need;
        sp.u_all.insert(sp.u_all.end(), sp.u_need_mon.begin(), sp.u_need_mon.end());
        std::sort(sp.u_all.begin(), sp.u_all.end());
        sp.u_all.erase(std::unique(sp.u_all.begin(), sp.u_all.end()), sp.u_all.end());
        sp.delivery_trees = delivery_parent_trees((k == side::G) ? g : h,
                                                  (k == side::G) ? root_g : root_h,
                                                  policy.delivery_tree_variants);
        if (policy.delivery_split_orders > 0)
            sp.delivery_preds = delivery_predecessors((k == side::G) ? g : h,
                                                      (k == side::G) ? root_g : root_h);
    }

    variable_catalog& cat = m.catalog;
    cat.nh_ = p.nh;
    for (side k : {side::G, side::H}) {
        cat.diam_[static_cast<int>(k)] = p.of(k).diam_frame;
        cat.tmax_[static_cast<int>(k)] = p.of(k).t_max;
        cat.u_all_[static_cast<int>(k)] = p.of(k).u_all;
        cat.nu_[static_cast<int>(k)] = static_cast<int>(p.of(k).u_all.size());
    }

    auto add = [&cat](std::string name, var_kind kind) {
        cat.vars.push_back({std::move(name), kind});
    };
    auto add_block = [&](side k, const char* stem, var_kind kind) {
        const int first = cat.size();
        for (int j = 0; j < p.of(k).frame_n; ++j)
            add("v" + std::string(stem) + "_" + side_tag(k) + "_" + std::to_string(j + 1), kind);
        return first;
    };
    auto add_jd_block = [&](side k, const char* stem, var_kind kind) {
        const auto& sp = p.of(k);
        const int first = cat.size();
        for (int j = 0; j < sp.frame_n; ++j)
            for (int d = 1; d <= sp.diam_frame; ++d)
                add("v" + std::string(stem) + "_" + side_tag(k) + "_" + std::to_string(j + 1) +
                        "_" + std::to_string(d),
                    kind);
        return first;
    };

    cat.c0_ = cat.size();
    cat.n_c = p.ng * p.nh;
    for (int i = 0; i < p.ng; ++i)
        for (int j = 0; j < p.nh; ++j)
            add("vc_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), var_kind::integer);

    for (side k : {side::G, side::H}) {
        auto& blk = cat.blocks_[static_cast<int>(k)];
        blk.slice = add_block(k, "slice", var_kind::integer);
        blk.set_ = add_block(k, "set", var_kind::integer);
        blk.extra = add_block(k, "extra", var_kind::integer);
        blk.sat = add_block(k, "sat", var_kind::integer);
        blk.pair_ = add_block(k, "pair", var_kind::integer);
        blk.support = add_block(k, "supp", var_kind::integer);
        blk.stack = add_jd_block(k, "stack", var_kind::integer);
        blk.n2peb = add_block(k, "n2p", var_kind::integer);
        blk.n2peb_mon = add_block(k, "n2pm", var_kind::integer);
        blk.nroot = add_block(k, "nroot", var_kind::integer);

        const auto& sp = p.of(k);
        const int ki = static_cast<int>(k);
        cat.fwd_trees_[ki] = static_cast<int>(sp.delivery_trees.size());
        if (cat.fwd_trees_[ki] > 0) {
            const int slice_root = (k == side::G) ? p.root_g : p.root_h;
            cat.fwd_[ki] = cat.size();
            cat.fwd_stride_[ki] = sp.size_k - 1;
            cat.fwd_frames_[ki] = sp.frame_n;
            cat.fwd_root_[ki] = slice_root;
            for (int r = 0; r < cat.fwd_trees_[ki]; ++r)
                for (int j = 0; j < sp.frame_n; ++j)
                    for (int v = 0; v < sp.size_k; ++v) {
                        if (v == slice_root) continue;
                        add("vfwd_" + std::string(side_tag(k)) + "_" + std::to_string(r) +
                                "_" + std::to_string(j + 1) + "_" + std::to_string(v + 1),
                            var_kind::integer);
                    }
        }
        if (!sp.delivery_preds.empty()) {
            auto& off = cat.dag_off_[ki];
            off.assign(sp.size_k, 0);
            int edges = 0;
            for (int v = 0; v < sp.size_k; ++v) {
                off[v] = edges;
                edges += static_cast<int>(sp.delivery_preds[v].size());
            }
            cat.fdag_[ki] = cat.size();
            cat.fdag_stride_[ki] = edges;
            cat.fdag_frames_[ki] = sp.frame_n;
            cat.fdag_orders_[ki] = edges > 0 ? policy.delivery_split_orders : 0;
            for (int o = 0; o < cat.fdag_orders_[ki]; ++o)
                for (int j = 0; j < sp.frame_n; ++j)
                    for (int v = 0; v < sp.size_k; ++v)
                        for (int w : sp.delivery_preds[v])
                            add("vfsp_" + std::string(side_tag(k)) + "_" + std::to_string(o) +
                                    "_" + std::to_string(j + 1) + "_" + std::to_string(v + 1) +
                                    "_" + std::to_string(w + 1),
                                var_kind::integer);
        }
    }

    cat.cov0_ = cat.size();
    for (int i = 0; i < p.ng; ++i)
        for (int j = 0; j < p.nh; ++j)
            add("vcov_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), var_kind::binary);

    for (side k : {side::G, side::H}) {
        auto& blk = cat.blocks_[static_cast<int>(k)];
        const auto& sp = p.of(k);
        blk.x = cat.size();
        for (int j = 0; j < sp.frame_n; ++j)
            for (int t = 0; t <= sp.t_max; ++t)
                add("vx_" + std::string(side_tag(k)) + "_" + std::to_string(j + 1) + "_" +
                        std::to_string(t),
                    var_kind::binary);
        blk.y = cat.size();
        for (int s = 0; s < sp.pi_frame; ++s)
            add("vy_" + std::string(side_tag(k)) + "_" + std::to_string(s), var_kind::binary);
        blk.goodstack = add_jd_block(k, "gs", var_kind::binary);
        blk.can2peb = add_block(k, "c2p", var_kind::binary);
        auto add_band = [&](const char* stem) {
            const int first = cat.size();
            for (int j = 0; j < sp.frame_n; ++j)
                for (int s : sp.u_all)
                    add("v" + std::string(stem) + "_" + side_tag(k) + "_" +
                            std::to_string(j + 1) + "_" + std::to_string(s),
                        var_kind::binary);
            return first;
        };
        blk.sup_less = add_band("sle");
        blk.sup_more = add_band("sge");
        blk.sup_is = add_band("sis");

        // Unary root-delivery indicators, created only when the frame's
        // capped distribution space is small enough for the minimal-pattern
        // enumeration that uses them.
        if (policy.enable_frame_patterns) {
            const int rbar = (k == side::G) ? p.root_h : p.root_g;
            const auto& dist = sp.dist_frame[rbar];
            std::int64_t states = 1;
            bool fits = true;
            for (int j = 0; j < sp.frame_n && fits; ++j) {
                if (j == rbar) continue;
                if (dist[j] > 20 ||
                    (states *= (std::int64_t{1} << dist[j]) + 1) >
                        policy.frame_pattern_state_limit)
                    fits = false;
            }
            if (fits) {
                auto& off = cat.nrz_off_[static_cast<int>(k)];
                auto& caps = cat.nrz_cap_[static_cast<int>(k)];
                off.assign(sp.frame_n, 0);
                caps.assign(sp.frame_n, 0);
                for (int j = 0; j < sp.frame_n; ++j) {
                    if (j == rbar) continue;
                    caps[j] = 1 << dist[j];
                    off[j] = cat.size();
                    for (int t = 1; t <= caps[j]; ++t)
                        add("vnrz_" + std::string(side_tag(k)) + "_" + std::to_string(j + 1) +
                                "_" + std::to_string(t),
                            var_kind::binary);
                }
            }
        }
    }

    emitter e{m, p, cat};
    e.defining();
    e.strategy();
    return m;
}

std::vector<std::int64_t> derive_assignment(const product_model& m,
                                            const std::vector<int>& config) {
    const model_parameters& p = m.params;
    const variable_catalog& cat = m.catalog;
    if (static_cast<int>(config.size()) != p.ng * p.nh)
        throw config_error("configuration size does not match the product");
    for (int v : config)
        if (v < 0) throw config_error("configuration entries must be non-negative");

    std::vector<std::int64_t> a(cat.vars.size(), 0);
    for (int i = 0; i < p.ng; ++i)
        for (int j = 0; j < p.nh; ++j) {
            a[cat.c(i, j)] = config[i * p.nh + j];
            a[cat.covered(i, j)] = config[i * p.nh + j] > 0 ? 1 : 0;
        }

    for (side k : {side::G, side::H}) {
        const auto& sp = p.of(k);
        const graph& slice_graph = (k == side::G) ? m.g : m.h;
        const int slice_root = (k == side::G) ? p.root_g : p.root_h;
        const auto root_dist = compute_metric(slice_graph).dist[slice_root];
        int ecc = 0;
        for (int d : root_dist) ecc = std::max(ecc, d);
        const std::int64_t scale = std::int64_t{1} << ecc;
        std::vector<std::vector<int>> relay_paths;
        if (m.policy.rootrelay_max_length != 0) {
            const int maxlen = m.policy.rootrelay_max_length < 0
                                   ? ecc
                                   : std::min(m.policy.rootrelay_max_length,
                                              slice_graph.n - 1);
            for_each_relay_path(slice_graph, slice_root, maxlen,
                                [&](const std::vector<int>& path) {
                                    relay_paths.push_back(path);
                                });
        }
        std::int64_t total_sets = 0;
        for (int j = 0; j < sp.frame_n; ++j) {
            std::int64_t slice = 0, supp = 0;
            if (k == side::G) {
                for (int i = 0; i < p.ng; ++i) {
                    slice += config[i * p.nh + j];
                    supp += config[i * p.nh + j] > 0 ? 1 : 0;
                }
            } else {
                for (int jj = 0; jj < p.nh; ++jj) {
                    slice += config[j * p.nh + jj];
                    supp += config[j * p.nh + jj] > 0 ? 1 : 0;
                }
            }
            const std::int64_t set = slice / sp.pi_k;
            const std::int64_t extra = slice % sp.pi_k;
            total_sets += set;
            a[cat.slice(k, j)] = slice;
            a[cat.set_(k, j)] = set;
            a[cat.extra(k, j)] = extra;
            a[cat.sat(k, j)] = (slice - extra) / sp.size_k;
            a[cat.pair_(k, j)] = extra / 2;
            a[cat.support(k, j)] = supp;

            for (int d = 1; d <= sp.diam_frame; ++d) {
                const std::int64_t pw = 1LL << d;
                const std::int64_t q = slice - (pw - 1) * supp;
                a[cat.goodstack(k, j, d)] = slice - (pw - 1) * (supp - 1) > 0 ? 1 : 0;
                a[cat.stack(k, j, d)] = std::max<std::int64_t>(0, ceil_div(q, pw));
            }

            for (int s : sp.u_all) {
                a[cat.sup_less(k, j, s)] = supp <= s ? 1 : 0;
                a[cat.sup_more(k, j, s)] = supp >= s ? 1 : 0;
                a[cat.sup_is(k, j, s)] = supp == s ? 1 : 0;
            }

            std::int64_t need = 2LL * sp.pi_k - supp + 1;
            {
                auto it = std::lower_bound(sp.u_need.begin(), sp.u_need.end(), supp);
                if (it != sp.u_need.end() && *it == supp)
                    need += sp.corr[it - sp.u_need.begin()];
            }
            std::int64_t need_mon = 2LL * sp.pi_k - supp + 1;
            {
                auto it = std::lower_bound(sp.u_need_mon.begin(), sp.u_need_mon.end(), supp);
                if (it != sp.u_need_mon.end() && *it == supp)
                    need_mon += sp.corr_mon[it - sp.u_need_mon.begin()];
            }
            a[cat.n2peb(k, j)] = need;
            a[cat.n2peb_mon(k, j)] = need_mon;

            const std::int64_t c2p = slice >= need ? 1 : 0;
            a[cat.can2peb(k, j)] = c2p;

            const std::int64_t c_rt =
                (k == side::G) ? config[p.root_g * p.nh + j] : config[j * p.nh + p.root_h];
            const std::int64_t via_need = 2 * c2p - 1 + ceil_div(slice - need + 1, sp.pi_k);
            const std::int64_t via_cell = c_rt - 1 + ceil_div(slice - c_rt + 1, sp.pi_k);
            std::int64_t credit = 0;
            for (int i = 0; i < slice_graph.n; ++i) {
                const std::int64_t ci =
                    (k == side::G) ? config[i * p.nh + j] : config[j * p.nh + i];
                const std::int64_t ai = std::int64_t{1} << (ecc - root_dist[i]);
                credit += ai * ci - (ci > 0 ? scale - ai : 0);
            }
            const std::int64_t via_stack = ceil_div(credit, scale);
            std::int64_t via_relay = 0;
            for (const auto& path : relay_paths) {
                const int alpha = static_cast<int>(path.size()) - 1;
                std::int64_t sum = 0;
                for (int i = 0; i <= alpha; ++i) {
                    const std::int64_t ci = (k == side::G) ? config[path[i] * p.nh + j]
                                                           : config[j * p.nh + path[i]];
                    sum += (std::int64_t{1} << (alpha - i)) * ci;
                }
                via_relay = std::max(
                    via_relay, ceil_div(sum - (std::int64_t{1} << alpha) + 1,
                                        std::int64_t{1} << alpha));
            }
            std::int64_t via_tree = 0;
            const auto& trees = sp.delivery_trees;
            if (!trees.empty() || !sp.delivery_preds.empty()) {
                std::vector<std::int64_t> cells(slice_graph.n), fvals;
                for (int v = 0; v < slice_graph.n; ++v)
                    cells[v] = (k == side::G) ? config[v * p.nh + j] : config[j * p.nh + v];
                for (int r = 0; r < static_cast<int>(trees.size()); ++r) {
                    via_tree = std::max(
                        via_tree, tree_delivery(trees[r], slice_root, cells, &fvals));
                    for (int v = 0; v < slice_graph.n; ++v)
                        if (v != slice_root) a[cat.fwd(k, r, j, v)] = fvals[v];
                }
                for (int o = 0; o < cat.fdag_orders(k); ++o) {
                    std::vector<std::vector<std::int64_t>> split;
                    via_tree = std::max(
                        via_tree,
                        balanced_delivery(sp.delivery_preds, slice_root, o, cells, &split));
                    for (int v = 0; v < slice_graph.n; ++v)
                        for (int pi = 0; pi < static_cast<int>(split[v].size()); ++pi)
                            a[cat.fdag(k, o, j, v, pi)] = split[v][pi];
                }
            }
            a[cat.nroot(k, j)] = std::max<std::int64_t>(
                {0, via_need, via_cell, via_stack, via_relay, via_tree});
            if (cat.has_nrz(k) && cat.nrz_cap(k, j) > 0)
                for (int lv = 1; lv <= cat.nrz_cap(k, j); ++lv)
                    a[cat.nrz(k, j, lv)] = a[cat.nroot(k, j)] >= lv ? 1 : 0;

            for (int t = 0; t <= sp.t_max; ++t)
                a[cat.x(k, j, t)] = a[cat.sat(k, j)] >= t ? 1 : 0;
        }
        for (int s = 0; s < sp.pi_frame; ++s) a[cat.y(k, s)] = total_sets >= s ? 1 : 0;
    }
    return a;
}

feasibility_report check_feasibility(const product_model& m,
                                     const std::vector<std::int64_t>& assignment) {
    const variable_catalog& cat = m.catalog;
    if (assignment.size() != cat.vars.size())
        throw config_error("assignment size does not match the variable catalog");

    feasibility_report rep;
    for (std::size_t i = 0; i < cat.vars.size(); ++i) {
        const auto& v = cat.vars[i];
        if (assignment[i] < 0)
            rep.violations.push_back(v.name + ": value " + std::to_string(assignment[i]) +
                                     " below 0");
        else if (v.kind == var_kind::binary && assignment[i] > 1)
            rep.violations.push_back(v.name + ": value " + std::to_string(assignment[i]) +
                                     " above 1");
    }

    for (const auto& con : m.constraints) {
        __int128 lhs = 0;
        for (const auto& t : con.terms)
            lhs += static_cast<__int128>(t.coef) * assignment[t.var];
        bool ok = true;
        const char* op = "=";
        switch (con.dir) {
            case sense::le:
                ok = lhs <= con.rhs;
                op = "<=";
                break;
            case sense::ge:
                ok = lhs >= con.rhs;
                op = ">=";
                break;
            case sense::eq:
                ok = lhs == con.rhs;
                op = "=";
                break;
        }
        if (!ok)
            rep.violations.push_back(con.label + ": " +
                                     std::to_string(static_cast<long long>(lhs)) + " " + op +
                                     " " + std::to_string(con.rhs));
    }
    rep.feasible = rep.violations.empty();
    rep.objective = m.objective(assignment);
    return rep;
}

}  // namespace pebble
