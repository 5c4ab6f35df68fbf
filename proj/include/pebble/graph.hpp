#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pebble {

// Simple undirected graph. Vertices are 0-based internally; every
// user-facing surface (catalog specs, text files, reports, LP variable
// names) is 1-based and conversion happens at those boundaries only.
struct graph {
    int n = 0;
    std::string name;
    std::vector<std::vector<int>> adj;         // sorted neighbor lists
    std::vector<std::pair<int, int>> edges;    // u < v, lexicographically sorted

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Builds a graph from 1-based edge pairs, validating labels, rejecting
// loops and duplicate edges.
graph make_graph(int n, const std::string& name,
                 const std::vector<std::pair<int, int>>& edges_1based);

// Catalog spellings: lemke, lemke1, lemke2, path:N, cycle:N, complete:N,
// complete-bipartite:A,B and file:PATH. All graphs must be connected
// (pebbling on a disconnected graph is degenerate), which is enforced here.
graph parse_graph_spec(const std::string& spec);

// Text format: first line "n m", then m lines "u v" with 1-based labels.
// Blank lines and lines starting with '#' are ignored.
graph load_graph_file(const std::string& path);

// Cartesian product. Product vertex (i, j) - both 0-based - maps to the
// flat index i * h.n + j, so 1-based labels follow (i-1)*|V(H)| + j.
graph cartesian_product(const graph& g, const graph& h);

// Pretty label "(i,j)" (1-based) for a flat product index.
std::string product_vertex_label(int flat, int h_n);

// All-pairs BFS distances; throws config_error if the graph is disconnected.
struct graph_metric {
    std::vector<std::vector<int>> dist;
    int diameter = 0;
};
graph_metric compute_metric(const graph& g);

// Vertex orbits under the full automorphism group, each orbit sorted
// ascending and orbits ordered by smallest element. Exact for n <=
// search_cap (pairwise automorphism search with union-find); beyond the cap
// the partition conservatively falls back to singletons, which only costs
// pruning opportunities, never correctness.
std::vector<std::vector<int>> vertex_orbits(const graph& g, int search_cap = 16);

}  // namespace pebble
