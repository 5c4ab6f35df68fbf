#include "pebble/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "pebble/util.hpp"

namespace pebble {

bool graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

graph make_graph(int n, const std::string& name,
                 const std::vector<std::pair<int, int>>& edges_1based) {
    if (n <= 0) throw config_error("graph '" + name + "': vertex count must be positive");
    graph g;
    g.n = n;
    g.name = name;
    g.adj.resize(n);
    for (auto [u1, v1] : edges_1based) {
        if (u1 < 1 || u1 > n || v1 < 1 || v1 > n)
            throw config_error("graph '" + name + "': edge (" + std::to_string(u1) + "," +
                               std::to_string(v1) + ") uses a label outside 1.." + std::to_string(n));
        if (u1 == v1)
            throw config_error("graph '" + name + "': loop at vertex " + std::to_string(u1));
        int u = std::min(u1, v1) - 1, v = std::max(u1, v1) - 1;
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw config_error("graph '" + name + "': duplicate edge");
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

namespace {

const std::vector<std::pair<int, int>>& lemke_edges() {
    // The 8-vertex Lemke graph, the smallest known graph without the
    // two-pebbling property. Vertex 8 is the degree-4 "bottom" vertex at
    // distance 3 from vertex 1.
    static const std::vector<std::pair<int, int>> e = {
        {1, 2}, {1, 3}, {2, 4}, {3, 5}, {3, 6}, {3, 7},
        {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    return e;
}

const std::vector<std::pair<int, int>>& lemke1_edges() {
    // First 8-vertex variant, also lacking the two-pebbling property.
    static const std::vector<std::pair<int, int>> e = {
        {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6},
        {3, 7}, {4, 5}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    return e;
}

const std::vector<std::pair<int, int>>& lemke2_edges() {
    // Second 8-vertex variant, also lacking the two-pebbling property.
    static const std::vector<std::pair<int, int>> e = {
        {1, 2}, {1, 3}, {2, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5},
        {4, 7}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {6, 8}, {7, 8}};
    return e;
}

int parse_positive_int(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw config_error(what + ": expected a positive integer, got '" + text + "'");
    long v = 0;
    try {
        v = std::stol(text);
    } catch (const std::exception&) {
        throw config_error(what + ": integer out of range: '" + text + "'");
    }
    if (v <= 0 || v > 1000000)
        throw config_error(what + ": value out of range 1..1000000: '" + text + "'");
    return static_cast<int>(v);
}

void require_connected(const graph& g, const std::string& spec) {
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != g.n)
        throw config_error("graph '" + spec + "' is disconnected; pebbling requires a connected graph");
}

}  // namespace

graph parse_graph_spec(const std::string& spec) {
    graph g;
    if (spec == "lemke") {
        g = make_graph(8, spec, lemke_edges());
    } else if (spec == "lemke1") {
        g = make_graph(8, spec, lemke1_edges());
    } else if (spec == "lemke2") {
        g = make_graph(8, spec, lemke2_edges());
    } else if (spec.rfind("path:", 0) == 0) {
        int n = parse_positive_int(spec.substr(5), "path");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        g = make_graph(n, spec, e);
    } else if (spec.rfind("cycle:", 0) == 0) {
        int n = parse_positive_int(spec.substr(6), "cycle");
        if (n < 3) throw config_error("cycle: needs at least 3 vertices, got " + std::to_string(n));
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(1, n);
        g = make_graph(n, spec, e);
    } else if (spec.rfind("complete:", 0) == 0) {
        int n = parse_positive_int(spec.substr(9), "complete");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
        g = make_graph(n, spec, e);
    } else if (spec.rfind("complete-bipartite:", 0) == 0) {
        std::string args = spec.substr(19);
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw config_error("complete-bipartite: expected two sizes 'A,B', got '" + args + "'");
        int a = parse_positive_int(args.substr(0, comma), "complete-bipartite");
        int b = parse_positive_int(args.substr(comma + 1), "complete-bipartite");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= a; ++i)
            for (int j = 1; j <= b; ++j) e.emplace_back(i, a + j);
        g = make_graph(a + b, spec, e);
    } else if (spec.rfind("file:", 0) == 0) {
        g = load_graph_file(spec.substr(5));
    } else {
        throw config_error(
            "unknown graph spec '" + spec +
            "' (expected lemke, lemke1, lemke2, path:N, cycle:N, complete:N, "
            "complete-bipartite:A,B or file:PATH)");
    }
    if (g.n > 1) require_connected(g, spec);
    return g;
}

graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open graph file '" + path + "'");
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                throw config_error("graph file '" + path + "': header must be 'n m'");
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            throw config_error("graph file '" + path + "': bad edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw config_error("graph file '" + path + "': missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw config_error("graph file '" + path + "': header promises " + std::to_string(m) +
                           " edges, found " + std::to_string(edges.size()));
    std::string stem = path;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    return make_graph(n, stem, edges);
}

graph cartesian_product(const graph& g, const graph& h) {
    graph p;
    p.n = g.n * h.n;
    p.name = g.name + " x " + h.name;
    p.adj.resize(p.n);
    auto flat = [&](int i, int j) { return i * h.n + j; };
    for (int i = 0; i < g.n; ++i)
        for (auto [j1, j2] : h.edges) p.edges.emplace_back(flat(i, j1), flat(i, j2));
    for (auto [i1, i2] : g.edges)
        for (int j = 0; j < h.n; ++j) p.edges.emplace_back(flat(i1, j), flat(i2, j));
    std::sort(p.edges.begin(), p.edges.end());
    for (auto [u, v] : p.edges) {
        p.adj[u].push_back(v);
        p.adj[v].push_back(u);
    }
    for (auto& nb : p.adj) std::sort(nb.begin(), nb.end());
    return p;
}

std::string product_vertex_label(int flat, int h_n) {
    return "(" + std::to_string(flat / h_n + 1) + "," + std::to_string(flat % h_n + 1) + ")";
}

graph_metric compute_metric(const graph& g) {
    graph_metric m;
    m.dist.assign(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        auto& d = m.dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    m.diameter = std::max(m.diameter, d[w]);
                    q.push(w);
                }
        }
        for (int v = 0; v < g.n; ++v)
            if (d[v] < 0)
                throw config_error("graph '" + g.name + "' is disconnected");
    }
    return m;
}

namespace {

// Backtracking search for one automorphism mapping 'from' to 'to'.
// Vertices are assigned in a fixed order; candidate images must preserve
// the initial color classes and adjacency with everything already mapped.
class automorphism_finder {
  public:
    automorphism_finder(const graph& g, const std::vector<int>& color) : g_(g), color_(color) {
        order_.resize(g.n);
        std::iota(order_.begin(), order_.end(), 0);
    }

    bool exists(int from, int to) {
        image_.assign(g_.n, -1);
        used_.assign(g_.n, 0);
        if (color_[from] != color_[to]) return false;
        image_[from] = to;
        used_[to] = 1;
        return extend(0);
    }

  private:
    bool extend(std::size_t pos) {
        while (pos < order_.size() && image_[order_[pos]] >= 0) ++pos;
        if (pos == order_.size()) return true;
        int v = order_[pos];
        for (int w = 0; w < g_.n; ++w) {
            if (used_[w] || color_[w] != color_[v]) continue;
            bool ok = true;
            for (int u : g_.adj[v]) {
                if (image_[u] >= 0 && !g_.has_edge(w, image_[u])) { ok = false; break; }
            }
            if (ok) {
                // Non-neighbors must stay non-neighbors; with equal degrees it
                // suffices that every mapped neighbor of v maps into N(w) and
                // the counts match, which the loop above plus this check gives.
                for (int u = 0; ok && u < g_.n; ++u)
                    if (image_[u] >= 0 && g_.has_edge(w, image_[u]) && !g_.has_edge(v, u)) ok = false;
            }
            if (!ok) continue;
            image_[v] = w;
            used_[w] = 1;
            if (extend(pos + 1)) return true;
            image_[v] = -1;
            used_[w] = 0;
        }
        return false;
    }

    const graph& g_;
    const std::vector<int>& color_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<char> used_;
};

struct union_find {
    std::vector<int> parent;
    explicit union_find(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> vertex_orbits(const graph& g, int search_cap) {
    std::vector<std::vector<int>> orbits;
    if (g.n > search_cap) {
        // Conservative fallback: treating every vertex as its own orbit is
        // always sound (it just means no root candidates get merged).
        orbits.reserve(g.n);
        for (int v = 0; v < g.n; ++v) orbits.push_back({v});
        return orbits;
    }

    // Initial invariant coloring: (degree, sorted distance profile). Any
    // automorphism preserves both, so only same-colored pairs are searched.
    graph_metric m = compute_metric(g);
    std::vector<std::vector<int>> key(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> profile = m.dist[v];
        std::sort(profile.begin(), profile.end());
        profile.push_back(g.degree(v));
        key[v] = std::move(profile);
    }
    std::vector<int> color(g.n, 0);
    {
        std::vector<std::vector<int>> sorted_keys = key;
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
        for (int v = 0; v < g.n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key[v]) - sorted_keys.begin());
    }

    union_find uf(g.n);
    automorphism_finder finder(g, color);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (uf.find(u) == uf.find(v) || color[u] != color[v]) continue;
            if (finder.exists(u, v)) uf.merge(u, v);
        }

    std::vector<std::vector<int>> by_root(g.n);
    for (int v = 0; v < g.n; ++v) by_root[uf.find(v)].push_back(v);
    for (auto& orbit : by_root)
        if (!orbit.empty()) orbits.push_back(std::move(orbit));
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

}  // namespace pebble
