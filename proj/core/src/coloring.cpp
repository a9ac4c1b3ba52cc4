#include "cyclecert/coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cyclecert/extract.hpp"

namespace cyclecert {

namespace {

// Underlying-graph adjacency: neighbors in either orientation, deduplicated.
std::vector<std::vector<Vertex>> underlying_adjacency(const Digraph& d) {
    std::vector<std::vector<Vertex>> adj(d.vertex_count());
    for (const Arc& a : d.arcs()) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

int palette_of(const std::vector<int>& color) {
    int p = 0;
    for (int c : color) p = std::max(p, c + 1);
    return p;
}

}  // namespace

bool verify_coloring(const Digraph& d, const VertexColoring& c, int bound) {
    if (static_cast<int>(c.color.size()) != d.vertex_count()) return false;
    for (int col : c.color)
        if (col < 0 || col >= bound) return false;
    return coloring_proper_on(d, c);
}

bool coloring_proper_on(const Digraph& d, const VertexColoring& c) {
    for (const Arc& a : d.arcs()) {
        int cu = c.color[a.from], cv = c.color[a.to];
        if (cu >= 0 && cu == cv) return false;
    }
    return true;
}

DegeneracyOrder degeneracy_order(const Digraph& d) {
    const int n = d.vertex_count();
    auto adj = underlying_adjacency(d);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<bool> removed(n, false);
    DegeneracyOrder result;
    result.order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        result.degeneracy = std::max(result.degeneracy, deg[pick]);
        removed[pick] = true;
        result.order.push_back(pick);
        for (Vertex w : adj[pick])
            if (!removed[w]) --deg[w];
    }
    return result;
}

namespace {

VertexColoring greedy_in_order(const Digraph& d, const std::vector<Vertex>& order) {
    auto adj = underlying_adjacency(d);
    VertexColoring c;
    c.color.assign(d.vertex_count(), -1);
    for (Vertex v : order) {
        std::vector<bool> taken(adj[v].size() + 1, false);
        for (Vertex w : adj[v]) {
            int cw = c.color[w];
            if (cw >= 0 && cw < static_cast<int>(taken.size())) taken[cw] = true;
        }
        int col = 0;
        while (taken[col]) ++col;
        c.color[v] = col;
    }
    c.palette = palette_of(c.color);
    return c;
}

}  // namespace

VertexColoring greedy_degeneracy_color(const Digraph& d) {
    auto order = degeneracy_order(d).order;
    std::reverse(order.begin(), order.end());
    return greedy_in_order(d, order);
}

VertexColoring color_acyclic_by_outdegree(const Digraph& d, int bound) {
    const int n = d.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(d.out_neighbors(v).size()) > bound)
            throw std::invalid_argument("out-degree of vertex " + std::to_string(v) +
                                        " exceeds bound " + std::to_string(bound));
    // Topological order by repeated in-degree-0 removal.
    std::vector<int> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = static_cast<int>(d.in_neighbors(v).size());
    std::vector<Vertex> topo;
    topo.reserve(n);
    std::vector<Vertex> ready;
    for (Vertex v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        topo.push_back(u);
        for (Vertex w : d.out_neighbors(u))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(topo.size()) != n)
        throw std::invalid_argument("digraph is not acyclic");
    std::reverse(topo.begin(), topo.end());
    VertexColoring c = greedy_in_order(d, topo);
    return c;
}

namespace {

struct ExactSearch {
    const std::vector<std::vector<int>>& adj;  // over compacted active vertices
    int palette;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::vector<int> color;
    std::vector<std::vector<int>> sat_count;  // [v][c] neighbors wearing c
    std::vector<int> saturation;

    bool assign(int colored) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        const int n = static_cast<int>(adj.size());
        if (colored == n) return true;
        // Max saturation, ties by degree then id.
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && adj[v].size() > adj[pick].size()))
                pick = v;
        }
        int max_used = -1;
        for (int v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
        int limit = std::min(palette - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (sat_count[pick][c] > 0) continue;
            set_color(pick, c);
            if (assign(colored + 1)) return true;
            unset_color(pick, c);
            if (exceeded) return false;
        }
        return false;
    }

    void set_color(int v, int c) {
        color[v] = c;
        for (int w : adj[v])
            if (color[w] < 0 && sat_count[w][c]++ == 0) ++saturation[w];
    }
    void unset_color(int v, int c) {
        color[v] = -1;
        for (int w : adj[v])
            if (color[w] < 0 && --sat_count[w][c] == 0) --saturation[w];
    }
};

}  // namespace

ExactColorResult exact_color_within(const Digraph& d, int palette, int cap,
                                    std::uint64_t node_budget) {
    const int n = d.vertex_count();
    ExactColorResult result;
    if (palette < 1) {
        result.status = n == 0 ? ExactColorResult::Status::Satisfiable
                               : ExactColorResult::Status::Unsatisfiable;
        return result;
    }
    auto full_adj = underlying_adjacency(d);
    std::vector<Vertex> active;
    for (Vertex v = 0; v < n; ++v)
        if (!full_adj[v].empty()) active.push_back(v);
    // Fast path: greedy within budget.
    VertexColoring greedy = greedy_degeneracy_color(d);
    if (greedy.palette <= palette) {
        result.status = ExactColorResult::Status::Satisfiable;
        result.coloring = std::move(greedy);
        return result;
    }
    if (static_cast<int>(active.size()) > cap) {
        result.status = ExactColorResult::Status::CapExceeded;
        return result;
    }
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < active.size(); ++i) local[active[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(active.size());
    for (size_t i = 0; i < active.size(); ++i)
        for (Vertex w : full_adj[active[i]]) adj[i].push_back(local[w]);
    ExactSearch search{adj, palette, node_budget};
    search.color.assign(adj.size(), -1);
    search.sat_count.assign(adj.size(), std::vector<int>(palette, 0));
    search.saturation.assign(adj.size(), 0);
    bool sat = search.assign(0);
    result.nodes = search.nodes;
    if (search.exceeded) {
        result.status = ExactColorResult::Status::CapExceeded;
        return result;
    }
    if (!sat) {
        result.status = ExactColorResult::Status::Unsatisfiable;
        return result;
    }
    result.status = ExactColorResult::Status::Satisfiable;
    result.coloring.color.assign(n, 0);
    for (size_t i = 0; i < active.size(); ++i)
        result.coloring.color[active[i]] = search.color[i];
    result.coloring.palette = palette_of(result.coloring.color);
    return result;
}

ChromaticResult chromatic_number_exact(const Digraph& d, int cap) {
    const int n = d.vertex_count();
    if (n > cap)
        throw std::invalid_argument("instance exceeds exact-coloring cap of " +
                                    std::to_string(cap) + " vertices");
    if (n == 0) return {0, {}};
    auto adj = underlying_adjacency(d);
    // Greedy clique for the lower bound.
    int lb = 1;
    {
        std::vector<Vertex> by_degree(n);
        for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
        std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
            return adj[a].size() > adj[b].size() || (adj[a].size() == adj[b].size() && a < b);
        });
        std::vector<Vertex> clique;
        for (Vertex v : by_degree) {
            bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex u) {
                return std::binary_search(adj[u].begin(), adj[u].end(), v);
            });
            if (joins) clique.push_back(v);
        }
        lb = static_cast<int>(clique.size());
    }
    VertexColoring best = greedy_degeneracy_color(d);
    for (int p = lb; p < best.palette; ++p) {
        auto r = exact_color_within(d, p, n, std::numeric_limits<std::uint64_t>::max());
        if (r.status == ExactColorResult::Status::Satisfiable) {
            best = std::move(r.coloring);
            break;
        }
    }
    return {best.palette, std::move(best)};
}

VertexColoring product_coloring(const VertexColoring& c1, const VertexColoring& c2) {
    if (c1.color.size() != c2.color.size())
        throw std::invalid_argument("product_coloring: vertex-set size mismatch");
    VertexColoring out;
    out.color.assign(c1.color.size(), -1);
    for (size_t v = 0; v < c1.color.size(); ++v) {
        if ((c1.color[v] < 0) != (c2.color[v] < 0))
            throw std::invalid_argument("product_coloring: colored vertex sets differ");
        if (c1.color[v] >= 0)
            out.color[v] = c1.color[v] * c2.palette + c2.color[v];
    }
    out.palette = c1.palette * c2.palette;
    return out;
}

namespace {

Digraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& verts) {
    std::vector<bool> in_set(d.vertex_count(), false);
    for (Vertex v : verts) in_set[v] = true;
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs())
        if (in_set[a.from] && in_set[a.to]) arcs.push_back(a);
    return Digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace

Di2Result color_di2(const Digraph& host, const Digraph& di2,
                    const std::vector<Vertex>& class_vertices, const OutTree& t, int k) {
    if (t.size() != di2.vertex_count())
        throw std::invalid_argument("color_di2: tree context missing or wrong size");
    std::vector<Vertex> s1, s2;
    std::vector<bool> in_s2(di2.vertex_count(), false);
    for (Vertex v : class_vertices) {
        if (static_cast<int>(di2.out_neighbors(v).size()) <= 1) {
            s1.push_back(v);
        } else {
            s2.push_back(v);
            in_s2[v] = true;
        }
    }
    // Forbidden configuration: some x in s2 whose interior out-neighbors
    // (sorted by ancestry, first and last excluded) contain >= 3 s2 members.
    for (Vertex x : s2) {
        std::vector<Vertex> nbrs = di2.out_neighbors(x);
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](Vertex a, Vertex b) { return t.level[a] < t.level[b]; });
        std::vector<Vertex> heavy_interior;
        for (size_t i = 1; i + 1 < nbrs.size(); ++i)
            if (in_s2[nbrs[i]]) heavy_interior.push_back(nbrs[i]);
        if (heavy_interior.size() >= 3) {
            auto res = extract_from_di2(host, di2, t, x, nbrs, heavy_interior, k);
            if (res.witness) return *res.witness;
            return FallbackRequired{res.case_tag};
        }
    }
    // No trigger: out-degrees within s2 are bounded by 4.
    Digraph g1 = induced_subdigraph(di2, s1);
    Digraph g2 = induced_subdigraph(di2, s2);
    for (Vertex v : s2)
        if (static_cast<int>(g2.out_neighbors(v).size()) > 4)
            return FallbackRequired{"s2 out-degree exceeds 4 without the trigger"};
    VertexColoring c1 = color_acyclic_by_outdegree(g1, 1);
    VertexColoring c2 = color_acyclic_by_outdegree(g2, 4);
    SplitColoring split;
    split.coloring.color.assign(di2.vertex_count(), -1);
    int max_color = -1;
    for (Vertex v : s1) {
        split.coloring.color[v] = c1.color[v];
        max_color = std::max(max_color, c1.color[v]);
    }
    for (Vertex v : s2) {
        split.coloring.color[v] = 2 + c2.color[v];
        max_color = std::max(max_color, 2 + c2.color[v]);
    }
    split.coloring.palette = max_color + 1;
    split.s1 = std::move(s1);
    split.s2 = std::move(s2);
    return split;
}

}  // namespace cyclecert
