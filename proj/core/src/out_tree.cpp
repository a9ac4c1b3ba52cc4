#include "cyclecert/out_tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace cyclecert {

OutTree spanning_out_tree(const Digraph& d, Vertex root) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    OutTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.level.assign(n, 0);
    std::deque<Vertex> queue{root};
    t.level[root] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : d.out_neighbors(u))
            if (t.level[w] == 0) {
                t.level[w] = t.level[u] + 1;
                t.parent[w] = u;
                queue.push_back(w);
            }
    }
    for (Vertex v = 0; v < n; ++v)
        if (t.level[v] == 0)
            throw std::invalid_argument("vertex " + d.name_of(v) +
                                        " unreachable from root");
    return t;
}

bool is_forward(const OutTree& t, Vertex x, Vertex y) {
    return t.level[x] < t.level[y];
}

bool is_ancestor(const OutTree& t, Vertex x, Vertex y) {
    while (t.level[y] > t.level[x]) y = t.parent[y];
    return x == y;
}

Vertex lca(const OutTree& t, Vertex x, Vertex y) {
    while (t.level[x] > t.level[y]) x = t.parent[x];
    while (t.level[y] > t.level[x]) y = t.parent[y];
    while (x != y) {
        x = t.parent[x];
        y = t.parent[y];
    }
    return x;
}

std::vector<Vertex> tree_path(const OutTree& t, Vertex x, Vertex y) {
    std::vector<Vertex> rev;
    Vertex v = y;
    while (t.level[v] > t.level[x]) {
        rev.push_back(v);
        v = t.parent[v];
    }
    if (v != x) throw std::invalid_argument("tree_path: x is not an ancestor of y");
    rev.push_back(x);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

bool is_final(const Digraph& d, const OutTree& t) {
    for (const Arc& a : d.arcs())
        if (!is_forward(t, a.from, a.to) && !is_ancestor(t, a.to, a.from))
            return false;
    return true;
}

FinalizeResult finalize(const Digraph& d, OutTree t) {
    const int n = d.vertex_count();
    int rotations = 0;
    for (;;) {
        // Violating arc with smallest (level[y], y, x).
        bool found = false;
        Arc pick{};
        auto key = [&](const Arc& a) {
            return std::tuple(t.level[a.to], a.to, a.from);
        };
        for (const Arc& a : d.arcs()) {
            if (is_forward(t, a.from, a.to) || is_ancestor(t, a.to, a.from)) continue;
            if (!found || key(a) < key(pick)) {
                pick = a;
                found = true;
            }
        }
        if (!found) break;
        t.parent[pick.to] = pick.from;
        // Recompute levels below the reparented vertex.
        std::vector<std::vector<Vertex>> children(n);
        for (Vertex v = 0; v < n; ++v)
            if (t.parent[v] >= 0) children[t.parent[v]].push_back(v);
        std::deque<Vertex> queue{pick.to};
        t.level[pick.to] = t.level[pick.from] + 1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex c : children[u]) {
                t.level[c] = t.level[u] + 1;
                queue.push_back(c);
            }
        }
        ++rotations;
    }
    return {std::move(t), rotations};
}

}  // namespace cyclecert
