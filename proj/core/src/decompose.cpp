#include "cyclecert/decompose.hpp"

#include <stdexcept>

namespace cyclecert {

ArcClass classify_arc(const OutTree& t, Vertex x, Vertex y) {
    if (t.level[x] < t.level[y] && is_ancestor(t, x, y)) return ArcClass::A1;
    if (t.level[x] > t.level[y] && is_ancestor(t, y, x)) return ArcClass::A2;
    return ArcClass::A3;
}

Decomposition decompose(const Digraph& d, const OutTree& t, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!is_final(d, t))
        throw std::invalid_argument("decompose requires a final out-tree");
    const int n = d.vertex_count();
    // Class index for a level: residue i in 1..k, with k standing for 0.
    auto class_of = [&](Vertex v) {
        int r = t.level[v] % k;
        return r == 0 ? k : r;
    };
    Decomposition dec;
    dec.k = k;
    std::vector<std::vector<Arc>> part_arcs(static_cast<size_t>(k) * 3);
    std::vector<std::vector<Vertex>> verts(k);
    for (Vertex v = 0; v < n; ++v) verts[class_of(v) - 1].push_back(v);
    for (const Arc& a : d.arcs()) {
        int ci = class_of(a.from);
        if (ci != class_of(a.to)) continue;  // cross-class arcs are dropped
        int j = static_cast<int>(classify_arc(t, a.from, a.to));
        part_arcs[static_cast<size_t>(ci - 1) * 3 + j].push_back(a);
    }
    dec.classes.reserve(k);
    for (int i = 0; i < k; ++i) {
        ClassParts cp;
        cp.index = i + 1;
        cp.vertices = std::move(verts[i]);
        cp.d1 = Digraph(n, std::move(part_arcs[static_cast<size_t>(i) * 3 + 0]));
        cp.d2 = Digraph(n, std::move(part_arcs[static_cast<size_t>(i) * 3 + 1]));
        cp.d3 = Digraph(n, std::move(part_arcs[static_cast<size_t>(i) * 3 + 2]));
        dec.classes.push_back(std::move(cp));
    }
    return dec;
}

}  // namespace cyclecert
