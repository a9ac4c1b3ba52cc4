#pragma once

#include <vector>

#include "cyclecert/digraph.hpp"

namespace cyclecert {

/// Spanning out-tree (arborescence) of a host digraph. The root has level 1
/// and no parent; every tree arc (parent[x], x) is an arc of the host.
struct OutTree {
    Vertex root = 0;
    std::vector<Vertex> parent;  // -1 at the root
    std::vector<int> level;      // level[root] == 1

    int size() const { return static_cast<int>(parent.size()); }
};

/// Breadth-first spanning arborescence. Throws std::invalid_argument naming
/// the first vertex unreachable from the root.
OutTree spanning_out_tree(const Digraph& d, Vertex root);

/// An arc (x,y) is forward iff level[x] < level[y]; equal levels count as
/// backward.
bool is_forward(const OutTree& t, Vertex x, Vertex y);

/// True iff x lies on the tree path from the root to y (reflexive).
bool is_ancestor(const OutTree& t, Vertex x, Vertex y);

/// Common ancestor of maximal level.
Vertex lca(const OutTree& t, Vertex x, Vertex y);

/// Vertex sequence of the directed tree path from x to y.
/// Throws std::invalid_argument unless x is an ancestor of y.
std::vector<Vertex> tree_path(const OutTree& t, Vertex x, Vertex y);

/// True iff every backward arc (x,y) of d has y as an ancestor of x.
bool is_final(const Digraph& d, const OutTree& t);

struct FinalizeResult {
    OutTree tree;
    int rotations = 0;
};

/// Rotates violating backward arcs until the tree is final: while some
/// backward arc (x,y) has y not an ancestor of x, reparent y under x and
/// recompute the levels of y's subtree. Levels never decrease, so the level
/// sum strictly increases and the loop stops after at most n^2 rotations.
/// Violating arcs are picked by lexicographically smallest (level[y], y, x)
/// so results are reproducible.
FinalizeResult finalize(const Digraph& d, OutTree t);

}  // namespace cyclecert
