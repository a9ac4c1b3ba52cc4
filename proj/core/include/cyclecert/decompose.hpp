#pragma once

#include <vector>

#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"

namespace cyclecert {

enum class ArcClass { A1, A2, A3 };

/// A1: forward arc into a descendant; A2: backward arc into an ancestor;
/// A3: everything else.
ArcClass classify_arc(const OutTree& t, Vertex x, Vertex y);

/// One vertex class V_i together with the three arc parts of the induced
/// subdigraph D_i. The part digraphs are spanning subdigraphs over the full
/// host vertex set (vertices outside the class are isolated), so vertex ids
/// stay global throughout the pipeline.
struct ClassParts {
    int index = 0;                  // 1-based class index i
    std::vector<Vertex> vertices;   // V_i, ascending
    Digraph d1, d2, d3;
};

struct Decomposition {
    int k = 1;
    std::vector<ClassParts> classes;  // size k
};

/// Partitions V(D) by level residue mod k (class i holds levels == i mod k,
/// class k standing for residue 0) and splits each induced D_i into
/// A1/A2/A3. Arcs joining different classes belong to no part.
/// Requires a final tree; throws std::invalid_argument otherwise.
Decomposition decompose(const Digraph& d, const OutTree& t, int k);

}  // namespace cyclecert
