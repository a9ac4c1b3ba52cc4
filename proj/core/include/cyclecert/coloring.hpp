#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"
#include "cyclecert/subdivision.hpp"

namespace cyclecert {

/// Coloring of all or part of a vertex set; -1 marks uncolored vertices.
/// Colors live in [0, palette).
struct VertexColoring {
    std::vector<int> color;
    int palette = 0;
};

/// True iff every vertex is colored, colors lie in [0, bound), and no arc
/// joins two equal colors (properness is over the underlying graph, so both
/// orientations count).
bool verify_coloring(const Digraph& d, const VertexColoring& c, int bound);

/// Proper on the union of arcs whenever coloring restricted to each factor's
/// arc set is proper there.
bool coloring_proper_on(const Digraph& d, const VertexColoring& c);

struct DegeneracyOrder {
    std::vector<Vertex> order;  // elimination order, smallest-last
    int degeneracy = 0;
};

/// Smallest-last elimination over the underlying graph.
DegeneracyOrder degeneracy_order(const Digraph& d);

/// Greedy assignment in reverse elimination order; palette <= degeneracy+1.
VertexColoring greedy_degeneracy_color(const Digraph& d);

/// Colors an acyclic digraph with max out-degree <= bound using <= bound+1
/// colors (topological peel, greedy in reverse). Throws std::invalid_argument
/// on a cyclic input or an out-degree above bound, naming the violation.
VertexColoring color_acyclic_by_outdegree(const Digraph& d, int bound);

struct Unsatisfiable {};

struct ExactColorResult {
    enum class Status { Satisfiable, Unsatisfiable, CapExceeded };
    Status status = Status::CapExceeded;
    VertexColoring coloring;  // valid when Satisfiable
    std::uint64_t nodes = 0;
};

/// Proper coloring with at most `palette` colors, or Unsatisfiable, via
/// saturation-ordered backtracking with color-class symmetry breaking. Counts
/// only vertices of nonzero degree toward the cap; CapExceeded also covers a
/// blown node budget.
ExactColorResult exact_color_within(const Digraph& d, int palette, int cap = 64,
                                    std::uint64_t node_budget = 50'000'000);

struct ChromaticResult {
    int chi = 0;
    VertexColoring coloring;
};

/// Exact chromatic number of the underlying graph (branch and bound with
/// saturation ordering). Throws std::invalid_argument above the cap.
ChromaticResult chromatic_number_exact(const Digraph& d, int cap = 20);

/// Pair coloring (c1(v), c2(v)) flattened to c1(v)*c2.palette + c2(v).
/// Both factors must color exactly the same vertices.
VertexColoring product_coloring(const VertexColoring& c1, const VertexColoring& c2);

/// Split coloring of an A2 part: s1 holds the vertices of out-degree <= 1,
/// colored with {0,1}; s2 the rest, colored with {2..6}.
struct SplitColoring {
    std::vector<Vertex> s1, s2;
    VertexColoring coloring;
};

/// Signals that a proof-guided extraction did not apply; the caller falls
/// back to the brute-force oracle.
struct FallbackRequired {
    std::string reason;
};

using Di2Result = std::variant<SplitColoring, SubdivisionWitness, FallbackRequired>;

/// Colors an A2 part with at most 7 colors, or extracts a subdivision witness
/// for pattern (k,1,1,1,1,1) when some out-degree-heavy vertex realizes the
/// forbidden configuration (>= 3 interior out-neighbors of out-degree >= 2).
/// `class_vertices` restricts the split to the part's own vertex class; the
/// host digraph supplies the tree arcs any extracted witness runs through.
Di2Result color_di2(const Digraph& host, const Digraph& di2,
                    const std::vector<Vertex>& class_vertices, const OutTree& t, int k);

}  // namespace cyclecert
