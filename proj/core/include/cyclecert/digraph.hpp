#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclecert {

using Vertex = int;

struct Arc {
    Vertex from = -1;
    Vertex to = -1;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple digraph on dense vertex ids 0..n-1. No loops, no duplicate arcs;
/// antiparallel pairs (u,v)/(v,u) are allowed and distinct. Immutable after
/// construction; adjacency lists are kept sorted so traversal order is
/// deterministic.
class Digraph {
public:
    Digraph() = default;

    /// Throws std::invalid_argument on loops, duplicates, or out-of-range ids.
    Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names = {});

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    bool has_arc(Vertex u, Vertex v) const;
    const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[u]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// True if some pair u,v has both (u,v) and (v,u). The certification
    /// pipeline rejects such inputs unless explicitly overridden.
    bool has_antiparallel_pair() const;

    /// External vertex names, index-aligned with ids. Defaults to "0".."n-1".
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(Vertex v) const { return names_[v]; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;                 // sorted
    std::vector<std::vector<Vertex>> out_;  // sorted per vertex
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::string> names_;
};

/// Parses an edge-list document ("u v" per line, '#' comments, a line with a
/// single token declares an isolated vertex) or the DOT subset
/// "digraph { a -> b; ... }". Vertices are renumbered densely in order of
/// first appearance; the original tokens become the name map.
/// Throws std::invalid_argument with a line number on malformed input,
/// loops, or duplicate arcs.
Digraph parse_digraph(const std::string& text);

/// Edge-list serialization using the retained name map. parse/serialize/parse
/// is identity on the arc set.
std::string serialize_digraph(const Digraph& d);

/// True iff every ordered vertex pair is joined by a directed path.
/// Two-pass reachability from vertex 0.
bool is_strongly_connected(const Digraph& d);

/// Deterministic random strong digraph: a random Hamiltonian directed cycle
/// backbone, then every remaining ordered pair added independently with the
/// given probability. Output always passes is_strongly_connected.
Digraph generate_strong_digraph(int n, double density, std::uint64_t seed);

}  // namespace cyclecert
