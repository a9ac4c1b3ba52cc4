#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclecert/digraph.hpp"

namespace cyclecert {

/// Oriented cycle with blocks of the given lengths in cyclic order,
/// alternating directions. Block count must be even; the primary pattern is
/// (k,1,1,1,1,1).
struct CyclePattern {
    std::vector<int> block_lengths;

    static CyclePattern six_cycle(int k) { return {{k, 1, 1, 1, 1, 1}}; }
    int blocks() const { return static_cast<int>(block_lengths.size()); }
};

/// Subdivision of an oriented cycle: one directed path per block, stored as
/// full vertex sequences. Block j joins junction j and junction j+1 (mod n);
/// direction +1 means the stored path runs from junction j to junction j+1,
/// -1 the reverse. Directions alternate around the cycle.
struct SubdivisionWitness {
    std::vector<std::vector<Vertex>> paths;
    std::vector<int> directions;

    /// Junction vertex shared by blocks j-1 and j.
    Vertex junction(int j) const {
        const auto& p = paths[j];
        return directions[j] > 0 ? p.front() : p.back();
    }
};

struct VerifyResult {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Trusted checker: every path arc exists in d, junctions alternate
/// source/sink, paths are internally disjoint and avoid all junctions, and
/// the block lengths dominate the pattern up to rotation and reflection.
/// Independent of all extraction code.
VerifyResult verify_subdivision(const Digraph& d, const SubdivisionWitness& w,
                                const CyclePattern& p);

/// Builds a witness from directed paths listed in cyclic block order,
/// inferring directions from shared endpoints. Returns nullopt when the
/// endpoints do not chain into an alternating cycle.
std::optional<SubdivisionWitness> assemble_witness(
    const std::vector<std::vector<Vertex>>& blocks);

/// Oriented cycle in which every vertex is a source or a sink. Vertices in
/// cyclic order; even positions are sources iff first_is_source. Length (and
/// vertex count) is always even.
struct AntidirectedCycle {
    std::vector<Vertex> vertices;
    bool first_is_source = true;

    int length() const { return static_cast<int>(vertices.size()); }
    bool is_source(int i) const { return (i % 2 == 0) == first_is_source; }
};

/// Checks the cycle invariants directly against d.
VerifyResult verify_antidirected_cycle(const Digraph& d, const AntidirectedCycle& c,
                                       int min_len);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

template <class T>
struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<T> value;
    std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Exhaustive backtracking over alternating closed walks. NotFound is
/// authoritative only when the search completed within budget. Deterministic:
/// lowest start vertex wins.
SearchResult<AntidirectedCycle> find_antidirected_cycle(
    const Digraph& d, int min_len, std::uint64_t budget = kDefaultBudget);

/// Independent subdivision oracle: exhaustive backtracking over junction
/// tuples and internally disjoint directed path systems. Intended for small
/// instances or generous budgets.
SearchResult<SubdivisionWitness> find_subdivision_bruteforce(
    const Digraph& d, const CyclePattern& p, std::uint64_t budget = kDefaultBudget);

}  // namespace cyclecert
