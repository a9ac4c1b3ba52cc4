#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"
#include "cyclecert/subdivision.hpp"

namespace cyclecert {

/// Outcome of a proof-guided extraction. A missing witness means the
/// configuration fell outside the covered cases (or a candidate failed
/// verification); case_tag names the case that fired, or the reason for
/// falling back. Every returned witness has already passed
/// verify_subdivision for pattern (k,1,1,1,1,1).
struct ExtractionResult {
    std::optional<SubdivisionWitness> witness;
    std::string case_tag;
};

/// Witness extraction from an antidirected cycle living in an A1 part
/// (forward-ancestor arcs within one vertex class). Requires length >= 8 and
/// a final tree; throws std::invalid_argument on shorter cycles.
ExtractionResult extract_from_adc_d1(const Digraph& d, const OutTree& t,
                                     const AntidirectedCycle& c, int k);

/// Witness extraction from an antidirected cycle living in an A3 part.
/// Covers the two landscape configurations analysed explicitly (the strict
/// lca chain and the equal-lca chain); symmetric configurations report
/// FallbackRequired via an empty witness. Requires length >= 8.
ExtractionResult extract_from_adc_d3(const Digraph& d, const OutTree& t,
                                     const Digraph& di3, const AntidirectedCycle& c,
                                     int k);

/// Witness extraction for the A2 split-coloring trigger: x has out-neighbors
/// sorted_out_nbrs (by ancestry) of which >= 3 interior ones (heavy_interior,
/// same order) have out-degree >= 2 in the part.
ExtractionResult extract_from_di2(const Digraph& d, const Digraph& di2, const OutTree& t,
                                  Vertex x, const std::vector<Vertex>& sorted_out_nbrs,
                                  const std::vector<Vertex>& heavy_interior, int k);

}  // namespace cyclecert
