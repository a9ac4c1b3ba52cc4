#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclecert/coloring.hpp"
#include "cyclecert/digraph.hpp"
#include "cyclecert/subdivision.hpp"

namespace cyclecert {

struct CertifyConfig {
    Vertex root = 0;
    std::uint64_t budget = kDefaultBudget;
    bool allow_antiparallel = false;
};

struct ColoredCertificate {
    VertexColoring coloring;
    long long bound = 0;
};

struct SubdividedCertificate {
    SubdivisionWitness witness;
};

using Certificate = std::variant<ColoredCertificate, SubdividedCertificate>;

/// One record per vertex class: which route produced each part's coloring
/// ("exact", "greedy", an extraction tag, ...) and the palette it used.
/// Palettes stay 0 for parts never reached (e.g. the class that produced the
/// witness).
struct ClassTrace {
    int index = 0;
    int vertex_count = 0;
    std::string route1, route2, route3;
    int palette1 = 0, palette2 = 0, palette3 = 0;
};

enum class PipelineStatus { Certified, Incomplete, VerifyFailed };

struct PipelineReport {
    PipelineStatus status = PipelineStatus::Incomplete;
    int k = 1;
    long long bound = 0;  // 7*24^2*k, or 7*16^2 when k == 1
    std::optional<Certificate> certificate;
    std::string witness_route;  // set when Subdivided
    std::vector<ClassTrace> trace;
    int rotations = 0;            // tree finalization rotations
    std::uint64_t expansions = 0; // summed search expansions
    std::string incomplete_reason;
};

/// Runs the full pipeline: finalize a spanning out-tree, decompose into
/// classes and parts, color every part within its palette or extract a
/// subdivision witness, and verify whichever certificate results before
/// returning it. Throws std::invalid_argument on k < 1, a digraph that is not
/// strongly connected, or antiparallel pairs without the override.
PipelineReport certify(const Digraph& d, int k, const CertifyConfig& config = {});

long long certify_bound(int k);

/// JSON serialization, schema 1. Reports are byte-identical across runs for
/// identical inputs; no wall-clock fields.
std::string report_to_json(const PipelineReport& r);
std::string witness_to_json(const SubdivisionWitness& w, const CyclePattern& p);

struct ParsedCertificate {
    int k = 1;
    long long bound = 0;
    std::optional<Certificate> certificate;
};

/// Parses either a full report document or a bare witness document.
/// Throws std::invalid_argument on malformed input.
ParsedCertificate certificate_from_json(const std::string& text);

}  // namespace cyclecert
