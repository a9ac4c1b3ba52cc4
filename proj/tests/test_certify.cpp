#include "doctest.h"

#include <stdexcept>

#include "cyclecert/certify.hpp"

using namespace cyclecert;

namespace {

Digraph complete_sym(int n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

// Generated graphs may contain antiparallel pairs.
CertifyConfig loose() {
    CertifyConfig cfg;
    cfg.allow_antiparallel = true;
    return cfg;
}

}  // namespace

TEST_CASE("certify bound constants") {
    CHECK(certify_bound(1) == 7 * 16 * 16);
    CHECK(certify_bound(2) == 7LL * 24 * 24 * 2);
    CHECK(certify_bound(5) == 7LL * 24 * 24 * 5);
}

TEST_CASE("triangle gets a small coloring") {
    Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
    PipelineReport r = certify(d, 2);
    REQUIRE(r.status == PipelineStatus::Certified);
    REQUIRE(r.certificate.has_value());
    const auto* col = std::get_if<ColoredCertificate>(&*r.certificate);
    REQUIRE(col != nullptr);
    CHECK(col->bound == certify_bound(2));
    CHECK(col->coloring.palette <= certify_bound(2));
    CHECK(verify_coloring(d, col->coloring, col->coloring.palette));
}

TEST_CASE("single vertex") {
    Digraph d(1, {});
    PipelineReport r = certify(d, 1);
    REQUIRE(r.status == PipelineStatus::Certified);
    const auto* col = std::get_if<ColoredCertificate>(&*r.certificate);
    REQUIRE(col != nullptr);
    CHECK(verify_coloring(d, col->coloring, 1));
}

TEST_CASE("dense instance yields a subdivision witness") {
    Digraph d = complete_sym(10);
    // One-way complete graphs are not strong; close them up.
    std::vector<Arc> arcs = d.arcs();
    arcs.push_back({9, 0});
    Digraph strong(10, arcs);
    PipelineReport r = certify(strong, 1, loose());
    REQUIRE(r.status == PipelineStatus::Certified);
    const auto* sub = std::get_if<SubdividedCertificate>(&*r.certificate);
    REQUIRE(sub != nullptr);
    CHECK(verify_subdivision(strong, sub->witness, CyclePattern::six_cycle(1)));
    CHECK_FALSE(r.witness_route.empty());
}

TEST_CASE("certify validates its inputs") {
    Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(certify(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(certify(Digraph(2, {{0, 1}}), 1), std::invalid_argument);
    Digraph anti(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(certify(anti, 1), std::invalid_argument);
    CertifyConfig cfg;
    cfg.allow_antiparallel = true;
    CHECK(certify(anti, 1, cfg).status == PipelineStatus::Certified);
}

TEST_CASE("reports are byte identical across runs") {
    Digraph d = generate_strong_digraph(14, 0.2, 9);
    std::string a = report_to_json(certify(d, 2, loose()));
    std::string b = report_to_json(certify(d, 2, loose()));
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("certificate json round trip") {
    Digraph d = generate_strong_digraph(12, 0.25, 3);
    PipelineReport r = certify(d, 2, loose());
    REQUIRE(r.status == PipelineStatus::Certified);
    ParsedCertificate back = certificate_from_json(report_to_json(r));
    CHECK(back.k == 2);
    CHECK(back.bound == certify_bound(2));
    REQUIRE(back.certificate.has_value());
    if (const auto* col = std::get_if<ColoredCertificate>(&*r.certificate)) {
        const auto* pc = std::get_if<ColoredCertificate>(&*back.certificate);
        REQUIRE(pc != nullptr);
        CHECK(pc->coloring.color == col->coloring.color);
        CHECK(pc->coloring.palette == col->coloring.palette);
    } else {
        const auto* sub = std::get_if<SubdividedCertificate>(&*r.certificate);
        const auto* ps = std::get_if<SubdividedCertificate>(&*back.certificate);
        REQUIRE(ps != nullptr);
        CHECK(ps->witness.paths == sub->witness.paths);
        CHECK(ps->witness.directions == sub->witness.directions);
    }
    CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("{\"schema\":99}"), std::invalid_argument);
}

TEST_CASE("bare witness documents parse") {
    Digraph hex(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
    SubdivisionWitness w;
    w.paths = {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}};
    w.directions = {1, -1, 1, -1, 1, -1};
    ParsedCertificate p = certificate_from_json(witness_to_json(w, CyclePattern::six_cycle(1)));
    REQUIRE(p.certificate.has_value());
    const auto* sub = std::get_if<SubdividedCertificate>(&*p.certificate);
    REQUIRE(sub != nullptr);
    CHECK(verify_subdivision(hex, sub->witness, CyclePattern::six_cycle(1)));
}

TEST_CASE("dichotomy soundness over a random corpus") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 3 + static_cast<int>(seed % 14);
        const double density = seed % 3 == 0 ? 0.4 : 0.15;
        Digraph d = generate_strong_digraph(n, density, seed);
        for (int k : {1, 2}) {
            PipelineReport r = certify(d, k, loose());
            REQUIRE(r.status == PipelineStatus::Certified);
            REQUIRE(r.certificate.has_value());
            if (const auto* col = std::get_if<ColoredCertificate>(&*r.certificate)) {
                CHECK(col->coloring.palette <= certify_bound(k));
                CHECK(verify_coloring(d, col->coloring, col->coloring.palette));
                CHECK(static_cast<int>(r.trace.size()) == k);
            } else {
                const auto& w = std::get<SubdividedCertificate>(*r.certificate).witness;
                CHECK(verify_subdivision(d, w, CyclePattern::six_cycle(k)));
                CHECK(static_cast<int>(r.trace.size()) <= k);
            }
        }
    }
}
