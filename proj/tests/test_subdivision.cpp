#include "doctest.h"

#include <stdexcept>

#include <functional>

#include "cyclecert/digraph.hpp"
#include "cyclecert/subdivision.hpp"

using namespace cyclecert;

namespace {

Digraph complete_sym(int n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

// Independent oracle for antidirected cycles: try every vertex sequence of
// every even length via plain recursion, checking arcs directly.
bool naive_adc_exists(const Digraph& d, int min_len) {
    const int n = d.vertex_count();
    std::vector<Vertex> seq;
    std::vector<bool> used(n, false);

    // first_is_source fixed by the caller loop; position i is a source iff
    // (i % 2 == 0) == src0.
    std::function<bool(bool)> extend = [&](bool src0) {
        const int i = static_cast<int>(seq.size());
        if (i >= min_len && i % 2 == 0) {
            // Close the cycle: arc between last and first per their roles.
            Vertex a = seq[i - 1], b = seq[0];
            bool last_src = ((i - 1) % 2 == 0) == src0;
            if (last_src ? d.has_arc(a, b) : d.has_arc(b, a)) return true;
        }
        if (i == n || i >= 2 * n) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (i > 0) {
                Vertex prev = seq[i - 1];
                bool prev_src = ((i - 1) % 2 == 0) == src0;
                if (prev_src ? !d.has_arc(prev, v) : !d.has_arc(v, prev)) continue;
            }
            used[v] = true;
            seq.push_back(v);
            if (extend(src0)) return true;
            seq.pop_back();
            used[v] = false;
        }
        return false;
    };
    return extend(true) || extend(false);
}

}  // namespace

TEST_CASE("verify_subdivision accepts an alternating hexagon") {
    // 0,1,2,3,4,5 around a six-cycle; even vertices sources.
    Digraph d(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
    SubdivisionWitness w;
    w.paths = {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}};
    w.directions = {1, -1, 1, -1, 1, -1};
    CHECK(verify_subdivision(d, w, CyclePattern::six_cycle(1)));

    // Same shape fails against a longer first block.
    CHECK_FALSE(verify_subdivision(d, w, CyclePattern::six_cycle(2)));
}

TEST_CASE("verify_subdivision rejects broken witnesses") {
    Digraph d(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
    SubdivisionWitness w;
    w.paths = {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}};
    w.directions = {1, -1, 1, -1, 1, -1};

    SubdivisionWitness missing = w;
    missing.paths[2] = {2, 4};  // no such arc
    CHECK_FALSE(verify_subdivision(d, missing, CyclePattern::six_cycle(1)));

    SubdivisionWitness misdirected = w;
    misdirected.directions = {1, 1, -1, -1, 1, -1};  // junctions stop alternating
    CHECK_FALSE(verify_subdivision(d, misdirected, CyclePattern::six_cycle(1)));

    // Subdivided first block sharing an internal vertex with another path.
    Digraph d2(7, {{0, 6}, {6, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}, {6, 3}});
    SubdivisionWitness shared;
    shared.paths = {{0, 6, 1}, {2, 1}, {2, 6, 3}, {4, 3}, {4, 5}, {0, 5}};
    shared.directions = {1, -1, 1, -1, 1, -1};
    CHECK_FALSE(verify_subdivision(d2, shared, CyclePattern::six_cycle(1)));

    SubdivisionWitness longer = shared;
    longer.paths[2] = {2, 3};
    CHECK(verify_subdivision(d2, longer, CyclePattern::six_cycle(1)));
    // Domination up to rotation: the long block need not sit first.
    CHECK(verify_subdivision(d2, longer, CyclePattern::six_cycle(2)));
}

TEST_CASE("assemble_witness infers directions") {
    auto w = assemble_witness({{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
    REQUIRE(w.has_value());
    CHECK(w->directions == std::vector<int>{1, -1, 1, -1, 1, -1});
    CHECK(w->junction(0) == 0);
    CHECK(w->junction(1) == 1);

    // Endpoints that do not chain.
    CHECK_FALSE(assemble_witness({{0, 1}, {2, 3}, {2, 3}, {4, 3}, {4, 5}, {0, 5}})
                    .has_value());
}

TEST_CASE("bruteforce subdivision oracle") {
    SearchResult<SubdivisionWitness> r =
        find_subdivision_bruteforce(complete_sym(6), CyclePattern::six_cycle(1));
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_subdivision(complete_sym(6), *r.value, CyclePattern::six_cycle(1)));

    Digraph cyc(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    CHECK(find_subdivision_bruteforce(cyc, CyclePattern::six_cycle(1)).status ==
          SearchStatus::NotFound);
    CHECK(find_subdivision_bruteforce(complete_sym(3), CyclePattern::six_cycle(1))
              .status == SearchStatus::NotFound);
}

TEST_CASE("antidirected cycle search examples") {
    Digraph hex(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
    SearchResult<AntidirectedCycle> r = find_antidirected_cycle(hex, 6);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_antidirected_cycle(hex, *r.value, 6));

    Digraph cyc(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(find_antidirected_cycle(cyc, 4).status == SearchStatus::NotFound);

    r = find_antidirected_cycle(complete_sym(8), 8);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.value->length() >= 8);
    CHECK(verify_antidirected_cycle(complete_sym(8), *r.value, 8));

    CHECK(find_antidirected_cycle(complete_sym(10), 10, 5).status ==
          SearchStatus::BudgetExceeded);
}

TEST_CASE("antidirected cycle search agrees with naive enumeration") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        Digraph d = generate_strong_digraph(n, 0.35, seed);
        for (int min_len : {4, 6}) {
            SearchResult<AntidirectedCycle> r = find_antidirected_cycle(d, min_len);
            REQUIRE(r.status != SearchStatus::BudgetExceeded);
            bool expect = naive_adc_exists(d, min_len);
            CHECK((r.status == SearchStatus::Found) == expect);
            if (r.status == SearchStatus::Found)
                CHECK(verify_antidirected_cycle(d, *r.value, min_len));
        }
    }
}

TEST_CASE("oracle never contradicts the verifier") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        Digraph d = generate_strong_digraph(n, 0.5, seed);
        SearchResult<SubdivisionWitness> r =
            find_subdivision_bruteforce(d, CyclePattern::six_cycle(1));
        REQUIRE(r.status != SearchStatus::BudgetExceeded);
        if (r.status == SearchStatus::Found)
            CHECK(verify_subdivision(d, *r.value, CyclePattern::six_cycle(1)));
    }
}
