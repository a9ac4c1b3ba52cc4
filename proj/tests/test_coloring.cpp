#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "cyclecert/coloring.hpp"
#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"

using namespace cyclecert;

namespace {

Digraph complete(int n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

// Independent oracle: smallest palette admitting a proper coloring, by
// enumerating all palette^n assignments.
int chromatic_bruteforce(const Digraph& d) {
    const int n = d.vertex_count();
    for (int palette = 1; palette <= n; ++palette) {
        std::vector<int> c(n, 0);
        while (true) {
            bool proper = true;
            for (const Arc& a : d.arcs())
                if (c[a.from] == c[a.to]) { proper = false; break; }
            if (proper) return palette;
            int i = 0;
            while (i < n && ++c[i] == palette) c[i++] = 0;
            if (i == n) break;
        }
    }
    return d.vertex_count();
}

}  // namespace

TEST_CASE("verify_coloring") {
    Digraph d(3, {{0, 1}, {1, 2}});
    CHECK(verify_coloring(d, {{0, 1, 0}, 2}, 2));
    CHECK_FALSE(verify_coloring(d, {{0, 0, 1}, 2}, 2));    // arc (0,1) clashes
    CHECK_FALSE(verify_coloring(d, {{0, 1, -1}, 2}, 2));   // uncolored vertex
    CHECK_FALSE(verify_coloring(d, {{0, 1, 2}, 3}, 2));    // color above bound
}

TEST_CASE("greedy degeneracy coloring") {
    Digraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    VertexColoring c = greedy_degeneracy_color(path);
    CHECK(verify_coloring(path, c, c.palette));
    CHECK(c.palette <= 2);

    Digraph empty(3, {});
    c = greedy_degeneracy_color(empty);
    CHECK(c.palette == 1);

    Digraph k4 = complete(4);
    c = greedy_degeneracy_color(k4);
    CHECK(verify_coloring(k4, c, 4));
    CHECK(c.palette == 4);
    CHECK(degeneracy_order(k4).degeneracy == 3);
}

TEST_CASE("color_acyclic_by_outdegree") {
    // Out-star: out-degree 3, acyclic, needs only 2 colors but bound drives
    // the palette cap.
    Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    VertexColoring c = color_acyclic_by_outdegree(star, 3);
    CHECK(verify_coloring(star, c, 4));

    Digraph one(2, {{0, 1}});
    c = color_acyclic_by_outdegree(one, 1);
    CHECK(verify_coloring(one, c, 2));

    // Transitive tournament on 4 vertices: max out-degree 3.
    Digraph tt(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    c = color_acyclic_by_outdegree(tt, 3);
    CHECK(verify_coloring(tt, c, 4));

    Digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(color_acyclic_by_outdegree(cyc, 1), std::invalid_argument);
    CHECK_THROWS_AS(color_acyclic_by_outdegree(star, 2), std::invalid_argument);
}

TEST_CASE("exact chromatic number") {
    CHECK(chromatic_number_exact(complete(4)).chi == 4);
    CHECK(chromatic_number_exact(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})).chi == 3);
    CHECK(chromatic_number_exact(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).chi == 2);
    ChromaticResult r = chromatic_number_exact(Digraph(1, {}));
    CHECK(r.chi == 1);
    CHECK(verify_coloring(Digraph(1, {}), r.coloring, 1));
    CHECK_THROWS_AS(chromatic_number_exact(generate_strong_digraph(25, 0.3, 1), 20),
                    std::invalid_argument);
}

TEST_CASE("exact_color_within") {
    Digraph k4 = complete(4);
    CHECK(exact_color_within(k4, 3).status == ExactColorResult::Status::Unsatisfiable);
    ExactColorResult r = exact_color_within(k4, 4);
    REQUIRE(r.status == ExactColorResult::Status::Satisfiable);
    CHECK(verify_coloring(k4, r.coloring, 4));

    Digraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(exact_color_within(c5, 2).status == ExactColorResult::Status::Unsatisfiable);
    r = exact_color_within(c5, 3);
    REQUIRE(r.status == ExactColorResult::Status::Satisfiable);
    CHECK(verify_coloring(c5, r.coloring, 3));

    CHECK(exact_color_within(generate_strong_digraph(30, 0.3, 2), 7, 10).status ==
          ExactColorResult::Status::CapExceeded);
}

TEST_CASE("chromatic number agrees with enumeration oracle") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        Digraph d = generate_strong_digraph(n, 0.5, seed);
        const int chi = chromatic_number_exact(d).chi;
        CHECK(chi == chromatic_bruteforce(d));
        CHECK(exact_color_within(d, chi).status ==
              ExactColorResult::Status::Satisfiable);
        if (chi > 1)
            CHECK(exact_color_within(d, chi - 1).status ==
                  ExactColorResult::Status::Unsatisfiable);
    }
}

TEST_CASE("product coloring") {
    // Factor 1 proper on the path arcs, factor 2 proper on the chord.
    Digraph d(3, {{0, 1}, {1, 2}, {0, 2}});
    VertexColoring c1{{0, 1, 0}, 2};
    VertexColoring c2{{0, 0, 1}, 2};
    VertexColoring prod = product_coloring(c1, c2);
    CHECK(prod.palette == 4);
    CHECK(prod.color == std::vector<int>{0, 2, 1});
    CHECK(verify_coloring(d, prod, 4));

    VertexColoring partial{{0, -1, 0}, 1};
    CHECK_THROWS_AS(product_coloring(c1, partial), std::invalid_argument);

    // Uncolored in both factors stays uncolored in the product.
    VertexColoring both = product_coloring(partial, VertexColoring{{1, -1, 0}, 2});
    CHECK(both.color[1] == -1);
    CHECK(both.color[0] == 1);
}

TEST_CASE("color_di2 splits a light part with two colors") {
    // Directed path as the part of a longer host chain: every out-degree <= 1.
    Digraph host(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    OutTree t = spanning_out_tree(host, 0);
    Digraph part(4, {{0, 2}});  // one backward-ancestor-style arc stand-in
    Di2Result r = color_di2(host, part, {0, 1, 2, 3}, t, 1);
    REQUIRE(std::holds_alternative<SplitColoring>(r));
    const SplitColoring& sc = std::get<SplitColoring>(r);
    CHECK(sc.s2.empty());
    CHECK(verify_coloring(part, sc.coloring, 7));
    for (Vertex v : sc.s1) CHECK(sc.coloring.color[v] <= 1);
}

TEST_CASE("color_di2 uses the high palette for heavy vertices") {
    // x = 5 sends arcs to y1..y4 = 1..4; y-vertices stay light.
    Digraph host(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    OutTree t = spanning_out_tree(host, 0);
    Digraph part(6, {{5, 1}, {5, 2}, {5, 3}, {5, 4}});
    Di2Result r = color_di2(host, part, {0, 1, 2, 3, 4, 5}, t, 1);
    REQUIRE(std::holds_alternative<SplitColoring>(r));
    const SplitColoring& sc = std::get<SplitColoring>(r);
    CHECK(sc.s2 == std::vector<Vertex>{5});
    CHECK(sc.coloring.color[5] >= 2);
    CHECK(verify_coloring(part, sc.coloring, 7));
}
