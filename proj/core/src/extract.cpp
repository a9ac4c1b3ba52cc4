#include "cyclecert/extract.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cyclecert {

namespace {

using Path = std::vector<Vertex>;
using OptPath = std::optional<Path>;

// Assembles candidate witnesses from tree paths and single arcs. Every
// candidate goes through verify_subdivision before it is accepted, so a
// construction whose side conditions fail is silently discarded and the next
// one is tried.
struct Kit {
    const Digraph& d;
    const OutTree& t;
    int k;
    ExtractionResult result;

    bool done() const { return result.witness.has_value(); }

    OptPath tp(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || !is_ancestor(t, a, b)) return std::nullopt;
        return tree_path(t, a, b);
    }

    OptPath arc(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || !d.has_arc(u, v)) return std::nullopt;
        return Path{u, v};
    }

    static OptPath cat(OptPath a, OptPath b) {
        if (!a || !b || a->back() != b->front()) return std::nullopt;
        a->insert(a->end(), b->begin() + 1, b->end());
        return a;
    }

    static OptPath cat(OptPath a, OptPath b, OptPath c) {
        return cat(cat(std::move(a), std::move(b)), std::move(c));
    }

    bool attempt(std::vector<OptPath> blocks, const std::string& tag) {
        if (done()) return true;
        std::vector<Path> paths;
        paths.reserve(blocks.size());
        for (OptPath& b : blocks) {
            if (!b) return false;
            paths.push_back(std::move(*b));
        }
        auto w = assemble_witness(paths);
        if (!w) return false;
        if (!verify_subdivision(d, *w, CyclePattern::six_cycle(k))) return false;
        result.witness = std::move(*w);
        result.case_tag = tag;
        return true;
    }
};

bool anc(const OutTree& t, Vertex a, Vertex b) { return is_ancestor(t, a, b); }

bool sanc(const OutTree& t, Vertex a, Vertex b) {
    return a != b && is_ancestor(t, a, b);
}

// Re-indexes an antidirected cycle as x_0..x_m starting from the apex, in the
// given direction.
std::vector<Vertex> reindex(const AntidirectedCycle& c, int apex_pos, int dir) {
    const int n = c.length();
    std::vector<Vertex> x(n);
    for (int j = 0; j < n; ++j) x[j] = c.vertices[((apex_pos + dir * j) % n + n) % n];
    return x;
}

}  // namespace

ExtractionResult extract_from_adc_d1(const Digraph& d, const OutTree& t,
                                     const AntidirectedCycle& c, int k) {
    if (c.length() < 8)
        throw std::invalid_argument("extract_from_adc_d1 requires cycle length >= 8");
    Kit kit{d, t, k};
    const int m = c.length() - 1;

    // Apex: source of maximal level, ties to the smallest vertex.
    int apex = -1;
    for (int i = 0; i < c.length(); ++i) {
        if (!c.is_source(i)) continue;
        if (apex < 0 || t.level[c.vertices[i]] > t.level[c.vertices[apex]] ||
            (t.level[c.vertices[i]] == t.level[c.vertices[apex]] &&
             c.vertices[i] < c.vertices[apex]))
            apex = i;
    }
    // Orient so that the second source after the apex sits strictly below the
    // last one: l(x_2) < l(x_{m-1}).
    std::vector<Vertex> x = reindex(c, apex, 1);
    if (t.level[x[2]] >= t.level[x[m - 1]]) x = reindex(c, apex, -1);
    if (t.level[x[2]] >= t.level[x[m - 1]])
        return {std::nullopt, "d1: ambiguous orientation"};

    for (int i = 2; i + 3 <= m; i += 2) {
        if (!sanc(t, x[i], x[m - 1])) continue;
        if (!anc(t, x[m - 1], x[i + 1])) continue;
        if (!anc(t, x[m - 1], x[i + 2])) continue;
        if (i == 2) {
            if (kit.attempt({Kit::cat(kit.tp(x[m - 1], x[4]), kit.arc(x[4], x[3])),
                             kit.arc(x[2], x[3]), kit.arc(x[2], x[1]), kit.arc(x[0], x[1]),
                             kit.arc(x[0], x[m]), kit.arc(x[m - 1], x[m])},
                            "d1/i2"))
                return kit.result;
        } else {
            if (kit.attempt({Kit::cat(kit.tp(x[2], x[i]), kit.arc(x[i], x[i + 1])),
                             Kit::cat(kit.tp(x[m - 1], x[i + 2]), kit.arc(x[i + 2], x[i + 1])),
                             kit.arc(x[m - 1], x[m]), kit.arc(x[0], x[m]),
                             kit.arc(x[0], x[1]), kit.arc(x[2], x[1])},
                            "d1/x2-below"))
                return kit.result;
            if (kit.attempt({Kit::cat(kit.tp(x[i], x[2]), kit.arc(x[2], x[1])),
                             kit.arc(x[0], x[1]), kit.arc(x[0], x[m]),
                             kit.arc(x[m - 1], x[m]),
                             Kit::cat(kit.tp(x[m - 1], x[i + 2]), kit.arc(x[i + 2], x[i + 1])),
                             kit.arc(x[i], x[i + 1])},
                            "d1/x2-above"))
                return kit.result;
        }
    }
    kit.result.case_tag = "d1: no splitting index produced a verified witness";
    return kit.result;
}

ExtractionResult extract_from_di2(const Digraph& d, const Digraph& di2, const OutTree& t,
                                  Vertex x, const std::vector<Vertex>& sorted_out_nbrs,
                                  const std::vector<Vertex>& heavy_interior, int k) {
    if (heavy_interior.size() < 3)
        throw std::invalid_argument("extract_from_di2 requires >= 3 heavy interior neighbors");
    Kit kit{d, t, k};
    // Three heavy interior neighbors in ancestry order, plus the ancestry
    // extremes of the full out-neighborhood.
    const Vertex a = heavy_interior[0];
    const Vertex b = heavy_interior[1];
    const Vertex cc = heavy_interior[2];
    const Vertex y1 = sorted_out_nbrs.front();
    const Vertex yp = sorted_out_nbrs.back();

    std::vector<Vertex> za = di2.out_neighbors(a);
    std::vector<Vertex> zc = di2.out_neighbors(cc);
    auto deeper_first = [&](Vertex p, Vertex q) {
        return t.level[p] > t.level[q] || (t.level[p] == t.level[q] && p < q);
    };
    std::sort(za.begin(), za.end(), deeper_first);
    std::sort(zc.begin(), zc.end(), deeper_first);

    for (Vertex z4 : zc) {
        if (z4 == a) continue;
        for (Vertex z2 : za) {
            if (kit.attempt({kit.tp(a, z4), kit.arc(cc, z4), kit.tp(cc, yp),
                             kit.arc(x, yp), Kit::cat(kit.arc(x, y1), kit.tp(y1, z2)),
                             kit.arc(a, z2)},
                            "di2/z4-below-a/z2-below-y1"))
                return kit.result;
            if (kit.attempt({kit.tp(a, z4), kit.arc(cc, z4), kit.tp(cc, yp),
                             kit.arc(x, yp), kit.arc(x, y1),
                             Kit::cat(kit.arc(a, z2), kit.tp(z2, y1))},
                            "di2/z4-below-a/z2-above-y1"))
                return kit.result;
            if (kit.attempt({kit.tp(cc, yp), kit.arc(x, yp), kit.arc(x, b), kit.tp(a, b),
                             Kit::cat(kit.arc(a, z2), kit.tp(z2, z4)), kit.arc(cc, z4)},
                            "di2/z4-above-a/z2-below-z4"))
                return kit.result;
            if (kit.attempt({kit.tp(cc, yp), kit.arc(x, yp), kit.arc(x, b), kit.tp(a, b),
                             kit.arc(a, z2), Kit::cat(kit.arc(cc, z4), kit.tp(z4, z2))},
                            "di2/z4-above-a/z2-above-z4"))
                return kit.result;
        }
    }
    kit.result.case_tag = "di2: no verified witness from the heavy configuration";
    return kit.result;
}

namespace {

// Case engines for the A3 part, indexed x_0..x_s with x_0 a sink of maximal
// level and z_j = lca(x_j, x_0).
struct D3 {
    Kit& kit;
    const Digraph& di3;
    const std::vector<Vertex>& x;
    int s;
    Vertex z1, zp, zs;  // z_1, z_{s-1}, z_s

    const OutTree& t() const { return kit.t; }
    OptPath tp(Vertex a, Vertex b) const { return kit.tp(a, b); }
    OptPath arc(Vertex u, Vertex v) const { return kit.arc(u, v); }

    bool lemma1();
    bool lemma1_scan_assa();
    bool lemma1_scan_ass1();
    bool lemma1_scan_new1();
    bool lemma1_scan_new2();
    bool lemma1_index_scan();
    bool lemma2();
    bool lemma3();
    bool cor1();
    bool lem12();
};

bool D3::lemma1_scan_assa() {
    for (const Arc& e : di3.arcs()) {
        const Vertex u = e.from, w = e.to;
        if (!anc(t(), x[2], w)) continue;
        if (anc(t(), x[1], u) || anc(t(), x[s - 1], u)) continue;
        const Vertex z = lca(t(), u, x[s - 1]);
        if (kit.attempt({tp(z, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                         arc(x[1], x[0]), Kit::cat(arc(x[1], x[2]), tp(x[2], w)),
                         Kit::cat(tp(z, u), arc(u, w))},
                        "d3/lemma1/assa/low-lca"))
            return true;
        if (kit.attempt({Kit::cat(tp(x[s], u), arc(u, w)),
                         Kit::cat(arc(x[1], x[2]), tp(x[2], w)), arc(x[1], x[0]),
                         tp(zp, x[0]), tp(zp, x[s - 1]), arc(x[s], x[s - 1])},
                        "d3/lemma1/assa/under-xs"))
            return true;
        if (kit.attempt({tp(zs, x[0]), arc(x[1], x[0]),
                         Kit::cat(arc(x[1], x[2]), tp(x[2], w)),
                         Kit::cat(tp(z, u), arc(u, w)), tp(z, x[s - 1]),
                         Kit::cat(tp(zs, x[s]), arc(x[s], x[s - 1]))},
                        "d3/lemma1/assa/high-lca"))
            return true;
    }
    return false;
}

bool D3::lemma1_scan_ass1() {
    for (const Arc& e : di3.arcs()) {
        const Vertex u = e.from, w = e.to;
        if (!anc(t(), x[3], u)) continue;
        if (anc(t(), x[2], w) || anc(t(), x[3], w)) continue;
        const Vertex z = lca(t(), x[0], w);
        if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])),
                         arc(x[3], x[2]), Kit::cat(tp(x[3], u), arc(u, w)), tp(z1, w),
                         Kit::cat(tp(z1, x[1]), arc(x[1], x[0])), arc(x[s], x[0])},
                        "d3/lemma1/ass1/over-x0"))
            return true;
        if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])),
                         arc(x[3], x[2]), Kit::cat(tp(x[3], u), arc(u, w)), tp(z, w),
                         tp(z, x[0]), arc(x[s], x[0])},
                        "d3/lemma1/ass1/outside"))
            return true;
        if (kit.attempt({tp(x[s], w), Kit::cat(tp(x[3], u), arc(u, w)), arc(x[3], x[2]),
                         arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                        "d3/lemma1/ass1/under-xs"))
            return true;
        if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], w)),
                         Kit::cat(tp(x[3], u), arc(u, w)), arc(x[3], x[2]),
                         arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                        "d3/lemma1/ass1/under-xsm1"))
            return true;
    }
    return false;
}

bool D3::lemma1_scan_new1() {
    for (const Arc& e : di3.arcs()) {
        const Vertex u = e.from, w = e.to;
        if (!anc(t(), x[s - 1], u)) continue;
        if (anc(t(), x[1], w) || anc(t(), x[s - 1], w)) continue;
        if (anc(t(), x[2], u)) {
            const Vertex z = lca(t(), x[s - 1], w);
            if (kit.attempt({tp(z, w),
                             Kit::cat(arc(x[1], x[2]), tp(x[2], u), arc(u, w)),
                             arc(x[1], x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                             tp(z, x[s - 1])},
                            "d3/lemma1/new1/under-x2"))
                return true;
            if (kit.attempt({tp(x[s], w),
                             Kit::cat(arc(x[1], x[2]), tp(x[2], u), arc(u, w)),
                             arc(x[1], x[0]), tp(zp, x[0]), tp(zp, x[s - 1]),
                             arc(x[s], x[s - 1])},
                            "d3/lemma1/new1/under-x2-xs"))
                return true;
        } else if (sanc(t(), x[s - 1], u) && sanc(t(), u, x[2])) {
            const Vertex z = lca(t(), x[0], w);
            if (kit.attempt({tp(zs, w), arc(u, w), tp(u, x[2]), arc(x[1], x[2]),
                             arc(x[1], x[0]), Kit::cat(tp(zs, x[s]), arc(x[s], x[0]))},
                            "d3/lemma1/new1/between/over-x0"))
                return true;
            if (kit.attempt({tp(u, x[2]), arc(x[1], x[2]), arc(x[1], x[0]), tp(z, x[0]),
                             tp(z, w), arc(u, w)},
                            "d3/lemma1/new1/between"))
                return true;
        } else {
            const Vertex z2 = lca(t(), x[2], u);
            const Vertex z = lca(t(), x[s], w);
            if (kit.attempt({tp(x[s], w), Kit::cat(tp(z2, u), arc(u, w)), tp(z2, x[2]),
                             arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                            "d3/lemma1/new1/side/under-xs"))
                return true;
            if (kit.attempt({tp(z, w), Kit::cat(tp(z2, u), arc(u, w)), tp(z2, x[2]),
                             arc(x[1], x[2]), arc(x[1], x[0]),
                             Kit::cat(tp(z, x[s]), arc(x[s], x[0]))},
                            "d3/lemma1/new1/side"))
                return true;
        }
    }
    return false;
}

bool D3::lemma1_scan_new2() {
    for (const Arc& e : di3.arcs()) {
        const Vertex u = e.from, w = e.to;
        if (!anc(t(), x[s - 1], w)) continue;
        if (anc(t(), x[1], u) || anc(t(), x[s - 1], u)) continue;
        if (anc(t(), w, x[2])) {
            const Vertex z = lca(t(), x[s - 1], u);
            if (kit.attempt({Kit::cat(tp(x[s], u), arc(u, w), tp(w, x[2])),
                             arc(x[1], x[2]), arc(x[1], x[0]), tp(zp, x[0]),
                             tp(zp, x[s - 1]), arc(x[s], x[s - 1])},
                            "d3/lemma1/new2/over-x2/under-xs"))
                return true;
            if (kit.attempt({Kit::cat(tp(z, u), arc(u, w), tp(w, x[2])),
                             arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0]),
                             arc(x[s], x[s - 1]), tp(z, x[s - 1])},
                            "d3/lemma1/new2/over-x2"))
                return true;
        } else {
            const Vertex z2 = lca(t(), x[2], w);
            const Vertex z = lca(t(), x[0], u);
            if (kit.attempt({tp(u, x[0]), arc(x[1], x[0]), arc(x[1], x[2]), tp(z2, x[2]),
                             tp(z2, w), arc(u, w)},
                            "d3/lemma1/new2/side/over-x0"))
                return true;
            if (kit.attempt({tp(z, x[0]), arc(x[1], x[0]), arc(x[1], x[2]), tp(z2, x[2]),
                             tp(z2, w), Kit::cat(tp(z, u), arc(u, w))},
                            "d3/lemma1/new2/side"))
                return true;
        }
    }
    return false;
}

bool D3::lemma1_index_scan() {
    auto under_23 = [&](Vertex v) { return anc(t(), x[2], v) || anc(t(), x[3], v); };
    int i = -1;
    for (int j = 4; j <= s - 2; ++j) {
        if (under_23(x[j]) && !under_23(x[j + 1])) {
            i = j;
            break;
        }
    }
    if (i < 0) return false;
    const bool source = (i % 2 == 1);
    if (anc(t(), x[3], x[i])) {
        if (source) {
            if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i + 1])),
                             Kit::cat(tp(x[3], x[i]), arc(x[i], x[i + 1])),
                             arc(x[3], x[2]), arc(x[1], x[2]), arc(x[1], x[0]),
                             arc(x[s], x[0])},
                            "d3/lemma1/split/x3-source-right"))
                return true;
            if (kit.attempt({tp(x[1], x[i + 1]),
                             Kit::cat(tp(x[3], x[i]), arc(x[i], x[i + 1])),
                             arc(x[3], x[2]),
                             Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])),
                             arc(x[s], x[0]), arc(x[1], x[0])},
                            "d3/lemma1/split/x3-source-left"))
                return true;
        } else {
            if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i + 1]),
                                      arc(x[i + 1], x[i])),
                             tp(x[3], x[i]), arc(x[3], x[2]), arc(x[1], x[2]),
                             arc(x[1], x[0]), arc(x[s], x[0])},
                            "d3/lemma1/split/x3-sink-right"))
                return true;
            if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])),
                             arc(x[3], x[2]), tp(x[3], x[i]),
                             Kit::cat(tp(x[1], x[i + 1]), arc(x[i + 1], x[i])),
                             arc(x[1], x[0]), arc(x[s], x[0])},
                            "d3/lemma1/split/x3-sink-left"))
                return true;
        }
        return false;
    }
    // x_i under x_2.
    if (source) {
        if (kit.attempt({Kit::cat(arc(x[1], x[2]), tp(x[2], x[i - 1])),
                         arc(x[i], x[i - 1]), arc(x[i], x[i + 1]),
                         Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i + 1])),
                         arc(x[s], x[0]), arc(x[1], x[0])},
                        "d3/lemma1/split/x2-source-right"))
            return true;
        if (kit.attempt({tp(x[1], x[i + 1]), arc(x[i], x[i + 1]), arc(x[i], x[i - 1]),
                         Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i - 1])),
                         arc(x[s], x[0]), arc(x[1], x[0])},
                        "d3/lemma1/split/x2-source-left"))
            return true;
        if (kit.attempt({tp(x[3], x[i - 1]), arc(x[i], x[i - 1]), arc(x[i], x[i + 1]),
                         tp(z1, x[i + 1]), Kit::cat(tp(z1, x[1]), arc(x[1], x[2])),
                         arc(x[3], x[2])},
                        "d3/lemma1/split/x2-source-prev3"))
            return true;
        return false;
    }
    if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i + 1]),
                              arc(x[i + 1], x[i])),
                     Kit::cat(tp(x[3], x[i - 1]), arc(x[i - 1], x[i])), arc(x[3], x[2]),
                     arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                    "d3/lemma1/split/x2-sink-prev3-right"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[i + 1]), arc(x[i + 1], x[i])),
                     Kit::cat(tp(x[3], x[i - 1]), arc(x[i - 1], x[i])), arc(x[3], x[2]),
                     Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])), arc(x[s], x[0]),
                     arc(x[1], x[0])},
                    "d3/lemma1/split/x2-sink-prev3-left"))
        return true;
    const Vertex zb = lca(t(), x[4], x[i - 1]);
    if (kit.attempt({Kit::cat(tp(x[1], x[i + 1]), arc(x[i + 1], x[i])),
                     Kit::cat(tp(zb, x[i - 1]), arc(x[i - 1], x[i])), tp(zb, x[4]),
                     Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[3]), arc(x[3], x[4])),
                     arc(x[s], x[0]), arc(x[1], x[0])},
                    "d3/lemma1/split/x2-sink-x4-side"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[i + 1]), arc(x[i + 1], x[i])),
                     arc(x[i - 1], x[i]), tp(x[i - 1], x[4]), arc(x[3], x[4]),
                     arc(x[3], x[2]), arc(x[1], x[2])},
                    "d3/lemma1/split/x2-sink-x4-above"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[i + 1]), arc(x[i + 1], x[i])),
                     Kit::cat(arc(x[3], x[4]), tp(x[4], x[i - 1]), arc(x[i - 1], x[i])),
                     arc(x[3], x[2]),
                     Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])), arc(x[s], x[0]),
                     arc(x[1], x[0])},
                    "d3/lemma1/split/x2-sink-x4-below"))
        return true;
    if (i >= 6) {
        if (kit.attempt({Kit::cat(arc(x[1], x[2]), tp(x[2], x[i - 2])),
                         arc(x[i - 1], x[i - 2]), arc(x[i - 1], x[i]),
                         Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i + 1]),
                                  arc(x[i + 1], x[i])),
                         arc(x[s], x[0]), arc(x[1], x[0])},
                        "d3/lemma1/split/x2-sink-prev2-x2"))
            return true;
        if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[i - 2])),
                         arc(x[i - 1], x[i - 2]), arc(x[i - 1], x[i]),
                         Kit::cat(arc(x[1], x[2]), tp(x[2], x[i])), arc(x[1], x[0]),
                         arc(x[s], x[0])},
                        "d3/lemma1/split/x2-sink-prev2-x3"))
            return true;
    }
    return false;
}

bool D3::lemma1() {
    if (lemma1_scan_assa()) return true;
    if (anc(t(), x[s - 1], x[3])) {
        if (lemma1_scan_ass1()) return true;
        if (lemma1_scan_new1()) return true;
        if (lemma1_scan_new2()) return true;
        if (lemma1_index_scan()) return true;
    } else if (anc(t(), x[1], x[3])) {
        if (kit.attempt({Kit::cat(tp(x[3], x[s - 2]), arc(x[s - 2], x[s - 1])),
                         arc(x[s], x[s - 1]), arc(x[s], x[0]), arc(x[1], x[0]),
                         arc(x[1], x[2]), arc(x[3], x[2])},
                        "d3/lemma1/terminal"))
            return true;
    }
    kit.result.case_tag = "d3/lemma1 exhausted";
    return false;
}

bool D3::lemma2() {
    if (kit.attempt({Kit::cat(tp(x[1], x[s - 2]), arc(x[s - 2], x[s - 1])),
                     arc(x[s], x[s - 1]), arc(x[s], x[0]), tp(zp, x[0]), tp(zp, x[2]),
                     arc(x[1], x[2])},
                    "d3/lemma2/xsm2-under-x1"))
        return true;
    if (kit.attempt({tp(z1, x[2]), arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0]),
                     arc(x[s], x[s - 1]),
                     Kit::cat(tp(z1, x[s - 2]), arc(x[s - 2], x[s - 1]))},
                    "d3/lemma2/xsm2-over-x1"))
        return true;
    const Vertex z = lca(t(), x[1], x[s - 2]);
    if (kit.attempt({tp(zp, x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                     Kit::cat(tp(z, x[s - 2]), arc(x[s - 2], x[s - 1])),
                     Kit::cat(tp(z, x[1]), arc(x[1], x[2])), tp(zp, x[2])},
                    "d3/lemma2/xsm2-side"))
        return true;
    const Vertex z2 = lca(t(), x[s - 2], x[2]);
    if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[s - 3])),
                     Kit::cat(tp(z2, x[s - 2]), arc(x[s - 2], x[s - 3])), tp(z2, x[2]),
                     arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                    "d3/lemma2/xsm3-under-xsm1"))
        return true;
    if (kit.attempt({tp(x[s], x[s - 3]), arc(x[s - 2], x[s - 3]), arc(x[s - 2], x[s - 1]),
                     Kit::cat(arc(x[1], x[2]), tp(x[2], x[s - 1])), arc(x[1], x[0]),
                     arc(x[s], x[0])},
                    "d3/lemma2/xsm3-under-xs"))
        return true;
    if (kit.attempt({tp(x[1], x[s - 3]), arc(x[s - 2], x[s - 3]), arc(x[s - 2], x[s - 1]),
                     arc(x[s], x[s - 1]), arc(x[s], x[0]), arc(x[1], x[0])},
                    "d3/lemma2/xsm3-under-x1"))
        return true;
    if (kit.attempt({tp(z1, x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                     arc(x[s - 2], x[s - 1]), arc(x[s - 2], x[s - 3]), tp(z1, x[s - 3])},
                    "d3/lemma2/xsm3-over-x1-a"))
        return true;
    if (kit.attempt({tp(x[s - 2], x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                     tp(z1, x[s - 1]), tp(z1, x[s - 3]), arc(x[s - 2], x[s - 3])},
                    "d3/lemma2/xsm3-over-x1-b"))
        return true;
    const Vertex z3 = lca(t(), x[s - 3], x[1]);
    if (kit.attempt({tp(z3, x[s - 3]), arc(x[s - 2], x[s - 3]), arc(x[s - 2], x[s - 1]),
                     arc(x[s], x[s - 1]), arc(x[s], x[0]),
                     Kit::cat(tp(z3, x[1]), arc(x[1], x[0]))},
                    "d3/lemma2/xsm3-side-a"))
        return true;
    if (kit.attempt({Kit::cat(arc(x[1], x[2]), tp(x[2], x[s - 1])),
                     arc(x[s - 2], x[s - 1]), arc(x[s - 2], x[s - 3]), tp(z1, x[s - 3]),
                     tp(z1, x[0]), arc(x[1], x[0])},
                    "d3/lemma2/xsm3-side-b"))
        return true;
    if (kit.attempt({tp(x[s - 2], x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                     Kit::cat(tp(z3, x[1]), arc(x[1], x[2]), tp(x[2], x[s - 1])),
                     tp(z3, x[s - 3]), arc(x[s - 2], x[s - 3])},
                    "d3/lemma2/xsm3-side-c"))
        return true;
    kit.result.case_tag = "d3/lemma2 exhausted";
    return false;
}

bool D3::lemma3() {
    for (const Arc& e : di3.arcs()) {
        const Vertex u = e.from, w = e.to;
        const bool u_free = !anc(t(), x[1], u) && !anc(t(), x[2], u);
        const bool w_free = !anc(t(), x[1], w) && !anc(t(), x[2], w);
        if (u_free && sanc(t(), x[2], w)) {
            const Vertex z = lca(t(), x[0], u);
            const Vertex zw = lca(t(), w, x[s - 1]);
            const Vertex zu = lca(t(), u, x[1]);
            if (kit.attempt({Kit::cat(tp(z, u), arc(u, w), tp(w, x[s - 1])),
                             arc(x[s], x[s - 1]), arc(x[s], x[0]), arc(x[1], x[0]),
                             arc(x[1], x[2]), tp(z, x[2])},
                            "d3/lemma3/a1/chain"))
                return true;
            if (kit.attempt({tp(zs, x[0]), arc(x[1], x[0]), arc(x[1], x[2]), tp(z, x[2]),
                             Kit::cat(tp(z, u), arc(u, w)),
                             Kit::cat(tp(zs, x[s]), arc(x[s], x[s - 1]), tp(x[s - 1], w))},
                            "d3/lemma3/a1/under-xsm1"))
                return true;
            if (kit.attempt({tp(zw, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                             Kit::cat(tp(zu, x[1]), arc(x[1], x[0])),
                             Kit::cat(tp(zu, u), arc(u, w)), tp(zw, w)},
                            "d3/lemma3/a1/side"))
                return true;
            if (kit.attempt({tp(x[s], w), Kit::cat(tp(z, u), arc(u, w)), tp(z, x[2]),
                             arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                            "d3/lemma3/a1/under-xs"))
                return true;
            if (kit.attempt({tp(z, x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                             tp(zw, x[s - 1]), tp(zw, w), Kit::cat(tp(z, u), arc(u, w))},
                            "d3/lemma3/a1/high"))
                return true;
        }
        if (sanc(t(), x[2], u) && w_free) {
            const Vertex z = lca(t(), x[2], w);
            const Vertex zu = lca(t(), u, x[0]);
            const Vertex zw = lca(t(), x[1], w);
            if (kit.attempt({tp(u, x[0]), arc(x[1], x[0]), arc(x[1], x[2]), tp(z, x[2]),
                             tp(z, w), arc(u, w)},
                            "d3/lemma3/a2/over-x0"))
                return true;
            if (kit.attempt({tp(z, w), Kit::cat(tp(zu, u), arc(u, w)), tp(zu, x[0]),
                             arc(x[1], x[0]), arc(x[1], x[2]), tp(z, x[2])},
                            "d3/lemma3/a2/side"))
                return true;
            if (kit.attempt({tp(zw, w), Kit::cat(tp(x[2], u), arc(u, w)),
                             tp(x[2], x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                             Kit::cat(tp(zw, x[1]), arc(x[1], x[0]))},
                            "d3/lemma3/a2/deep"))
                return true;
            if (kit.attempt({tp(z, x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                             tp(u, x[s - 1]), arc(u, w), tp(z, w)},
                            "d3/lemma3/a2/over-xsm1"))
                return true;
            if (kit.attempt({tp(z, w),
                             Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], u), arc(u, w)),
                             arc(x[s], x[0]), arc(x[1], x[0]), arc(x[1], x[2]),
                             tp(z, x[2])},
                            "d3/lemma3/a2/under-xsm1"))
                return true;
        }
        if (u_free && sanc(t(), x[1], w)) {
            const Vertex z = lca(t(), u, x[2]);
            if (kit.attempt({tp(z, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                             arc(x[1], x[0]), tp(x[1], w), Kit::cat(tp(z, u), arc(u, w))},
                            "d3/lemma3/a3/side"))
                return true;
            if (kit.attempt({tp(u, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                             arc(x[1], x[0]), tp(x[1], w), arc(u, w)},
                            "d3/lemma3/a3/over"))
                return true;
        }
        if (sanc(t(), x[1], u) && w_free && !anc(t(), w, x[2])) {
            const Vertex z = lca(t(), w, x[2]);
            if (kit.attempt({tp(z, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                             arc(x[1], x[0]), Kit::cat(tp(x[1], u), arc(u, w)), tp(z, w)},
                            "d3/lemma3/a4"))
                return true;
        }
    }
    // Closing step: a source under x_1 with one out-arc into T]z_1,x_2].
    for (int j = 1; j < s; j += 2) {
        const Vertex u = x[j];
        if (!sanc(t(), x[1], u)) continue;
        for (int pick = 0; pick < 2; ++pick) {
            const Vertex w = pick == 0 ? x[j - 1] : x[j + 1];
            const Vertex wp = pick == 0 ? x[j + 1] : x[j - 1];
            if (!(sanc(t(), z1, w) && anc(t(), w, x[2]))) continue;
            const Vertex z = lca(t(), wp, x[s - 1]);
            if (kit.attempt({tp(x[1], wp), arc(u, wp),
                             Kit::cat(arc(u, w), tp(w, x[s - 1])), arc(x[s], x[s - 1]),
                             arc(x[s], x[0]), arc(x[1], x[0])},
                            "d3/lemma3/close/under-x1"))
                return true;
            if (kit.attempt({Kit::cat(arc(u, wp), tp(wp, x[s - 1])), arc(x[s], x[s - 1]),
                             arc(x[s], x[0]), arc(x[1], x[0]), arc(x[1], x[2]),
                             Kit::cat(arc(u, w), tp(w, x[2]))},
                            "d3/lemma3/close/between"))
                return true;
            if (kit.attempt({tp(zs, x[0]), arc(x[1], x[0]), arc(x[1], x[2]),
                             Kit::cat(arc(u, w), tp(w, x[2])), arc(u, wp),
                             Kit::cat(tp(zs, x[s]), arc(x[s], x[s - 1]), tp(x[s - 1], wp))},
                            "d3/lemma3/close/under-xsm1"))
                return true;
            if (kit.attempt({Kit::cat(tp(x[1], u), arc(u, wp)), tp(z, wp), tp(z, x[s - 1]),
                             arc(x[s], x[s - 1]), arc(x[s], x[0]), arc(x[1], x[0])},
                            "d3/lemma3/close/side"))
                return true;
            if (kit.attempt({tp(x[s], wp), arc(u, wp), arc(u, w), tp(z1, w),
                             Kit::cat(tp(z1, x[1]), arc(x[1], x[0])), arc(x[s], x[0])},
                            "d3/lemma3/close/under-xs"))
                return true;
        }
    }
    kit.result.case_tag = "d3/lemma3 exhausted";
    return false;
}

bool D3::cor1() {
    const Vertex z = lca(t(), x[2], x[s - 1]);
    if (kit.attempt({tp(z, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                     arc(x[1], x[0]), arc(x[1], x[2]), tp(z, x[2])},
                    "d3/cor1/low-lca"))
        return true;
    if (kit.attempt({tp(x[s], x[2]), arc(x[1], x[2]), arc(x[1], x[0]), tp(zp, x[0]),
                     tp(zp, x[s - 1]), arc(x[s], x[s - 1])},
                    "d3/cor1/under-xs"))
        return true;
    if (kit.attempt({tp(zs, x[0]), arc(x[1], x[0]), arc(x[1], x[2]), tp(z, x[2]),
                     tp(z, x[s - 1]), Kit::cat(tp(zs, x[s]), arc(x[s], x[s - 1]))},
                    "d3/cor1/high-lca"))
        return true;
    kit.result.case_tag = "d3/cor1 exhausted";
    return false;
}

bool D3::lem12() {
    const Vertex z2 = lca(t(), x[2], x[0]);
    const Vertex z3 = lca(t(), x[3], x[0]);
    const Vertex z4 = lca(t(), x[4], x[0]);
    if (kit.attempt({tp(z2, x[2]), arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0]),
                     arc(x[s], x[s - 1]), tp(z2, x[s - 1])},
                    "d3/lem12/x2-side"))
        return true;
    if (kit.attempt({tp(z3, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                     arc(x[1], x[0]), arc(x[1], x[2]),
                     Kit::cat(tp(z3, x[3]), arc(x[3], x[2]))},
                    "d3/lem12/x3-side"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[3]), arc(x[3], x[2])), tp(z2, x[2]),
                     tp(z2, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                     arc(x[1], x[0])},
                    "d3/lem12/x3-under-x1"))
        return true;
    if (kit.attempt({tp(x[3], x[0]), arc(x[s], x[0]), arc(x[s], x[s - 1]),
                     tp(zs, x[s - 1]), Kit::cat(tp(zs, x[1]), arc(x[1], x[2])),
                     arc(x[3], x[2])},
                    "d3/lem12/x3-over-x0"))
        return true;
    if (kit.attempt({Kit::cat(arc(x[3], x[2]), tp(x[2], x[0])), arc(x[s], x[0]),
                     arc(x[s], x[s - 1]), tp(z4, x[s - 1]), tp(z4, x[4]),
                     arc(x[3], x[4])},
                    "d3/lem12/x4-side-a"))
        return true;
    if (kit.attempt({tp(x[s], x[4]), arc(x[3], x[4]), arc(x[3], x[2]), arc(x[1], x[2]),
                     arc(x[1], x[0]), arc(x[s], x[0])},
                    "d3/lem12/x4-under-xs"))
        return true;
    if (kit.attempt({Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[4])), arc(x[3], x[4]),
                     arc(x[3], x[2]), arc(x[1], x[2]), arc(x[1], x[0]), arc(x[s], x[0])},
                    "d3/lem12/x4-under-xsm1"))
        return true;
    if (kit.attempt({Kit::cat(arc(x[3], x[4]), tp(x[4], x[0])), arc(x[s], x[0]),
                     arc(x[s], x[s - 1]), tp(zs, x[s - 1]),
                     Kit::cat(tp(zs, x[1]), arc(x[1], x[2])), arc(x[3], x[2])},
                    "d3/lem12/x4-over-x0"))
        return true;
    if (kit.attempt({Kit::cat(arc(x[3], x[4]), tp(x[4], x[s - 1])), arc(x[s], x[s - 1]),
                     arc(x[s], x[0]), arc(x[1], x[0]), arc(x[1], x[2]), arc(x[3], x[2])},
                    "d3/lem12/x4-over-xsm1"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[s]), arc(x[s], x[s - 1])), tp(z4, x[s - 1]),
                     tp(z4, x[4]), arc(x[3], x[4]), arc(x[3], x[2]), arc(x[1], x[2])},
                    "d3/lem12/x3-under-xs/x4-side"))
        return true;
    if (kit.attempt({tp(zs, x[4]), arc(x[3], x[4]),
                     Kit::cat(arc(x[3], x[2]), tp(x[2], x[0])), arc(x[s], x[0]),
                     arc(x[s], x[s - 1]), tp(zs, x[s - 1])},
                    "d3/lem12/x3-under-xs/x4-under-x1"))
        return true;
    if (kit.attempt({tp(x[1], x[4]), arc(x[3], x[4]), arc(x[3], x[2]),
                     Kit::cat(arc(x[s], x[s - 1]), tp(x[s - 1], x[2])), arc(x[s], x[0]),
                     arc(x[1], x[0])},
                    "d3/lem12/x4-under-x1"))
        return true;
    if (kit.attempt({tp(z4, x[4]), Kit::cat(tp(x[s], x[3]), arc(x[3], x[4])),
                     arc(x[s], x[s - 1]), tp(zs, x[s - 1]),
                     Kit::cat(tp(zs, x[1]), arc(x[1], x[0])), tp(z4, x[0])},
                    "d3/lem12/x4-deep"))
        return true;
    if (kit.attempt({tp(zs, x[s - 1]), arc(x[s], x[s - 1]), arc(x[s], x[0]),
                     Kit::cat(arc(x[3], x[4]), tp(x[4], x[0])), arc(x[3], x[2]),
                     Kit::cat(tp(zs, x[1]), arc(x[1], x[2]))},
                    "d3/lem12/x4-between"))
        return true;
    if (kit.attempt({Kit::cat(tp(x[1], x[s]), arc(x[s], x[s - 1])), tp(z3, x[s - 1]),
                     Kit::cat(tp(z3, x[3]), arc(x[3], x[4])), tp(z4, x[4]), tp(z4, x[0]),
                     arc(x[1], x[0])},
                    "d3/lem12/x3x4-side"))
        return true;
    kit.result.case_tag = "d3/lem12 exhausted";
    return false;
}

}  // namespace

ExtractionResult extract_from_adc_d3(const Digraph& d, const OutTree& t,
                                     const Digraph& di3, const AntidirectedCycle& c,
                                     int k) {
    if (c.length() < 8)
        throw std::invalid_argument("extract_from_adc_d3 requires cycle length >= 8");
    Kit kit{d, t, k};
    const int s = c.length() - 1;

    // Apex: sink of maximal level, ties to the smallest vertex.
    int apex = -1;
    for (int i = 0; i < c.length(); ++i) {
        if (c.is_source(i)) continue;
        if (apex < 0 || t.level[c.vertices[i]] > t.level[c.vertices[apex]] ||
            (t.level[c.vertices[i]] == t.level[c.vertices[apex]] &&
             c.vertices[i] < c.vertices[apex]))
            apex = i;
    }
    std::vector<Vertex> x = reindex(c, apex, 1);
    {
        std::vector<Vertex> alt = reindex(c, apex, -1);
        const Vertex zf = lca(t, x[1], x[0]);
        const Vertex zb = lca(t, alt[1], alt[0]);
        // Orient so that the first lca sits below the last one; ties break by
        // the level of x_1.
        if (zf == zb) {
            if (t.level[x[1]] > t.level[alt[1]]) x = std::move(alt);
        } else if (!is_ancestor(t, zf, zb)) {
            x = std::move(alt);
        }
    }
    D3 engine{kit, di3, x, s, lca(t, x[1], x[0]), lca(t, x[s - 1], x[0]),
              lca(t, x[s], x[0])};

    if (sanc(t, engine.z1, engine.zp) && sanc(t, engine.zp, engine.zs)) {
        if (anc(t, x[s - 1], x[2])) {
            engine.lemma1();
        } else if (sanc(t, engine.zp, x[2]) && sanc(t, x[2], x[s - 1])) {
            engine.lemma2();
        } else if (sanc(t, engine.z1, x[2]) && anc(t, x[2], engine.zp)) {
            engine.lemma3();
        } else if (!anc(t, x[2], x[s - 1]) && !anc(t, x[s - 1], x[2])) {
            engine.cor1();
        } else {
            kit.result.case_tag = "d3: x_2 below the first branch point";
        }
    } else if (engine.z1 == engine.zs && anc(t, x[1], x[s]) && anc(t, x[s - 1], x[0])) {
        engine.lem12();
    } else {
        kit.result.case_tag = "d3: uncovered landscape configuration";
    }
    return kit.result;
}

}  // namespace cyclecert
