#include "cyclecert/certify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "cyclecert/decompose.hpp"
#include "cyclecert/extract.hpp"
#include "cyclecert/out_tree.hpp"

namespace cyclecert {

namespace {

using nlohmann::json;

// Restricts a full-vertex coloring to one class; everything else reverts to
// uncolored and the palette is recomputed over the class alone.
VertexColoring restrict_to(const VertexColoring& c, const std::vector<Vertex>& verts) {
    VertexColoring out;
    out.color.assign(c.color.size(), -1);
    for (Vertex v : verts) {
        out.color[v] = c.color[v];
        out.palette = std::max(out.palette, c.color[v] + 1);
    }
    return out;
}

SubdivisionWitness hexagon_witness(const AntidirectedCycle& c) {
    std::vector<std::vector<Vertex>> blocks;
    const int n = c.length();
    for (int j = 0; j < n; ++j) {
        Vertex a = c.vertices[j], b = c.vertices[(j + 1) % n];
        if (c.is_source(j))
            blocks.push_back({a, b});
        else
            blocks.push_back({b, a});
    }
    auto w = assemble_witness(blocks);
    if (!w) throw std::logic_error("antidirected cycle did not assemble into a witness");
    return *w;
}

struct PartOutcome {
    std::optional<VertexColoring> coloring;     // restricted to the class
    std::optional<SubdivisionWitness> witness;  // in the host digraph
    std::string route;
    int palette = 0;
    bool incomplete = false;
    std::string reason;
};

}  // namespace

long long certify_bound(int k) { return k == 1 ? 7LL * 16 * 16 : 7LL * 24 * 24 * k; }

PipelineReport certify(const Digraph& d, int k, const CertifyConfig& cfg) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (d.vertex_count() == 0) throw std::invalid_argument("digraph has no vertices");
    if (cfg.root < 0 || cfg.root >= d.vertex_count())
        throw std::invalid_argument("root vertex out of range");
    if (!cfg.allow_antiparallel && d.has_antiparallel_pair())
        throw std::invalid_argument(
            "digraph contains an antiparallel pair; rerun with the override to proceed");
    if (!is_strongly_connected(d))
        throw std::invalid_argument("digraph is not strongly connected");

    PipelineReport rep;
    rep.k = k;
    rep.bound = certify_bound(k);
    const int P = k == 1 ? 16 : 24;
    const int min_len = k == 1 ? 6 : 8;
    const CyclePattern pattern = CyclePattern::six_cycle(k);

    auto finish_subdivided = [&](SubdivisionWitness w, std::string route) -> PipelineReport& {
        rep.witness_route = std::move(route);
        VerifyResult v = verify_subdivision(d, w, pattern);
        rep.certificate = SubdividedCertificate{std::move(w)};
        if (v) {
            rep.status = PipelineStatus::Certified;
        } else {
            rep.status = PipelineStatus::VerifyFailed;
            rep.incomplete_reason = v.reason;
        }
        return rep;
    };
    auto finish_incomplete = [&](std::string reason) -> PipelineReport& {
        rep.status = PipelineStatus::Incomplete;
        rep.incomplete_reason = std::move(reason);
        return rep;
    };

    // On small instances the oracle is cheap and its verdict authoritative, so
    // it decides the dichotomy outright; the coloring branch below would
    // otherwise shadow witnesses that exhaustive search can exhibit.
    if (d.vertex_count() <= 10) {
        auto r = find_subdivision_bruteforce(d, pattern, cfg.budget);
        rep.expansions += r.expansions;
        if (r.status == SearchStatus::Found)
            return finish_subdivided(std::move(*r.value), "oracle");
    }

    FinalizeResult fin = finalize(d, spanning_out_tree(d, cfg.root));
    rep.rotations = fin.rotations;
    const OutTree& t = fin.tree;
    Decomposition dec = decompose(d, t, k);

    auto oracle_fallback = [&](const std::string& from) -> PartOutcome {
        PartOutcome out;
        auto r = find_subdivision_bruteforce(d, pattern, cfg.budget);
        rep.expansions += r.expansions;
        if (r.status == SearchStatus::Found) {
            out.witness = std::move(*r.value);
            out.route = from + "+oracle";
        } else if (r.status == SearchStatus::BudgetExceeded) {
            out.incomplete = true;
            out.reason = from + ": brute-force fallback exceeded budget";
        }
        return out;  // authoritative NotFound: caller decides
    };

    // D_i^1 / D_i^3 share one routine: exact coloring within P, then greedy,
    // then the antidirected-cycle branch with proof-guided extraction.
    auto solve_part = [&](const Digraph& part, const ClassParts& cl,
                          bool is_d1) -> PartOutcome {
        PartOutcome out;
        auto ex = exact_color_within(part, P);
        if (ex.status == ExactColorResult::Status::Satisfiable) {
            out.coloring = restrict_to(ex.coloring, cl.vertices);
            out.route = "exact";
            out.palette = out.coloring->palette;
            return out;
        }
        if (ex.status == ExactColorResult::Status::CapExceeded) {
            VertexColoring g = greedy_degeneracy_color(part);
            if (g.palette <= P) {
                out.coloring = restrict_to(g, cl.vertices);
                out.route = "greedy";
                out.palette = out.coloring->palette;
                return out;
            }
        }
        const std::string tag = is_d1 ? "d1" : "d3";
        auto ac = find_antidirected_cycle(part, min_len, cfg.budget);
        rep.expansions += ac.expansions;
        if (ac.status == SearchStatus::BudgetExceeded) {
            out.incomplete = true;
            out.reason = tag + ": antidirected-cycle search exceeded budget";
            return out;
        }
        if (ac.status == SearchStatus::NotFound) {
            out.incomplete = true;
            out.reason = tag + ": palette unsatisfiable yet no antidirected cycle found";
            return out;
        }
        const AntidirectedCycle& c = *ac.value;
        if (c.length() == 6) {
            out.witness = hexagon_witness(c);
            out.route = tag + "/hexagon";
            return out;
        }
        ExtractionResult er = is_d1 ? extract_from_adc_d1(d, t, c, k)
                                    : extract_from_adc_d3(d, t, part, c, k);
        if (er.witness) {
            out.witness = std::move(*er.witness);
            out.route = er.case_tag;
            return out;
        }
        out = oracle_fallback(tag + "-fallback");
        if (!out.witness && !out.incomplete) {
            out.incomplete = true;
            out.reason = tag + ": extraction fell back but the oracle found no witness";
        }
        return out;
    };

    std::vector<VertexColoring> composed(dec.classes.size());
    for (size_t ci = 0; ci < dec.classes.size(); ++ci) {
        const ClassParts& cl = dec.classes[ci];
        ClassTrace tr;
        tr.index = cl.index;
        tr.vertex_count = static_cast<int>(cl.vertices.size());

        Di2Result r2 = color_di2(d, cl.d2, cl.vertices, t, k);
        VertexColoring c2;
        if (auto* w = std::get_if<SubdivisionWitness>(&r2)) {
            tr.route2 = "extract";
            rep.trace.push_back(tr);
            return finish_subdivided(std::move(*w), "di2-extract");
        } else if (auto* s = std::get_if<SplitColoring>(&r2)) {
            c2 = s->coloring;
            tr.route2 = "split";
        } else {
            PartOutcome fb = oracle_fallback("d2-fallback");
            if (fb.witness) {
                tr.route2 = fb.route;
                rep.trace.push_back(tr);
                return finish_subdivided(std::move(*fb.witness), fb.route);
            }
            if (fb.incomplete) {
                rep.trace.push_back(tr);
                return finish_incomplete("class " + std::to_string(cl.index) + " " +
                                         fb.reason);
            }
            auto ex2 = exact_color_within(cl.d2, 7);
            if (ex2.status != ExactColorResult::Status::Satisfiable) {
                rep.trace.push_back(tr);
                return finish_incomplete("class " + std::to_string(cl.index) +
                                         " d2: no 7-coloring found after fallback");
            }
            c2 = restrict_to(ex2.coloring, cl.vertices);
            tr.route2 = "exact-fallback";
        }
        tr.palette2 = c2.palette;

        PartOutcome o1 = solve_part(cl.d1, cl, true);
        if (o1.witness) {
            tr.route1 = o1.route;
            rep.trace.push_back(tr);
            return finish_subdivided(std::move(*o1.witness), o1.route);
        }
        if (o1.incomplete) {
            rep.trace.push_back(tr);
            return finish_incomplete("class " + std::to_string(cl.index) + " " + o1.reason);
        }
        tr.route1 = o1.route;
        tr.palette1 = o1.palette;

        PartOutcome o3 = solve_part(cl.d3, cl, false);
        if (o3.witness) {
            tr.route3 = o3.route;
            rep.trace.push_back(tr);
            return finish_subdivided(std::move(*o3.witness), o3.route);
        }
        if (o3.incomplete) {
            rep.trace.push_back(tr);
            return finish_incomplete("class " + std::to_string(cl.index) + " " + o3.reason);
        }
        tr.route3 = o3.route;
        tr.palette3 = o3.palette;

        composed[ci] = product_coloring(product_coloring(*o1.coloring, c2), *o3.coloring);
        rep.trace.push_back(tr);
    }

    // No witness anywhere: stack the class colorings into disjoint blocks of
    // 7*P^2 colors each.
    VertexColoring final_c;
    final_c.color.assign(d.vertex_count(), -1);
    const long long block = 7LL * P * P;
    for (size_t ci = 0; ci < dec.classes.size(); ++ci) {
        const long long offset = static_cast<long long>(ci) * block;
        for (Vertex v : dec.classes[ci].vertices)
            final_c.color[v] = static_cast<int>(offset) + composed[ci].color[v];
    }
    for (int c : final_c.color) final_c.palette = std::max(final_c.palette, c + 1);
    const bool ok = verify_coloring(d, final_c, static_cast<int>(rep.bound));
    rep.certificate = ColoredCertificate{std::move(final_c), rep.bound};
    rep.status = ok ? PipelineStatus::Certified : PipelineStatus::VerifyFailed;
    if (!ok) rep.incomplete_reason = "final coloring failed verification";
    return rep;
}

namespace {

const char* status_name(PipelineStatus s) {
    switch (s) {
        case PipelineStatus::Certified: return "certified";
        case PipelineStatus::Incomplete: return "incomplete";
        case PipelineStatus::VerifyFailed: return "verify-failed";
    }
    return "unknown";
}

json witness_json(const SubdivisionWitness& w, const CyclePattern& p) {
    return json{{"pattern", p.block_lengths},
                {"paths", w.paths},
                {"directions", w.directions}};
}

}  // namespace

std::string witness_to_json(const SubdivisionWitness& w, const CyclePattern& p) {
    return witness_json(w, p).dump(2) + "\n";
}

std::string report_to_json(const PipelineReport& r) {
    json j;
    j["schema"] = 1;
    j["k"] = r.k;
    j["bound"] = r.bound;
    j["status"] = status_name(r.status);
    j["rotations"] = r.rotations;
    j["expansions"] = r.expansions;
    j["witness_route"] = r.witness_route;
    j["incomplete_reason"] = r.incomplete_reason;
    j["trace"] = json::array();
    for (const ClassTrace& t : r.trace)
        j["trace"].push_back(json{{"class", t.index},
                                  {"vertices", t.vertex_count},
                                  {"routes", {t.route1, t.route2, t.route3}},
                                  {"palettes", {t.palette1, t.palette2, t.palette3}}});
    if (!r.certificate) {
        j["certificate"] = nullptr;
    } else if (const auto* c = std::get_if<ColoredCertificate>(&*r.certificate)) {
        j["certificate"] = json{{"type", "colored"},
                                {"bound", c->bound},
                                {"palette", c->coloring.palette},
                                {"colors", c->coloring.color}};
    } else {
        const auto& s = std::get<SubdividedCertificate>(*r.certificate);
        j["certificate"] = json{{"type", "subdivided"},
                                {"witness", witness_json(s.witness,
                                                         CyclePattern::six_cycle(r.k))}};
    }
    return j.dump(2) + "\n";
}

namespace {

SubdivisionWitness witness_from(const json& j) {
    SubdivisionWitness w;
    w.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    w.directions = j.at("directions").get<std::vector<int>>();
    return w;
}

}  // namespace

ParsedCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") +
                                    e.what());
    }
    try {
        ParsedCertificate out;
        if (j.contains("pattern") && !j.contains("schema")) {
            auto pattern = j.at("pattern").get<std::vector<int>>();
            out.k = pattern.empty() ? 1 : pattern.front();
            out.bound = certify_bound(out.k);
            out.certificate = SubdividedCertificate{witness_from(j)};
            return out;
        }
        if (j.at("schema").get<int>() != 1)
            throw std::invalid_argument("unsupported certificate schema");
        out.k = j.at("k").get<int>();
        out.bound = j.at("bound").get<long long>();
        const json& c = j.at("certificate");
        if (c.is_null()) return out;
        const std::string type = c.at("type").get<std::string>();
        if (type == "colored") {
            ColoredCertificate cc;
            cc.bound = c.at("bound").get<long long>();
            cc.coloring.color = c.at("colors").get<std::vector<int>>();
            cc.coloring.palette = c.at("palette").get<int>();
            out.certificate = cc;
        } else if (type == "subdivided") {
            out.certificate = SubdividedCertificate{witness_from(c.at("witness"))};
        } else {
            throw std::invalid_argument("unknown certificate type: " + type);
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate document: ") +
                                    e.what());
    }
}

}  // namespace cyclecert
