#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecert/certify.hpp"
#include "cyclecert/coloring.hpp"
#include "cyclecert/decompose.hpp"
#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"
#include "cyclecert/subdivision.hpp"

namespace {

using namespace cyclecert;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::vector<int> parse_pattern(const std::string& spec) {
    std::vector<int> lengths;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) lengths.push_back(std::stoi(tok));
    if (lengths.empty() || lengths.size() % 2 != 0)
        throw std::invalid_argument("pattern needs an even, nonzero number of blocks");
    for (int l : lengths)
        if (l < 1) throw std::invalid_argument("pattern block lengths must be >= 1");
    return lengths;
}

int run_certify(const std::string& input, int k, Vertex root, std::uint64_t budget,
                bool allow_antiparallel, const std::string& out_path) {
    Digraph d = parse_digraph(read_file(input));
    CertifyConfig cfg;
    cfg.root = root;
    cfg.budget = budget;
    cfg.allow_antiparallel = allow_antiparallel;
    PipelineReport rep = certify(d, k, cfg);
    write_file(out_path, report_to_json(rep));
    switch (rep.status) {
        case PipelineStatus::Certified:
            std::cout << (std::holds_alternative<ColoredCertificate>(*rep.certificate)
                              ? "colored"
                              : "subdivided")
                      << "\n";
            return kExitOk;
        case PipelineStatus::Incomplete:
            std::cout << "incomplete: " << rep.incomplete_reason << "\n";
            return kExitIncomplete;
        case PipelineStatus::VerifyFailed:
            std::cerr << "internal verification failure: " << rep.incomplete_reason
                      << "\n";
            return kExitVerifyFailed;
    }
    return kExitVerifyFailed;
}

int run_verify(const std::string& input, const std::string& cert_path) {
    Digraph d = parse_digraph(read_file(input));
    ParsedCertificate pc = certificate_from_json(read_file(cert_path));
    if (!pc.certificate) {
        std::cout << "no certificate present (incomplete report)\n";
        return kExitIncomplete;
    }
    if (const auto* c = std::get_if<ColoredCertificate>(&*pc.certificate)) {
        if (verify_coloring(d, c->coloring, static_cast<int>(c->bound))) {
            std::cout << "ok: proper coloring within bound " << c->bound << "\n";
            return kExitOk;
        }
        std::cerr << "coloring failed verification against bound " << c->bound << "\n";
        return kExitVerifyFailed;
    }
    const auto& s = std::get<SubdividedCertificate>(*pc.certificate);
    VerifyResult v = verify_subdivision(d, s.witness, CyclePattern::six_cycle(pc.k));
    if (v) {
        std::cout << "ok: subdivision witness for pattern (" << pc.k
                  << ",1,1,1,1,1)\n";
        return kExitOk;
    }
    std::cerr << "witness failed verification: " << v.reason << "\n";
    return kExitVerifyFailed;
}

int run_oracle(const std::string& input, const std::string& pattern_spec,
               std::uint64_t budget) {
    Digraph d = parse_digraph(read_file(input));
    CyclePattern p{parse_pattern(pattern_spec)};
    auto r = find_subdivision_bruteforce(d, p, budget);
    switch (r.status) {
        case SearchStatus::Found:
            std::cout << witness_to_json(*r.value, p);
            return kExitOk;
        case SearchStatus::NotFound:
            std::cout << "not-found (authoritative, " << r.expansions
                      << " expansions)\n";
            return kExitOk;
        case SearchStatus::BudgetExceeded:
            std::cout << "budget-exceeded after " << r.expansions << " expansions\n";
            return kExitIncomplete;
    }
    return kExitIncomplete;
}

int run_gen(int n, double density, std::uint64_t seed) {
    std::cout << serialize_digraph(generate_strong_digraph(n, density, seed));
    return kExitOk;
}

int run_decompose(const std::string& input, int k, Vertex root) {
    Digraph d = parse_digraph(read_file(input));
    if (!is_strongly_connected(d))
        throw std::invalid_argument("digraph is not strongly connected");
    FinalizeResult fin = finalize(d, spanning_out_tree(d, root));
    Decomposition dec = decompose(d, fin.tree, k);
    nlohmann::json j;
    j["schema"] = 1;
    j["k"] = k;
    j["rotations"] = fin.rotations;
    j["levels"] = fin.tree.level;
    j["classes"] = nlohmann::json::array();
    for (const ClassParts& cl : dec.classes)
        j["classes"].push_back(nlohmann::json{{"index", cl.index},
                                              {"vertices", cl.vertices},
                                              {"a1_arcs", cl.d1.arc_count()},
                                              {"a2_arcs", cl.d2.arc_count()},
                                              {"a3_arcs", cl.d3.arc_count()}});
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying engine for six-block cycle subdivisions in strong digraphs"};
    app.require_subcommand(1);

    std::string input, out_path, cert_path, pattern_spec = "1,1,1,1,1,1";
    int k = 1, n = 8;
    Vertex root = 0;
    std::uint64_t budget = kDefaultBudget, seed = 1;
    double density = 0.2;
    bool allow_antiparallel = false;

    auto* cert = app.add_subcommand("certify", "Produce a coloring or a witness");
    cert->add_option("--input", input, "digraph file")->required();
    cert->add_option("--k", k, "pattern parameter k >= 1")->required();
    cert->add_option("--root", root, "spanning tree root");
    cert->add_option("--budget", budget, "search node budget");
    cert->add_flag("--allow-antiparallel", allow_antiparallel,
                   "accept antiparallel pairs (best-effort mode)");
    cert->add_option("--out", out_path, "report output path")->required();

    auto* ver = app.add_subcommand("verify", "Check a certificate against a digraph");
    ver->add_option("--input", input, "digraph file")->required();
    ver->add_option("--certificate", cert_path, "report or witness JSON")->required();

    auto* ora = app.add_subcommand("oracle", "Brute-force subdivision search");
    ora->add_option("--input", input, "digraph file")->required();
    ora->add_option("--pattern", pattern_spec, "comma-separated block lengths");
    ora->add_option("--budget", budget, "search node budget");

    auto* gen = app.add_subcommand("gen", "Generate a random strong digraph");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--density", density, "extra-arc probability");
    gen->add_option("--seed", seed, "rng seed");

    auto* dec = app.add_subcommand("decompose", "Show the class/part decomposition");
    dec->add_option("--input", input, "digraph file")->required();
    dec->add_option("--k", k, "pattern parameter k >= 1")->required();
    dec->add_option("--root", root, "spanning tree root");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cert->parsed())
            return run_certify(input, k, root, budget, allow_antiparallel, out_path);
        if (ver->parsed()) return run_verify(input, cert_path);
        if (ora->parsed()) return run_oracle(input, pattern_spec, budget);
        if (gen->parsed()) return run_gen(n, density, seed);
        if (dec->parsed()) return run_decompose(input, k, root);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
