#include "cyclecert/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cyclecert {

Digraph::Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names)
    : n_(n), arcs_(std::move(arcs)), names_(std::move(names)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    const Arc* prev = nullptr;
    for (const Arc& a : arcs_) {
        if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.from == a.to)
            throw std::invalid_argument("loop rejected at vertex " + std::to_string(a.from));
        if (prev && *prev == a)
            throw std::invalid_argument("duplicate arc (" + std::to_string(a.from) + "," +
                                        std::to_string(a.to) + ")");
        prev = &a;
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    if (names_.empty()) {
        names_.reserve(n_);
        for (int v = 0; v < n_; ++v) names_.push_back(std::to_string(v));
    }
    if (static_cast<int>(names_.size()) != n_)
        throw std::invalid_argument("name map size mismatch");
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool Digraph::has_antiparallel_pair() const {
    for (const Arc& a : arcs_)
        if (a.from < a.to && has_arc(a.to, a.from)) return true;
    return false;
}

namespace {

struct NameInterner {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> names;

    Vertex get(const std::string& tok) {
        auto [it, inserted] = ids.emplace(tok, static_cast<Vertex>(names.size()));
        if (inserted) names.push_back(tok);
        return it->second;
    }
};

[[noreturn]] void syntax_error(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

Digraph parse_dot(const std::string& text) {
    // Grammar subset: digraph [name] { stmt* } with stmt = id [-> id] [;]
    std::string cleaned;
    cleaned.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            cleaned += " -> ";
            ++i;
        } else if (text[i] == '{' || text[i] == '}' || text[i] == ';') {
            cleaned += ' ';
            cleaned += text[i];
            cleaned += ' ';
        } else {
            cleaned += text[i];
        }
    }
    std::istringstream in(cleaned);
    std::string tok;
    in >> tok;
    if (tok != "digraph") syntax_error(1, "expected 'digraph'");
    in >> tok;
    if (tok != "{") {
        in >> tok;  // optional graph name
        if (tok != "{") syntax_error(1, "expected '{'");
    }
    NameInterner names;
    std::vector<Arc> arcs;
    std::string pending;  // left operand of a possible ->
    while (in >> tok) {
        if (tok == "}") {
            if (!pending.empty()) names.get(pending);
            const int n = static_cast<int>(names.names.size());
            return Digraph(n, std::move(arcs), std::move(names.names));
        }
        if (tok == ";") {
            if (!pending.empty()) names.get(pending);
            pending.clear();
        } else if (tok == "->") {
            if (pending.empty()) syntax_error(1, "dangling '->'");
            std::string rhs;
            if (!(in >> rhs) || rhs == ";" || rhs == "}" || rhs == "->")
                syntax_error(1, "expected vertex after '->'");
            Vertex u = names.get(pending);
            Vertex v = names.get(rhs);
            arcs.push_back({u, v});
            pending = rhs;  // DOT chains a -> b -> c
        } else {
            if (!pending.empty()) names.get(pending);
            pending = tok;
        }
    }
    syntax_error(1, "unterminated digraph block");
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
    // Decide format on the first meaningful token.
    {
        std::istringstream probe(text);
        std::string line;
        while (std::getline(probe, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream ls(line);
            std::string tok;
            if (ls >> tok) {
                if (tok == "digraph") return parse_dot(text);
                break;
            }
        }
    }
    NameInterner names;
    std::vector<Arc> arcs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) {
            names.get(a);  // isolated vertex declaration
            continue;
        }
        if (ls >> extra) syntax_error(lineno, "expected two tokens, got more");
        Vertex u = names.get(a);
        Vertex v = names.get(b);
        if (u == v) syntax_error(lineno, "loop rejected on vertex '" + a + "'");
        arcs.push_back({u, v});
    }
    {
        auto sorted = arcs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate arc in input");
    }
    const int n = static_cast<int>(names.names.size());
    return Digraph(n, std::move(arcs), std::move(names.names));
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    std::vector<bool> seen(d.vertex_count(), false);
    for (const Arc& a : d.arcs()) {
        out << d.name_of(a.from) << ' ' << d.name_of(a.to) << '\n';
        seen[a.from] = seen[a.to] = true;
    }
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (!seen[v]) out << d.name_of(v) << '\n';
    return out.str();
}

namespace {

int reach_count(const Digraph& d, bool backward) {
    std::vector<bool> vis(d.vertex_count(), false);
    std::vector<Vertex> stack{0};
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        const auto& nbrs = backward ? d.in_neighbors(u) : d.out_neighbors(u);
        for (Vertex w : nbrs)
            if (!vis[w]) {
                vis[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    if (d.vertex_count() == 0) return false;
    if (d.vertex_count() == 1) return true;
    return reach_count(d, false) == d.vertex_count() &&
           reach_count(d, true) == d.vertex_count();
}

namespace {

// splitmix64; keeps generation independent of library distribution internals.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool bernoulli(double p) {
        return (next() >> 11) * 0x1.0p-53 < p;
    }
};

}  // namespace

Digraph generate_strong_digraph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rng rng{seed * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL};
    if (n == 1) return Digraph(1, {});
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<Arc> arcs;
    std::vector<bool> on_cycle(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) {
        Vertex u = perm[i], v = perm[(i + 1) % n];
        arcs.push_back({u, v});
        on_cycle[static_cast<size_t>(u) * n + v] = true;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || on_cycle[static_cast<size_t>(u) * n + v]) continue;
            if (rng.bernoulli(density)) arcs.push_back({u, v});
        }
    return Digraph(n, std::move(arcs));
}

}  // namespace cyclecert
