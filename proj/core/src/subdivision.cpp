#include "cyclecert/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cyclecert {

namespace {

bool pattern_dominated(const std::vector<int>& lens, const std::vector<int>& pattern) {
    const int n = static_cast<int>(pattern.size());
    for (int refl = 0; refl < 2; ++refl)
        for (int r = 0; r < n; ++r) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                int idx = refl ? (r - j % n + n) % n : (r + j) % n;
                ok = lens[idx] >= pattern[j];
            }
            if (ok) return true;
        }
    return false;
}

}  // namespace

VerifyResult verify_subdivision(const Digraph& d, const SubdivisionWitness& w,
                                const CyclePattern& p) {
    const int n = p.blocks();
    if (n < 4 || n % 2 != 0) return {false, "pattern must have an even block count >= 4"};
    if (static_cast<int>(w.paths.size()) != n) return {false, "wrong number of paths"};
    if (static_cast<int>(w.directions.size()) != n) return {false, "wrong number of directions"};
    for (int j = 0; j < n; ++j) {
        if (w.directions[j] != 1 && w.directions[j] != -1)
            return {false, "direction flags must be +1/-1"};
        if (w.directions[j] == w.directions[(j + 1) % n])
            return {false, "block directions must alternate"};
    }
    std::vector<int> lens(n);
    for (int j = 0; j < n; ++j) {
        const auto& path = w.paths[j];
        if (path.size() < 2) return {false, "each block needs length >= 1"};
        lens[j] = static_cast<int>(path.size()) - 1;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!d.has_arc(path[i], path[i + 1]))
                return {false, "missing arc (" + std::to_string(path[i]) + "," +
                                   std::to_string(path[i + 1]) + ")"};
    }
    // Endpoint chaining: the far end of block j is the junction of block j+1.
    for (int j = 0; j < n; ++j) {
        Vertex far = w.directions[j] > 0 ? w.paths[j].back() : w.paths[j].front();
        if (far != w.junction((j + 1) % n))
            return {false, "blocks " + std::to_string(j) + " and " +
                               std::to_string((j + 1) % n) + " do not share a junction"};
    }
    std::set<Vertex> junctions;
    for (int j = 0; j < n; ++j)
        if (!junctions.insert(w.junction(j)).second)
            return {false, "junction vertex repeated"};
    std::set<Vertex> internals;
    for (const auto& path : w.paths)
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            if (junctions.count(path[i]))
                return {false, "path passes through a junction internally"};
            if (!internals.insert(path[i]).second)
                return {false, "paths share internal vertex " + std::to_string(path[i])};
        }
    if (!pattern_dominated(lens, p.block_lengths))
        return {false, "block lengths do not dominate the pattern"};
    return {true, ""};
}

std::optional<SubdivisionWitness> assemble_witness(
    const std::vector<std::vector<Vertex>>& blocks) {
    const int n = static_cast<int>(blocks.size());
    if (n < 4 || n % 2 != 0) return std::nullopt;
    for (const auto& b : blocks)
        if (b.size() < 2) return std::nullopt;
    // Try both orientations for block 0; directions then alternate.
    for (int first_dir : {1, -1}) {
        SubdivisionWitness w;
        w.paths = blocks;
        w.directions.resize(n);
        for (int j = 0; j < n; ++j) w.directions[j] = (j % 2 == 0) ? first_dir : -first_dir;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            Vertex far = w.directions[j] > 0 ? w.paths[j].back() : w.paths[j].front();
            ok = far == w.junction((j + 1) % n);
        }
        if (ok) return w;
    }
    return std::nullopt;
}

VerifyResult verify_antidirected_cycle(const Digraph& d, const AntidirectedCycle& c,
                                       int min_len) {
    const int len = c.length();
    if (len < min_len) return {false, "cycle shorter than required"};
    if (len % 2 != 0) return {false, "antidirected cycle length must be even"};
    std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(seen.size()) != len) return {false, "repeated vertex"};
    for (int i = 0; i < len; ++i) {
        Vertex u = c.vertices[i], v = c.vertices[(i + 1) % len];
        bool ok = c.is_source(i) ? d.has_arc(u, v) : d.has_arc(v, u);
        if (!ok) return {false, "missing arc between positions " + std::to_string(i) +
                                    " and " + std::to_string((i + 1) % len)};
    }
    return {true, ""};
}

namespace {

struct AdcSearch {
    const Digraph& d;
    int min_len;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool exceeded = false;
    std::vector<Vertex> path;
    std::vector<bool> used;
    bool first_is_source = true;
    std::optional<AntidirectedCycle> found;

    bool tick() {
        if (++expansions > budget) exceeded = true;
        return !exceeded;
    }

    // position of path.back() is path.size()-1; its role alternates.
    bool role_is_source(size_t pos) const { return (pos % 2 == 0) == first_is_source; }

    bool extend() {
        size_t pos = path.size() - 1;
        Vertex cur = path.back();
        Vertex start = path.front();
        bool cur_source = role_is_source(pos);
        // Try closing: needs even length >= min_len and the wrap arc.
        if (path.size() >= static_cast<size_t>(min_len) && path.size() % 2 == 0) {
            bool closes = cur_source ? d.has_arc(cur, start) : d.has_arc(start, cur);
            if (closes) {
                found = AntidirectedCycle{path, first_is_source};
                return true;
            }
        }
        const auto& nbrs = cur_source ? d.out_neighbors(cur) : d.in_neighbors(cur);
        for (Vertex w : nbrs) {
            if (!tick()) return false;
            if (w <= start || used[w]) continue;  // start vertex is the cycle minimum
            used[w] = true;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

SearchResult<AntidirectedCycle> find_antidirected_cycle(const Digraph& d, int min_len,
                                                        std::uint64_t budget) {
    AdcSearch s{d, std::max(min_len, 4), budget};
    s.used.assign(d.vertex_count(), false);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        for (bool src : {true, false}) {
            s.first_is_source = src;
            s.path = {v};
            s.used[v] = true;
            bool ok = s.extend();
            s.used[v] = false;
            if (ok) return {SearchStatus::Found, std::move(s.found), s.expansions};
            if (s.exceeded) return {SearchStatus::BudgetExceeded, std::nullopt, s.expansions};
        }
    }
    return {SearchStatus::NotFound, std::nullopt, s.expansions};
}

namespace {

// Junction convention inside the oracle: even blocks run c_j -> c_{j+1},
// odd blocks run c_{j+1} -> c_j, so even junctions are sources.
struct SubdivSearch {
    const Digraph& d;
    std::vector<int> req;  // per-block minimum lengths
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool exceeded = false;
    int n_blocks;
    std::vector<bool> used;
    std::vector<Vertex> junction;
    std::vector<std::vector<Vertex>> blocks;
    std::optional<SubdivisionWitness> found;
    int free_vertices = 0;

    bool tick() {
        if (++expansions > budget) exceeded = true;
        return !exceeded;
    }

    bool place_block(int j);

    // New distinct vertices still required to finish from a state where the
    // current block j has length `len` so far. Future blocks need their
    // internal vertices plus one undiscovered junction each except the last.
    int min_needed(int j, int len, bool has_target) const {
        int need = has_target ? std::max(req[j] - len - 1, 0) : std::max(req[j] - len, 1);
        for (int b = j + 1; b < n_blocks; ++b) need += req[b] - 1;
        need += std::max(0, n_blocks - 2 - j);
        return need;
    }

    // Grows the path for block j; `path` holds the fixed endpoint first.
    // forward: extend along out-arcs; the far end becomes junction j+1 unless
    // a fixed `target` must be hit instead.
    bool grow(int j, std::vector<Vertex>& path, bool forward, Vertex target) {
        Vertex cur = path.back();
        int len = static_cast<int>(path.size()) - 1;
        if (len >= req[j] && target < 0) {
            // cur (already marked used) becomes the next junction.
            junction[j + 1] = cur;
            if (commit(j, path, forward)) return true;
            junction[j + 1] = -1;
        }
        if (free_vertices < min_needed(j, len, target >= 0)) return false;
        const auto& nbrs = forward ? d.out_neighbors(cur) : d.in_neighbors(cur);
        for (Vertex w : nbrs) {
            if (!tick()) return false;
            if (used[w]) {
                // Allowed only as the final hop onto the fixed target.
                if (target >= 0 && w == target && len + 1 >= req[j]) {
                    path.push_back(w);
                    if (commit(j, path, forward)) return true;
                    path.pop_back();
                }
                continue;
            }
            used[w] = true;
            --free_vertices;
            path.push_back(w);
            if (grow(j, path, forward, target)) return true;
            path.pop_back();
            used[w] = false;
            ++free_vertices;
            if (exceeded) return false;
        }
        return false;
    }

    bool commit(int j, const std::vector<Vertex>& path, bool forward) {
        blocks[j] = path;
        if (!forward) std::reverse(blocks[j].begin(), blocks[j].end());
        bool ok = place_block(j + 1);
        if (!ok) blocks[j].clear();
        return ok;
    }
};

bool SubdivSearch::place_block(int j) {
    if (exceeded) return false;
    if (j == n_blocks) {
        SubdivisionWitness w;
        w.paths = blocks;
        w.directions.resize(n_blocks);
        for (int b = 0; b < n_blocks; ++b) w.directions[b] = (b % 2 == 0) ? 1 : -1;
        found = std::move(w);
        return true;
    }
    std::vector<Vertex> path;
    if (j % 2 == 0) {
        // forward from junction j; last block is odd, so target stays free.
        path = {junction[j]};
        return grow(j, path, true, -1);
    }
    if (j == n_blocks - 1) {
        // runs junction 0 -> junction n-1, both fixed.
        path = {junction[0]};
        return grow(j, path, true, junction[j]);
    }
    // backward from junction j, discovering junction j+1 at the far end.
    path = {junction[j]};
    return grow(j, path, false, -1);
}

}  // namespace

SearchResult<SubdivisionWitness> find_subdivision_bruteforce(const Digraph& d,
                                                             const CyclePattern& p,
                                                             std::uint64_t budget) {
    const int n = p.blocks();
    if (n < 4 || n % 2 != 0) return {SearchStatus::NotFound, std::nullopt, 0};
    int min_vertices = 0;
    for (int k : p.block_lengths) min_vertices += std::max(k, 1);
    if (d.vertex_count() < min_vertices) return {SearchStatus::NotFound, std::nullopt, 0};

    // Requirement vectors for every rotation/reflection of the pattern.
    std::set<std::vector<int>> reqs;
    for (int refl = 0; refl < 2; ++refl)
        for (int r = 0; r < n; ++r) {
            std::vector<int> v(n);
            for (int j = 0; j < n; ++j) {
                int idx = refl ? (r - j % n + n) % n : (r + j) % n;
                v[j] = std::max(1, p.block_lengths[idx]);
            }
            reqs.insert(std::move(v));
        }

    std::uint64_t spent = 0;
    for (const auto& req : reqs) {
        SubdivSearch s{d, req, budget > spent ? budget - spent : 0};
        s.n_blocks = n;
        s.used.assign(d.vertex_count(), false);
        s.junction.assign(n, -1);
        s.blocks.assign(n, {});
        s.free_vertices = d.vertex_count();
        for (Vertex c0 = 0; c0 < d.vertex_count(); ++c0) {
            s.junction[0] = c0;
            s.used[c0] = true;
            --s.free_vertices;
            bool ok = s.place_block(0);
            s.used[c0] = false;
            ++s.free_vertices;
            if (ok) {
                auto check = verify_subdivision(d, *s.found, p);
                if (check.ok)
                    return {SearchStatus::Found, std::move(s.found), spent + s.expansions};
            }
            if (s.exceeded)
                return {SearchStatus::BudgetExceeded, std::nullopt, spent + s.expansions};
        }
        spent += s.expansions;
    }
    return {SearchStatus::NotFound, std::nullopt, spent};
}

}  // namespace cyclecert
