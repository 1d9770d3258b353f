#include "indatt/search.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "indatt/chebyshev.hpp"

namespace indatt {

IntPoly component_target(int k) {
    if (k < 1 || k > 4) throw Error("segment index k must be in 1..4");
    return segment_candidates(4).at(k) + IntPoly{1};
}

namespace {

IntPoly linear_factor(long n) { return IntPoly{1, n}; }
IntPoly quadratic_factor(long n, long m) { return IntPoly{1, n, m}; }
IntPoly cubic_factor(long n, long m1, long m2) { return IntPoly{1, n, m1, m2}; }

void verify_product(const ComponentSolution& s) {
    IntPoly prod{1};
    for (const IntPoly& f : s.factors) prod = multiply(prod, f);
    if (!(prod == component_target(s.k)))
        throw Error("component solution does not multiply to the target quartic");
}

std::vector<std::pair<long, long>> divisor_pairs(long v) {
    std::vector<std::pair<long, long>> out;
    for (long d = 1; d <= v; ++d)
        if (v % d == 0) out.push_back({d, v / d});
    return out;
}

} // namespace

std::vector<ComponentSolution> solve_components(CaseKind kind, int k) {
    if (k < 1 || k > 4) throw Error("segment index k must be in 1..4");
    const long k2 = long(k) * k, k3 = k2 * k;
    std::vector<ComponentSolution> out;

    switch (kind) {
        case CaseKind::FourComponents:
            // (1+n1 z)(1+n2 z)(1+n3 z)(1+n4 z): sum 16, pair sum 20k,
            // triple sum 8k^2, product k^3. Sum and product clash, so this
            // is exhaustively empty; search anyway.
            for (long n1 = 1; n1 <= 13; ++n1)
                for (long n2 = 1; n1 + n2 <= 14; ++n2)
                    for (long n3 = 1; n1 + n2 + n3 <= 15; ++n3) {
                        long n4 = 16 - n1 - n2 - n3;
                        if (n4 < 1) continue;
                        if (n1 * n2 * n3 * n4 != k3) continue;
                        if (n1 * n2 + n1 * n3 + n1 * n4 + n2 * n3 + n2 * n4 + n3 * n4 != 20 * k)
                            continue;
                        if (n1 * n2 * n3 + n1 * n2 * n4 + n1 * n3 * n4 + n2 * n3 * n4 != 8 * k2)
                            continue;
                        out.push_back({kind, k, {n1, n2, n3, n4},
                                       {linear_factor(n1), linear_factor(n2),
                                        linear_factor(n3), linear_factor(n4)}});
                    }
            break;

        case CaseKind::ThreeComponents:
            // (1+n1 z)(1+n2 z)(1+n3 z + m z^2)
            for (auto [m, rest] : divisor_pairs(k3))
                for (auto [n1, n2] : divisor_pairs(rest)) {
                    if (n1 >= 16 || n2 >= 16) continue;
                    long n3 = 16 - n1 - n2;
                    if (n3 < 1) continue;
                    if (n1 * n2 * n3 + m * (n1 + n2) != 8 * k2) continue;
                    if (n1 * n2 + n1 * n3 + n2 * n3 + m != 20 * k) continue;
                    out.push_back({kind, k, {m, n1, n2, n3},
                                   {linear_factor(n1), linear_factor(n2),
                                    quadratic_factor(n3, m)}});
                }
            break;

        case CaseKind::TwoComponents22:
            // (1+n1 z + m1 z^2)(1+n2 z + m2 z^2)
            for (auto [m1, m2] : divisor_pairs(k3))
                for (long n1 = 1; n1 <= 15; ++n1) {
                    long n2 = 16 - n1;
                    if (n1 * m2 + n2 * m1 != 8 * k2) continue;
                    if (n1 * n2 + m1 + m2 != 20 * k) continue;
                    out.push_back({kind, k, {m1, m2, n1, n2},
                                   {quadratic_factor(n1, m1), quadratic_factor(n2, m2)}});
                }
            break;

        case CaseKind::TwoComponents13:
            // (1+n1 z)(1+n2 z + m1 z^2 + m2 z^3)
            for (auto [n1, m2] : divisor_pairs(k3)) {
                if (n1 >= 16) continue;
                long n2 = 16 - n1;
                long m1 = 20 * k - n1 * n2;
                if (m1 < 1) continue;
                if (n1 * m1 + m2 != 8 * k2) continue;
                out.push_back({kind, k, {n1, m2, n2, m1},
                               {linear_factor(n1), cubic_factor(n2, m1, m2)}});
            }
            break;
    }

    std::sort(out.begin(), out.end(),
              [](const ComponentSolution& a, const ComponentSolution& b) {
                  return a.params < b.params;
              });
    for (const ComponentSolution& s : out) verify_product(s);
    return out;
}

std::vector<ComponentSolution> dedup_symmetric(std::vector<ComponentSolution> rows) {
    std::vector<ComponentSolution> out;
    std::vector<std::vector<IntPoly>> seen;
    for (ComponentSolution& row : rows) {
        std::vector<IntPoly> key = row.factors;
        std::sort(key.begin(), key.end());
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorph-free enumeration: grow edge-by-edge, keep one canonical
// representative per class and level, prune on monotone counts.

namespace {

struct LevelEntry {
    Graph g;
    long long triangles;
    long long k4;
};

long long new_triangles(const Graph& g, int u, int v) {
    return std::popcount(g.row(u) & g.row(v));
}

std::uint64_t bits_above(int w) {
    return w >= 63 ? 0 : ~((std::uint64_t(1) << (w + 1)) - 1);
}

// 4-cliques created by the edge (u,v): edges inside N(u) & N(v).
long long new_k4(const Graph& g, int u, int v) {
    std::uint64_t common = g.row(u) & g.row(v);
    long long cnt = 0;
    std::uint64_t m = common;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        cnt += std::popcount(g.row(w) & common & bits_above(w));
    }
    return cnt;
}

} // namespace

std::vector<Graph> enumerate_complements(const EnumConstraints& c) {
    if (c.vertices < 1) throw Error("enumeration needs at least one vertex");
    if (c.vertices > 12)
        throw EnumCapError("enumeration capped at 12 vertices, requested " +
                           std::to_string(c.vertices));
    const int n = c.vertices;
    if (c.complement_edges > n * (n - 1) / 2)
        throw Error("edge target exceeds the possible maximum");

    std::vector<LevelEntry> level{{edgeless_graph(n), 0, 0}};
    std::unordered_set<std::string> seen;
    for (int m = 1; m <= c.complement_edges; ++m) {
        std::vector<LevelEntry> next;
        seen.clear();
        for (const LevelEntry& entry : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (entry.g.adjacent(u, v)) continue;
                    long long tri = entry.triangles + new_triangles(entry.g, u, v);
                    if (tri > c.complement_triangles) continue;
                    if (c.require_co_connected &&
                        (entry.g.degree(u) + 1 > n - 2 || entry.g.degree(v) + 1 > n - 2))
                        continue; // a dominating vertex isolates itself in the complement
                    Graph child = entry.g;
                    child.add_edge(u, v);
                    long long k4 = entry.k4 + new_k4(child, u, v);
                    if (k4 > c.complement_k4) continue;
                    Graph canon = canonical_graph(child);
                    std::string key = write_graph6(canon);
                    if (seen.insert(key).second) next.push_back({std::move(canon), tri, k4});
                }
        }
        level = std::move(next);
    }

    std::vector<Graph> out;
    for (const LevelEntry& entry : level) {
        if (entry.triangles != c.complement_triangles) continue;
        if (entry.k4 != c.complement_k4) continue;
        if (c.require_co_connected && !is_connected(complement(entry.g))) continue;
        out.push_back(entry.g);
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return write_graph6(a) < write_graph6(b);
    });
    return out;
}

std::vector<Graph> enumerate_all_graphs(int n) {
    if (n < 1 || n > 10) throw EnumCapError("full enumeration capped at 10 vertices");
    std::vector<Graph> all{edgeless_graph(n)};
    std::vector<Graph> level{edgeless_graph(n)};
    std::unordered_set<std::string> seen;
    const int max_edges = n * (n - 1) / 2;
    for (int m = 1; m <= max_edges; ++m) {
        std::vector<Graph> next;
        seen.clear();
        for (const Graph& g : level)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph child = g;
                    child.add_edge(u, v);
                    Graph canon = canonical_graph(child);
                    std::string key = write_graph6(canon);
                    if (seen.insert(key).second) next.push_back(std::move(canon));
                }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

// ---------------------------------------------------------------------------

namespace {

FactorRealization realize_factor(const IntPoly& factor, EnumCache& cache) {
    FactorRealization out;
    out.factor = factor;
    const int deg = factor.degree();
    if (deg == 1) {
        // 1 + n z realizes only as the complete graph K_n
        out.verdict = FactorVerdict::Realizable;
        out.count = 1;
        return out;
    }
    EnumConstraints c;
    c.vertices = static_cast<int>(factor.coeff(1).get_si());
    c.complement_edges = static_cast<int>(factor.coeff(2).get_si());
    c.complement_triangles = deg >= 3 ? static_cast<int>(factor.coeff(3).get_si()) : 0;
    c.complement_k4 = deg >= 4 ? static_cast<int>(factor.coeff(4).get_si()) : 0;
    c.require_co_connected = true;
    if (c.vertices > 12) {
        out.verdict = FactorVerdict::Undetermined;
        out.count = -1;
        return out;
    }
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, enumerate_complements(c)).first;
    out.count = static_cast<long long>(it->second.size());
    out.verdict = out.count > 0 ? FactorVerdict::Realizable : FactorVerdict::Empty;
    return out;
}

} // namespace

std::vector<RealizationReport> realize_disconnected(int k, EnumCache* cache) {
    EnumCache local;
    EnumCache& mem = cache ? *cache : local;
    std::vector<RealizationReport> out;
    for (CaseKind kind : {CaseKind::FourComponents, CaseKind::ThreeComponents,
                          CaseKind::TwoComponents22, CaseKind::TwoComponents13}) {
        for (ComponentSolution& sol : dedup_symmetric(solve_components(kind, k))) {
            RealizationReport rep;
            rep.solution = std::move(sol);
            bool undetermined = false, any_empty = false;
            for (const IntPoly& f : rep.solution.factors)
                rep.per_factor.push_back(realize_factor(f, mem));
            for (const FactorRealization& fr : rep.per_factor) {
                if (fr.verdict == FactorVerdict::Undetermined) undetermined = true;
                if (fr.verdict == FactorVerdict::Empty) any_empty = true;
            }
            rep.realizable = !undetermined && !any_empty;
            if (undetermined) {
                rep.disconnected_count = -1;
            } else if (any_empty) {
                rep.disconnected_count = 0;
            } else {
                // group equal factors: t copies with c realizations give
                // multichoose(c, t) component selections
                std::map<IntPoly, std::pair<long long, long long>> groups; // factor -> (copies, count)
                for (const FactorRealization& fr : rep.per_factor) {
                    auto [it, inserted] = groups.emplace(fr.factor, std::make_pair(0LL, fr.count));
                    it->second.first += 1;
                }
                long long total = 1;
                for (auto& [f, tc] : groups) {
                    auto [t, cnt] = tc;
                    // C(cnt + t - 1, t)
                    long long acc = 1;
                    for (long long i = 0; i < t; ++i) acc = acc * (cnt + i) / (i + 1);
                    total *= acc;
                }
                rep.disconnected_count = total;
            }
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace indatt
