#include "indatt/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace indatt {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

} // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > 64) throw SizeError("graph order must be in 1..64, got " + std::to_string(n));
    adj_.assign(n, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw Error("invalid vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw SizeError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// ---------------------------------------------------------------------------
// graph6: 6-bit big-endian packing of the upper triangle in column order,
// bytes offset by 63, sizes < 63 in one byte.

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error(Graph6Error::Kind::Header, "empty graph6 line");
    std::size_t pos = 0;
    long n;
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) {
        if (line.size() < 4)
            throw Graph6Error(Graph6Error::Kind::Header, "truncated graph6 size header");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(line[i]);
            if (c < 63 || c > 126)
                throw Graph6Error(Graph6Error::Kind::Header, "invalid byte in graph6 size header");
            n = (n << 6) | (c - 63);
        }
        pos = 4;
    } else if (c0 >= 63 && c0 < 126) {
        n = c0 - 63;
        pos = 1;
    } else {
        throw Graph6Error(Graph6Error::Kind::Header,
                          "invalid graph6 header byte " + std::to_string(int(c0)));
    }
    if (n > 64)
        throw Graph6Error(Graph6Error::Kind::Size,
                          "graph6 order " + std::to_string(n) + " exceeds the 64-vertex cap");
    if (n < 1) throw Graph6Error(Graph6Error::Kind::Size, "graph must have at least one vertex");

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != nbytes)
        throw Graph6Error(Graph6Error::Kind::Length,
                          "graph6 body has " + std::to_string(line.size() - pos) +
                              " bytes, expected " + std::to_string(nbytes));

    Graph g(static_cast<int>(n));
    long idx = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned char c = static_cast<unsigned char>(line[pos + b]);
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6Error::Kind::Byte,
                              "graph6 body byte " + std::to_string(int(c)) + " out of range");
        int v = c - 63;
        for (int k = 5; k >= 0; --k, ++idx) {
            bool set = (v >> k) & 1;
            if (idx >= nbits) {
                if (set)
                    throw Graph6Error(Graph6Error::Kind::Padding, "nonzero padding bits in graph6");
                continue;
            }
            if (set) {
                // idx-th pair in column order: column j, rows 0..j-1.
                long j = 1;
                long base = 0;
                while (base + j <= idx) base += j, ++j;
                long i = idx - base;
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > 64)
        throw SizeError("disjoint union exceeds 64 vertices");
    Graph g(a.order() + b.order());
    for (int v = 0; v < a.order(); ++v)
        for (int u = v + 1; u < a.order(); ++u)
            if (a.adjacent(u, v)) g.add_edge(u, v);
    for (int v = 0; v < b.order(); ++v)
        for (int u = v + 1; u < b.order(); ++u)
            if (b.adjacent(u, v)) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const long n = long(g.order()) * h.order();
    if (n > 64) throw SizeError("lexicographic product exceeds 64 vertices; use the wide variant");
    Graph p(static_cast<int>(n));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            for (int u2 = 0; u2 < g.order(); ++u2)
                for (int v2 = 0; v2 < h.order(); ++v2) {
                    int a = u * h.order() + v, b = u2 * h.order() + v2;
                    if (a >= b) continue;
                    if (g.adjacent(u, u2) || (u == u2 && h.adjacent(v, v2))) p.add_edge(a, b);
                }
    return p;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::uint64_t seen = bit(0), frontier = bit(0);
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(n);
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    const int n = g.order();
    s.vertex_count = n;
    s.degrees.resize(n);
    for (int v = 0; v < n; ++v) {
        s.degrees[v] = g.degree(v);
        s.edge_count += s.degrees[v];
        s.degree_sq_sum += static_cast<long long>(s.degrees[v]) * s.degrees[v];
    }
    s.edge_count /= 2;

    long long tri3 = 0, one_side = 0, far = 0;
    for (int u = 0; u < n; ++u) {
        std::uint64_t nb = g.row(u) & ~((bit(u) << 1) - 1); // v > u
        std::uint64_t m = nb;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t common = g.row(u) & g.row(v);
            std::uint64_t ends = bit(u) | bit(v);
            long long n2 = std::popcount(common);
            long long n1 = std::popcount((g.row(u) ^ g.row(v)) & ~ends);
            tri3 += n2;
            one_side += n1;
            far += (n - 2) - n1 - n2;
            // count 4-cliques once per ordered u < v < w < x
            std::uint64_t cw = common & ~((bit(v) << 1) - 1); // w > v
            while (cw) {
                int w = std::countr_zero(cw);
                cw &= cw - 1;
                std::uint64_t cx = common & g.row(w) & ~((bit(w) << 1) - 1);
                s.k4_count += std::popcount(cx);
            }
        }
    }
    s.triangle_count = tri3 / 3;
    s.open_wedge_count = one_side / 2;
    s.edge_far_pair_count = far;
    return s;
}

// ---------------------------------------------------------------------------
// Canonical labeling: iterated equitable refinement, then backtracking over
// the first non-singleton cell. Vertices interchangeable by a twin swap
// (equal open or closed neighborhoods) are tried only once.

namespace {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<char> best;     // upper-triangle bits in column order
    std::vector<int> best_perm; // position -> vertex
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    void refine(std::vector<int>& color) const {
        while (true) {
            // signature: (own color, sorted neighbor colors)
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s;
                s.reserve(g.degree(v) + 1);
                s.push_back(color[v]);
                std::uint64_t m = g.row(v);
                while (m) {
                    int u = std::countr_zero(m);
                    m &= m - 1;
                    s.push_back(color[u]);
                }
                std::sort(s.begin() + 1, s.end());
                sig[v] = {std::move(s), v};
            }
            std::sort(sig.begin(), sig.end());
            int next = 0;
            std::vector<int> fresh(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first) ++next;
                fresh[sig[i].second] = next;
            }
            if (fresh == color) return; // fixpoint of the compact renumbering
            color = std::move(fresh);
        }
    }

    void leaf(const std::vector<int>& color) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[color[v]] = v;
        std::vector<char> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
        if (!have_best || bits < best) {
            best = std::move(bits);
            best_perm = std::move(perm);
            have_best = true;
        }
    }

    void search(std::vector<int> color) {
        refine(color);
        int classes = 0;
        for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
        if (classes == n) {
            leaf(color);
            return;
        }
        // first non-singleton cell
        int target = -1;
        std::vector<int> count(classes, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        for (int c = 0; c < classes; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);

        // one representative per twin class
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps) {
                if (g.row(r) == g.row(v) ||
                    (g.row(r) | bit(r)) == (g.row(v) | bit(v))) {
                    dup = true;
                    break;
                }
            }
            if (!dup) reps.push_back(v);
        }
        for (int rep : reps) {
            std::vector<int> child(n);
            for (int v = 0; v < n; ++v) child[v] = 2 * color[v];
            child[rep] -= 1;
            search(std::move(child));
        }
    }
};

} // namespace

Graph canonical_graph(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw SizeError("canonical form capped at 16 vertices");
    CanonSearch cs(g);
    cs.search(std::vector<int>(n, 0));
    Graph out(n);
    std::vector<int> pos(n); // vertex -> position
    for (int p = 0; p < n; ++p) pos[cs.best_perm[p]] = p;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) out.add_edge(pos[u], pos[v]);
    return out;
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

// ---------------------------------------------------------------------------
// Independence polynomial.

namespace {

template <int W>
struct Mask {
    std::array<std::uint64_t, W> w{};
    bool operator==(const Mask&) const = default;
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    int first() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return 64 * i + std::countr_zero(w[i]);
        return -1;
    }
    Mask operator&(const Mask& o) const {
        Mask r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Mask operator|(const Mask& o) const {
        Mask r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Mask and_not(const Mask& o) const {
        Mask r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
};

template <int W>
struct MaskHash {
    std::size_t operator()(const Mask<W>& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : m.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

IntPoly shift_up(const IntPoly& p) {
    if (p.is_zero()) return p;
    std::vector<BigInt> c(p.coeffs().size() + 1, BigInt(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + 1] = p.coeffs()[i];
    return IntPoly(std::move(c));
}

template <int W>
class IndPolyEngine {
public:
    IndPolyEngine(int n, std::vector<Mask<W>> rows) : n_(n), rows_(std::move(rows)) {}

    IntPoly run() {
        Mask<W> all;
        for (int v = 0; v < n_; ++v) all.set(v);
        return eval(all);
    }

private:
    int n_;
    std::vector<Mask<W>> rows_;
    std::unordered_map<Mask<W>, IntPoly, MaskHash<W>> memo_;

    Mask<W> component_of(const Mask<W>& s, int start) const {
        Mask<W> seen;
        seen.set(start);
        Mask<W> frontier = seen;
        while (!frontier.empty()) {
            Mask<W> next;
            Mask<W> f = frontier;
            for (int v = f.first(); v >= 0; f.clear(v), v = f.first())
                next = next | (rows_[v] & s);
            frontier = next.and_not(seen);
            seen = seen | next;
        }
        return seen;
    }

    IntPoly eval(const Mask<W>& s) {
        const int cnt = s.count();
        if (cnt == 0) return IntPoly{1};
        const int start = s.first();
        if (cnt == 1) return IntPoly{1, 1};
        Mask<W> comp = component_of(s, start);
        if (!(comp == s)) return multiply(eval(comp), eval(s.and_not(comp)));

        if (auto it = memo_.find(s); it != memo_.end()) return it->second;

        // branch on a maximum-degree vertex (lowest index on ties)
        int v = -1, best = -1;
        Mask<W> m = s;
        for (int u = m.first(); u >= 0; m.clear(u), u = m.first()) {
            int d = (rows_[u] & s).count();
            if (d > best) {
                best = d;
                v = u;
            }
        }
        Mask<W> without_v = s;
        without_v.clear(v);
        Mask<W> without_nbhd = s.and_not(rows_[v]);
        without_nbhd.clear(v);
        IntPoly res = eval(without_v) + shift_up(eval(without_nbhd));
        memo_.emplace(s, res);
        return res;
    }
};

template <int W>
IntPoly ipoly_rows(int n, const std::vector<std::uint64_t>& packed, int words) {
    std::vector<Mask<W>> rows(n);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < words; ++k) rows[v].w[k] = packed[static_cast<std::size_t>(v) * words + k];
    return IndPolyEngine<W>(n, std::move(rows)).run();
}

} // namespace

IntPoly independence_polynomial(const Graph& g) {
    std::vector<Mask<1>> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v].w[0] = g.row(v);
    return IndPolyEngine<1>(g.order(), std::move(rows)).run();
}

IntPoly independence_polynomial_subsets(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw SizeError("subset enumeration capped at 24 vertices");
    const std::size_t total = std::size_t(1) << n;
    std::vector<char> indep(total, 0);
    indep[0] = 1;
    std::vector<BigInt> counts(n + 1, BigInt(0));
    counts[0] = 1;
    for (std::size_t m = 1; m < total; ++m) {
        int v = std::countr_zero(m);
        std::size_t rest = m & (m - 1);
        if (indep[rest] && (g.row(v) & rest) == 0) {
            indep[m] = 1;
            counts[static_cast<std::size_t>(std::popcount(m))] += 1;
        }
    }
    return IntPoly(std::move(counts));
}

// ---------------------------------------------------------------------------

WideGraph::WideGraph(int n) : n_(n) {
    if (n < 1 || n > 256) throw SizeError("wide graph order must be in 1..256");
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void WideGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) throw Error("invalid vertex pair");
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

bool WideGraph::adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

WideGraph lexicographic_product_wide(const Graph& g, const Graph& h) {
    const long n = long(g.order()) * h.order();
    if (n > 256) throw SizeError("wide lexicographic product capped at 256 vertices");
    WideGraph p(static_cast<int>(n));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) {
            int a = u * h.order() + v;
            for (int u2 = 0; u2 < g.order(); ++u2)
                for (int v2 = 0; v2 < h.order(); ++v2) {
                    int b = u2 * h.order() + v2;
                    if (a >= b) continue;
                    if (g.adjacent(u, u2) || (u == u2 && h.adjacent(v, v2))) p.add_edge(a, b);
                }
        }
    return p;
}

IntPoly independence_polynomial(const WideGraph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> packed(static_cast<std::size_t>(n) * g.words());
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < g.words(); ++k) packed[static_cast<std::size_t>(v) * g.words() + k] = g.row(v)[k];
    switch (g.words()) {
        case 1: return ipoly_rows<1>(n, packed, 1);
        case 2: return ipoly_rows<2>(n, packed, 2);
        case 3: return ipoly_rows<3>(n, packed, 3);
        case 4: return ipoly_rows<4>(n, packed, 4);
        default: throw SizeError("unsupported wide graph width");
    }
}

} // namespace indatt
