#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "indatt/graph.hpp"

using namespace indatt;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Reference graph6 encoder written from the format definition, independent
// of the library implementation: upper triangle in column order, 6 bits per
// byte big-endian, bytes offset by 63.
std::string reference_graph6(int n, const std::set<std::pair<int, int>>& edges) {
    std::string out(1, static_cast<char>(63 + n)); // n < 63 only
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(edges.count({i, j}) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t b = 0; b < bits.size(); b += 6) {
        int v = 0;
        for (int k = 0; k < 6; ++k) v = (v << 1) | bits[b + k];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

TEST_CASE("graph invariants on construction") {
    CHECK_THROWS_AS(Graph(0), SizeError);
    CHECK_THROWS_AS(Graph(65), SizeError);
    Graph g(4);
    g.add_edge(0, 2);
    CHECK(g.adjacent(2, 0));
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 4), Error);
}

TEST_CASE("graph6 parsing of the named encodings") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete_graph(4));

    Graph one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);

    // reference-encoded P4 with path labeling 0-1-2-3
    std::string p4 = reference_graph6(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4 == "Ch");
    Graph g = parse_graph6(p4);
    CHECK(g == path_graph(4));
    CHECK(g.edge_count() == 3);
}

TEST_CASE("graph6 writer matches the reference encoder") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = random_graph(rng, n, 0.4);
        std::set<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v)) edges.insert({u, v});
        CHECK(write_graph6(g) == reference_graph6(n, edges));
    }
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round-trip is the identity on vertex order") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 64);
        Graph g = random_graph(rng, n, 0.3);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 error kinds are distinct") {
    auto kind_of = [](const std::string& s) {
        try {
            parse_graph6(s);
        } catch (const Graph6Error& e) {
            return e.kind;
        }
        return Graph6Error::Kind::Length; // not reached in these cases
    };
    CHECK(kind_of("") == Graph6Error::Kind::Header);
    CHECK(kind_of(" C~") == Graph6Error::Kind::Header);
    CHECK(kind_of("C~~") == Graph6Error::Kind::Length);
    CHECK(kind_of("C") == Graph6Error::Kind::Length);
    CHECK(kind_of(std::string("C") + '\x20') == Graph6Error::Kind::Byte);
    // 65 vertices via the long form: 65 = (0, 1, 1) in 6-bit digits
    CHECK(kind_of("~?@@") == Graph6Error::Kind::Size);
    // n = 2 with a padding bit set: '@' = value 1, only the top bit is data
    CHECK(kind_of("A@") == Graph6Error::Kind::Padding);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == edgeless_graph(4));
    CHECK(complement(path_graph(4)) == relabel(path_graph(4), {1, 3, 0, 2}));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.5);
        Graph c = complement(g);
        CHECK(complement(c) == g);
        CHECK(g.edge_count() + c.edge_count() == g.order() * (g.order() - 1) / 2);
    }
}

TEST_CASE("disjoint union") {
    Graph two = disjoint_union(Graph(1), Graph(1));
    CHECK(two == edgeless_graph(2));
    CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(30)), SizeError);

    // multiplicativity of the independence polynomial
    std::mt19937_64 rng(14);
    for (int i = 0; i < 40; ++i) {
        Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
        Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
        CHECK(independence_polynomial(disjoint_union(a, b)) ==
              multiply(independence_polynomial(a), independence_polynomial(b)));
    }

    // P2 u 2K1: 1 + 4z + 5z^2 + 2z^3
    Graph g = disjoint_union(disjoint_union(path_graph(2), Graph(1)), Graph(1));
    CHECK(independence_polynomial(g) == IntPoly{1, 4, 5, 2});
}

TEST_CASE("lexicographic product") {
    CHECK(lexicographic_product(complete_graph(2), complete_graph(2)) == complete_graph(4));
    CHECK(lexicographic_product(edgeless_graph(3), edgeless_graph(4)) == edgeless_graph(12));
    CHECK_THROWS_AS(lexicographic_product(Graph(9), Graph(9)), SizeError);

    // adjacency law on a sample
    Graph p = lexicographic_product(path_graph(3), complete_graph(2));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 2; ++v)
            for (int u2 = 0; u2 < 3; ++u2)
                for (int v2 = 0; v2 < 2; ++v2) {
                    int a = u * 2 + v, b = u2 * 2 + v2;
                    if (a == b) continue;
                    bool expect = path_graph(3).adjacent(u, u2) ||
                                  (u == u2 && complete_graph(2).adjacent(v, v2));
                    CHECK(p.adjacent(a, b) == expect);
                }
}

TEST_CASE("independence polynomial closed forms") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(independence_polynomial(complete_graph(n)) ==
              IntPoly(std::vector<BigInt>{BigInt(1), BigInt(n)}));
        // edgeless: binomial coefficients of (1+z)^n
        IntPoly b = independence_polynomial(edgeless_graph(n));
        BigInt binom(1);
        for (int i = 1; i <= n; ++i) {
            binom = binom * (n - i + 1) / i;
            CHECK(b.coeff(i) == binom);
        }
    }
    CHECK(independence_polynomial(path_graph(4)) == IntPoly{1, 4, 3});
    Graph k44k1 = disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)), Graph(1));
    CHECK(independence_polynomial(k44k1) == IntPoly{1, 9, 24, 16});
}

TEST_CASE("independence polynomial postconditions and the subset oracle") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.1 + 0.8 * (i % 9) / 8.0);
        IntPoly p = independence_polynomial(g);
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(1) == n);
        for (int d = 0; d <= p.degree(); ++d) CHECK(p.coeff(d) >= 1);
        CHECK(p == independence_polynomial_subsets(g));
    }
    CHECK_THROWS_AS(independence_polynomial_subsets(Graph(25)), SizeError);
}

TEST_CASE("composition identity, left side by subset enumeration") {
    // I of P4[P4] equals I_{P4}(I_{P4}(z) - 1): the 16-vertex product is small
    // enough for the direct subset oracle.
    Graph p4 = path_graph(4);
    Graph prod = lexicographic_product(p4, p4);
    IntPoly left = independence_polynomial_subsets(prod);
    IntPoly ig = independence_polynomial(p4);
    CHECK(left == compose(ig, ig - IntPoly{1}));
    CHECK(left == independence_polynomial(prod));

    // equivalent reduced form: I_{G^2} = P^2 + 1
    IntPoly p = reduced(ig);
    CHECK(left == compose(p, p) + IntPoly{1});
}

TEST_CASE("graph6 long form for 63 and 64 vertices") {
    std::mt19937_64 rng(19);
    for (int n : {63, 64}) {
        Graph g = random_graph(rng, n, 0.5);
        std::string line = write_graph6(g);
        CHECK(line[0] == '~');
        CHECK(line.size() == 4 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
        CHECK(parse_graph6(line) == g);
    }
}

TEST_CASE("wide product agrees with the narrow one and the composition law") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(rng() % 9); // up to 10 -> 100-vertex product
        Graph g = random_graph(rng, n, 0.2 + 0.06 * i);
        IntPoly ig = independence_polynomial(g);
        WideGraph wide = lexicographic_product_wide(g, g);
        CHECK(independence_polynomial(wide) == compose(ig, ig - IntPoly{1}));
    }
    CHECK_THROWS_AS(lexicographic_product_wide(Graph(17), Graph(17)), SizeError);
}

TEST_CASE("graph stats on the named graphs") {
    GraphStats k4 = graph_stats(complete_graph(4));
    CHECK(k4.vertex_count == 4);
    CHECK(k4.edge_count == 6);
    CHECK(k4.triangle_count == 4);
    CHECK(k4.k4_count == 1);

    GraphStats k5 = graph_stats(complete_graph(5));
    CHECK(k5.edge_count == 10);
    CHECK(k5.triangle_count == 10);
    CHECK(k5.k4_count == 5);
    // triangle bound with equality: E (4E - N^2) / (3N) = 10
    CHECK(3 * k5.vertex_count * k5.triangle_count ==
          k5.edge_count * (4 * k5.edge_count - k5.vertex_count * k5.vertex_count));

    GraphStats c5 = graph_stats(cycle_graph(5));
    CHECK(c5.triangle_count == 0);
    CHECK(c5.k4_count == 0);
    CHECK(c5.open_wedge_count == 5);
}

TEST_CASE("stats identities on a random corpus") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        GraphStats s = graph_stats(random_graph(rng, n, 0.05 + 0.9 * (i % 11) / 10.0));
        long long N = s.vertex_count, E = s.edge_count;
        CHECK(s.edge_far_pair_count + 2 * s.open_wedge_count + 3 * s.triangle_count ==
              (N - 2) * E);
        CHECK(2 * s.open_wedge_count + 6 * s.triangle_count == -2 * E + s.degree_sq_sum);
        if (4 * E > N * N) CHECK(3 * N * s.triangle_count >= E * (4 * E - N * N));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(disjoint_union(Graph(1), Graph(1))));
    CHECK(is_connected(path_graph(4)));
    CHECK_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(2))));
}

TEST_CASE("canonical form is isomorphism-complete on 4 vertices") {
    // Partition all 64 labeled 4-vertex graphs by brute-force isomorphism and
    // check canonical_form induces exactly the same partition.
    std::vector<Graph> all;
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int e = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++e)
                if ((mask >> e) & 1) g.add_edge(u, v);
        all.push_back(g);
    }
    std::set<std::string> forms;
    int mismatches = 0;
    for (const Graph& a : all) {
        forms.insert(canonical_form(a));
        for (const Graph& b : all)
            if ((canonical_form(a) == canonical_form(b)) != isomorphic_brute(a, b)) ++mismatches;
    }
    CHECK(mismatches == 0);
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form under relabeling") {
    std::mt19937_64 rng(18);
    std::string p4_form = canonical_form(path_graph(4));
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK(canonical_form(relabel(path_graph(4), perm)) == p4_form);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(canonical_form(star) != p4_form);

    for (int i = 0; i < 80; ++i) {
        int n = 2 + static_cast<int>(rng() % 15); // up to the 16-vertex cap
        Graph g = random_graph(rng, n, 0.15 + 0.7 * (i % 7) / 6.0);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, p)));
    }
    CHECK_THROWS_AS(canonical_form(Graph(17)), SizeError);
}

TEST_CASE("wide and narrow products agree at the 64-vertex boundary") {
    std::mt19937_64 rng(20);
    Graph a = random_graph(rng, 8, 0.4);
    Graph b = random_graph(rng, 8, 0.6);
    Graph narrow = lexicographic_product(a, b);
    WideGraph wide = lexicographic_product_wide(a, b);
    REQUIRE(narrow.order() == wide.order());
    for (int u = 0; u < narrow.order(); ++u)
        for (int v = u + 1; v < narrow.order(); ++v)
            CHECK(narrow.adjacent(u, v) == wide.adjacent(u, v));
    CHECK(independence_polynomial(narrow) == independence_polynomial(wide));
}
