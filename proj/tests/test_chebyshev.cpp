#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "indatt/chebyshev.hpp"
#include "indatt/graph.hpp"

using namespace indatt;

namespace {

// Rational-coefficient Horner for the conjugacy identity, test-side only.
std::vector<BigRat> rat_mul(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    std::vector<BigRat> out(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
            out[i + j].canonicalize();
        }
    return out;
}

std::vector<BigRat> rat_add(std::vector<BigRat> a, const std::vector<BigRat>& b) {
    if (b.size() > a.size()) a.resize(b.size(), BigRat(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
        a[i].canonicalize();
    }
    return a;
}

// T_n(a z + 1) expanded with exact rationals.
std::vector<BigRat> cheb_of_affine(int n, const BigRat& a) {
    IntPoly t = chebyshev(n);
    std::vector<BigRat> affine{BigRat(1), a};
    std::vector<BigRat> acc{BigRat(t.leading())};
    for (int i = n - 1; i >= 0; --i)
        acc = rat_add(rat_mul(acc, affine), {BigRat(t.coeff(i))});
    return acc;
}

} // namespace

TEST_CASE("small Chebyshev polynomials") {
    CHECK(chebyshev(0) == IntPoly{1});
    CHECK(chebyshev(1) == IntPoly{0, 1});
    CHECK(chebyshev(2) == IntPoly{-1, 0, 2});
    CHECK(chebyshev(3) == IntPoly{0, -3, 0, 4});
    CHECK(chebyshev(4) == IntPoly{1, 0, -8, 0, 8});
}

TEST_CASE("value at 1 and extreme coefficients up to degree 64") {
    for (int n = 1; n <= 64; ++n) {
        IntPoly t = chebyshev(n);
        CHECK(evaluate_exact(t, BigInt(1)) == 1);
        CHECK(t.leading() == (BigInt(1) << (n - 1)));
        if (n >= 2) CHECK(t.coeff(n - 1) == 0);
    }
}

TEST_CASE("defining property T_n(cos t) = cos(n t)") {
    // exact-coefficient evaluation in doubles; degrees kept moderate so
    // cancellation stays far below the 1e-9 budget
    for (int n = 2; n <= 16; ++n) {
        IntPoly t = chebyshev(n);
        for (int s = 0; s < 100; ++s) {
            double theta = 0.031 + 6.2 * s / 100.0;
            Complex v = evaluate(t, Complex(std::cos(theta), 0.0));
            CHECK(std::abs(v.real() - std::cos(n * theta)) < 1e-9);
            CHECK(v.imag() == 0.0);
        }
    }
}

TEST_CASE("derivatives at 1") {
    for (int n = 1; n <= 30; ++n) {
        CHECK(cheb_derivative_at_one(n, 0) == 1);
        CHECK(cheb_derivative_at_one(n, 1) == BigInt(n) * n);
        if (n >= 2) {
            // (2/3) C(n^2, 2)
            BigInt n2 = BigInt(n) * n;
            CHECK(cheb_derivative_at_one(n, 2) == n2 * (n2 - 1) / 3);
        }
    }
    CHECK(cheb_derivative_at_one(4, 4) == 192);
    CHECK_THROWS_AS(cheb_derivative_at_one(3, 4), Error);
}

TEST_CASE("derivatives at 1 agree with repeated exact differentiation") {
    for (int n = 2; n <= 12; ++n) {
        IntPoly d = chebyshev(n);
        BigInt factorial(1);
        for (int m = 0; m <= n; ++m) {
            CHECK(cheb_derivative_at_one(n, m) == evaluate_exact(d, BigInt(1)));
            d = derivative(d);
        }
    }
}

TEST_CASE("conjugate coefficients: published values") {
    auto c = conjugate_coefficients({BigRat(1, 2), 4});
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 16);
    CHECK(c[1] == 20);
    CHECK(c[2] == 8);
    CHECK(c[3] == 1);

    c = conjugate_coefficients({BigRat(2), 3});
    CHECK(c[0] == 9);
    CHECK(c[1] == 24);
    CHECK(c[2] == 16);

    c = conjugate_coefficients({BigRat(5, 2), 2});
    CHECK(c[0] == 4);
    CHECK(c[1] == 5);

    c = conjugate_coefficients({BigRat(1), 2});
    CHECK(c[0] == 4);
    CHECK(c[1] == 2);
}

TEST_CASE("conjugate coefficients: a_1 = n^2 and a_n = 2^(n-1) a^(n-1)") {
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k <= 5; ++k) {
            BigRat a(k, 2);
            a.canonicalize();
            auto c = conjugate_coefficients({a, n});
            CHECK(c[0] == BigInt(n) * n);
            BigRat expect(1);
            for (int i = 0; i < n - 1; ++i) expect *= 2 * a;
            expect.canonicalize();
            CHECK(c[n - 1] == expect);
        }
}

TEST_CASE("segment candidates") {
    auto quartics = segment_candidates(4);
    for (int k = 1; k <= 4; ++k) {
        long k2 = long(k) * k;
        CHECK(quartics.at(k) ==
              IntPoly{0, 16, 20 * k, 8 * k2, k2 * k});
    }
    CHECK(segment_candidates(3).at(4) == IntPoly{0, 9, 24, 16});
    CHECK(segment_candidates(2).at(2) == IntPoly{0, 4, 2});

    // the k=4 cubic matches I_{K4 u K4 u K1} computed from the graph
    Graph g = disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)), Graph(1));
    CHECK(segment_candidates(3).at(4) == reduced(independence_polynomial(g)));
}

TEST_CASE("conjugacy identity a P + 1 = T_n(a z + 1), exact rationals") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= 4; ++k) {
            BigRat a(k, 2);
            a.canonicalize();
            IntPoly p = segment_candidates(n).at(k);
            std::vector<BigRat> lhs{BigRat(1)}; // a P + 1
            for (int i = 1; i <= p.degree(); ++i) lhs.push_back(a * BigRat(p.coeff(i)));
            for (auto& q : lhs) q.canonicalize();
            std::vector<BigRat> rhs = cheb_of_affine(n, a);
            REQUIRE(lhs.size() == rhs.size());
            for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == rhs[i]);
        }
}

TEST_CASE("6^(n-1) < C(n^2, n) for 3 <= n <= 20") {
    for (int n = 3; n <= 20; ++n) {
        BigInt lhs(1);
        for (int i = 0; i < n - 1; ++i) lhs *= 6;
        BigInt rhs(1);
        for (int i = 0; i < n; ++i) rhs = rhs * (BigInt(n) * n - i) / (i + 1);
        CHECK(lhs < rhs);
    }
}

TEST_CASE("coprime powers never divide: a^n does not divide b^n") {
    for (int a = 2; a <= 20; ++a)
        for (int b = 2; b <= 20; ++b) {
            if (std::gcd(a, b) != 1 || a == b) continue;
            BigInt an(1), bn(1);
            for (int n = 1; n <= 6; ++n) {
                an *= a;
                bn *= b;
                CHECK(bn % an != 0);
            }
        }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(conjugate_coefficients({BigRat(0), 4}), Error);
    CHECK_THROWS_AS(conjugate_coefficients({BigRat(-1), 4}), Error);
    CHECK_THROWS_AS(conjugate_coefficients({BigRat(1), 1}), Error);
    CHECK_THROWS_AS(segment_candidates(1), Error);
}
