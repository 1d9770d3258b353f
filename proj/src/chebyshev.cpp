#include "indatt/chebyshev.hpp"

namespace indatt {

IntPoly chebyshev(int n) {
    if (n < 0) throw Error("chebyshev degree must be non-negative");
    IntPoly prev{1};     // T_0
    IntPoly cur{0, 1};   // T_1
    if (n == 0) return prev;
    const IntPoly two_z{0, 2};
    for (int i = 2; i <= n; ++i) {
        IntPoly next = multiply(two_z, cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt cheb_derivative_at_one(int n, int m) {
    if (n < 0 || m < 0 || m > n) throw Error("cheb_derivative_at_one requires 0 <= m <= n");
    BigRat acc(1);
    const BigInt n2 = BigInt(n) * n;
    for (int k = 0; k < m; ++k) {
        acc *= BigRat(n2 - BigInt(k) * k, 2 * k + 1);
        acc.canonicalize();
    }
    if (acc.get_den() != 1)
        throw Error("non-integral Chebyshev derivative value (internal bug)");
    return acc.get_num();
}

std::vector<BigRat> conjugate_coefficients(const ConjugationParams& p) {
    if (p.n < 2) throw Error("conjugation degree must be at least 2");
    if (p.a <= 0) throw Error("conjugation parameter a must be positive");
    const BigInt n2 = BigInt(p.n) * p.n;
    std::vector<BigRat> out(p.n);
    out[0] = BigRat(n2); // a_1 = n^2 independent of a
    for (int m = 2; m <= p.n; ++m) {
        // a_m = a_{m-1} * a * (n^2 - (m-1)^2) / (m (2m - 1))
        BigRat step = p.a * BigRat(n2 - BigInt(m - 1) * (m - 1), BigInt(m) * (2 * m - 1));
        step.canonicalize();
        out[m - 1] = out[m - 2] * step;
        out[m - 1].canonicalize();
    }
    return out;
}

std::map<int, IntPoly> segment_candidates(int n) {
    if (n < 2) throw Error("segment candidates require degree at least 2");
    std::map<int, IntPoly> out;
    for (int k = 1; k <= 4; ++k) {
        BigRat a(k, 2);
        a.canonicalize();
        std::vector<BigRat> coeffs = conjugate_coefficients({a, n});
        std::vector<BigInt> c(n + 1, BigInt(0));
        for (int m = 1; m <= n; ++m) {
            if (coeffs[m - 1].get_den() != 1)
                throw Error("segment candidate coefficient is not an integer (internal bug)");
            c[m] = coeffs[m - 1].get_num();
        }
        out.emplace(k, IntPoly(std::move(c)));
    }
    return out;
}

} // namespace indatt
