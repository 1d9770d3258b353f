#ifndef INDATT_CHEBYSHEV_HPP
#define INDATT_CHEBYSHEV_HPP

#include <map>
#include <vector>

#include "indatt/poly.hpp"

namespace indatt {

/// Parameters of the affine conjugation phi(z) = a*z + 1 against a degree-n
/// Chebyshev polynomial. Requires a > 0 and n >= 2.
struct ConjugationParams {
    BigRat a;
    int n;
};

/// Chebyshev polynomial of the first kind, exact integer coefficients via
/// T_n = 2z T_{n-1} - T_{n-2}.
IntPoly chebyshev(int n);

/// T_n^(m)(1) = prod_{k=0}^{m-1} (n^2 - k^2) / (2k + 1), computed in exact
/// rational arithmetic and verified integral. m = 0 gives T_n(1) = 1.
BigInt cheb_derivative_at_one(int n, int m);

/// Coefficients a_1..a_n of the polynomial P without constant term satisfying
/// a*P(z) + 1 = T_n(a*z + 1):  a_m = (1/m!) a^{m-1} prod_{k<m} (n^2-k^2)/(2k+1).
std::vector<BigRat> conjugate_coefficients(const ConjugationParams& p);

/// For each k in {1,2,3,4} the reduced polynomial with coefficients
/// conjugate_coefficients(n, a = k/2): the only reduced independence
/// polynomials whose Julia set can be a line segment (then [-4/k, 0]).
std::map<int, IntPoly> segment_candidates(int n);

} // namespace indatt

#endif
