#ifndef INDATT_POLY_HPP
#define INDATT_POLY_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace indatt {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a coefficient grows past the configured digit limit.
class CoefficientLimitError : public Error {
public:
    using Error::Error;
};

/// Thrown when a floating evaluation leaves the finite range.
class EvalOverflowError : public Error {
public:
    using Error::Error;
};

class PolyParseError : public Error {
public:
    using Error::Error;
};

/// Dense polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending power order with no trailing zeros,
/// so the degree is coeffs().size() - 1 (and -1 for the zero polynomial).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    /// The monomial c * z^k.
    static IntPoly monomial(BigInt c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of z^i (zero beyond the degree).
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    bool operator==(const IntPoly&) const = default;
    /// Lexicographic order on the ascending coefficient vector.
    bool operator<(const IntPoly& o) const { return c_ < o.c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);

private:
    std::vector<BigInt> c_;
    void trim();
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return multiply(a, b); }

/// outer(inner(z)), computed exactly.
IntPoly compose(const IntPoly& outer, const IntPoly& inner);
IntPoly derivative(const IntPoly& p);

/// p - 1, for p an independence polynomial (requires constant term 1).
IntPoly reduced(const IntPoly& p);

/// Horner evaluation in double-precision complex arithmetic. The usual
/// backward-error bound applies: the result is the exact value of a
/// polynomial whose coefficients are relatively perturbed by O(n * eps).
/// Throws EvalOverflowError when the result is not finite.
Complex evaluate(const IntPoly& p, Complex z);
BigInt evaluate_exact(const IntPoly& p, const BigInt& x);
BigRat evaluate_rational(const IntPoly& p, const BigRat& x);

/// Largest k with (z - x)^k dividing p; 0 when p(x) != 0.
/// Exact synthetic division; p must be nonzero.
int multiplicity_at(const IntPoly& p, const BigInt& x);

/// Exact division: returns true and sets quot when den divides num over Z.
bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quot);

/// p with all repeated roots reduced to multiplicity one: p / gcd(p, p'),
/// computed exactly. Leading coefficient kept positive.
IntPoly squarefree_part(const IntPoly& p);

/// All multisets of >= 2 factors, each with constant term 1, degree >= 1 and
/// every coefficient a positive integer, whose product is exactly `target`.
/// Factors inside a multiset and the list itself are sorted lexicographically
/// on coefficient vectors. Exhaustive; target degree capped at 6.
std::vector<std::vector<IntPoly>> factorizations_positive(const IntPoly& target,
                                                          int max_factors);

/// Textual format: "1+16z+20z^2+8z^3+z^4" (ascending powers, '^' exponents).
std::string to_string(const IntPoly& p);
IntPoly parse_poly(std::string_view text);

/// Coefficient-size guard (decimal digits). Multiplication and composition
/// throw CoefficientLimitError when any coefficient exceeds this.
std::size_t coefficient_digit_limit();
void set_coefficient_digit_limit(std::size_t digits);

} // namespace indatt

#endif
