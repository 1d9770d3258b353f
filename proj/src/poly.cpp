#include "indatt/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace indatt {

namespace {

std::atomic<std::size_t> g_digit_limit{1000000};

void check_guard(const std::vector<BigInt>& coeffs) {
    const std::size_t limit = g_digit_limit.load(std::memory_order_relaxed);
    for (const BigInt& c : coeffs) {
        if (mpz_sizeinbase(c.get_mpz_t(), 10) > limit)
            throw CoefficientLimitError("coefficient exceeds " + std::to_string(limit) +
                                        " decimal digits");
    }
}

} // namespace

std::size_t coefficient_digit_limit() { return g_digit_limit.load(); }
void set_coefficient_digit_limit(std::size_t digits) { g_digit_limit.store(digits); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(BigInt c, int k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, BigInt(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (BigInt& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<BigInt> r(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    check_guard(r);
    return IntPoly(std::move(r));
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
    if (outer.is_zero()) return IntPoly{};
    // Horner on the outer coefficients.
    IntPoly acc = IntPoly::constant(outer.leading());
    for (int i = outer.degree() - 1; i >= 0; --i) {
        acc = multiply(acc, inner);
        acc += IntPoly::constant(outer.coeff(i));
    }
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly{};
    std::vector<BigInt> r(p.degree());
    for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p.coeff(i) * i;
    return IntPoly(std::move(r));
}

IntPoly reduced(const IntPoly& p) {
    if (p.coeff(0) != 1)
        throw Error("reduced polynomial requires constant term 1, got " +
                    p.coeff(0).get_str());
    return p - IntPoly::constant(BigInt(1));
}

Complex evaluate(const IntPoly& p, Complex z) {
    Complex acc(0.0, 0.0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + Complex(p.coeff(i).get_d(), 0.0);
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw EvalOverflowError("polynomial evaluation overflowed the finite range");
    return acc;
}

BigInt evaluate_exact(const IntPoly& p, const BigInt& x) {
    BigInt acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

BigRat evaluate_rational(const IntPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + BigRat(p.coeff(i));
        acc.canonicalize();
    }
    return acc;
}

int multiplicity_at(const IntPoly& p, const BigInt& x) {
    if (p.is_zero()) throw Error("multiplicity_at on the zero polynomial");
    std::vector<BigInt> cur = p.coeffs();
    int mult = 0;
    // Synthetic division by (z - x), repeated while the remainder vanishes.
    while (true) {
        const int n = static_cast<int>(cur.size()) - 1;
        if (n < 0) break;
        std::vector<BigInt> quot(std::max(n, 0));
        BigInt carry(0);
        for (int i = n; i >= 1; --i) {
            carry = cur[i] + x * carry;
            quot[i - 1] = carry;
        }
        BigInt rem = cur[0] + x * carry;
        if (rem != 0) break;
        ++mult;
        cur = std::move(quot);
        if (cur.empty()) break;
    }
    return mult;
}

bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quot) {
    if (den.is_zero()) throw Error("division by the zero polynomial");
    if (num.is_zero()) {
        quot = IntPoly{};
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<BigInt> rem = num.coeffs();
    std::vector<BigInt> q(num.degree() - den.degree() + 1, BigInt(0));
    const BigInt& lead = den.leading();
    for (int i = num.degree() - den.degree(); i >= 0; --i) {
        BigInt& top = rem[i + den.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        BigInt f = top / lead;
        q[i] = f;
        for (int j = 0; j <= den.degree(); ++j) rem[i + j] -= f * den.coeff(j);
    }
    for (const BigInt& c : rem)
        if (c != 0) return false;
    quot = IntPoly(std::move(q));
    return true;
}

namespace {

// Primitive part with positive leading coefficient.
IntPoly primitive(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g(0);
    for (const BigInt& c : p.coeffs()) g = gcd(g, c);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] / g;
    return IntPoly(std::move(r));
}

// gcd over Q, returned as a primitive integer polynomial.
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive(a);
    b = primitive(b);
    if (!a.is_zero() && !b.is_zero() && a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // Pseudo-remainder keeps everything in Z.
        IntPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            IntPoly t = IntPoly::monomial(r.leading(), r.degree() - b.degree());
            r = multiply(r, IntPoly::constant(b.leading())) - multiply(t, b);
        }
        a = b;
        b = primitive(r);
    }
    return primitive(a);
}

} // namespace

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw Error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(BigInt(1));
    IntPoly g = poly_gcd(p, derivative(p));
    IntPoly q;
    if (!divide_exact(primitive(p), g, q))
        throw Error("internal: gcd does not divide the polynomial");
    return primitive(q);
}

namespace {

bool all_coeffs_positive(const IntPoly& p) {
    for (const BigInt& c : p.coeffs())
        if (c <= 0) return false;
    return true;
}

struct FactorSearch {
    std::set<std::vector<IntPoly>> found;
    int max_factors;

    void run(const IntPoly& target) {
        std::vector<IntPoly> acc;
        rec(target, IntPoly{}, acc);
    }

    void rec(const IntPoly& rest, const IntPoly& min_factor, std::vector<IntPoly>& acc) {
        // Close the multiset with `rest` as the final factor.
        if (!acc.empty() && !(rest < min_factor) && all_coeffs_positive(rest)) {
            std::vector<IntPoly> m = acc;
            m.push_back(rest);
            found.insert(std::move(m));
        }
        if (static_cast<int>(acc.size()) + 2 > max_factors) return;
        for (int d = 1; d < rest.degree(); ++d) {
            // Candidate coefficients are bounded coordinatewise by the target:
            // with positive cofactor, t_j >= f_j * g_0 = f_j.
            std::vector<unsigned long> cap(d);
            bool feasible = true;
            for (int i = 1; i <= d; ++i) {
                if (!rest.coeff(i).fits_ulong_p()) throw Error("factor search bound overflow");
                cap[i - 1] = rest.coeff(i).get_ui();
                if (cap[i - 1] < 1) feasible = false;
            }
            if (!feasible) continue;
            std::vector<unsigned long> cur(d, 1);
            while (true) {
                std::vector<BigInt> fc(d + 1);
                fc[0] = 1;
                for (int i = 0; i < d; ++i) fc[i + 1] = BigInt(cur[i]);
                IntPoly f(std::move(fc));
                if (!(f < min_factor)) {
                    IntPoly q;
                    if (divide_exact(rest, f, q) && all_coeffs_positive(q) &&
                        q.degree() >= 1) {
                        acc.push_back(f);
                        rec(q, f, acc);
                        acc.pop_back();
                    }
                }
                // Odometer step over [1, cap] tuples.
                int pos = 0;
                while (pos < d && cur[pos] == cap[pos]) cur[pos++] = 1;
                if (pos == d) break;
                ++cur[pos];
            }
        }
    }
};

} // namespace

std::vector<std::vector<IntPoly>> factorizations_positive(const IntPoly& target,
                                                          int max_factors) {
    if (target.coeff(0) != 1) throw Error("factorization target must have constant term 1");
    if (!all_coeffs_positive(target)) throw Error("factorization target must have positive coefficients");
    if (target.degree() > 6) throw Error("factorization target degree capped at 6");
    if (target.degree() < 1) return {};
    FactorSearch s;
    s.max_factors = std::max(max_factors, 0);
    s.run(target);
    return {s.found.begin(), s.found.end()};
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigInt& c = p.coeff(i);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? '-' : '+';
        }
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += 'z';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

IntPoly parse_poly(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::vector<BigInt> coeffs;
    auto add = [&](int power, const BigInt& c) {
        if (power >= static_cast<int>(coeffs.size())) coeffs.resize(power + 1, BigInt(0));
        coeffs[power] += c;
    };
    skip_ws();
    if (pos == text.size()) throw PolyParseError("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw PolyParseError("expected '+' or '-' between terms");
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        bool has_z = pos < text.size() && text[pos] == 'z';
        if (!has_z && digits.empty()) throw PolyParseError("expected a term");
        BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
        int power = 0;
        if (has_z) {
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::string exp;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    exp += text[pos++];
                if (exp.empty()) throw PolyParseError("expected an exponent after '^'");
                power = std::stoi(exp);
                if (power < 0 || power > 4096) throw PolyParseError("exponent out of range");
            }
        }
        add(power, sign * c);
        first = false;
    }
    return IntPoly(std::move(coeffs));
}

} // namespace indatt
