#pragma once

#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "paramdyn/rational.hpp"

namespace paramdyn {

// Univariate polynomial over Q in the parameter variable t.
//
// Stored as content * primitive: a positive rational content and a primitive
// integer coefficient vector (ascending powers, nonzero leading coefficient,
// integer content 1). This keeps gcd/resultant chains in integer arithmetic
// and makes equality a plain field-wise comparison. The zero polynomial is
// content 0 with an empty vector; its degree is the sentinel kDegNegInf,
// deliberately not -1.
class Poly {
public:
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    Poly() : content_(0) {}

    static Poly constant(const Rat& c);
    static Poly variable();  // t
    static Poly from_coeffs(const std::vector<Rat>& ascending);
    static Poly from_int_coeffs(std::vector<Int> ascending);

    bool is_zero() const { return prim_.empty(); }
    int degree() const { return prim_.empty() ? kDegNegInf : static_cast<int>(prim_.size()) - 1; }

    Rat coeff(int k) const;
    Rat leading() const;
    const Rat& content() const { return content_; }
    const std::vector<Int>& primitive() const { return prim_; }

    bool is_monic() const { return !prim_.empty() && leading() == 1; }
    Poly monic() const;  // nonzero required

    Rat eval(const Rat& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // Primitive-part coefficients as doubles c[k] with true coefficient
    // c[k] * 2^exp2, scaled so max |c[k]| is near 1. Safe for coefficients
    // far outside double range.
    std::pair<std::vector<double>, long> scaled_double_coeffs() const;

    Poly operator-() const;
    Poly mul_tpow(int k) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    // Human-readable form, e.g. "t^2 - 1/2 t + 3".
    std::string str() const;

private:
    Rat content_;            // > 0, or 0 for the zero polynomial
    std::vector<Int> prim_;  // primitive, ascending, trailing entry nonzero

    static Poly make(Rat content, std::vector<Int> prim);
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

// Euclidean division over Q[t]; b must be nonzero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Exact quotient a / b; throws ContractViolation when b does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);

bool poly_divides(const Poly& b, const Poly& a);  // b | a

// Monic greatest common divisor via the fraction-free subresultant remainder
// sequence. Rejects (0, 0).
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_pow(const Poly& a, int e);

}  // namespace paramdyn
