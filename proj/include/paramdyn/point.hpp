#pragma once

#include <string>

#include "paramdyn/poly.hpp"

namespace paramdyn {

// A point of P^1(Q(t)) held as a reduced, normalized pair of polynomials:
// gcd(a, b) = 1, and b is monic when nonzero, otherwise a is monic. With
// that convention two points are equal iff their representatives match
// coefficient-wise.
class ProjPointK {
public:
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }

    static ProjPointK zero();             // (0 : 1)
    static ProjPointK infinity();         // (1 : 0)
    static ProjPointK constant(const Rat& c);
    static ProjPointK variable();         // (t : 1)

    friend bool operator==(const ProjPointK& p, const ProjPointK& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend bool operator!=(const ProjPointK& p, const ProjPointK& q) { return !(p == q); }

    std::string str() const;  // "a : b"

private:
    ProjPointK(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {}
    Poly a_, b_;

    friend ProjPointK reduce_point(const Poly& a, const Poly& b);
    friend ProjPointK reduce_point_hint(const Poly& a, const Poly& b, const Poly& support);
};

// Canonical representative of (a : b); rejects (0, 0).
ProjPointK reduce_point(const Poly& a, const Poly& b);

// Same reduction, but told that every common factor of (a, b) divides a power
// of `support` (a nonzero polynomial). gcd work then happens against `support`
// instead of between the two large inputs.
ProjPointK reduce_point_hint(const Poly& a, const Poly& b, const Poly& support);

// max(deg a, deg b); constants have degree 0.
int point_degree(const ProjPointK& p);

// Weil height of (a : b) over Q(t) as the place-sum
// max(deg a, deg b) - deg gcd(a, b); representatives need not be coprime.
int weil_height(const Poly& a, const Poly& b);

// phi = num/den with den monic and gcd(num, den) = 1.
class RatFn {
public:
    RatFn() : num_(), den_(Poly::constant(Rat(1))) {}
    RatFn(const Poly& num, const Poly& den);  // reduces; den != 0
    explicit RatFn(const Poly& num) : num_(num), den_(Poly::constant(Rat(1))) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFn operator+(const RatFn& f, const RatFn& g);
    friend RatFn operator-(const RatFn& f, const RatFn& g);
    friend RatFn operator*(const RatFn& f, const RatFn& g);
    friend RatFn operator/(const RatFn& f, const RatFn& g);  // g != 0
    friend bool operator==(const RatFn& f, const RatFn& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

private:
    Poly num_, den_;
};

}  // namespace paramdyn
