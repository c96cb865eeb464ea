#include "paramdyn/point.hpp"

#include "paramdyn/errors.hpp"

namespace paramdyn {

namespace {

// Scale a reduced pair so b (else a) is monic.
std::pair<Poly, Poly> normalize_pair(Poly a, Poly b) {
    if (!b.is_zero()) {
        Rat inv = Rat(1) / b.leading();
        a = inv * a;
        b = inv * b;
    } else {
        Rat inv = Rat(1) / a.leading();
        a = inv * a;
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

ProjPointK reduce_point(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw ContractViolation("reduce_point of (0, 0)");
    if (a.is_zero()) return ProjPointK(Poly(), Poly::constant(Rat(1)));
    if (b.is_zero()) return ProjPointK(Poly::constant(Rat(1)), Poly());
    Poly g = poly_gcd(a, b);
    auto [ra, rb] = g.degree() > 0 ? normalize_pair(poly_div_exact(a, g), poly_div_exact(b, g))
                                   : normalize_pair(a, b);
    return ProjPointK(std::move(ra), std::move(rb));
}

ProjPointK reduce_point_hint(const Poly& a, const Poly& b, const Poly& support) {
    if (a.is_zero() && b.is_zero()) throw ContractViolation("reduce_point of (0, 0)");
    if (a.is_zero() || b.is_zero() || support.degree() < 1) return reduce_point(a, b);

    // Pull the support-part out of each entry (full multiplicity), gcd those.
    auto support_part = [&support](Poly p) {
        Poly part = Poly::constant(Rat(1));
        while (true) {
            Poly u = poly_gcd(p, support);
            if (u.degree() < 1) break;
            p = poly_div_exact(p, u);
            part = part * u;
        }
        return part;
    };
    Poly sa = support_part(a);
    Poly sb = support_part(b);
    Poly g = poly_gcd(sa, sb);
    auto [ra, rb] = g.degree() > 0 ? normalize_pair(poly_div_exact(a, g), poly_div_exact(b, g))
                                   : normalize_pair(a, b);
    return ProjPointK(std::move(ra), std::move(rb));
}

int point_degree(const ProjPointK& p) {
    return std::max(p.a().degree(), p.b().degree());
}

int weil_height(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw ContractViolation("weil_height of (0, 0)");
    int dmax = std::max(a.degree(), b.degree());
    Poly g = poly_gcd(a, b);  // handles one-sided zero: gcd(0, b) = monic b
    return dmax - g.degree();
}

ProjPointK ProjPointK::zero() { return ProjPointK(Poly(), Poly::constant(Rat(1))); }
ProjPointK ProjPointK::infinity() { return ProjPointK(Poly::constant(Rat(1)), Poly()); }
ProjPointK ProjPointK::constant(const Rat& c) {
    return ProjPointK(Poly::constant(c), Poly::constant(Rat(1)));
}
ProjPointK ProjPointK::variable() {
    return ProjPointK(Poly::variable(), Poly::constant(Rat(1)));
}

std::string ProjPointK::str() const { return a_.str() + " : " + b_.str(); }

RatFn::RatFn(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ContractViolation("RatFn with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = g.degree() > 0 ? poly_div_exact(num, g) : num;
    Poly d = g.degree() > 0 ? poly_div_exact(den, g) : den;
    Rat inv = Rat(1) / d.leading();
    num_ = inv * n;
    den_ = inv * d;
}

RatFn operator+(const RatFn& f, const RatFn& g) {
    return RatFn(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFn operator-(const RatFn& f, const RatFn& g) {
    return RatFn(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFn operator*(const RatFn& f, const RatFn& g) {
    return RatFn(f.num_ * g.num_, f.den_ * g.den_);
}

RatFn operator/(const RatFn& f, const RatFn& g) {
    if (g.is_zero()) throw ContractViolation("division by the zero rational function");
    return RatFn(f.num_ * g.den_, f.den_ * g.num_);
}

}  // namespace paramdyn
