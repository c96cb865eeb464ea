#include "paramdyn/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>

#include "paramdyn/errors.hpp"

namespace paramdyn {

namespace {

using ZVec = std::vector<Int>;  // ascending powers, may carry trailing zeros pre-normalization

void znorm(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

// gcd of all coefficients, 0 for the empty vector; always >= 0
Int zcontent(const ZVec& v) {
    Int g = 0;
    for (const Int& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZVec zscale_div(const ZVec& v, const Int& d) {
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), d.get_mpz_t());
    return r;
}

ZVec zmul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    znorm(r);
    return r;
}

ZVec zscale(const ZVec& a, const Int& c) {
    if (c == 0) return {};
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

// a - c * t^k * b, in place on a copy of a
ZVec zsubmul_shift(const ZVec& a, const Int& c, int k, const ZVec& b) {
    ZVec r = a;
    if (r.size() < b.size() + k) r.resize(b.size() + k);
    for (std::size_t i = 0; i < b.size(); ++i)
        mpz_submul(r[i + k].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    znorm(r);
    return r;
}

ZVec zprimitive(ZVec v) {
    znorm(v);
    if (v.empty()) return v;
    Int c = zcontent(v);
    if (c != 1) v = zscale_div(v, c);
    return v;
}

// Associate of (a mod b), primitive; content is stripped along the way so a
// long degree gap never accumulates lc(b) powers.
ZVec zrem_primitive(ZVec a, const ZVec& b) {
    const Int& lb = b.back();
    int steps = 0;
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Int la = a.back();
        int k = zdeg(a) - zdeg(b);
        a = zscale(a, lb);
        a = zsubmul_shift(a, la, k, b);
        if (++steps % 8 == 0) a = zprimitive(std::move(a));
    }
    return zprimitive(std::move(a));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, over Z[t].
ZVec zprem(ZVec a, const ZVec& b) {
    const Int& lb = b.back();
    int e = zdeg(a) - zdeg(b) + 1;
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Int la = a.back();
        int k = zdeg(a) - zdeg(b);
        a = zscale(a, lb);
        a = zsubmul_shift(a, la, k, b);
        --e;
    }
    if (e > 0 && !a.empty()) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        a = zscale(a, f);
    }
    return a;
}

// Exact division over Z[t]; nullopt when b does not divide a there.
std::optional<ZVec> zdiv_exact(const ZVec& a, const ZVec& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return ZVec{};
    if (zdeg(a) < zdeg(b)) return std::nullopt;
    ZVec r = a;
    ZVec q(a.size() - b.size() + 1);
    const Int& lb = b.back();
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        Int c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return std::nullopt;
        int k = zdeg(r) - zdeg(b);
        q[k] = c;
        r = zsubmul_shift(r, c, k, b);
    }
    if (!r.empty()) return std::nullopt;
    znorm(q);
    return q;
}

// ---- coprimality certificate mod a word-size prime -------------------------
//
// deg gcd_p >= deg gcd whenever p divides neither leading coefficient, so a
// constant gcd mod p certifies a constant gcd over Q. Saves the full PRS in
// the common case of coprime inputs.

constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL,  // 2^61 - 1
                                     2305843009213693921ULL, 2305843009213693669ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> zreduce_modp(const ZVec& v, std::uint64_t p) {
    std::vector<std::uint64_t> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t m = mpz_fdiv_ui(v[i].get_mpz_t(), p);
        r[i] = m;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// degree of gcd mod p, or -1 when the prime is unusable
int zgcd_degree_modp(const ZVec& a, const ZVec& b, std::uint64_t p) {
    std::vector<std::uint64_t> x = zreduce_modp(a, p);
    std::vector<std::uint64_t> y = zreduce_modp(b, p);
    if (x.size() != a.size() || y.size() != b.size()) return -1;  // lc vanished
    while (!y.empty()) {
        // x mod y
        std::uint64_t inv = powmod(y.back(), p - 2, p);
        while (x.size() >= y.size()) {
            std::uint64_t c = mulmod(x.back(), inv, p);
            std::size_t off = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) {
                std::uint64_t s = mulmod(c, y[i], p);
                std::uint64_t& xi = x[off + i];
                xi = (xi >= s) ? xi - s : xi + p - s;
            }
            while (!x.empty() && x.back() == 0) x.pop_back();
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

bool zcoprime_certificate(const ZVec& a, const ZVec& b) {
    for (std::uint64_t p : kPrimes) {
        int d = zgcd_degree_modp(a, b, p);
        if (d == 0) return true;
        if (d > 0) return false;  // genuine common factor is still possible; run the PRS
    }
    return false;
}

// ---- subresultant PRS -------------------------------------------------------

// gcd of primitive inputs, returned primitive (sign unnormalized)
ZVec zgcd_prs(ZVec a, ZVec b) {
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    if (b.empty()) return a;
    if (zdeg(b) == 0) return {Int(1)};
    if (zcoprime_certificate(a, b)) return {Int(1)};

    Int g(1), h(1);
    while (true) {
        int delta = zdeg(a) - zdeg(b);
        ZVec r;
        if (delta > 24) {
            // A long degree gap makes the pseudo-remainder factor lc(b)^(delta+1)
            // needlessly heavy; restart the chain from the primitive remainder.
            r = zrem_primitive(std::move(a), b);
            g = 1;
            h = 1;
            a = b;
            b = r;
        } else {
            r = zprem(a, b);
            a = b;
            if (!r.empty()) {
                Int denom = g;
                if (delta > 0) {
                    Int hp;
                    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
                    denom *= hp;
                }
                b = zscale_div(r, denom);
            } else {
                b.clear();
            }
            g = a.back();
            if (delta > 0) {
                // h <- g^delta / h^(delta-1), exact
                Int num;
                mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
                if (delta > 1) {
                    Int hp;
                    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), hp.get_mpz_t());
                } else {
                    h = num;
                }
            }
        }
        if (b.empty()) return zprimitive(std::move(a));
        if (zdeg(b) == 0) return {Int(1)};
    }
}

}  // namespace

// ---- Poly -------------------------------------------------------------------

Poly Poly::make(Rat content, std::vector<Int> prim) {
    Poly p;
    p.content_ = std::move(content);
    p.prim_ = std::move(prim);
    return p;
}

Poly Poly::from_int_coeffs(std::vector<Int> v) {
    znorm(v);
    if (v.empty()) return Poly();
    Int c = zcontent(v);
    if (c != 1) v = zscale_div(v, c);
    return make(Rat(c), std::move(v));
}

Poly Poly::from_coeffs(const std::vector<Rat>& ascending) {
    if (ascending.empty()) return Poly();
    Int den(1);
    for (const Rat& c : ascending) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZVec v(ascending.size());
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        Int scale;
        mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(), ascending[i].get_den().get_mpz_t());
        v[i] = ascending[i].get_num() * scale;
    }
    znorm(v);
    if (v.empty()) return Poly();
    Int c = zcontent(v);
    if (c != 1) v = zscale_div(v, c);
    Rat content(c, den);
    content.canonicalize();
    return make(std::move(content), std::move(v));
}

Poly Poly::constant(const Rat& c) {
    if (c == 0) return Poly();
    Rat a = abs(c);
    return make(a, {Int(sgn(c))});
}

Poly Poly::variable() { return make(Rat(1), {Int(0), Int(1)}); }

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(prim_.size())) return Rat(0);
    return content_ * Rat(prim_[static_cast<std::size_t>(k)]);
}

Rat Poly::leading() const {
    if (prim_.empty()) return Rat(0);
    return content_ * Rat(prim_.back());
}

Poly Poly::monic() const {
    if (is_zero()) throw ContractViolation("monic() of the zero polynomial");
    Rat content(Int(1), abs(prim_.back()));
    content.canonicalize();
    return make(std::move(content), prim_.back() > 0 ? prim_ : zscale(prim_, Int(-1)));
}

Poly Poly::operator-() const {
    if (is_zero()) return *this;
    return make(content_, zscale(prim_, Int(-1)));
}

Poly Poly::mul_tpow(int k) const {
    if (is_zero() || k == 0) return *this;
    ZVec v(prim_.size() + static_cast<std::size_t>(k));
    std::copy(prim_.begin(), prim_.end(), v.begin() + k);
    return make(content_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // a = (pa/qa) A, b = (pb/qb) B; common denominator q = lcm(qa, qb)
    Int q;
    mpz_lcm(q.get_mpz_t(), a.content_.get_den().get_mpz_t(), b.content_.get_den().get_mpz_t());
    Int ua = a.content_.get_num() * (q / a.content_.get_den());
    Int ub = b.content_.get_num() * (q / b.content_.get_den());
    ZVec v(std::max(a.prim_.size(), b.prim_.size()));
    for (std::size_t i = 0; i < a.prim_.size(); ++i)
        mpz_addmul(v[i].get_mpz_t(), ua.get_mpz_t(), a.prim_[i].get_mpz_t());
    for (std::size_t i = 0; i < b.prim_.size(); ++i)
        mpz_addmul(v[i].get_mpz_t(), ub.get_mpz_t(), b.prim_[i].get_mpz_t());
    znorm(v);
    if (v.empty()) return Poly();
    Int c = zcontent(v);
    if (c != 1) v = zscale_div(v, c);
    Rat content(c, q);
    content.canonicalize();
    return Poly::make(std::move(content), std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    // product of primitives is primitive (Gauss)
    return Poly::make(a.content_ * b.content_, zmul(a.prim_, b.prim_));
}

Poly operator*(const Rat& c, const Poly& a) {
    if (c == 0 || a.is_zero()) return Poly();
    Rat content = abs(c) * a.content_;
    return Poly::make(std::move(content), c < 0 ? zscale(a.prim_, Int(-1)) : a.prim_);
}

bool operator==(const Poly& a, const Poly& b) {
    return a.content_ == b.content_ && a.prim_ == b.prim_;
}

Rat Poly::eval(const Rat& x) const {
    if (is_zero()) return Rat(0);
    Rat acc(prim_.back());
    for (int i = static_cast<int>(prim_.size()) - 2; i >= 0; --i) {
        acc *= x;
        acc += Rat(prim_[static_cast<std::size_t>(i)]);
    }
    return content_ * acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    if (is_zero()) return {0.0, 0.0};
    double c = content_.get_d();
    std::complex<double> acc(prim_.back().get_d(), 0.0);
    for (int i = static_cast<int>(prim_.size()) - 2; i >= 0; --i)
        acc = acc * x + prim_[static_cast<std::size_t>(i)].get_d();
    return c * acc;
}

std::pair<std::vector<double>, long> Poly::scaled_double_coeffs() const {
    std::vector<double> out(prim_.size());
    if (prim_.empty()) return {out, 0};
    long emax = std::numeric_limits<long>::min();
    std::vector<std::pair<double, long>> parts(prim_.size());
    for (std::size_t i = 0; i < prim_.size(); ++i) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, prim_[i].get_mpz_t());
        parts[i] = {m, e};
        if (m != 0.0 && e > emax) emax = e;
    }
    for (std::size_t i = 0; i < prim_.size(); ++i) {
        auto [m, e] = parts[i];
        out[i] = (m == 0.0) ? 0.0 : std::ldexp(m, static_cast<int>(e - emax));
    }
    return {out, emax};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || k == 0) os << rat_to_string(a);
        if (k >= 1) {
            if (a != 1) os << " ";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

// ---- division / gcd ----------------------------------------------------------

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ContractViolation("division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly(), a};
    // classical long division over Q, on dense rational vectors
    int da = a.degree(), db = b.degree();
    std::vector<Rat> r(static_cast<std::size_t>(da) + 1), q(static_cast<std::size_t>(da - db) + 1);
    for (int i = 0; i <= da; ++i) r[static_cast<std::size_t>(i)] = a.coeff(i);
    std::vector<Rat> bc(static_cast<std::size_t>(db) + 1);
    for (int i = 0; i <= db; ++i) bc[static_cast<std::size_t>(i)] = b.coeff(i);
    Rat inv_lb = Rat(1) / bc.back();
    for (int k = da - db; k >= 0; --k) {
        Rat c = r[static_cast<std::size_t>(k + db)] * inv_lb;
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (int i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(k + i)] -= c * bc[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly::from_coeffs(q), Poly::from_coeffs(r)};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ContractViolation("division by the zero polynomial");
    if (a.is_zero()) return Poly();
    // If b | a over Q[t] then prim(b) | prim(a) over Z[t] with primitive quotient.
    auto q = zdiv_exact(a.primitive(), b.primitive());
    if (!q) throw ContractViolation("poly_div_exact: not divisible");
    Poly quot = Poly::from_int_coeffs(std::move(*q));
    return (a.content() / b.content()) * quot;
}

bool poly_divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    return zdiv_exact(a.primitive(), b.primitive()).has_value();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw ContractViolation("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly::constant(Rat(1));
    ZVec g = zgcd_prs(a.primitive(), b.primitive());
    return Poly::from_int_coeffs(std::move(g)).monic();
}

Poly poly_pow(const Poly& a, int e) {
    if (e < 0) throw ContractViolation("negative polynomial power");
    Poly r = Poly::constant(Rat(1));
    Poly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace paramdyn
