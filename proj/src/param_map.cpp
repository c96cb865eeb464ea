#include "paramdyn/param_map.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "paramdyn/errors.hpp"
#include "paramdyn/sylvester.hpp"

namespace paramdyn {

using json = nlohmann::json;

Poly BivarForm::eval_points(const Poly& a, const Poly& b) const {
    std::vector<Poly> ap(static_cast<std::size_t>(d) + 1), bp(ap.size());
    ap[0] = Poly::constant(Rat(1));
    bp[0] = ap[0];
    for (int k = 1; k <= d; ++k) {
        ap[static_cast<std::size_t>(k)] = ap[static_cast<std::size_t>(k - 1)] * a;
        bp[static_cast<std::size_t>(k)] = bp[static_cast<std::size_t>(k - 1)] * b;
    }
    Poly acc;
    for (int j = 0; j <= d; ++j) {
        const Poly& cj = c[static_cast<std::size_t>(j)];
        if (cj.is_zero()) continue;
        acc += cj * ap[static_cast<std::size_t>(j)] * bp[static_cast<std::size_t>(d - j)];
    }
    return acc;
}

bool BivarForm::is_zero() const {
    for (const Poly& p : c)
        if (!p.is_zero()) return false;
    return true;
}

int BivarForm::max_tdegree() const {
    int m = 0;
    for (const Poly& p : c)
        if (!p.is_zero()) m = std::max(m, p.degree());
    return m;
}

ParamMap::ParamMap(BivarForm f1, BivarForm f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_.d != f2_.d || f1_.d < 1) throw DegreeMismatch("forms must share a degree >= 1");
    if (static_cast<int>(f1_.c.size()) != f1_.d + 1 || static_cast<int>(f2_.c.size()) != f2_.d + 1)
        throw DegreeMismatch("coefficient vector size must be degree + 1");
    if (f1_.is_zero() || f2_.is_zero()) throw DegenerateFamily("a form is identically zero");
    coeff_height_ = std::max(f1_.max_tdegree(), f2_.max_tdegree());
    resultant_ = poly_resultant(f1_.c, f2_.c);
    if (resultant_.is_zero())
        throw DegenerateFamily("resultant of (f1, f2) vanishes identically");
}

namespace {

BivarForm parse_form(const json& terms, int d, const char* name) {
    if (!terms.is_array()) throw ParseError(std::string(name) + " must be an array of terms");
    std::vector<std::vector<Rat>> coeffs(static_cast<std::size_t>(d) + 1);
    for (const json& term : terms) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
            !term[1].is_number_integer() || !term[2].is_string())
            throw ParseError(std::string(name) + ": each term must be [i, j, \"p/q\"]");
        int i = term[0].get<int>();
        int j = term[1].get<int>();
        if (i < 0) throw ParseError(std::string(name) + ": negative t-power");
        if (j < 0 || j > d)
            throw DegreeMismatch(std::string(name) + ": term z-power " + std::to_string(j) +
                                 " outside 0.." + std::to_string(d));
        Rat v = rat_from_string(term[2].get<std::string>());
        auto& cj = coeffs[static_cast<std::size_t>(j)];
        if (static_cast<int>(cj.size()) <= i) cj.resize(static_cast<std::size_t>(i) + 1, Rat(0));
        cj[static_cast<std::size_t>(i)] += v;
    }
    BivarForm f;
    f.d = d;
    f.c.resize(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) f.c[static_cast<std::size_t>(j)] = Poly::from_coeffs(coeffs[static_cast<std::size_t>(j)]);
    return f;
}

}  // namespace

ParamMap parse_map(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("map file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("f1") || !doc.contains("f2"))
        throw ParseError("map file needs degree, f1, f2");
    if (!doc["degree"].is_number_integer()) throw ParseError("degree must be an integer");
    int d = doc["degree"].get<int>();
    if (d < 1) throw DegreeMismatch("declared degree must be >= 1");
    return ParamMap(parse_form(doc["f1"], d, "f1"), parse_form(doc["f2"], d, "f2"));
}

ParamMap parse_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_map(ss.str());
}

ProjPointK apply(const ParamMap& F, const ProjPointK& p) {
    Poly A = F.f1().eval_points(p.a(), p.b());
    Poly B = F.f2().eval_points(p.a(), p.b());
    // Common factors of (A, B) can only sit over roots of the resultant.
    return reduce_point_hint(A, B, F.resultant());
}

OrbitRecord orbit_degrees(const ParamMap& F, const ProjPointK& p, int n, int degree_ceiling) {
    if (n < 0) throw ContractViolation("orbit length must be >= 0");
    OrbitRecord rec;
    rec.points.reserve(static_cast<std::size_t>(n) + 1);
    rec.degrees.reserve(static_cast<std::size_t>(n) + 1);
    rec.points.push_back(p);
    rec.degrees.push_back(point_degree(p));
    for (int k = 1; k <= n; ++k) {
        ProjPointK next = apply(F, rec.points.back());
        int deg = point_degree(next);
        if (deg > degree_ceiling)
            throw DegreeOverflow("orbit degree " + std::to_string(deg) + " exceeds ceiling " +
                                 std::to_string(degree_ceiling) + " at iterate " + std::to_string(k));
        rec.points.push_back(std::move(next));
        rec.degrees.push_back(deg);
    }
    return rec;
}

Rat canonical_height_estimate(const ParamMap& F, const ProjPointK& p, int n, int degree_ceiling) {
    if (F.degree() < 2) throw ContractViolation("canonical height needs degree >= 2");
    if (n < 1) throw ContractViolation("canonical height estimate needs n >= 1");
    OrbitRecord rec = orbit_degrees(F, p, n, degree_ceiling);
    Int dn;
    mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(F.degree()),
                  static_cast<unsigned long>(n));
    Rat est(Int(rec.degrees.back()), dn);
    est.canonicalize();
    return est;
}

int default_degree_bound(const ParamMap& F, const ProjPointK& p) {
    return F.degree() * (point_degree(p) + 1) + 4 * F.coeff_height();
}

PreperiodicVerdict detect_preperiodic(const ParamMap& F, const ProjPointK& p, int max_iter,
                                      int degree_bound) {
    if (F.degree() < 2) throw ContractViolation("detect_preperiodic needs degree >= 2");
    if (max_iter < 1) throw ContractViolation("max_iter must be >= 1");
    std::vector<ProjPointK> orbit{p};
    const int d0 = point_degree(p);
    bool constant_degree = true;
    for (int k = 1; k <= max_iter; ++k) {
        ProjPointK next = apply(F, orbit.back());
        for (std::size_t m = 0; m < orbit.size(); ++m) {
            if (orbit[m] == next) {
                PreperiodicVerdict v;
                v.kind = PreperiodicVerdict::Kind::Preperiodic;
                v.tail = static_cast<int>(m);
                v.period = k - static_cast<int>(m);
                return v;
            }
        }
        int deg = point_degree(next);
        if (deg != d0) constant_degree = false;
        if (deg > degree_bound) {
            PreperiodicVerdict v;
            v.kind = PreperiodicVerdict::Kind::HeightPositive;
            v.witness_index = k;
            v.witness_degree = deg;
            return v;
        }
        orbit.push_back(std::move(next));
    }
    PreperiodicVerdict v;
    v.kind = constant_degree ? PreperiodicVerdict::Kind::HeightZeroNoCycle
                             : PreperiodicVerdict::Kind::Inconclusive;
    v.iterations_checked = max_iter;
    return v;
}

const Poly& resultant_locus(const ParamMap& F) { return F.resultant(); }

HomMapC specialize(const ParamMap& F, const Cplx& t0, double tol) {
    const Poly& res = F.resultant();
    if (res.degree() >= 1) {
        double v = std::abs(res.monic().eval(t0));
        if (!(v >= tol))
            throw DegenerateParameter("family degenerates at t0 (|resultant| < tol)");
    }
    HomMapC m;
    m.d = F.degree();
    m.c1.resize(static_cast<std::size_t>(m.d) + 1);
    m.c2.resize(m.c1.size());
    for (int j = 0; j <= m.d; ++j) {
        m.c1[static_cast<std::size_t>(j)] = F.f1().c[static_cast<std::size_t>(j)].eval(t0);
        m.c2[static_cast<std::size_t>(j)] = F.f2().c[static_cast<std::size_t>(j)].eval(t0);
    }
    return m;
}

ParamMap quadratic_family() {
    BivarForm f1, f2;
    f1.d = 2;
    f1.c = {Poly::variable(), Poly(), Poly::constant(Rat(1))};  // t w^2 + z^2
    f2.d = 2;
    f2.c = {Poly::constant(Rat(1)), Poly(), Poly()};  // w^2
    return ParamMap(std::move(f1), std::move(f2));
}

ParamMap constant_poly_family(const std::vector<Rat>& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1 || coeffs.back() == 0) throw ContractViolation("need a degree >= 1 polynomial");
    BivarForm f1, f2;
    f1.d = d;
    f2.d = d;
    f1.c.resize(static_cast<std::size_t>(d) + 1);
    f2.c.resize(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) f1.c[static_cast<std::size_t>(j)] = Poly::constant(coeffs[static_cast<std::size_t>(j)]);
    f2.c[0] = Poly::constant(Rat(1));
    return ParamMap(std::move(f1), std::move(f2));
}

}  // namespace paramdyn
