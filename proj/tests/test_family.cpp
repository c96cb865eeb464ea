#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paramdyn/errors.hpp"
#include "paramdyn/lattes.hpp"
#include "paramdyn/param_map.hpp"

using namespace paramdyn;

namespace {

Poly P(const std::vector<long>& ascending) {
    std::vector<Rat> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return Poly::from_coeffs(c);
}

std::mt19937 rng(7151);

Rat rq(long num, long den) {
    Rat x(num, den);
    x.canonicalize();
    return x;
}

ProjPointK random_point(int max_deg) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<long> cd(-4, 4);
    for (;;) {
        int da = degd(rng), db = degd(rng);
        std::vector<Rat> a(static_cast<std::size_t>(da) + 1), b(static_cast<std::size_t>(db) + 1);
        for (auto& x : a) x = Rat(cd(rng));
        for (auto& x : b) x = Rat(cd(rng));
        Poly pa = Poly::from_coeffs(a), pb = Poly::from_coeffs(b);
        if (pa.is_zero() && pb.is_zero()) continue;
        return reduce_point(pa, pb);
    }
}

// Independent one-step oracle: substitute the rational function a/b into the
// dehomogenized map with RatFn arithmetic and compare projectively.
RatFn substitute_oracle(const ParamMap& F, const RatFn& x) {
    RatFn num, den;
    for (int j = 0; j <= F.degree(); ++j) {
        RatFn xj(Poly::constant(Rat(1)));
        for (int k = 0; k < j; ++k) xj = xj * x;
        if (!F.f1().c[static_cast<std::size_t>(j)].is_zero())
            num = num + RatFn(F.f1().c[static_cast<std::size_t>(j)]) * xj;
        if (!F.f2().c[static_cast<std::size_t>(j)].is_zero())
            den = den + RatFn(F.f2().c[static_cast<std::size_t>(j)]) * xj;
    }
    return num / den;
}

}  // namespace

TEST_CASE("parse_map accepts the shipped families") {
    ParamMap lat = parse_map_file(std::string(PARAMDYN_DATA_DIR) + "/lattes.json");
    CHECK(lat.degree() == 4);
    CHECK(lat.coeff_height() == 2);

    ParamMap quad = parse_map_file(std::string(PARAMDYN_DATA_DIR) + "/quadratic.json");
    CHECK(quad.degree() == 2);
    CHECK(quad.coeff_height() == 1);
}

TEST_CASE("parse_map rejects malformed input") {
    // z-power above the declared degree
    CHECK_THROWS_AS(parse_map(R"({"degree": 1, "f1": [[0, 2, "1"]], "f2": [[0, 0, "1"]]})"),
                    DegreeMismatch);
    // shared factor w: resultant identically zero
    CHECK_THROWS_AS(parse_map(R"({"degree": 2, "f1": [[0, 1, "1"]], "f2": [[0, 0, "1"]]})"),
                    DegenerateFamily);
    CHECK_THROWS_AS(parse_map("{"), ParseError);
    CHECK_THROWS_AS(parse_map(R"({"degree": 2, "f1": [[0, 0, "1/0"]], "f2": [[0, 0, "1"]]})"),
                    ParseError);
}

TEST_CASE("apply on the Lattes family matches the pinned images") {
    LattesContext ctx;
    const ParamMap& F = ctx.map();

    CHECK(apply(F, ProjPointK::zero()) == ProjPointK::infinity());

    // f(2) = (t-4)^2 / (8 (2-t)), degree 2
    ProjPointK img = apply(F, ProjPointK::constant(Rat(2)));
    CHECK(point_degree(img) == 2);
    ProjPointK expect = reduce_point(P({16, -8, 1}), P({16, -8}));
    CHECK(img == expect);

    // z^2 + t sends (t : 1) to (t^2 + t : 1)
    const ParamMap quad = quadratic_family();
    CHECK(apply(quad, ProjPointK::variable()) == reduce_point(P({0, 1, 1}), P({1})));
}

TEST_CASE("apply agrees with the RatFn substitution oracle") {
    LattesContext ctx;
    const ParamMap quad = quadratic_family();
    for (int it = 0; it < 25; ++it) {
        ProjPointK p = random_point(2);
        for (const ParamMap* F : {&ctx.map(), &quad}) {
            ProjPointK img = apply(*F, p);
            if (p.b().is_zero() || img.b().is_zero()) continue;  // oracle needs affine values
            RatFn x(p.a(), p.b());
            RatFn y = substitute_oracle(*F, x);
            CHECK(img == reduce_point(y.num(), y.den()));
        }
    }
}

TEST_CASE("orbit degrees: pinned sequences") {
    LattesContext ctx;
    OrbitRecord lat = orbit_degrees(ctx.map(), ProjPointK::constant(Rat(2)), 3);
    CHECK(lat.degrees == std::vector<int>{0, 2, 8, 32});

    const ParamMap quad = quadratic_family();
    OrbitRecord qo = orbit_degrees(quad, ProjPointK::variable(), 3);
    CHECK(qo.degrees == std::vector<int>{1, 2, 4, 8});

    OrbitRecord zero_steps = orbit_degrees(quad, random_point(2), 0);
    CHECK(zero_steps.degrees.size() == 1);
    CHECK(zero_steps.degrees[0] == point_degree(zero_steps.points[0]));

    CHECK_THROWS_AS(orbit_degrees(ctx.map(), ProjPointK::constant(Rat(2)), 8, 100), DegreeOverflow);
}

TEST_CASE("orbit record satisfies its own invariants") {
    const ParamMap quad = quadratic_family();
    OrbitRecord rec = orbit_degrees(quad, ProjPointK::constant(Rat(3)), 4);
    for (std::size_t k = 0; k + 1 < rec.points.size(); ++k)
        CHECK(apply(quad, rec.points[k]) == rec.points[k + 1]);
    for (std::size_t k = 0; k < rec.points.size(); ++k)
        CHECK(rec.degrees[k] == point_degree(rec.points[k]));
}

TEST_CASE("canonical height estimates: pinned values") {
    LattesContext ctx;
    for (int n = 1; n <= 3; ++n)
        CHECK(canonical_height_estimate(ctx.map(), ProjPointK::constant(Rat(2)), n) == rq(1, 2));

    const ParamMap quad = quadratic_family();
    for (int n = 1; n <= 4; ++n)
        CHECK(canonical_height_estimate(quad, ProjPointK::variable(), n) == Rat(1));

    // constant-coefficient z^2 - 1: every iterate of a constant is constant
    ParamMap zsm1 = constant_poly_family({Rat(-1), Rat(0), Rat(1)});
    for (int n = 1; n <= 4; ++n)
        CHECK(canonical_height_estimate(zsm1, ProjPointK::constant(rq(1, 3)), n) == Rat(0));
}

TEST_CASE("degree law after reduction") {
    LattesContext ctx;
    const ParamMap quad = quadratic_family();
    for (int it = 0; it < 30; ++it) {
        ProjPointK p = random_point(3);
        for (const ParamMap* F : {&ctx.map(), &quad}) {
            ProjPointK img = apply(*F, p);
            CHECK(point_degree(img) <= F->degree() * point_degree(p) + F->coeff_height());
        }
    }
}

TEST_CASE("(H1) shift identity for degree sequences") {
    LattesContext ctx;
    const ParamMap quad = quadratic_family();
    const int n = 3;
    for (int it = 0; it < 10; ++it) {
        ProjPointK p = random_point(2);
        for (const ParamMap* F : {&quad, &ctx.map()}) {
            ProjPointK fp = apply(*F, p);
            OrbitRecord shifted = orbit_degrees(*F, fp, n);
            OrbitRecord full = orbit_degrees(*F, p, n + 1);
            for (int k = 0; k <= n; ++k)
                CHECK(shifted.degrees[static_cast<std::size_t>(k)] ==
                      full.degrees[static_cast<std::size_t>(k) + 1]);
            Rat lhs = canonical_height_estimate(*F, fp, n);
            Rat rhs = Rat(F->degree()) * canonical_height_estimate(*F, p, n + 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("(H2) probe: successive height estimates decay geometrically") {
    LattesContext ctx;
    const ParamMap quad = quadratic_family();
    const int N = 4;
    for (int it = 0; it < 8; ++it) {
        ProjPointK p = random_point(2);
        for (const ParamMap* F : {&quad, &ctx.map()}) {
            const Rat d(F->degree());
            OrbitRecord rec = orbit_degrees(*F, p, N + 1);
            // delta_n = |deg(f^(n+1)P)/d^(n+1) - deg(f^nP)/d^n|, exact
            std::vector<Rat> delta;
            Rat dn(1);  // d^n
            for (int n = 0; n <= N; ++n) {
                Rat cur = Rat(rec.degrees[static_cast<std::size_t>(n)]) / dn;
                Rat nxt = Rat(rec.degrees[static_cast<std::size_t>(n) + 1]) / (dn * d);
                delta.push_back(abs(nxt - cur));
                dn *= d;
            }
            // fit C over the first differences, demand the tail stays under C d^-n
            Rat C = delta[0];
            if (delta[1] * d > C) C = delta[1] * d;
            Rat bound = C;
            Rat dpow(1);
            for (int n = 0; n <= N; ++n) {
                CHECK(delta[static_cast<std::size_t>(n)] * dpow <= bound);
                dpow *= d;
            }
        }
    }
}

TEST_CASE("detect_preperiodic verdicts: pinned cases") {
    LattesContext ctx;

    PreperiodicVerdict v = detect_preperiodic(ctx.map(), ProjPointK::zero(), 20,
                                              default_degree_bound(ctx.map(), ProjPointK::zero()));
    CHECK(v.kind == PreperiodicVerdict::Kind::Preperiodic);
    CHECK(v.tail == 1);
    CHECK(v.period == 1);

    PreperiodicVerdict w = detect_preperiodic(ctx.map(), ProjPointK::constant(Rat(2)), 20, 16);
    CHECK(w.kind == PreperiodicVerdict::Kind::HeightPositive);
    CHECK(w.witness_index == 3);
    CHECK(w.witness_degree == 32);

    ParamMap zsm1 = constant_poly_family({Rat(-1), Rat(0), Rat(1)});
    PreperiodicVerdict u = detect_preperiodic(zsm1, ProjPointK::constant(rq(1, 3)), 20, 64);
    CHECK(u.kind == PreperiodicVerdict::Kind::HeightZeroNoCycle);
    CHECK(u.iterations_checked == 20);
}

TEST_CASE("preperiodic verdicts re-verified independently") {
    LattesContext ctx;
    // whenever Preperiodic{m, p} comes back, x_{m+p} == x_m holds exactly
    for (const ProjPointK& p : ctx.torsion_x()) {
        PreperiodicVerdict v =
            detect_preperiodic(ctx.map(), p, 20, default_degree_bound(ctx.map(), p));
        REQUIRE(v.kind == PreperiodicVerdict::Kind::Preperiodic);
        OrbitRecord rec = orbit_degrees(ctx.map(), p, v.tail + v.period);
        CHECK(rec.points[static_cast<std::size_t>(v.tail)] == rec.points.back());
    }
}

TEST_CASE("resultant locus: pinned families") {
    const ParamMap quad = quadratic_family();
    CHECK(resultant_locus(quad) == Poly::constant(Rat(1)));

    LattesContext ctx;
    Poly res = resultant_locus(ctx.map());
    CHECK(res.degree() >= 1);
    // root set inside {0, 1}: strip all t and (t-1) factors, a constant remains
    Poly r = res;
    Poly t = Poly::variable();
    Poly tm1 = P({-1, 1});
    while (r.degree() > 0 && poly_divides(t, r)) r = poly_div_exact(r, t);
    while (r.degree() > 0 && poly_divides(tm1, r)) r = poly_div_exact(r, tm1);
    CHECK(r.degree() == 0);
}

TEST_CASE("specialize: pinned parameters") {
    const ParamMap quad = quadratic_family();
    HomMapC m = specialize(quad, Cplx(-1.0, 0.0));
    CHECK(m.d == 2);
    // z^2 - 1 on the affine chart: f(z) = z^2 - 1
    auto [a, b] = m.eval(Cplx(3.0, 0.0), Cplx(1.0, 0.0));
    CHECK(std::abs(a / b - Cplx(8.0, 0.0)) < 1e-12);

    LattesContext ctx;
    CHECK_THROWS_AS(specialize(ctx.map(), Cplx(0.0, 0.0)), DegenerateParameter);
    CHECK_THROWS_AS(specialize(ctx.map(), Cplx(1.0, 0.0)), DegenerateParameter);
    HomMapC lm = specialize(ctx.map(), Cplx(2.0, 0.0));
    CHECK(lm.d == 4);
}

TEST_CASE("apply commutes with exact specialization") {
    LattesContext ctx;
    const ParamMap quad = quadratic_family();
    std::uniform_int_distribution<long> cd(-6, 6);
    for (int it = 0; it < 40; ++it) {
        ProjPointK p = random_point(2);
        Rat t0 = rq(cd(rng), 1 + static_cast<long>(rng() % 4));
        for (const ParamMap* F : {&quad, &ctx.map()}) {
            if (!resultant_locus(*F).is_zero() && resultant_locus(*F).eval(t0) == 0) continue;
            // exact arithmetic on both sides
            Rat az = p.a().eval(t0), bz = p.b().eval(t0);
            if (az == 0 && bz == 0) continue;  // representative collapses at t0
            ProjPointK img = apply(*F, p);
            Rat ia = img.a().eval(t0), ib = img.b().eval(t0);
            // specialized forms applied to (az, bz)
            Rat sa(0), sb(0);
            for (int j = 0; j <= F->degree(); ++j) {
                Rat zp(1), wp(1);
                for (int k = 0; k < j; ++k) zp *= az;
                for (int k = 0; k < F->degree() - j; ++k) wp *= bz;
                sa += F->f1().c[static_cast<std::size_t>(j)].eval(t0) * zp * wp;
                sb += F->f2().c[static_cast<std::size_t>(j)].eval(t0) * zp * wp;
            }
            // compare projectively: (ia : ib) == (sa : sb)
            CHECK(ia * sb == ib * sa);
        }
    }
}

TEST_CASE("q_weil_height pinned values") {
    CHECK(q_weil_height(rq(2, 3)) == doctest::Approx(std::log(3.0)));
    CHECK(q_weil_height(Rat(0)) == 0.0);
    CHECK(q_weil_height(Rat(5)) == doctest::Approx(std::log(5.0)));
}
