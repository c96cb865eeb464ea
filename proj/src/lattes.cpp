#include "paramdyn/lattes.hpp"

#include "paramdyn/errors.hpp"

namespace paramdyn {

namespace {

ParamMap build_lattes_map() {
    // f1 = (z^2 - t w^2)^2 = z^4 - 2t z^2 w^2 + t^2 w^4
    // f2 = 4 z w (z - w)(z - t w) = 4 z^3 w - 4(t+1) z^2 w^2 + 4t z w^3
    Poly t = Poly::variable();
    Poly one = Poly::constant(Rat(1));

    BivarForm f1;
    f1.d = 4;
    f1.c.resize(5);
    f1.c[4] = one;                    // z^4
    f1.c[2] = Rat(-2) * t;            // -2t z^2 w^2
    f1.c[0] = t * t;                  // t^2 w^4

    BivarForm f2;
    f2.d = 4;
    f2.c.resize(5);
    f2.c[3] = Poly::constant(Rat(4));        // 4 z^3 w
    f2.c[2] = Rat(-4) * (t + one);           // -4(t+1) z^2 w^2
    f2.c[1] = Rat(4) * t;                    // 4t z w^3

    return ParamMap(std::move(f1), std::move(f2));
}

}  // namespace

LattesContext::LattesContext() : map_(build_lattes_map()) {
    torsion_x_ = {ProjPointK::zero(), ProjPointK::constant(Rat(1)), ProjPointK::variable(),
                  ProjPointK::infinity()};
    const ProjPointK inf = ProjPointK::infinity();
    for (const ProjPointK& x : torsion_x_)
        if (apply(map_, x) != inf)
            throw ContractViolation("Lattes construction: a 2-torsion point missed infinity");
}

LattesContext legendre_lattes() { return LattesContext(); }

bool two_torsion_check(const LattesContext& ctx) {
    const ProjPointK inf = ProjPointK::infinity();
    for (const ProjPointK& x : ctx.torsion_x())
        if (apply(ctx.map(), x) != inf) return false;
    return true;
}

bool degree_growth_check(const LattesContext& ctx, const ProjPointK& p, int n,
                         int degree_ceiling) {
    if (n < 1) throw ContractViolation("degree_growth_check needs n >= 1");
    for (const ProjPointK& x : ctx.torsion_x())
        if (x == p) throw ContractViolation("degree growth is stated for non-torsion points");
    OrbitRecord rec = orbit_degrees(ctx.map(), p, n, degree_ceiling);
    long expected = rec.degrees[1];
    for (int k = 1; k <= n; ++k) {
        if (rec.degrees[static_cast<std::size_t>(k)] != expected) return false;
        expected *= 4;
    }
    return true;
}

CensusReport torsion_census(const LattesContext& ctx, const std::vector<ProjPointK>& candidates,
                            int max_iter, int degree_bound) {
    CensusReport report;
    for (const ProjPointK& cand : candidates) {
        PreperiodicVerdict v = detect_preperiodic(ctx.map(), cand, max_iter, degree_bound);
        if (v.kind == PreperiodicVerdict::Kind::Preperiodic) report.preperiodic.push_back(cand);
        report.entries.push_back({cand, v});
    }
    return report;
}

}  // namespace paramdyn
