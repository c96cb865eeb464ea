#include "paramdyn/parafind.hpp"

#include <algorithm>
#include <cmath>

#include "paramdyn/errors.hpp"

namespace paramdyn {

Poly critical_orbit_poly(int n, int m) {
    if (!(n > m && m >= 0)) throw ContractViolation("need n > m >= 0");
    std::vector<Poly> orbit{Poly()};  // x_0 = 0
    Poly t = Poly::variable();
    for (int k = 1; k <= n; ++k) orbit.push_back(orbit.back() * orbit.back() + t);
    return orbit[static_cast<std::size_t>(n)] - orbit[static_cast<std::size_t>(m)];
}

namespace {

using CplxL = std::complex<long double>;

// p and p' at z by one Horner pass over scaled coefficients
std::pair<CplxL, CplxL> horner2(const std::vector<long double>& c, const CplxL& z) {
    CplxL p = c.back(), dp = 0.0L;
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + c[static_cast<std::size_t>(i)];
    }
    return {p, dp};
}

long double fujiwara_radius(const std::vector<long double>& c) {
    const std::size_t n = c.size() - 1;
    long double lead = std::abs(c[n]);
    long double r = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
        long double a = std::abs(c[n - k]) / lead;
        if (k == n) a *= 0.5L;
        if (a > 0.0L) r = std::max(r, std::pow(a, 1.0L / static_cast<long double>(k)));
    }
    return 2.0L * r;
}

}  // namespace

RootSet roots_numeric(const Poly& p, double tol) {
    if (p.degree() < 1) throw ContractViolation("roots_numeric needs degree >= 1");
    RootSet rs;
    rs.polynomial = p;
    rs.tol = tol;

    // exact zero roots come off the valuation
    const std::vector<Int>& prim = p.primitive();
    std::size_t val = 0;
    while (prim[val] == 0) ++val;
    for (std::size_t i = 0; i < val; ++i) rs.roots.emplace_back(0.0, 0.0);

    const std::size_t n = prim.size() - 1 - val;  // cofactor degree
    if (n > 0) {
        // scaled doubles of the cofactor; the common 2^e cancels in Newton steps
        std::vector<std::pair<double, long>> parts(n + 1);
        long emax = std::numeric_limits<long>::min();
        for (std::size_t i = 0; i <= n; ++i) {
            long e = 0;
            double m = mpz_get_d_2exp(&e, prim[val + i].get_mpz_t());
            parts[i] = {m, e};
            if (m != 0.0 && e > emax) emax = e;
        }
        std::vector<long double> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            c[i] = (parts[i].first == 0.0)
                       ? 0.0L
                       : std::ldexp(static_cast<long double>(parts[i].first),
                                    static_cast<int>(parts[i].second - emax));

        // rescale the variable so the working roots sit near the unit circle
        long double radius = fujiwara_radius(c);
        if (!(radius > 0.0L) || !std::isfinite(static_cast<double>(radius))) radius = 1.0L;
        std::vector<long double> cs(c);
        long double rk = 1.0L;
        for (std::size_t k = 0; k <= n; ++k) {
            cs[k] = c[k] * rk;
            rk *= radius;
        }
        long double norm = 0.0L;
        for (long double v : cs) norm = std::max(norm, std::abs(v));
        for (long double& v : cs) v /= norm;

        // perturbed-circle initial guesses in the rescaled variable
        std::vector<CplxL> z(n);
        const long double pi = 3.141592653589793238462643383279502884L;
        for (std::size_t j = 0; j < n; ++j) {
            long double ang = 2.0L * pi * static_cast<long double>(j) / static_cast<long double>(n) + 0.45L;
            long double rad = 0.9L + 0.12L * static_cast<long double>(j % 5) / 5.0L;
            z[j] = CplxL(rad * std::cos(ang), rad * std::sin(ang));
        }

        const int max_rounds = 220 + 12 * static_cast<int>(n);
        bool ok = false;
        for (int round = 0; round < max_rounds && !ok; ++round) {
            long double worst = 0.0L;
            for (std::size_t j = 0; j < n; ++j) {
                auto [pv, dv] = horner2(cs, z[j]);
                if (pv == CplxL(0.0L, 0.0L)) continue;
                CplxL newton = (dv == CplxL(0.0L, 0.0L)) ? CplxL(0.0L, 0.0L) : pv / dv;
                CplxL sum = 0.0L;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) sum += 1.0L / (z[j] - z[k]);
                CplxL denom = 1.0L - newton * sum;
                CplxL step = (denom == CplxL(0.0L, 0.0L)) ? newton : newton / denom;
                z[j] -= step;
                worst = std::max(worst, std::abs(step) / (1.0L + std::abs(z[j])));
            }
            ok = worst < 5e-17L;
        }
        rs.converged = ok;

        // Newton polish on the unscaled cofactor, still in long double
        for (std::size_t j = 0; j < n; ++j) {
            CplxL zj = z[j] * radius;
            for (int it = 0; it < 4; ++it) {
                auto [pv, dv] = horner2(c, zj);
                if (dv == CplxL(0.0L, 0.0L)) break;
                CplxL step = pv / dv;
                if (std::abs(step) > 0.5L * (1.0L + std::abs(zj))) break;  // multiple-root guard
                zj -= step;
            }
            rs.roots.emplace_back(static_cast<double>(zj.real()), static_cast<double>(zj.imag()));
        }
    }

    // residual certificates on the primitive polynomial
    std::vector<long double> full(prim.size());
    {
        long emax = std::numeric_limits<long>::min();
        std::vector<std::pair<double, long>> parts(prim.size());
        for (std::size_t i = 0; i < prim.size(); ++i) {
            long e = 0;
            double m = mpz_get_d_2exp(&e, prim[i].get_mpz_t());
            parts[i] = {m, e};
            if (m != 0.0 && e > emax) emax = e;
        }
        for (std::size_t i = 0; i < prim.size(); ++i)
            full[i] = (parts[i].first == 0.0)
                          ? 0.0L
                          : std::ldexp(static_cast<long double>(parts[i].first),
                                       static_cast<int>(parts[i].second - emax));
    }
    for (const auto& root : rs.roots) {
        CplxL zj(root.real(), root.imag());
        CplxL pv = full.back();
        long double scale = std::abs(CplxL(full.back()));
        for (int i = static_cast<int>(full.size()) - 2; i >= 0; --i) {
            pv = pv * zj + full[static_cast<std::size_t>(i)];
            scale = scale * std::abs(zj) + std::abs(full[static_cast<std::size_t>(i)]);
        }
        double res = static_cast<double>(std::abs(pv));
        rs.residuals.push_back(res);
        rs.backward_errors.push_back(scale > 0.0L ? static_cast<double>(std::abs(pv) / scale) : 0.0);
        if (rs.backward_errors.back() > tol) rs.converged = false;
    }
    return rs;
}

RootSet pcf_centers(int n, double tol) {
    if (n < 1) throw ContractViolation("pcf_centers needs n >= 1");
    RootSet rs = roots_numeric(critical_orbit_poly(n, 0), tol);
    rs.depth_tag = {n, 0};
    return rs;
}

namespace {

// Remove every factor shared with the resultant locus.
Poly strip_locus_factors(Poly h, const Poly& locus) {
    if (locus.degree() < 1) return h;
    for (;;) {
        Poly g = poly_gcd(h, locus);
        if (g.degree() < 1) return h;
        h = poly_div_exact(h, g);
        if (h.degree() < 1) return h;
    }
}

Poly relation_poly(const ParamMap& F, const ProjPointK& P, int n, int m, int degree_ceiling) {
    if (!(n > m && m >= 0)) throw ContractViolation("need n > m >= 0");
    OrbitRecord rec = orbit_degrees(F, P, n, degree_ceiling);
    const ProjPointK& xn = rec.points[static_cast<std::size_t>(n)];
    const ProjPointK& xm = rec.points[static_cast<std::size_t>(m)];
    Poly h = xn.a() * xm.b() - xm.a() * xn.b();
    if (h.is_zero())
        throw IdenticallyZero("x_" + std::to_string(n) + " = x_" + std::to_string(m) +
                              " holds identically: the point is preperiodic at this depth");
    return strip_locus_factors(std::move(h), resultant_locus(F));
}

}  // namespace

RootSet preperiodic_params(const ParamMap& F, const ProjPointK& P, int n, int m, double tol,
                           int degree_ceiling) {
    Poly h = relation_poly(F, P, n, m, degree_ceiling);
    if (h.degree() < 1)
        throw EmptyInput("relation polynomial is constant after removing degenerate factors");
    RootSet rs = roots_numeric(h, tol);
    rs.depth_tag = {n, m};
    return rs;
}

double equidist_discrepancy(const RootSet& rs, const MeasureGrid& mg, int cells) {
    if (cells < 1) throw ContractViolation("need at least one cell");
    if (!(mg.total_mass > 0.0)) throw EmptyInput("measure grid carries no mass");

    const Window& win = mg.window;
    std::vector<double> root_hist(static_cast<std::size_t>(cells) * cells, 0.0);
    std::size_t inside = 0;
    for (const auto& r : rs.roots) {
        if (!win.contains(r)) continue;
        int cx = std::min(cells - 1, static_cast<int>((r.real() - win.re_min) /
                                                      (win.re_max - win.re_min) * cells));
        int cy = std::min(cells - 1, static_cast<int>((r.imag() - win.im_min) /
                                                      (win.im_max - win.im_min) * cells));
        root_hist[static_cast<std::size_t>(cy) * cells + cx] += 1.0;
        ++inside;
    }
    if (inside == 0) throw EmptyInput("no roots inside the measure window");

    std::vector<double> mass_hist(root_hist.size(), 0.0);
    for (int r = 0; r < win.height; ++r) {
        for (int c = 0; c < win.width; ++c) {
            double mass = mg.masses(r, c);
            if (mass <= 0.0) continue;
            Cplx t = win.pixel(r, c);
            int cx = std::min(cells - 1, static_cast<int>((t.real() - win.re_min) /
                                                          (win.re_max - win.re_min) * cells));
            int cy = std::min(cells - 1, static_cast<int>((t.imag() - win.im_min) /
                                                          (win.im_max - win.im_min) * cells));
            mass_hist[static_cast<std::size_t>(cy) * cells + cx] += mass;
        }
    }
    double mass_total = 0.0;
    for (double v : mass_hist) mass_total += v;
    if (!(mass_total > 0.0)) throw EmptyInput("measure grid carries no clamped mass");

    double l1 = 0.0;
    for (std::size_t i = 0; i < root_hist.size(); ++i)
        l1 += std::abs(root_hist[i] / static_cast<double>(inside) - mass_hist[i] / mass_total);
    return 0.5 * l1;
}

IntersectionReport intersection_probe(const ParamMap& F, const ProjPointK& P, const ProjPointK& Q,
                                      int max_depth, double tol, int degree_ceiling) {
    if (max_depth < 1) throw ContractViolation("max_depth must be >= 1");

    std::vector<std::pair<int, int>> depths;
    for (int n = 1; n <= max_depth; ++n)
        for (int m = 0; m < n; ++m) depths.emplace_back(n, m);

    auto relations = [&](const ProjPointK& X, const char* label) {
        std::vector<Poly> out;
        out.reserve(depths.size());
        for (auto [n, m] : depths) {
            try {
                out.push_back(relation_poly(F, X, n, m, degree_ceiling));
            } catch (const IdenticallyZero&) {
                throw ContractViolation(std::string(label) +
                                        " is preperiodic at depth (" + std::to_string(n) + "," +
                                        std::to_string(m) + "); the probe needs non-preperiodic points");
            }
        }
        return out;
    };
    std::vector<Poly> hp = relations(P, "P");
    std::vector<Poly> hq = relations(Q, "Q");

    IntersectionReport report;
    std::vector<RootSet> rp(depths.size()), rq(depths.size());
    for (std::size_t i = 0; i < depths.size(); ++i) {
        if (hp[i].degree() >= 1) rp[i] = roots_numeric(hp[i], tol);
        if (hq[i].degree() >= 1) rq[i] = roots_numeric(hq[i], tol);
    }

    for (std::size_t i = 0; i < depths.size(); ++i) {
        for (std::size_t j = 0; j < depths.size(); ++j) {
            DepthPairGcd entry;
            entry.depth_p = depths[i];
            entry.depth_q = depths[j];
            if (hp[i].degree() >= 1 && hq[j].degree() >= 1) {
                entry.gcd = poly_gcd(hp[i], hq[j]);
                entry.gcd_degree = std::max(entry.gcd.degree(), 0);
            } else {
                entry.gcd = Poly::constant(Rat(1));
            }
            if (entry.gcd_degree > 0) report.certified_common = true;
            report.gcds.push_back(std::move(entry));

            for (const auto& a : rp[i].roots)
                for (const auto& b : rq[j].roots)
                    if (std::abs(a - b) < tol)
                        report.near.push_back({depths[i], depths[j], a, b, std::abs(a - b)});
        }
    }
    return report;
}

}  // namespace paramdyn
