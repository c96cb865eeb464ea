#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "paramdyn/grids.hpp"
#include "paramdyn/param_map.hpp"
#include "paramdyn/poly.hpp"

namespace paramdyn {

// Exact critical-orbit relation for z^2 + t: f_t^n(0) - f_t^m(0) in Z[t],
// n > m >= 0.
Poly critical_orbit_poly(int n, int m);

// Numerically solved parameter polynomial with residual certificates.
struct RootSet {
    Poly polynomial;                        // exact, integer-primitive scale
    std::vector<std::complex<double>> roots;  // degree many, with multiplicity
    std::vector<double> residuals;          // |p(root)| on the primitive part
    std::vector<double> backward_errors;    // |p(root)| / sum |a_k| |root|^k
    std::pair<int, int> depth_tag{0, 0};    // (n, m) when orbit-derived
    bool converged = true;
    double tol = 0.0;
};

inline constexpr double kDefaultRootTol = 1e-12;

// All complex roots by Aberth-Ehrlich simultaneous iteration from
// perturbed-circle starts (Fujiwara radius), Newton-polished in extended
// precision. Certification is against the relative backward error; raw
// |p(root)| residuals are reported alongside. A failed pass returns with
// converged = false rather than throwing away the partial set.
RootSet roots_numeric(const Poly& p, double tol = kDefaultRootTol);

// Parameters where the critical point 0 of z^2 + t is periodic with period
// dividing n: the roots of critical_orbit_poly(n, 0).
RootSet pcf_centers(int n, double tol = kDefaultRootTol);

// Sample of S_{f,P} at depth (n, m): roots of the cross-difference
// a_n b_m - a_m b_n, with resultant-locus factors removed first. Throws
// IdenticallyZero when the relation holds identically (P preperiodic at
// this depth).
RootSet preperiodic_params(const ParamMap& F, const ProjPointK& P, int n, int m,
                           double tol = kDefaultRootTol,
                           int degree_ceiling = kDefaultDegreeCeiling);

// Half L1 distance in [0, 1] between the root distribution and the clamped
// Laplacian mass, both coarsened to cells x cells over mg's window.
double equidist_discrepancy(const RootSet& rs, const MeasureGrid& mg, int cells);

struct DepthPairGcd {
    std::pair<int, int> depth_p;
    std::pair<int, int> depth_q;
    int gcd_degree = 0;
    Poly gcd;  // monic; nonconstant means certified common parameters
};

struct NearCoincidence {
    std::pair<int, int> depth_p;
    std::pair<int, int> depth_q;
    std::complex<double> root_p, root_q;
    double distance = 0.0;
};

struct IntersectionReport {
    std::vector<DepthPairGcd> gcds;
    std::vector<NearCoincidence> near;
    bool certified_common = false;  // some exact gcd is nonconstant
};

// Unlikely-intersection probe: exact pairwise gcds of the relation
// polynomials of P and Q over all depth pairs up to max_depth, plus
// advisory numeric near-coincidences within tol. Rejects marked points
// that are preperiodic at some probed depth.
IntersectionReport intersection_probe(const ParamMap& F, const ProjPointK& P, const ProjPointK& Q,
                                      int max_depth, double tol,
                                      int degree_ceiling = kDefaultDegreeCeiling);

}  // namespace paramdyn
