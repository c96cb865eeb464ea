#pragma once

#include <vector>

#include "paramdyn/complex_map.hpp"

namespace paramdyn {

struct EscapeResult {
    double value = 0.0;       // escape-rate potential estimate
    bool escaped = false;     // false: bounded at depth, value is 0
    int first_escape = -1;    // iterate index where |z| first exceeded the radius
};

// Escape-rate potential of a one-variable polynomial map: d^-n log|f^n(z)|
// at the first escaped iterate, sharpened by following the orbit further
// while it stays in floating range. Bounded orbits report 0.
EscapeResult escape_rate_poly(const PolyMapC& f, Cplx z, int depth, double escape_radius);

// Homogeneous escape rate under the sup norm on C^2:
//   G = log||(z,w)|| + sum_{k=1..depth} d^-k log||F(u_{k-1})||,
// with u_k the renormalized iterates. partials() exposes every truncation
// G_0..G_depth for convergence probes.
double escape_rate_hom(const HomMapC& F, Cplx z, Cplx w, int depth);
std::vector<double> escape_rate_hom_partials(const HomMapC& F, Cplx z, Cplx w, int depth);

struct MandelResult {
    bool escaped = false;
    int n = -1;  // first index with |orbit| > 2 when escaped
};

// Critical-orbit membership test for z^2 + t: Escaped(n) at the first
// n with |f_t^n(0)| > 2, else BoundedAtDepth.
MandelResult mandelbrot_member(const Cplx& t, int depth);

}  // namespace paramdyn
