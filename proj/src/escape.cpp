#include "paramdyn/escape.hpp"

#include <cmath>

#include "paramdyn/errors.hpp"

namespace paramdyn {

EscapeResult escape_rate_poly(const PolyMapC& f, Cplx z, int depth, double escape_radius) {
    const int d = f.degree();
    if (d < 2) throw ContractViolation("escape rate needs degree >= 2");
    EscapeResult res;
    double dn = 1.0;
    for (int n = 1; n <= depth; ++n) {
        z = f.eval(z);
        dn *= d;
        double az = std::abs(z);
        if (!res.escaped && az > escape_radius) {
            res.escaped = true;
            res.first_escape = n;
        }
        if (res.escaped && (az > 1e100 || n == depth)) {
            res.value = std::log(az) / dn;
            return res;
        }
    }
    return res;  // bounded at depth, value 0
}

std::vector<double> escape_rate_hom_partials(const HomMapC& F, Cplx z, Cplx w, int depth) {
    const int d = F.d;
    if (d < 1) throw ContractViolation("homogeneous escape rate needs degree >= 1");
    double norm0 = std::max(std::abs(z), std::abs(w));
    if (norm0 == 0.0) throw ContractViolation("(0, 0) has no escape rate");

    std::vector<double> partials;
    partials.reserve(static_cast<std::size_t>(depth) + 1);
    double g = std::log(norm0);
    partials.push_back(g);

    Cplx uz = z / norm0, uw = w / norm0;
    double dk = 1.0;
    for (int k = 1; k <= depth; ++k) {
        auto [fz, fw] = F.eval(uz, uw);
        double n = std::max(std::abs(fz), std::abs(fw));
        if (n == 0.0)
            throw DegenerateParameter("orbit hit a common root of the homogeneous pair");
        dk *= d;
        g += std::log(n) / dk;
        partials.push_back(g);
        uz = fz / n;
        uw = fw / n;
    }
    return partials;
}

double escape_rate_hom(const HomMapC& F, Cplx z, Cplx w, int depth) {
    return escape_rate_hom_partials(F, z, w, depth).back();
}

MandelResult mandelbrot_member(const Cplx& t, int depth) {
    Cplx z = 0.0;
    for (int n = 1; n <= depth; ++n) {
        z = z * z + t;
        if (std::abs(z) > 2.0) return {true, n};
    }
    return {false, -1};
}

}  // namespace paramdyn
