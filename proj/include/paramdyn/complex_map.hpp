#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace paramdyn {

using Cplx = std::complex<double>;

// Degree-d homogeneous pair on C^2, coefficients by ascending z-power
// (entry j multiplies z^j w^(d-j)).
struct HomMapC {
    int d = 0;
    std::vector<Cplx> c1, c2;  // size d + 1 each

    std::pair<Cplx, Cplx> eval(const Cplx& z, const Cplx& w) const {
        const std::size_t n = c1.size();
        std::vector<Cplx> zp(n), wp(n);
        zp[0] = 1.0;
        wp[0] = 1.0;
        for (std::size_t k = 1; k < n; ++k) {
            zp[k] = zp[k - 1] * z;
            wp[k] = wp[k - 1] * w;
        }
        Cplx a = 0.0, b = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Cplx m = zp[j] * wp[n - 1 - j];
            a += c1[j] * m;
            b += c2[j] * m;
        }
        return {a, b};
    }
};

// One-variable polynomial map, coefficients ascending.
struct PolyMapC {
    std::vector<Cplx> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }

    Cplx eval(const Cplx& z) const {
        Cplx acc = c.back();
        for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc;
    }
};

}  // namespace paramdyn
