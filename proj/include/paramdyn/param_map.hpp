#pragma once

#include <string>
#include <vector>

#include "paramdyn/complex_map.hpp"
#include "paramdyn/point.hpp"
#include "paramdyn/poly.hpp"
#include "paramdyn/rational.hpp"

namespace paramdyn {

// Homogeneous bivariate form of degree d in (z, w) with Poly coefficients,
// stored by z-power: coefficient j multiplies z^j w^(d-j).
struct BivarForm {
    int d = 0;
    std::vector<Poly> c;  // size d + 1

    // form evaluated on a polynomial pair (a, b)
    Poly eval_points(const Poly& a, const Poly& b) const;
    bool is_zero() const;
    int max_tdegree() const;
};

// One algebraic family f_t of degree d, as a homogeneous pair (f1, f2)
// coprime over Q(t). The resultant in (z, w) is computed at construction,
// both to validate non-degeneracy and to guide orbit reduction.
class ParamMap {
public:
    ParamMap(BivarForm f1, BivarForm f2);  // validates; throws DegenerateFamily

    int degree() const { return f1_.d; }
    int coeff_height() const { return coeff_height_; }
    const BivarForm& f1() const { return f1_; }
    const BivarForm& f2() const { return f2_; }
    const Poly& resultant() const { return resultant_; }

private:
    BivarForm f1_, f2_;
    int coeff_height_ = 0;
    Poly resultant_;
};

// Map file format: {"degree": d, "f1": [[i, j, "p/q"], ...], "f2": [...]},
// term = (p/q) * t^i * z^j * w^(d-j).
ParamMap parse_map(const std::string& document);
ParamMap parse_map_file(const std::string& path);

ProjPointK apply(const ParamMap& F, const ProjPointK& p);

struct OrbitRecord {
    std::vector<ProjPointK> points;  // x_0 .. x_n
    std::vector<int> degrees;
};

inline constexpr int kDefaultDegreeCeiling = 4096;

OrbitRecord orbit_degrees(const ParamMap& F, const ProjPointK& p, int n,
                          int degree_ceiling = kDefaultDegreeCeiling);

// deg(f^n(P)) / d^n as an exact rational; d >= 2, n >= 1.
Rat canonical_height_estimate(const ParamMap& F, const ProjPointK& p, int n,
                              int degree_ceiling = kDefaultDegreeCeiling);

struct PreperiodicVerdict {
    enum class Kind { Preperiodic, HeightPositive, HeightZeroNoCycle, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int tail = 0, period = 0;                    // Preperiodic
    int witness_index = 0, witness_degree = 0;   // HeightPositive
    int iterations_checked = 0;                  // HeightZeroNoCycle / Inconclusive
};

// Heuristic default bound for detect_preperiodic; callers may override.
int default_degree_bound(const ParamMap& F, const ProjPointK& p);

// Trichotomy probe. Preperiodic requires an exact point repetition;
// HeightPositive fires when some orbit degree exceeds degree_bound;
// HeightZeroNoCycle flags a constant-degree orbit with no repetition
// (the isotrivial escape hatch); anything else is Inconclusive.
PreperiodicVerdict detect_preperiodic(const ParamMap& F, const ProjPointK& p, int max_iter,
                                      int degree_bound);

// Resultant of (f1, f2) in (z, w): a Poly whose roots are the parameters
// where the specialized map drops degree.
const Poly& resultant_locus(const ParamMap& F);

inline constexpr double kDefaultDegenTol = 1e-12;

// Numerical specialization at t0. Degeneracy is tested against the
// monic-normalized resultant: |R_monic(t0)| < tol rejects.
HomMapC specialize(const ParamMap& F, const Cplx& t0, double tol = kDefaultDegenTol);

// The quadratic family z^2 + t as a ParamMap (z^2 + t w^2, w^2).
ParamMap quadratic_family();

// Constant-coefficient family from a one-variable polynomial (lift with w^d).
ParamMap constant_poly_family(const std::vector<Rat>& ascending_coeffs);

}  // namespace paramdyn
