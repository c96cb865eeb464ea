#pragma once

#include <vector>

#include "paramdyn/param_map.hpp"

namespace paramdyn {

// The degree-4 family (z^2 - t w^2)^2 / 4 z w (z - w)(z - t w), the
// x-coordinate of duplication on the Legendre curves y^2 = x(x-1)(x-t).
// torsion_x holds the four 2-torsion x-coordinates (0:1), (1:1), (t:1), (1:0),
// each of which lands on (1:0) in one step.
class LattesContext {
public:
    LattesContext();

    const ParamMap& map() const { return map_; }
    const std::vector<ProjPointK>& torsion_x() const { return torsion_x_; }

private:
    ParamMap map_;
    std::vector<ProjPointK> torsion_x_;
};

LattesContext legendre_lattes();

// true iff all four torsion x-coordinates map to (1:0) in one exact step
bool two_torsion_check(const LattesContext& ctx);

// true iff deg x_k = 4^(k-1) deg x_1 for 1 <= k <= n; p must not be one of
// the four torsion points.
bool degree_growth_check(const LattesContext& ctx, const ProjPointK& p, int n,
                         int degree_ceiling = kDefaultDegreeCeiling);

struct CensusEntry {
    ProjPointK candidate;
    PreperiodicVerdict verdict;
};

struct CensusReport {
    std::vector<CensusEntry> entries;
    std::vector<ProjPointK> preperiodic;
};

// Classifies each candidate with detect_preperiodic and collects the
// preperiodic sublist.
CensusReport torsion_census(const LattesContext& ctx, const std::vector<ProjPointK>& candidates,
                            int max_iter, int degree_bound);

}  // namespace paramdyn
