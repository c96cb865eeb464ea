#include "paramdyn/json_io.hpp"

#include <cstdio>

#include "paramdyn/errors.hpp"

namespace paramdyn {

ordered_json poly_to_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(rat_to_string(p.coeff(k)));
    return arr;
}

Poly poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("polynomial must be a JSON array of rational strings");
    std::vector<Rat> c;
    c.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_string()) throw ParseError("polynomial coefficients must be strings");
        c.push_back(rat_from_string(e.get<std::string>()));
    }
    return Poly::from_coeffs(c);
}

ordered_json point_to_json(const ProjPointK& p) {
    return ordered_json{{"a", poly_to_json(p.a())}, {"b", poly_to_json(p.b())}, {"text", p.str()}};
}

ordered_json verdict_to_json(const PreperiodicVerdict& v) {
    switch (v.kind) {
        case PreperiodicVerdict::Kind::Preperiodic:
            return ordered_json{{"kind", "Preperiodic"}, {"tail", v.tail}, {"period", v.period}};
        case PreperiodicVerdict::Kind::HeightPositive:
            return ordered_json{{"kind", "HeightPositive"},
                                {"witness_index", v.witness_index},
                                {"witness_degree", v.witness_degree}};
        case PreperiodicVerdict::Kind::HeightZeroNoCycle:
            return ordered_json{{"kind", "HeightZeroNoCycle"},
                                {"iterations_checked", v.iterations_checked}};
        case PreperiodicVerdict::Kind::Inconclusive:
        default:
            return ordered_json{{"kind", "Inconclusive"},
                                {"iterations_checked", v.iterations_checked}};
    }
}

ordered_json orbit_to_json(const OrbitRecord& rec) {
    ordered_json points = ordered_json::array();
    for (const ProjPointK& p : rec.points) points.push_back(point_to_json(p));
    return ordered_json{{"degrees", rec.degrees}, {"points", points}};
}

ordered_json rootset_header_json(const RootSet& rs) {
    return ordered_json{{"polynomial", poly_to_json(rs.polynomial)},
                        {"degree", rs.polynomial.degree()},
                        {"depth", {rs.depth_tag.first, rs.depth_tag.second}},
                        {"roots", rs.roots.size()},
                        {"tol", rs.tol},
                        {"converged", rs.converged}};
}

std::string rootset_to_csv(const RootSet& rs) {
    std::string out = "re,im,residual\n";
    char buf[128];
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", rs.roots[i].real(),
                      rs.roots[i].imag(), rs.residuals[i]);
        out += buf;
    }
    return out;
}

ordered_json intersection_report_to_json(const IntersectionReport& rep) {
    ordered_json gcds = ordered_json::array();
    for (const DepthPairGcd& e : rep.gcds) {
        ordered_json entry{{"depth_p", {e.depth_p.first, e.depth_p.second}},
                           {"depth_q", {e.depth_q.first, e.depth_q.second}},
                           {"gcd_degree", e.gcd_degree}};
        if (e.gcd_degree > 0) entry["gcd"] = poly_to_json(e.gcd);
        gcds.push_back(std::move(entry));
    }
    ordered_json near = ordered_json::array();
    for (const NearCoincidence& e : rep.near)
        near.push_back(ordered_json{{"depth_p", {e.depth_p.first, e.depth_p.second}},
                                    {"depth_q", {e.depth_q.first, e.depth_q.second}},
                                    {"root_p", {e.root_p.real(), e.root_p.imag()}},
                                    {"root_q", {e.root_q.real(), e.root_q.imag()}},
                                    {"distance", e.distance}});
    return ordered_json{{"certified_common", rep.certified_common},
                        {"gcds", gcds},
                        {"near_coincidences", near}};
}

}  // namespace paramdyn
