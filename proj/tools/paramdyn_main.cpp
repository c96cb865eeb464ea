// Command-line surface for the arithmetic-dynamics workbench: exact orbits
// and heights over Q(t), parameter-plane potentials and bifurcation
// measures, PCF/preperiodic parameter solving, and the intersection probe.
//
// Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "paramdyn/errors.hpp"
#include "paramdyn/json_io.hpp"
#include "paramdyn/lattes.hpp"
#include "paramdyn/parafind.hpp"
#include "paramdyn/poly_text.hpp"
#include "paramdyn/render.hpp"

using namespace paramdyn;

namespace {

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

Window parse_window(const std::string& spec, int width, int height) {
    double v[4];
    char extra;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &v[3], &extra) != 4)
        throw ParseError("window must be re_min,re_max,im_min,im_max");
    return Window(v[0], v[1], v[2], v[3], width, height);
}

Cplx parse_complex(const std::string& spec) {
    double re = 0, im = 0;
    char extra;
    int got = std::sscanf(spec.c_str(), "%lf,%lf%c", &re, &im, &extra);
    if (got == 2) return {re, im};
    if (std::sscanf(spec.c_str(), "%lf%c", &re, &extra) == 1) return {re, 0.0};
    throw ParseError("complex value must be re,im or re");
}

ordered_json window_json(const Window& w) {
    return ordered_json{{"re_min", w.re_min}, {"re_max", w.re_max}, {"im_min", w.im_min},
                        {"im_max", w.im_max}, {"width", w.width},   {"height", w.height}};
}

struct GridStats {
    double vmin = 0, vmax = 0;
};

GridStats grid_stats(const Eigen::ArrayXXd& values) {
    GridStats s;
    s.vmin = std::numeric_limits<double>::infinity();
    s.vmax = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < values.rows(); ++r)
        for (int c = 0; c < values.cols(); ++c) {
            double v = values(r, c);
            if (std::isnan(v)) continue;
            s.vmin = std::min(s.vmin, v);
            s.vmax = std::max(s.vmax, v);
        }
    return s;
}

void emit_rootset(const RootSet& rs, const std::string& out_csv) {
    if (out_csv.empty()) {
        std::cout << rootset_to_csv(rs);
        return;
    }
    std::ofstream out(out_csv);
    if (!out) throw IoError("cannot open " + out_csv);
    out << rootset_to_csv(rs);
    ordered_json header = rootset_header_json(rs);
    header["csv"] = out_csv;
    emit(header);
}

int run(int argc, char** argv) {
    CLI::App app{"paramdyn: arithmetic dynamics of one-parameter families over Q(t)"};
    app.require_subcommand(1);

    // ---- height ------------------------------------------------------------
    std::string map_path, point_spec;
    int height_n = 4, max_iter = 30, degree_bound = -1, degree_ceiling = kDefaultDegreeCeiling;
    auto* height_cmd = app.add_subcommand("height", "canonical-height estimates and verdict");
    height_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    height_cmd->add_option("--point", point_spec, "point spec, e.g. \"2\" or \"t^2+1:t\"")->required();
    height_cmd->add_option("--n", height_n, "estimate deg(f^n P)/d^n for n = 1..N");
    height_cmd->add_option("--max-iter", max_iter, "iterations for the preperiodicity verdict");
    height_cmd->add_option("--degree-bound", degree_bound, "HeightPositive threshold (default heuristic)");
    height_cmd->add_option("--degree-ceiling", degree_ceiling, "abort above this orbit degree");

    // ---- orbit ------------------------------------------------------------
    int orbit_n = 4;
    auto* orbit_cmd = app.add_subcommand("orbit", "exact orbit points and degree sequence");
    orbit_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    orbit_cmd->add_option("--point", point_spec, "point spec")->required();
    orbit_cmd->add_option("--n", orbit_n, "orbit length");
    orbit_cmd->add_option("--degree-ceiling", degree_ceiling, "abort above this orbit degree");

    // ---- preperiodic -------------------------------------------------------
    auto* prep_cmd = app.add_subcommand("preperiodic", "trichotomy verdict for one point");
    prep_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    prep_cmd->add_option("--point", point_spec, "point spec")->required();
    prep_cmd->add_option("--max-iter", max_iter, "iteration budget");
    prep_cmd->add_option("--degree-bound", degree_bound, "HeightPositive threshold (default heuristic)");

    // ---- resultant ---------------------------------------------------------
    auto* res_cmd = app.add_subcommand("resultant", "resultant locus of the family");
    res_cmd->add_option("--map", map_path, "map file (JSON)")->required();

    // ---- lattes-check ------------------------------------------------------
    std::string lattes_map_path;
    int census_iter = 24, census_bound = 64;
    auto* lattes_cmd = app.add_subcommand("lattes-check", "2-torsion, degree growth, torsion census");
    lattes_cmd->add_option("--map", lattes_map_path, "compare against a map file (optional)");
    lattes_cmd->add_option("--max-iter", census_iter, "census iteration budget");
    lattes_cmd->add_option("--degree-bound", census_bound, "census degree bound");

    // ---- render ------------------------------------------------------------
    std::string window_spec = "-2.5,1.5,-1.5,1.5", out_path, csv_path, mapping = "linear", t0_spec;
    int res_w = 512, res_h = 0, depth = 200, jobs = 1;
    double escape_radius = 2.0, log_eps = kDefaultLogEps, degen_tol = kDefaultDegenTol;
    auto* render_cmd = app.add_subcommand("render", "PGM images of potentials and measures");
    render_cmd->require_subcommand(1);
    auto add_render_common = [&](CLI::App* c) {
        c->add_option("--window", window_spec, "re_min,re_max,im_min,im_max");
        c->add_option("--res", res_w, "pixels across (height defaults to match aspect)");
        c->add_option("--height", res_h, "pixel rows (optional)");
        c->add_option("--depth", depth, "iteration depth");
        c->add_option("--out", out_path, "output PGM path")->required();
        c->add_option("--csv", csv_path, "also dump the grid as CSV");
        c->add_option("--mapping", mapping, "linear|log pixel mapping");
        c->add_option("--log-eps", log_eps, "epsilon of the log mapping");
        c->add_option("--jobs", jobs, "worker threads");
    };
    auto* rm = render_cmd->add_subcommand("mandelbrot", "critical-orbit potential of z^2 + t");
    add_render_common(rm);
    rm->add_option("--escape-radius", escape_radius, "escape radius (classical 2)");
    auto* rb = render_cmd->add_subcommand("bif", "marked-point bifurcation measure");
    add_render_common(rb);
    rb->add_option("--map", map_path, "map file (JSON)")->required();
    rb->add_option("--point", point_spec, "marked point spec")->required();
    rb->add_option("--degen-tol", degen_tol, "degenerate-parameter tolerance");
    auto* rj = render_cmd->add_subcommand("julia", "Julia measure of one specialized map");
    add_render_common(rj);
    rj->add_option("--map", map_path, "map file (JSON)")->required();
    rj->add_option("--t0", t0_spec, "parameter value re,im")->required();

    // ---- pcf-roots ---------------------------------------------------------
    int pcf_n = 3;
    double tol = kDefaultRootTol;
    auto* pcf_cmd = app.add_subcommand("pcf-roots", "centers where 0 is periodic for z^2 + t");
    pcf_cmd->add_option("--n", pcf_n, "period bound n")->required();
    pcf_cmd->add_option("--tol", tol, "certification tolerance");
    pcf_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

    // ---- preper-params -----------------------------------------------------
    int rel_n = 1, rel_m = 0;
    auto* pp_cmd = app.add_subcommand("preper-params", "sample S_{f,P} at depth (n, m)");
    pp_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    pp_cmd->add_option("--point", point_spec, "marked point spec")->required();
    pp_cmd->add_option("--n", rel_n, "relation depth n")->required();
    pp_cmd->add_option("--m", rel_m, "relation depth m")->required();
    pp_cmd->add_option("--tol", tol, "certification tolerance");
    pp_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");
    pp_cmd->add_option("--degree-ceiling", degree_ceiling, "abort above this orbit degree");

    // ---- equidist ----------------------------------------------------------
    int cells = 16;
    auto* eq_cmd = app.add_subcommand("equidist", "discrepancy of pcf centers vs bifurcation mass");
    eq_cmd->add_option("--pcf-n", pcf_n, "use pcf_centers(n) as the root sample")->required();
    eq_cmd->add_option("--cells", cells, "coarsening cells per axis");
    eq_cmd->add_option("--window", window_spec, "re_min,re_max,im_min,im_max");
    eq_cmd->add_option("--res", res_w, "grid resolution");
    eq_cmd->add_option("--depth", depth, "iteration depth");
    eq_cmd->add_option("--jobs", jobs, "worker threads");
    eq_cmd->add_option("--tol", tol, "root certification tolerance");

    // ---- intersect ---------------------------------------------------------
    std::string point_q_spec;
    int probe_depth = 2;
    double probe_tol = 1e-8;
    auto* int_cmd = app.add_subcommand("intersect", "unlikely-intersection probe for two points");
    int_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    int_cmd->add_option("--point-p", point_spec, "first marked point")->required();
    int_cmd->add_option("--point-q", point_q_spec, "second marked point")->required();
    int_cmd->add_option("--max-depth", probe_depth, "probe all (n, m) with n <= max-depth");
    int_cmd->add_option("--tol", probe_tol, "numeric near-coincidence tolerance");
    int_cmd->add_option("--degree-ceiling", degree_ceiling, "abort above this orbit degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto resolve_bound = [&](const ParamMap& F, const ProjPointK& p) {
        return degree_bound > 0 ? degree_bound : default_degree_bound(F, p);
    };

    if (height_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        ProjPointK p = parse_point_spec(point_spec);
        OrbitRecord rec = orbit_degrees(F, p, height_n, degree_ceiling);
        ordered_json estimates = ordered_json::array();
        Int dn(1);
        for (int n = 1; n <= height_n; ++n) {
            dn *= F.degree();
            Rat est(Int(rec.degrees[static_cast<std::size_t>(n)]), dn);
            est.canonicalize();
            estimates.push_back(ordered_json{{"n", n},
                                             {"degree", rec.degrees[static_cast<std::size_t>(n)]},
                                             {"estimate", rat_to_string(est)}});
        }
        int bound = resolve_bound(F, p);
        PreperiodicVerdict v = detect_preperiodic(F, p, max_iter, bound);
        emit(ordered_json{{"map", map_path},
                          {"point", point_to_json(p)},
                          {"degree", F.degree()},
                          {"coeff_height", F.coeff_height()},
                          {"estimates", estimates},
                          {"verdict", verdict_to_json(v)},
                          {"params", ordered_json{{"n", height_n},
                                                  {"max_iter", max_iter},
                                                  {"degree_bound", bound},
                                                  {"degree_ceiling", degree_ceiling}}}});
        return 0;
    }

    if (orbit_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        ProjPointK p = parse_point_spec(point_spec);
        OrbitRecord rec = orbit_degrees(F, p, orbit_n, degree_ceiling);
        ordered_json doc = orbit_to_json(rec);
        doc["map"] = map_path;
        doc["params"] = ordered_json{{"n", orbit_n}, {"degree_ceiling", degree_ceiling}};
        emit(doc);
        return 0;
    }

    if (prep_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        ProjPointK p = parse_point_spec(point_spec);
        int bound = resolve_bound(F, p);
        PreperiodicVerdict v = detect_preperiodic(F, p, max_iter, bound);
        emit(ordered_json{{"map", map_path},
                          {"point", point_to_json(p)},
                          {"verdict", verdict_to_json(v)},
                          {"params", ordered_json{{"max_iter", max_iter}, {"degree_bound", bound}}}});
        return 0;
    }

    if (res_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        const Poly& res = resultant_locus(F);
        ordered_json doc{{"map", map_path},
                         {"degree", F.degree()},
                         {"resultant", poly_to_json(res)},
                         {"resultant_text", res.str()}};
        if (!res.is_zero()) doc["monic"] = poly_to_json(res.degree() >= 1 ? res.monic() : res.monic());
        emit(doc);
        return 0;
    }

    if (lattes_cmd->parsed()) {
        LattesContext ctx;
        ordered_json torsion = ordered_json::array();
        for (const ProjPointK& x : ctx.torsion_x()) {
            ProjPointK img = apply(ctx.map(), x);
            torsion.push_back(ordered_json{{"point", x.str()},
                                           {"image", img.str()},
                                           {"is_infinity", img == ProjPointK::infinity()}});
        }
        // resultant roots confined to {0, 1}
        Poly r = resultant_locus(ctx.map());
        Poly t = Poly::variable();
        Poly tm1 = Poly::from_coeffs({Rat(-1), Rat(1)});
        int mult0 = 0, mult1 = 0;
        while (r.degree() > 0 && poly_divides(t, r)) {
            r = poly_div_exact(r, t);
            ++mult0;
        }
        while (r.degree() > 0 && poly_divides(tm1, r)) {
            r = poly_div_exact(r, tm1);
            ++mult1;
        }
        bool roots_in_01 = r.degree() == 0;

        std::vector<ProjPointK> candidates = {
            ProjPointK::zero(),           ProjPointK::constant(Rat(1)),
            ProjPointK::variable(),       ProjPointK::infinity(),
            ProjPointK::constant(Rat(2)), ProjPointK::constant(Rat(-2)),
            ProjPointK::constant(Rat(3)), ProjPointK::constant(Rat(-1)),
            parse_point_spec("1/2"),      parse_point_spec("t+1"),
            parse_point_spec("2t"),       parse_point_spec("t^2"),
            parse_point_spec("1-t")};
        CensusReport census = torsion_census(ctx, candidates, census_iter, census_bound);
        ordered_json entries = ordered_json::array();
        for (const CensusEntry& e : census.entries)
            entries.push_back(
                ordered_json{{"candidate", e.candidate.str()}, {"verdict", verdict_to_json(e.verdict)}});
        ordered_json preper = ordered_json::array();
        for (const ProjPointK& p : census.preperiodic) preper.push_back(p.str());

        ordered_json doc{{"two_torsion_check", two_torsion_check(ctx)},
                         {"torsion_images", torsion},
                         {"resultant", poly_to_json(resultant_locus(ctx.map()))},
                         {"resultant_roots_in_{0,1}", roots_in_01},
                         {"resultant_multiplicities", ordered_json{{"t", mult0}, {"t-1", mult1}}},
                         {"census", entries},
                         {"preperiodic", preper}};
        if (!lattes_map_path.empty()) {
            ParamMap parsed = parse_map_file(lattes_map_path);
            bool same = true;
            for (int j = 0; j <= 4 && same; ++j)
                same = parsed.f1().c[static_cast<std::size_t>(j)] ==
                           ctx.map().f1().c[static_cast<std::size_t>(j)] &&
                       parsed.f2().c[static_cast<std::size_t>(j)] ==
                           ctx.map().f2().c[static_cast<std::size_t>(j)];
            doc["map_file_matches"] = same;
        }
        emit(doc);
        return 0;
    }

    if (render_cmd->parsed()) {
        Window probe = parse_window(window_spec, 2, 2);
        int h = res_h > 0 ? res_h
                          : std::max(2, static_cast<int>(std::lround(
                                            res_w * (probe.im_max - probe.im_min) /
                                            (probe.re_max - probe.re_min))));
        Window win = parse_window(window_spec, res_w, h);
        PixelMapping pm = mapping == "log" ? PixelMapping::Log : PixelMapping::Linear;
        std::map<std::string, std::string> hdr{{"window", window_spec},
                                               {"depth", std::to_string(depth)},
                                               {"mapping", mapping}};

        ordered_json doc{{"out", out_path}, {"window", window_json(win)}, {"depth", depth}};
        if (rm->parsed()) {
            PotentialGrid grid = mandelbrot_potential_grid(win, depth, escape_radius, jobs);
            hdr["family"] = "z^2+t";
            hdr["escape_radius"] = std::to_string(escape_radius);
            write_pgm(grid.values, out_path, pm, log_eps, hdr);
            if (!csv_path.empty()) write_csv(grid.values, csv_path);
            GridStats s = grid_stats(grid.values);
            doc["kind"] = "mandelbrot_potential";
            doc["min"] = s.vmin;
            doc["max"] = s.vmax;
        } else if (rb->parsed()) {
            ParamMap F = parse_map_file(map_path);
            ProjPointK p = parse_point_spec(point_spec);
            PotentialGrid grid = potential_grid(F, p, win, depth, degen_tol, jobs);
            MeasureGrid mg = discrete_laplacian(grid);
            hdr["family"] = map_path;
            hdr["point"] = point_spec;
            write_pgm(mg.masses, out_path, pm == PixelMapping::Linear ? PixelMapping::Log : pm,
                      log_eps, hdr);
            if (!csv_path.empty()) write_csv(mg.masses, csv_path);
            doc["kind"] = "bifurcation_measure";
            doc["total_mass"] = mg.total_mass;
        } else {
            ParamMap F = parse_map_file(map_path);
            HomMapC f = specialize(F, parse_complex(t0_spec));
            MeasureGrid mg = julia_measure_grid(f, win, depth, jobs);
            hdr["family"] = map_path;
            hdr["t0"] = t0_spec;
            write_pgm(mg.masses, out_path, pm == PixelMapping::Linear ? PixelMapping::Log : pm,
                      log_eps, hdr);
            if (!csv_path.empty()) write_csv(mg.masses, csv_path);
            doc["kind"] = "julia_measure";
            doc["total_mass"] = mg.total_mass;
        }
        emit(doc);
        return 0;
    }

    if (pcf_cmd->parsed()) {
        RootSet rs = pcf_centers(pcf_n, tol);
        emit_rootset(rs, out_path);
        return 0;
    }

    if (pp_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        ProjPointK p = parse_point_spec(point_spec);
        RootSet rs = preperiodic_params(F, p, rel_n, rel_m, tol, degree_ceiling);
        emit_rootset(rs, out_path);
        return 0;
    }

    if (eq_cmd->parsed()) {
        Window probe = parse_window(window_spec, 2, 2);
        int h = std::max(2, static_cast<int>(std::lround(res_w * (probe.im_max - probe.im_min) /
                                                         (probe.re_max - probe.re_min))));
        Window win = parse_window(window_spec, res_w, h);
        PotentialGrid pg = mandelbrot_potential_grid(win, depth, 2.0, jobs);
        MeasureGrid mg = discrete_laplacian(pg);
        RootSet rs = pcf_centers(pcf_n, tol);
        double disc = equidist_discrepancy(rs, mg, cells);
        emit(ordered_json{{"pcf_n", pcf_n},
                          {"cells", cells},
                          {"discrepancy", disc},
                          {"roots", rs.roots.size()},
                          {"total_mass", mg.total_mass},
                          {"window", window_json(win)},
                          {"depth", depth}});
        return 0;
    }

    if (int_cmd->parsed()) {
        ParamMap F = parse_map_file(map_path);
        ProjPointK p = parse_point_spec(point_spec);
        ProjPointK q = parse_point_spec(point_q_spec);
        IntersectionReport rep = intersection_probe(F, p, q, probe_depth, probe_tol, degree_ceiling);
        ordered_json doc = intersection_report_to_json(rep);
        doc["map"] = map_path;
        doc["point_p"] = p.str();
        doc["point_q"] = q.str();
        doc["max_depth"] = probe_depth;
        emit(doc);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        emit(ordered_json{{"error", ordered_json{{"code", e.code()}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(ordered_json{{"error", ordered_json{{"code", "internal"}, {"message", e.what()}}}});
        return 1;
    }
}
