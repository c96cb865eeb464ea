#include "paramdyn/grids.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "paramdyn/errors.hpp"

namespace paramdyn {

Window::Window(double re0, double re1, double im0, double im1, int w, int h)
    : re_min(re0), re_max(re1), im_min(im0), im_max(im1), width(w), height(h) {
    if (!(re_min < re_max) || !(im_min < im_max))
        throw ContractViolation("window bounds must be ordered");
    if (width < 2 || height < 2) throw ContractViolation("window needs at least 2x2 pixels");
}

namespace {

// Run fn(row) over all rows, split across jobs threads.
template <typename Fn>
void for_rows(int height, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (int r = 0; r < height; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (;;) {
                int r = next.fetch_add(1);
                if (r >= height) return;
                fn(r);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

PotentialGrid potential_grid(const ParamMap& F, const ProjPointK& P, const Window& window,
                             int depth, double degen_tol, int jobs) {
    PotentialGrid grid;
    grid.window = window;
    grid.values.resize(window.height, window.width);
    grid.meta = {"map(d=" + std::to_string(F.degree()) + ")", P.str(), depth};

    const Poly& res = F.resultant();
    const bool check_degen = res.degree() >= 1;
    const Poly res_monic = check_degen ? res.monic() : Poly();

    for_rows(window.height, jobs, [&](int row) {
        for (int col = 0; col < window.width; ++col) {
            const Cplx t = window.pixel(row, col);
            if (check_degen && std::abs(res_monic.eval(t)) < degen_tol) {
                grid.values(row, col) = kGridSentinel;
                continue;
            }
            HomMapC f;
            f.d = F.degree();
            f.c1.resize(static_cast<std::size_t>(f.d) + 1);
            f.c2.resize(f.c1.size());
            for (int j = 0; j <= f.d; ++j) {
                f.c1[static_cast<std::size_t>(j)] = F.f1().c[static_cast<std::size_t>(j)].eval(t);
                f.c2[static_cast<std::size_t>(j)] = F.f2().c[static_cast<std::size_t>(j)].eval(t);
            }
            const Cplx a = P.a().eval(t), b = P.b().eval(t);
            grid.values(row, col) = escape_rate_hom(f, a, b, depth);
        }
    });
    return grid;
}

PotentialGrid dynamical_potential_grid(const HomMapC& f, const Window& window, int depth,
                                       int jobs) {
    PotentialGrid grid;
    grid.window = window;
    grid.values.resize(window.height, window.width);
    grid.meta = {"fixed map(d=" + std::to_string(f.d) + ")", "z", depth};
    for_rows(window.height, jobs, [&](int row) {
        for (int col = 0; col < window.width; ++col)
            grid.values(row, col) = escape_rate_hom(f, window.pixel(row, col), 1.0, depth);
    });
    return grid;
}

PotentialGrid mandelbrot_potential_grid(const Window& window, int depth, double escape_radius,
                                        int jobs) {
    PotentialGrid grid;
    grid.window = window;
    grid.values.resize(window.height, window.width);
    grid.meta = {"z^2 + t", "0", depth};
    for_rows(window.height, jobs, [&](int row) {
        for (int col = 0; col < window.width; ++col) {
            const Cplx t = window.pixel(row, col);
            PolyMapC f;
            f.c = {t, Cplx(0.0), Cplx(1.0)};
            grid.values(row, col) = escape_rate_poly(f, Cplx(0.0), depth, escape_radius).value;
        }
    });
    return grid;
}

Eigen::ArrayXXi mandelbrot_escape_grid(const Window& window, int depth, int jobs) {
    Eigen::ArrayXXi esc(window.height, window.width);
    for_rows(window.height, jobs, [&](int row) {
        for (int col = 0; col < window.width; ++col) {
            MandelResult r = mandelbrot_member(window.pixel(row, col), depth);
            esc(row, col) = r.escaped ? r.n : -1;
        }
    });
    return esc;
}

MeasureGrid discrete_laplacian(const PotentialGrid& grid) {
    const int h = static_cast<int>(grid.values.rows());
    const int w = static_cast<int>(grid.values.cols());
    if (h < 3 || w < 3) throw ContractViolation("laplacian needs at least 3x3 pixels");

    MeasureGrid mg;
    mg.window = grid.window;
    mg.masses = Eigen::ArrayXXd::Zero(h, w);
    mg.raw = Eigen::ArrayXXd::Constant(h, w, kGridSentinel);

    const double dx = grid.window.dx(), dy = grid.window.dy();
    const double ix2 = 1.0 / (dx * dx), iy2 = 1.0 / (dy * dy);
    const double area = dx * dy;

    double total = 0.0;
    for (int r = 1; r + 1 < h; ++r) {
        for (int c = 1; c + 1 < w; ++c) {
            const double g = grid.values(r, c);
            const double ge = grid.values(r, c + 1), gw = grid.values(r, c - 1);
            const double gn = grid.values(r - 1, c), gs = grid.values(r + 1, c);
            if (std::isnan(g) || std::isnan(ge) || std::isnan(gw) || std::isnan(gn) ||
                std::isnan(gs))
                continue;
            const double lap = (ge - 2.0 * g + gw) * ix2 + (gn - 2.0 * g + gs) * iy2;
            mg.raw(r, c) = lap;
            const double clamped = lap > 0.0 ? lap : 0.0;
            mg.masses(r, c) = clamped;
            total += clamped;
        }
    }
    mg.total_mass = total * area;
    return mg;
}

MeasureGrid julia_measure_grid(const HomMapC& f, const Window& window, int depth, int jobs) {
    return discrete_laplacian(dynamical_potential_grid(f, window, depth, jobs));
}

Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> boundary_band(const Eigen::ArrayXXi& escape,
                                                                 int dilation) {
    const int h = static_cast<int>(escape.rows());
    const int w = static_cast<int>(escape.cols());
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> band(h, w);
    band.setConstant(false);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int v = escape(r, c);
            bool mixed = false;
            if (r > 0 && escape(r - 1, c) != v) mixed = true;
            if (!mixed && r + 1 < h && escape(r + 1, c) != v) mixed = true;
            if (!mixed && c > 0 && escape(r, c - 1) != v) mixed = true;
            if (!mixed && c + 1 < w && escape(r, c + 1) != v) mixed = true;
            band(r, c) = mixed;
        }
    }
    if (dilation <= 0) return band;
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> out = band;
    for (int step = 0; step < dilation; ++step) {
        Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> next = out;
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                if (out(r, c)) continue;
                bool near = false;
                for (int dr = -1; dr <= 1 && !near; ++dr)
                    for (int dc = -1; dc <= 1 && !near; ++dc) {
                        int rr = r + dr, cc = c + dc;
                        if (rr >= 0 && rr < h && cc >= 0 && cc < w && out(rr, cc)) near = true;
                    }
                next(r, c) = near;
            }
        out.swap(next);
    }
    return out;
}

}  // namespace paramdyn
