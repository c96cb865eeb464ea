#pragma once

#include <Eigen/Dense>
#include <string>

#include "paramdyn/escape.hpp"
#include "paramdyn/param_map.hpp"
#include "paramdyn/window.hpp"

namespace paramdyn {

// Degenerate-parameter pixels carry NaN and are excluded from Laplacians
// and from min/max scans.
inline constexpr double kGridSentinel = std::numeric_limits<double>::quiet_NaN();

struct GridMeta {
    std::string family_id;
    std::string marked_point;
    int depth = 0;
};

struct PotentialGrid {
    Window window;
    Eigen::ArrayXXd values;  // (height, width), row 0 at the top
    GridMeta meta;
};

struct MeasureGrid {
    Window window;
    Eigen::ArrayXXd masses;  // clamped at 0; Laplacian density per pixel
    Eigen::ArrayXXd raw;     // unclamped stencil values, NaN where excluded
    double total_mass = 0.0; // sum of clamped masses times pixel area
};

// Marked-point potential over a parameter window: per pixel t, the
// homogeneous escape rate of the specialized map at the lift (a(t), b(t))
// of the reduced point. Degenerate parameters are sentineled, not skipped
// around.
PotentialGrid potential_grid(const ParamMap& F, const ProjPointK& P, const Window& window,
                             int depth, double degen_tol = kDefaultDegenTol, int jobs = 1);

// Dynamical-plane potential of a fixed numerical map on the chart w = 1.
PotentialGrid dynamical_potential_grid(const HomMapC& f, const Window& window, int depth,
                                       int jobs = 1);

// Escape-time potential of z^2 + t over a parameter window (the classical
// picture; radius 2 is the quadratic escape bound).
PotentialGrid mandelbrot_potential_grid(const Window& window, int depth,
                                        double escape_radius = 2.0, int jobs = 1);

// Escape classification of the critical orbit of z^2 + t per pixel:
// first escape index, or -1 when bounded at depth.
Eigen::ArrayXXi mandelbrot_escape_grid(const Window& window, int depth, int jobs = 1);

// 5-point-stencil Laplacian over interior pixels, divided by pixel area;
// rows/columns touching the border or a sentinel are excluded (0 mass,
// NaN raw). Negative stencil values are clamped to 0 in `masses`, the raw
// values are retained.
MeasureGrid discrete_laplacian(const PotentialGrid& grid);

// Laplacian in z of the dynamical-plane potential grid.
MeasureGrid julia_measure_grid(const HomMapC& f, const Window& window, int depth, int jobs = 1);

// Pixels whose 4-neighborhood carries a different classification value
// (first-escape index, with -1 for bounded-at-depth), dilated by `dilation`
// pixels (Chebyshev metric). With a two-valued classification this is the
// plain inside/outside boundary.
Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> boundary_band(const Eigen::ArrayXXi& escape,
                                                                 int dilation);

}  // namespace paramdyn
