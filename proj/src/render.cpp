#include "paramdyn/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "paramdyn/errors.hpp"

namespace paramdyn {

void write_pgm(const Eigen::ArrayXXd& values, const std::string& path, PixelMapping mapping,
               double log_eps, const std::map<std::string, std::string>& header) {
    const int h = static_cast<int>(values.rows());
    const int w = static_cast<int>(values.cols());

    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double v = values(r, c);
            if (std::isnan(v)) continue;
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    const bool flat = !(vmin < vmax);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output image: " + path);
    out << "P5\n";
    for (const auto& [k, v] : header) out << "# " << k << "=" << v << "\n";
    out << w << " " << h << "\n255\n";

    std::vector<unsigned char> row(static_cast<std::size_t>(w));
    const double log_den = std::log1p(std::max(vmax, 0.0) / log_eps);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double v = values(r, c);
            double s = 0.0;
            if (!std::isnan(v) && !flat) {
                if (mapping == PixelMapping::Linear) {
                    s = (v - vmin) / (vmax - vmin);
                } else if (log_den > 0.0) {
                    s = std::log1p(std::max(v, 0.0) / log_eps) / log_den;
                }
            }
            int px = static_cast<int>(std::lround(255.0 * s));
            row[static_cast<std::size_t>(c)] = static_cast<unsigned char>(std::clamp(px, 0, 255));
        }
        out.write(reinterpret_cast<const char*>(row.data()), w);
    }
    if (!out) throw IoError("failed writing image: " + path);
}

void write_csv(const Eigen::ArrayXXd& values, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output CSV: " + path);
    char buf[64];
    for (int r = 0; r < values.rows(); ++r) {
        for (int c = 0; c < values.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", values(r, c));
            if (c) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing CSV: " + path);
}

}  // namespace paramdyn
