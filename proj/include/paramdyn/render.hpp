#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

namespace paramdyn {

enum class PixelMapping { Linear, Log };

inline constexpr double kDefaultLogEps = 1e-9;

// Binary PGM (P5, maxval 255). Linear: v -> 255 (v - min)/(max - min),
// emitting 0 everywhere when min == max. Log: v clamped at 0, then
// 255 log(1 + v/eps) / log(1 + max/eps). NaN pixels render as 0.
// `header` entries are embedded as PGM comment lines for reproducibility.
void write_pgm(const Eigen::ArrayXXd& values, const std::string& path, PixelMapping mapping,
               double log_eps = kDefaultLogEps,
               const std::map<std::string, std::string>& header = {});

// Row-major CSV at full precision; NaN prints as "nan".
void write_csv(const Eigen::ArrayXXd& values, const std::string& path);

}  // namespace paramdyn
