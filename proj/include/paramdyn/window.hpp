#pragma once

#include <complex>

namespace paramdyn {

// Rectangular complex window sampled on a pixel grid. Row 0 is the top of
// the image (largest imaginary part); samples sit at pixel centers.
struct Window {
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
    int width = 0, height = 0;

    Window() = default;
    Window(double re0, double re1, double im0, double im1, int w, int h);

    double dx() const { return (re_max - re_min) / width; }
    double dy() const { return (im_max - im_min) / height; }

    std::complex<double> pixel(int row, int col) const {
        return {re_min + (col + 0.5) * dx(), im_max - (row + 0.5) * dy()};
    }

    bool contains(const std::complex<double>& z) const {
        return z.real() >= re_min && z.real() < re_max && z.imag() >= im_min && z.imag() < im_max;
    }
};

}  // namespace paramdyn
