#pragma once

#include <complex>
#include <span>

namespace kgwell::quad {

/// Composite Simpson rule on uniform samples with spacing h. An odd number
/// of intervals closes with Simpson's 3/8 rule on the last three. Needs at
/// least 3 samples; 2 samples fall back to the trapezoid.
std::complex<double> simpson(std::span<const std::complex<double>> f, double h);
double simpson(std::span<const double> f, double h);

}  // namespace kgwell::quad
