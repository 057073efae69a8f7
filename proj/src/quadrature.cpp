#include "kgwell/quadrature.hpp"

#include <stdexcept>

namespace kgwell::quad {

namespace {

template <typename T>
T simpson_impl(std::span<const T> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) throw std::invalid_argument("simpson needs at least two samples");
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  const std::size_t intervals = n - 1;
  // Even part handled by the 1-4-2-4-...-1 rule.
  const std::size_t even = (intervals % 2 == 0) ? intervals : intervals - 3;
  T acc{};
  if (even > 0) {
    T odd_sum{};
    T even_sum{};
    for (std::size_t i = 1; i < even; i += 2) odd_sum += f[i];
    for (std::size_t i = 2; i < even; i += 2) even_sum += f[i];
    acc = (h / 3.0) * (f[0] + f[even] + 4.0 * odd_sum + 2.0 * even_sum);
  }
  if (even != intervals) {
    const std::size_t s = even;
    acc += (3.0 * h / 8.0) * (f[s] + 3.0 * f[s + 1] + 3.0 * f[s + 2] + f[s + 3]);
  }
  return acc;
}

}  // namespace

std::complex<double> simpson(std::span<const std::complex<double>> f, double h) {
  return simpson_impl(f, h);
}

double simpson(std::span<const double> f, double h) { return simpson_impl(f, h); }

}  // namespace kgwell::quad
