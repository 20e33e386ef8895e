#include "fft.hpp"

#include <cmath>
#include <utility>

#include "laas/errors.hpp"

namespace laas::detail {

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw InvalidParameter("radix-2 FFT size must be a power of two");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    for (std::size_t block = 0; block < n; block += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> even = a[block + k];
        const std::complex<double> odd = a[block + k + len / 2] * w;
        a[block + k] = even + odd;
        a[block + k + len / 2] = even - odd;
        w *= step;
      }
    }
  }

  if (inverse) {
    for (auto& value : a) value /= static_cast<double>(n);
  }
}

}  // namespace laas::detail
