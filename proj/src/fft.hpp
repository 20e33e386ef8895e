#pragma once

#include <complex>
#include <vector>

namespace laas::detail {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace laas::detail
