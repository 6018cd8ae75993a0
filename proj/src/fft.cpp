#include "qmon/fft.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qmon::detail {

void fft_radix2(std::vector<complexd>& data) {
  const std::size_t n = data.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  }
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double step = -kTwoPi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        // direct twiddle per butterfly keeps accumulation error flat
        const complexd w = std::polar(1.0, step * static_cast<double>(k));
        const complexd u = data[i + k];
        const complexd v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace qmon::detail
