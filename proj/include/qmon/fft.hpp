#pragma once

#include <vector>

#include "qmon/qubit.hpp"

namespace qmon::detail {

// In-place iterative radix-2 Cooley-Tukey transform (forward, e^{-i...}).
// data.size() must be a power of two.
void fft_radix2(std::vector<complexd>& data);

}  // namespace qmon::detail
