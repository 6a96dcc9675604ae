#pragma once

#include <vector>

#include "diracsim/pauli.hpp"

namespace diracsim {

/// In-place radix-2 FFT, data.size() a power of two.
/// sign = -1: X_k = sum_j x_j exp(-2*pi*i*j*k/n)   (forward)
/// sign = +1: inverse kernel without the 1/n factor.
/// Twiddles are evaluated directly per index so the round-trip error
/// stays near machine precision.
void fft_radix2(std::vector<cplx>& data, int sign);

}  // namespace diracsim
