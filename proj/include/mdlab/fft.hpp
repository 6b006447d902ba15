#pragma once

#include <complex>
#include <vector>

namespace mdlab::fftutil {

// In-place complex DFT with kernel e^{sign * 2*pi*i * jk/n}, sign = +1 or -1.
// No normalization. Power-of-two sizes run iterative radix-2; everything else
// goes through Bluestein's chirp transform.
void fft(std::vector<std::complex<double>>& a, int sign);

}  // namespace mdlab::fftutil
