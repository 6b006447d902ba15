#include "mdlab/fft.hpp"

#include <cmath>
#include <cstddef>

#include "mdlab/errors.hpp"

namespace mdlab::fftutil {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey. Twiddles come from a direct-trig table so
// rounding does not accumulate across stages; the k = 0 outputs are then pure
// sums and stay exact for integer input below 2^53.
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = double(sign) * kTwoPi * double(k) / double(n);
        tw[k] = {std::cos(ang), std::sin(ang)};
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n / len;
        for (std::size_t block = 0; block < n; block += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> u = a[block + k];
                const std::complex<double> v = a[block + k + half] * tw[k * step];
                a[block + k] = u + v;
                a[block + k + half] = u - v;
            }
        }
    }
}

// Bluestein: X_k = chirp_k * (a*chirp (*) conj-chirp)_k with chirp_t =
// e^{sign*pi*i*t^2/n}; t^2 is reduced mod 2n before the trig call since the
// chirp has period 2n in t.
void fft_bluestein(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    const std::size_t m = next_pow2(2 * n - 1);

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        unsigned long long k2 = (unsigned long long)(k) * k % (2 * n);
        double ang = double(sign) * (kTwoPi / 2.0) * double(k2) / double(n);
        chirp[k] = {std::cos(ang), std::sin(ang)};
    }

    std::vector<std::complex<double>> x(m), y(m);
    for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
    y[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);

    fft_pow2(x, +1);
    fft_pow2(y, +1);
    for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
    fft_pow2(x, -1);

    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k] / double(m);
}

}  // namespace

void fft(std::vector<std::complex<double>>& a, int sign) {
    if (sign != 1 && sign != -1) throw parameter_error("fft: sign must be +1 or -1");
    if (a.size() < 2) return;
    if (is_pow2(a.size()))
        fft_pow2(a, sign);
    else
        fft_bluestein(a, sign);
}

}  // namespace mdlab::fftutil
