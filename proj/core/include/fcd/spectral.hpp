#ifndef FCD_SPECTRAL_HPP
#define FCD_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "fcd/grid.hpp"

namespace fcd {

// Fourier-side view of a Field. Coefficients use the usual FFT bin order:
// bin k holds wavenumber index k for k < n/2 and k - n otherwise, so the
// physical wavenumber is xi_k = pi * k' / half_width. The forward transform
// carries the 1/n factor, which makes bin 0 the sample mean, i.e.
// mass / (2 * half_width).
struct SpectralField {
  GridSpec grid;
  double time = 0.0;
  std::vector<std::complex<double>> coeffs;

  // Signed wavenumber index of bin k (bin n/2 maps to -n/2).
  long long mode(std::size_t k) const {
    const long long n = static_cast<long long>(grid.n_points);
    const long long kk = static_cast<long long>(k);
    return kk < n / 2 ? kk : kk - n;
  }
  double xi(std::size_t k) const;
};

SpectralField to_spectral(const Field& u);

// Inverse transform; keeps the real part. For coefficients coming from a real
// field (conjugate-symmetric) the imaginary residue is at rounding level.
Field from_spectral(const SpectralField& su);

namespace detail {
// In-place iterative radix-2 transform, sign = -1 forward / +1 inverse.
// No normalization on either direction; n must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& data, int sign);
}  // namespace detail

}  // namespace fcd

#endif
