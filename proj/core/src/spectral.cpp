#include "fcd/spectral.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace fcd {

double SpectralField::xi(std::size_t k) const {
  return std::numbers::pi * static_cast<double>(mode(k)) / grid.half_width;
}

namespace detail {
namespace {

// Twiddle factors e^{2 pi i j / n}, j < n/2, shared across calls. Guarded so
// concurrent transforms of different sizes stay safe; entries are immutable
// once built.
std::shared_ptr<const std::vector<std::complex<double>>> twiddles_for(std::size_t n) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::shared_ptr<const std::vector<std::complex<double>>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<std::vector<std::complex<double>>>(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    (*table)[j] = std::complex<double>(std::cos(angle), std::sin(angle));
  }
  cache.emplace(n, table);
  return cache[n];
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  }
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const auto tw = twiddles_for(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> w = (*tw)[j * stride];
        if (sign < 0) w = std::conj(w);
        const std::complex<double> odd = data[start + j + len / 2] * w;
        const std::complex<double> even = data[start + j];
        data[start + j] = even + odd;
        data[start + j + len / 2] = even - odd;
      }
    }
  }
}

}  // namespace detail

SpectralField to_spectral(const Field& u) {
  check_finite(u, "to_spectral");
  const std::size_t n = u.grid.n_points;
  SpectralField su;
  su.grid = u.grid;
  su.time = u.time;
  su.coeffs.assign(u.samples.begin(), u.samples.end());
  detail::fft_pow2(su.coeffs, -1);
  // The grid starts at -half_width, not 0; e^{-i xi_k x_j} picks up a factor
  // (-1)^k relative to the index-based transform. Fold it in together with
  // the 1/n normalization.
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = (k % 2 == 0) ? inv_n : -inv_n;
    su.coeffs[k] *= phase;
  }
  return su;
}

Field from_spectral(const SpectralField& su) {
  const std::size_t n = su.grid.n_points;
  if (su.coeffs.size() != n) {
    throw std::invalid_argument("from_spectral: coefficient count does not match grid");
  }
  std::vector<std::complex<double>> buf(n);
  for (std::size_t k = 0; k < n; ++k) {
    buf[k] = (k % 2 == 0) ? su.coeffs[k] : -su.coeffs[k];
  }
  detail::fft_pow2(buf, +1);
  Field u = make_field(su.grid, su.time);
  for (std::size_t i = 0; i < n; ++i) u.samples[i] = buf[i].real();
  return u;
}

}  // namespace fcd
