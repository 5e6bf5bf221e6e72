#pragma once

#include <complex>
#include <span>
#include <vector>

namespace arsyd::fft {

using cd = std::complex<double>;

constexpr bool is_pow2(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// In-place DFT of any length n >= 1. Radix-2 for powers of two, Bluestein
/// otherwise. Forward uses e^{-2*pi*i*kn/N}; inverse includes the 1/n scale.
void transform(std::vector<cd>& a, bool inverse);

/// Spectra of two equal-length real vectors from a single complex transform
/// (x + i*y packing). The returned spectra are exactly conjugate-symmetric.
void dual_real_spectrum(std::span<const double> x, std::span<const double> y,
                        std::vector<cd>& fx, std::vector<cd>& fy);

/// Inverse transform of a conjugate-symmetric spectrum; imaginary residue is
/// discarded.
std::vector<double> inverse_real(std::vector<cd> spectrum);

}  // namespace arsyd::fft
