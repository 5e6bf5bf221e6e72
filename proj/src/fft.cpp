#include "arsyd/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace arsyd::fft {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Forward twiddles for a power-of-two size, built once per thread. Values
// depend only on n, so sharing them never changes results.
const std::vector<cd>& twiddles(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<cd>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cd> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        tw[k] = std::polar(1.0, -kTau * static_cast<double>(k) / static_cast<double>(n));
    return cache.emplace(n, std::move(tw)).first->second;
}

void transform_pow2(std::span<cd> a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& tw = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd w = tw[j * stride];
                if (inverse) w = std::conj(w);
                const cd u = a[i + j];
                const cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Bluestein chirp-z: x_k e^{-i pi k^2 / n} convolved with the conjugate chirp
// through a power-of-two transform of length >= 2n-1. k^2 taken mod 2n keeps
// the angle argument small.
void bluestein_forward(std::vector<cd>& a) {
    const std::size_t n = a.size();
    const std::size_t m = next_pow2(2 * n - 1);

    std::vector<cd> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t sq = (static_cast<std::uint64_t>(k) * k) % (2 * n);
        chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(sq) /
                                       static_cast<double>(n));
    }

    std::vector<cd> fa(m), fb(m);
    for (std::size_t k = 0; k < n; ++k) fa[k] = a[k] * chirp[k];
    fb[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) fb[k] = fb[m - k] = std::conj(chirp[k]);

    transform_pow2(fa, false);
    transform_pow2(fb, false);
    for (std::size_t k = 0; k < m; ++k) fa[k] *= fb[k];
    transform_pow2(fa, true);

    for (std::size_t k = 0; k < n; ++k) a[k] = fa[k] * chirp[k];
}

}  // namespace

void transform(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty transform");
    if (is_pow2(n)) {
        transform_pow2(a, inverse);
        return;
    }
    if (!inverse) {
        bluestein_forward(a);
        return;
    }
    for (auto& z : a) z = std::conj(z);
    bluestein_forward(a);
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& z : a) z = std::conj(z) * inv;
}

void dual_real_spectrum(std::span<const double> x, std::span<const double> y,
                        std::vector<cd>& fx, std::vector<cd>& fy) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = x.size();
    std::vector<cd> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = cd(x[i], y[i]);
    transform(z, false);

    fx.resize(n);
    fy.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cd zk = z[k];
        const cd zm = std::conj(z[(n - k) % n]);
        fx[k] = 0.5 * (zk + zm);
        const cd d = zk - zm;  // = 2i * fy[k]
        fy[k] = cd(0.5 * d.imag(), -0.5 * d.real());
    }
}

std::vector<double> inverse_real(std::vector<cd> spectrum) {
    transform(spectrum, true);
    std::vector<double> out(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = spectrum[i].real();
    return out;
}

}  // namespace arsyd::fft
