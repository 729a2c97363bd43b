// 2-D discrete Fourier transform used by the feature extractor.
//
// Power-of-two lengths take the iterative radix-2 path; other lengths fall
// back to direct summation, which is adequate for the image sizes this
// toolchain processes.  Forward transform is unnormalized:
//   F(u,v) = sum f(x,y) exp(-2 pi i (ux/M + vy/N)).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace dqzw {

using Cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_radix2(std::vector<Cplx>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const Cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Cplx w(1.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Cplx u = a[i + j];
        const Cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

inline void dft_direct(std::vector<Cplx>& a) {
  const std::size_t n = a.size();
  std::vector<Cplx> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    Cplx acc(0.0);
    for (std::size_t x = 0; x < n; ++x) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(u * x) /
                         static_cast<double>(n);
      acc += a[x] * Cplx(std::cos(ang), std::sin(ang));
    }
    out[u] = acc;
  }
  a = std::move(out);
}

inline void fft_1d(std::vector<Cplx>& a) {
  if (a.size() <= 1) return;
  if (is_pow2(a.size()))
    fft_radix2(a);
  else
    dft_direct(a);
}

}  // namespace detail

// In-place forward 2-D DFT of a row-major rows x cols grid.
inline void fft_2d(std::vector<Cplx>& grid, int rows, int cols) {
  std::vector<Cplx> line;
  line.reserve(static_cast<std::size_t>(std::max(rows, cols)));
  for (int r = 0; r < rows; ++r) {
    line.assign(grid.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                grid.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
    detail::fft_1d(line);
    std::copy(line.begin(), line.end(), grid.begin() + static_cast<std::ptrdiff_t>(r) * cols);
  }
  for (int c = 0; c < cols; ++c) {
    line.resize(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) line[static_cast<std::size_t>(r)] = grid[static_cast<std::size_t>(r) * cols + c];
    detail::fft_1d(line);
    for (int r = 0; r < rows; ++r) grid[static_cast<std::size_t>(r) * cols + c] = line[static_cast<std::size_t>(r)];
  }
}

}  // namespace dqzw
