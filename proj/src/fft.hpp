#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gibbsflow::detail {

using cplx = std::complex<double>;

// Unnormalized in-place transforms. sign = -1 is the forward (e^{-i}) direction.
void fft_1d(std::span<cplx> data, int sign);
void fft_2d(std::span<cplx> data, int side, int sign);
// DST-I: y_k = 2 sum_j x_j sin(pi (j+1)(k+1) / (n+1)).
void dst1(std::span<double> data);

inline int fft_frequency(int k, int n) { return k <= n / 2 ? k : k - n; }
inline int fft_slot(int freq, int n) { return ((freq % n) + n) % n; }

// Circle helpers on full spectra in FFT order.
std::vector<cplx> circle_synthesize(std::span<const cplx> spectrum);
std::vector<cplx> circle_analyze(std::span<const cplx> values);

// Zonal helpers: sine amplitudes a_n (n = 1..G-1) <-> f(theta_j) sin(theta_j) on interior nodes.
std::vector<cplx> sine_synthesize(std::span<const cplx> amplitudes);
std::vector<cplx> sine_analyze(std::span<const cplx> values);

}  // namespace gibbsflow::detail
