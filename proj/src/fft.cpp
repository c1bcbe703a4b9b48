#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gibbsflow::detail {
namespace {

enum class Kind { c1, c2, dst };

std::mutex plan_mutex;
std::map<std::tuple<Kind, int, int>, fftw_plan> plans;

fftw_plan get_plan(Kind kind, int n, int sign) {
    std::lock_guard lock(plan_mutex);
    auto key = std::make_tuple(kind, n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p = nullptr;
    if (kind == Kind::c1) {
        auto* buf = fftw_alloc_complex(n);
        p = fftw_plan_dft_1d(n, buf, buf, sign, flags);
        fftw_free(buf);
    } else if (kind == Kind::c2) {
        auto* buf = fftw_alloc_complex(static_cast<size_t>(n) * n);
        p = fftw_plan_dft_2d(n, n, buf, buf, sign, flags);
        fftw_free(buf);
    } else {
        auto* buf = fftw_alloc_real(n);
        p = fftw_plan_r2r_1d(n, buf, buf, FFTW_RODFT00, flags);
        fftw_free(buf);
    }
    if (!p) throw std::runtime_error("fftw planning failed");
    plans.emplace(key, p);
    return p;
}

fftw_complex* as_fftw(std::span<cplx> d) { return reinterpret_cast<fftw_complex*>(d.data()); }

}  // namespace

void fft_1d(std::span<cplx> data, int sign) {
    auto p = get_plan(Kind::c1, static_cast<int>(data.size()), sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    fftw_execute_dft(p, as_fftw(data), as_fftw(data));
}

void fft_2d(std::span<cplx> data, int side, int sign) {
    if (data.size() != static_cast<size_t>(side) * side) throw std::invalid_argument("fft_2d: size mismatch");
    auto p = get_plan(Kind::c2, side, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    fftw_execute_dft(p, as_fftw(data), as_fftw(data));
}

void dst1(std::span<double> data) {
    if (data.empty()) return;
    auto p = get_plan(Kind::dst, static_cast<int>(data.size()), 0);
    fftw_execute_r2r(p, data.data(), data.data());
}

std::vector<cplx> circle_synthesize(std::span<const cplx> spectrum) {
    std::vector<cplx> v(spectrum.begin(), spectrum.end());
    fft_1d(v, +1);
    return v;
}

std::vector<cplx> circle_analyze(std::span<const cplx> values) {
    std::vector<cplx> s(values.begin(), values.end());
    fft_1d(s, -1);
    const double inv = 1.0 / static_cast<double>(s.size());
    for (auto& z : s) z *= inv;
    return s;
}

namespace {

std::vector<cplx> sine_pass(std::span<const cplx> in, double scale) {
    const size_t n = in.size();
    std::vector<double> re(n), im(n);
    for (size_t j = 0; j < n; ++j) {
        re[j] = in[j].real();
        im[j] = in[j].imag();
    }
    dst1(re);
    dst1(im);
    std::vector<cplx> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = scale * cplx(re[j], im[j]);
    return out;
}

}  // namespace

// s_j = sum_n a_n sin(pi n j / G), j = 1..G-1; G - 1 = amplitudes.size().
std::vector<cplx> sine_synthesize(std::span<const cplx> amplitudes) { return sine_pass(amplitudes, 0.5); }

std::vector<cplx> sine_analyze(std::span<const cplx> values) {
    const double g = static_cast<double>(values.size() + 1);
    return sine_pass(values, 1.0 / g);
}

}  // namespace gibbsflow::detail
