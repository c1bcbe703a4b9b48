#include "gibbsflow/randfield.hpp"

#include <cmath>
#include <numbers>

namespace gibbsflow {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t h = mix64(seed ^ 0x6A09E667F3BCC909ull);
    return mix64(h ^ (index * 0xD1B54A32D192ED03ull));
}

double unit_open(std::uint64_t x) { return (double((x >> 11) + 1)) * 0x1.0p-53; }

}  // namespace

cplx RngStream::complex_gaussian(std::uint64_t key) const {
    const std::uint64_t h = mix64(stream_key(seed, index) ^ (key * 0x8CB92BA72F3D8DD7ull));
    const double u1 = unit_open(mix64(h ^ 1));
    const double u2 = unit_open(mix64(h ^ 2));
    const double r = std::sqrt(-std::log(u1));
    const double a = 2 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

std::uint64_t RngStream::bits(std::uint64_t channel, std::uint64_t counter) const {
    std::uint64_t h = mix64(stream_key(seed, index) ^ (channel * 0xA0761D6478BD642Full) ^ 0x8000000000000000ull);
    return mix64(h ^ (counter * 0xE7037ED1A0B428DBull));
}

double RngStream::uniform(std::uint64_t channel, std::uint64_t counter) const {
    return unit_open(bits(channel, counter));
}

std::uint64_t mode_key(ModeIndex mode) {
    const auto x = static_cast<std::uint32_t>(mode.n);
    const auto y = static_cast<std::uint32_t>(mode.m);
    return (std::uint64_t(y) << 32) | x;
}

double gaussian_weight(Model model, ModeIndex mode) {
    const double n = std::abs(double(mode.n));
    switch (model) {
        case Model::zonal_nls: return 1.0 / n;
        case Model::benjamin_ono: return n == 0 ? 0.0 : 1.0 / std::sqrt(2.0 * n);
        case Model::dnls: return 1.0 / std::sqrt(1.0 + n * n);
        case Model::half_wave: return 1.0 / std::sqrt(1.0 + n);
        case Model::torus_nls: {
            const double lam2 = 4 * std::numbers::pi * std::numbers::pi * (n * n + double(mode.m) * mode.m);
            return 1.0 / std::sqrt(1.0 + lam2);
        }
    }
    return 0.0;
}

SpectralField sample_mu(const Basis& basis, const RngStream& stream) {
    SpectralField u(basis);
    const Model model = basis.model();
    for (std::size_t i = 0; i < basis.mode_count(); ++i) {
        const ModeIndex k = basis.mode(i);
        if (model == Model::benjamin_ono) {
            if (k.n <= 0) continue;
            const cplx c = gaussian_weight(model, k) * stream.complex_gaussian(mode_key(k));
            u.set(k, c);
            continue;
        }
        u[i] = gaussian_weight(model, k) * stream.complex_gaussian(mode_key(k));
    }
    return u;
}

SpectralField sample_mu(Model model, int cutoff, const RngStream& stream) {
    return sample_mu(Basis(model, cutoff), stream);
}

double sobolev_weight(const Basis& basis, std::size_t i) {
    if (basis.model() == Model::zonal_nls) return basis.rank(i);
    return std::sqrt(1.0 + basis.eigenvalue(i));
}

double sobolev_norm(const SpectralField& u, double s) {
    double acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::pow(sobolev_weight(u.basis(), i), 2 * s) * std::norm(u[i]);
    return std::sqrt(acc);
}

double lq_norm(const SpectralField& u, double q) {
    const auto g = to_grid(u);
    std::vector<double> f(g.values.size());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::pow(std::abs(g.values[j]), q);
    return std::pow(grid_integral(u.basis(), f), 1.0 / q);
}

double signed_cubic_integral(const SpectralField& u) {
    const auto g = to_grid(u);
    std::vector<double> f(g.values.size());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::pow(g.values[j].real(), 3);
    return grid_integral(u.basis(), f);
}

}  // namespace gibbsflow
