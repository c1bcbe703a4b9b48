#include "gibbsflow/functionals.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace gibbsflow {

using std::numbers::pi;

namespace {

constexpr std::array<std::pair<FunctionalId, std::string_view>, 11> kNames{{
    {FunctionalId::alpha, "alpha"},
    {FunctionalId::mass_recentered, "mass-recentered"},
    {FunctionalId::bo_square, "bo-square"},
    {FunctionalId::wick_cubic_hw, "wick-cubic-hw"},
    {FunctionalId::wick_cubic_torus, "wick-cubic-torus"},
    {FunctionalId::quartic_hw, "quartic-hw"},
    {FunctionalId::quartic_torus, "quartic-torus"},
    {FunctionalId::dnls_momentum, "dnls-momentum"},
    {FunctionalId::dnls_current, "dnls-current"},
    {FunctionalId::dnls_remainder, "dnls-remainder"},
    {FunctionalId::zonal_power, "zonal-power"},
}};

void require(const SpectralField& u, Model model, const char* what) {
    if (u.model() != model)
        throw UnsupportedOperation(std::string(what) + " is not defined for model " + std::string(model_name(u.model())));
}

std::vector<cplx> values_of(const SpectralField& u, int cutoff) { return to_grid(project(u, cutoff)).values; }

double mean_abs_pow(const Basis& b, const std::vector<cplx>& v, double q) {
    std::vector<double> f(v.size());
    for (size_t j = 0; j < v.size(); ++j) f[j] = std::pow(std::abs(v[j]), q);
    return grid_integral(b, f);
}

// Full-spectrum circle arithmetic on a grid of size g.
struct CircleGrid {
    int g;

    std::vector<cplx> spectrum(const SpectralField& u, int cutoff) const {
        std::vector<cplx> s(g);
        const int n0 = u.basis().cutoff();
        for (int n = -cutoff; n <= cutoff; ++n) s[detail::fft_slot(n, g)] = u[n + n0];
        return s;
    }
    std::vector<cplx> values(const std::vector<cplx>& s) const { return detail::circle_synthesize(s); }
    std::vector<cplx> coeffs(const std::vector<cplx>& v) const { return detail::circle_analyze(v); }

    std::vector<cplx> derivative(std::vector<cplx> s) const {
        for (int k = 0; k < g; ++k) s[k] *= cplx(0, detail::fft_frequency(k, g));
        return s;
    }
    std::vector<cplx> antiderivative(std::vector<cplx> s) const {
        s[0] = 0.0;
        for (int k = 1; k < g; ++k) s[k] /= cplx(0, detail::fft_frequency(k, g));
        return s;
    }
    std::vector<cplx> high_pass(std::vector<cplx> s, int cutoff) const {
        for (int k = 0; k < g; ++k)
            if (std::abs(detail::fft_frequency(k, g)) <= cutoff) s[k] = 0.0;
        return s;
    }
};

std::vector<cplx> pointwise(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size());
    for (size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
    return out;
}

}  // namespace

std::string_view functional_name(FunctionalId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "unknown";
}

FunctionalId parse_functional(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

bool is_field_valued(FunctionalId id) {
    switch (id) {
        case FunctionalId::bo_square:
        case FunctionalId::wick_cubic_hw:
        case FunctionalId::wick_cubic_torus:
        case FunctionalId::dnls_remainder:
        case FunctionalId::zonal_power: return true;
        default: return false;
    }
}

double alpha(Model model, int cutoff) {
    double s = 0;
    switch (model) {
        case Model::zonal_nls:
            for (int n = 1; n <= cutoff; ++n) s += 1.0 / (double(n) * n);
            return s;
        case Model::benjamin_ono:
            for (int n = 1; n <= cutoff; ++n) s += 1.0 / n;
            return s;
        case Model::dnls:
            for (int n = -cutoff; n <= cutoff; ++n) s += 1.0 / (1.0 + double(n) * n);
            return s;
        case Model::half_wave:
            for (int n = -cutoff; n <= cutoff; ++n) s += 1.0 / (1.0 + std::abs(n));
            return s;
        case Model::torus_nls: {
            auto pts = torus_lattice(static_cast<size_t>(cutoff) + 1);
            for (int i = 0; i <= cutoff; ++i) {
                const auto k = (*pts)[i];
                s += 1.0 / (1.0 + 4 * pi * pi * (double(k.x) * k.x + double(k.y) * k.y));
            }
            return s;
        }
    }
    return s;
}

double mass_recentered(const SpectralField& u, int cutoff) {
    return project(u, cutoff).norm_squared() - alpha(u.model(), cutoff);
}

SpectralField bo_square(const SpectralField& u, int cutoff) {
    require(u, Model::benjamin_ono, "bo_square");
    project(u, cutoff);
    Basis out_basis(Model::benjamin_ono, 2 * cutoff);
    CircleGrid cg{out_basis.grid_size()};
    auto v = cg.values(cg.spectrum(u, cutoff));
    for (auto& z : v) z = z.real() * z.real();
    auto s = cg.coeffs(v);
    SpectralField out(out_basis);
    for (int n = 1; n <= 2 * cutoff; ++n) out.set(ModeIndex::circle(n), s[n]);
    return out;
}

SpectralField cubic_projection(const SpectralField& u, int cutoff) {
    if (u.model() == Model::zonal_nls) throw UnsupportedOperation("cubic_projection needs a circle or torus model");
    auto v = values_of(u, cutoff);
    for (auto& z : v) z *= std::norm(z);
    return project(from_grid({u.basis(), std::move(v)}), cutoff);
}

SpectralField wick_cubic_hw(const SpectralField& u, int cutoff) {
    require(u, Model::half_wave, "wick_cubic_hw");
    auto un = project(u, cutoff);
    auto out = cubic_projection(u, cutoff);
    out -= cplx(2.0 * un.norm_squared()) * un;
    return out;
}

SpectralField wick_cubic_torus(const SpectralField& u, int cutoff) {
    require(u, Model::torus_nls, "wick_cubic_torus");
    auto out = cubic_projection(u, cutoff);
    out -= cplx(2.0 * alpha(Model::torus_nls, cutoff)) * project(u, cutoff);
    return out;
}

double quartic_hw(const SpectralField& u, int cutoff) {
    require(u, Model::half_wave, "quartic_hw");
    const double m = project(u, cutoff).norm_squared();
    return -mean_abs_pow(u.basis(), values_of(u, cutoff), 4) + 2 * m * m;
}

double quartic_torus(const SpectralField& u, int cutoff) {
    require(u, Model::torus_nls, "quartic_torus");
    const double a = alpha(Model::torus_nls, cutoff);
    const double m = project(u, cutoff).norm_squared();
    return 0.5 * mean_abs_pow(u.basis(), values_of(u, cutoff), 4) - 2 * a * m + a * a;
}

double dnls_current(const SpectralField& u, int cutoff) {
    require(u, Model::dnls, "dnls_current");
    project(u, cutoff);
    const int n0 = u.basis().cutoff();
    double s = 0;
    for (int n = -cutoff; n <= cutoff; ++n) s -= n * std::norm(u[n + n0]);
    return s;
}

double dnls_momentum(const SpectralField& u, int cutoff) {
    const double j = dnls_current(u, cutoff);
    return 2 * j + 1.5 * mean_abs_pow(u.basis(), values_of(u, cutoff), 4);
}

double dnls_gauge_quartic(const SpectralField& u, int cutoff) {
    require(u, Model::dnls, "dnls_gauge_quartic");
    CircleGrid cg{u.basis().grid_size()};
    auto v = cg.values(cg.spectrum(u, cutoff));
    auto sq = pointwise(v, v);
    auto dsq = cg.values(cg.derivative(cg.coeffs(sq)));
    std::vector<double> f(v.size());
    for (size_t j = 0; j < v.size(); ++j) f[j] = (std::conj(sq[j]) * dsq[j]).imag();
    return grid_integral(u.basis(), f);
}

double sextic_integral(const SpectralField& u, int cutoff) {
    return mean_abs_pow(u.basis(), values_of(u, cutoff), 6);
}

SpectralField dnls_remainder(const SpectralField& u, int cutoff) {
    require(u, Model::dnls, "dnls_remainder");
    project(u, cutoff);
    int g = 1;
    while (g < 12 * (cutoff + 1)) g *= 2;
    CircleGrid cg{g};
    auto v = cg.values(cg.spectrum(u, cutoff));
    std::vector<cplx> vb(v.size()), mod4(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
        vb[j] = std::conj(v[j]);
        mod4[j] = std::norm(v[j]) * std::norm(v[j]);
    }
    auto perp = [&](const std::vector<cplx>& w) { return cg.values(cg.high_pass(cg.coeffs(w), cutoff)); };
    auto d = [&](const std::vector<cplx>& w) { return cg.values(cg.derivative(cg.coeffs(w))); };

    // First part: u d^{-1}[u P(u d(ubar^2)) + ubar P(ubar d(u^2))].
    auto a1 = pointwise(v, perp(pointwise(v, d(pointwise(vb, vb)))));
    auto a2 = pointwise(vb, perp(pointwise(vb, d(pointwise(v, v)))));
    // Second part: u d^{-1}[u P(|u|^4 ubar) - ubar P(|u|^4 u)].
    auto b1 = pointwise(v, perp(pointwise(mod4, vb)));
    auto b2 = pointwise(vb, perp(pointwise(mod4, v)));
    std::vector<cplx> inner(v.size());
    for (size_t j = 0; j < v.size(); ++j) inner[j] = 1.5 * (a1[j] + a2[j]) + cplx(0, 1.5) * (b1[j] - b2[j]);
    auto prim = cg.values(cg.antiderivative(cg.coeffs(inner)));
    auto s = cg.coeffs(pointwise(v, prim));

    SpectralField out(u.basis());
    const int n0 = u.basis().cutoff();
    for (int n = -cutoff; n <= cutoff; ++n) out[n + n0] = s[detail::fft_slot(n, g)];
    return out;
}

SpectralField zonal_power(const SpectralField& u, int cutoff, double r) {
    require(u, Model::zonal_nls, "zonal_power");
    if (r < 1) throw std::invalid_argument("zonal_power: r must be >= 1");
    auto g = to_grid(smooth_project(u, cutoff));
    for (auto& z : g.values) z *= std::pow(std::abs(z), r - 1);
    return smooth_project(from_grid(g), cutoff);
}

}  // namespace gibbsflow
