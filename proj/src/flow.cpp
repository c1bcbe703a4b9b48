#include "gibbsflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gibbsflow/functionals.hpp"
#include "gibbsflow/io.hpp"
#include "gibbsflow/randfield.hpp"

namespace gibbsflow {

namespace {

constexpr cplx kI{0.0, 1.0};

double kinetic(const SpectralField& u, double scale = 1.0) {
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += dispersion(u.basis(), i) * std::norm(u[i]);
    return scale * s;
}

}  // namespace

void FlowConfig::validate(const Basis& basis) const {
    if (!(dt > 0) || !std::isfinite(dt)) throw std::invalid_argument("flow: dt must be positive");
    if (!std::isfinite(horizon)) throw std::invalid_argument("flow: horizon must be finite");
    if (monitor_every < 1) throw std::invalid_argument("flow: monitor cadence must be >= 1");
    if (cutoff < 0 || cutoff > basis.cutoff()) throw std::invalid_argument("flow: cutoff exceeds basis");
    double wmax = 0;
    for (std::size_t i = 0; i < basis.mode_count(); ++i)
        if (basis.rank(i) <= cutoff) wmax = std::max(wmax, std::abs(dispersion(basis, i)));
    if (dt * wmax > std::numbers::pi)
        throw std::invalid_argument("flow: dt " + format_number(dt) + " exceeds stability bound pi / " +
                                    format_number(wmax));
}

SpectralField nonlinear_part(Model model, const SpectralField& u, int cutoff, double power) {
    if (u.model() != model) throw std::invalid_argument("nonlinear_part: field model mismatch");
    switch (model) {
        case Model::half_wave: return -kI * wick_cubic_hw(u, cutoff);
        case Model::torus_nls: return -kI * wick_cubic_torus(u, cutoff);
        case Model::zonal_nls: return -kI * zonal_power(u, cutoff, power);
        case Model::benjamin_ono: {
            const auto sq = bo_square(u, cutoff);
            SpectralField out(u.basis());
            for (int n = 1; n <= cutoff; ++n) out.set(ModeIndex::circle(n), -kI * double(n) * sq.at(ModeIndex::circle(n)));
            return out;
        }
        case Model::dnls: {
            const auto un = project(u, cutoff);
            auto cubic = cubic_projection(u, cutoff);
            const int n0 = u.basis().cutoff();
            for (int n = -cutoff; n <= cutoff; ++n) cubic[n + n0] *= kI * double(n);
            auto nl = kI * cubic;
            nl += cplx(dnls_momentum(u, cutoff)) * un;
            nl += dnls_remainder(u, cutoff);
            return -kI * nl;
        }
    }
    return SpectralField(u.basis());
}

SpectralField rhs(Model model, const SpectralField& u, int cutoff, double coupling, double power) {
    SpectralField out(u.basis());
    if (coupling != 0.0) out = cplx(coupling) * nonlinear_part(model, u, cutoff, power);
    for (std::size_t i = 0; i < u.size(); ++i) out[i] -= kI * dispersion(u.basis(), i) * u[i];
    return out;
}

double hamiltonian(Model model, const SpectralField& u, int cutoff, double coupling, double power) {
    if (u.model() != model) throw std::invalid_argument("hamiltonian: field model mismatch");
    switch (model) {
        case Model::benjamin_ono: {
            double k = 0;
            for (std::size_t i = 0; i < u.size(); ++i) k += u.basis().rank(i) * std::norm(u[i]);
            return -0.5 * k - coupling * signed_cubic_integral(project(u, cutoff)) / 3.0;
        }
        case Model::half_wave: return kinetic(u) - coupling * 0.5 * quartic_hw(u, cutoff);
        case Model::torus_nls: {
            const double a = alpha(Model::torus_nls, cutoff);
            return kinetic(u) + coupling * (quartic_torus(u, cutoff) - a * a);
        }
        case Model::dnls:
            return kinetic(u) + coupling * (-0.75 * dnls_gauge_quartic(u, cutoff) + 0.5 * sextic_integral(u, cutoff));
        case Model::zonal_nls: {
            const auto g = to_grid(smooth_project(u, std::max(cutoff, 1)));
            std::vector<double> f(g.values.size());
            for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::pow(std::abs(g.values[j]), power + 1);
            return kinetic(u, 0.5) + coupling * grid_integral(u.basis(), f) / (power + 1);
        }
    }
    return 0.0;
}

InvariantRecord measure_invariants(const FlowConfig& config, const SpectralField& u, double time) {
    InvariantRecord r;
    r.time = time;
    r.l2_norm = std::sqrt(u.norm_squared());
    r.hamiltonian = hamiltonian(config.model, u, config.cutoff, config.coupling, config.power);
    if (is_circle_model(config.model)) r.mean = u.at(ModeIndex::circle(0)).real();
    for (const auto& z : u.coefficients()) r.max_coefficient = std::max(r.max_coefficient, std::abs(z));
    return r;
}

Trajectory evolve(const FlowConfig& config, const SpectralField& u0) {
    if (u0.model() != config.model) throw std::invalid_argument("evolve: field model does not match config");
    const Basis& basis = u0.basis();
    config.validate(basis);

    const long steps = config.horizon == 0 ? 0 : static_cast<long>(std::ceil(std::abs(config.horizon) / config.dt - 1e-9));
    const double h = steps == 0 ? 0.0 : config.horizon / double(steps);

    const std::size_t m = basis.mode_count();
    std::vector<cplx> half(m), full(m), back_half(m), back_full(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double w = dispersion(basis, i);
        half[i] = std::exp(-kI * w * (0.5 * h));
        full[i] = std::exp(-kI * w * h);
        back_half[i] = std::conj(half[i]);
        back_full[i] = std::conj(full[i]);
    }
    auto scaled = [](const SpectralField& u, const std::vector<cplx>& ph) {
        SpectralField out = u;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] *= ph[i];
        return out;
    };
    auto nl = [&](const SpectralField& u) {
        if (config.coupling == 0.0) return SpectralField(basis);
        return cplx(config.coupling) * nonlinear_part(config.model, u, config.cutoff, config.power);
    };
    auto axpy = [](const SpectralField& x, double a, const SpectralField& y) {
        SpectralField out = x;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
        return out;
    };

    Trajectory traj;
    SpectralField u = u0;
    traj.states.push_back(u);
    traj.records.push_back(measure_invariants(config, u, 0.0));

    for (long s = 1; s <= steps; ++s) {
        const auto k1 = nl(u);
        const auto k2 = scaled(nl(scaled(axpy(u, 0.5 * h, k1), half)), back_half);
        const auto k3 = scaled(nl(scaled(axpy(u, 0.5 * h, k2), half)), back_half);
        const auto k4 = scaled(nl(scaled(axpy(u, h, k3), full)), back_full);
        SpectralField v = u;
        for (std::size_t i = 0; i < m; ++i) v[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        v = scaled(v, full);
        v.enforce_reality();
        for (const auto& z : v.coefficients())
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw BlowUpError("non-finite state after step " + std::to_string(s), (s - 1) * h);
        u = std::move(v);
        if (s % config.monitor_every == 0 || s == steps) {
            traj.states.push_back(u);
            traj.records.push_back(measure_invariants(config, u, s * h));
        }
    }
    return traj;
}

DriftReport invariant_drift(const Trajectory& trajectory) {
    if (trajectory.records.empty()) throw std::invalid_argument("invariant_drift: empty trajectory");
    const auto& r0 = trajectory.records.front();
    auto rel = [](double q, double q0) { return std::abs(q - q0) / std::max(1.0, std::abs(q0)); };
    DriftReport d;
    for (const auto& r : trajectory.records) {
        d.l2 = std::max(d.l2, rel(r.l2_norm, r0.l2_norm));
        d.hamiltonian = std::max(d.hamiltonian, rel(r.hamiltonian, r0.hamiltonian));
        d.mean = std::max(d.mean, rel(r.mean, r0.mean));
    }
    return d;
}

std::string trajectory_csv(const Trajectory& trajectory, const std::vector<ModeIndex>& modes,
                           const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const auto& line : header_comments) out << "# " << line << '\n';
    out << "time";
    for (const auto& k : modes) {
        const std::string tag = trajectory.states.empty() || trajectory.states[0].model() != Model::torus_nls
                                    ? std::to_string(k.n)
                                    : std::to_string(k.n) + "_" + std::to_string(k.m);
        out << ",re_c" << tag << ",im_c" << tag;
    }
    out << ",l2,hamiltonian\n";
    for (std::size_t t = 0; t < trajectory.states.size(); ++t) {
        const auto& u = trajectory.states[t];
        const auto& r = trajectory.records[t];
        out << format_number(r.time);
        for (const auto& k : modes) {
            const cplx z = u.at(k);
            out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
        }
        out << ',' << format_number(r.l2_norm) << ',' << format_number(r.hamiltonian) << '\n';
    }
    return out.str();
}

}  // namespace gibbsflow
