#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gibbsflow/flow.hpp"
#include "gibbsflow/functionals.hpp"
#include "gibbsflow/gibbs.hpp"
#include "gibbsflow/randfield.hpp"

using namespace gibbsflow;
using std::numbers::pi;

namespace {

double max_diff(const SpectralField& a, const SpectralField& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

FlowConfig config(Model m, int n, double dt, double t) {
    FlowConfig c;
    c.model = m;
    c.cutoff = n;
    c.dt = dt;
    c.horizon = t;
    return c;
}

// Central-difference directional derivative of the Hamiltonian.
double hamiltonian_slope(Model m, const SpectralField& u, const SpectralField& v, int n) {
    const double h = 1e-5;
    return (hamiltonian(m, u + cplx(h) * v, n) - hamiltonian(m, u - cplx(h) * v, n)) / (2 * h);
}

}  // namespace

TEST_CASE("rhs examples") {
    Basis b(Model::half_wave, 2);
    auto r = rhs(Model::half_wave, unit_mode(b, ModeIndex::circle(1)), 2);
    CHECK(max_diff(r, unit_mode(b, ModeIndex::circle(1), cplx(0, -1))) < 1e-14);
    for (Model m : {Model::zonal_nls, Model::benjamin_ono, Model::dnls, Model::half_wave, Model::torus_nls}) {
        Basis z(m, 4);
        CHECK(rhs(m, SpectralField(z), 4).norm_squared() == 0);
    }
    Basis bo(Model::benjamin_ono, 4);
    auto u = unit_mode(bo, ModeIndex::circle(1), 1e-3);
    auto lin = rhs(Model::benjamin_ono, u, 4, 0.0);
    CHECK(std::abs(lin.at(ModeIndex::circle(1)) - cplx(0, -1e-3)) < 1e-18);
    CHECK(std::abs(lin.at(ModeIndex::circle(-1)) - cplx(0, 1e-3)) < 1e-18);
}

TEST_CASE("hamiltonian examples") {
    Basis bo(Model::benjamin_ono, 2);
    CHECK(hamiltonian(Model::benjamin_ono, unit_mode(bo, ModeIndex::circle(1), 0.5), 2) == doctest::Approx(-0.25));
    Basis hw(Model::half_wave, 1);
    CHECK(hamiltonian(Model::half_wave, unit_mode(hw, ModeIndex::circle(0)), 1) == doctest::Approx(0.5));
    for (Model m : {Model::zonal_nls, Model::benjamin_ono, Model::dnls, Model::half_wave, Model::torus_nls})
        CHECK(hamiltonian(m, SpectralField(Basis(m, 3)), 3) == 0.0);
}

TEST_CASE("vector fields are Hamiltonian") {
    // For dc/dt = -i dH/dconj(c) (or the BO Gardner form) the derivative of H along the flow vanishes and
    // dH along i*v equals 2 Re <rhs, v> up to the model's normalization.
    for (Model m : {Model::half_wave, Model::torus_nls, Model::dnls, Model::zonal_nls, Model::benjamin_ono}) {
        Basis b(m, 6);
        auto u = sample_mu(b, RngStream{14, 0});
        auto f = rhs(m, u, 6);
        CHECK(std::abs(hamiltonian_slope(m, u, f, 6)) < 1e-6 * std::max(1.0, std::sqrt(f.norm_squared())));
    }
}

TEST_CASE("single-mode solutions") {
    Basis hw(Model::half_wave, 4);
    auto u0 = unit_mode(hw, ModeIndex::circle(0), 1.0);
    auto traj = evolve(config(Model::half_wave, 4, 1e-2, pi), u0);
    CHECK(std::abs(traj.states.back().at(ModeIndex::circle(0)) - 1.0) < 1e-8);

    Basis tb(Model::torus_nls, 4);
    const cplx c0(0.4, 0.1);
    auto v0 = unit_mode(tb, ModeIndex::lattice(0, 1), c0);
    auto cfg = config(Model::torus_nls, 4, 1e-3, 0.5);
    auto t2 = evolve(cfg, v0);
    const double w = 1 + 4 * pi * pi + std::norm(c0) - 2 * alpha(Model::torus_nls, 4);
    CHECK(std::abs(t2.states.back().at(ModeIndex::lattice(0, 1)) - std::exp(cplx(0, -w * 0.5)) * c0) < 1e-8);
}

TEST_CASE("linear control run is exact") {
    for (Model m : {Model::zonal_nls, Model::benjamin_ono, Model::dnls, Model::half_wave, Model::torus_nls}) {
        Basis b(m, 6);
        auto u0 = sample_mu(b, RngStream{1, 1});
        auto cfg = config(m, 6, 1e-3, 0.7);
        cfg.coupling = 0;
        auto traj = evolve(cfg, u0);
        for (std::size_t i = 0; i < b.mode_count(); ++i) {
            const cplx expect = std::exp(cplx(0, -dispersion(b, i) * 0.7)) * u0[i];
            CHECK(std::abs(traj.states.back()[i] - expect) < 1e-12);
        }
    }
}

TEST_CASE("stability guard") {
    Basis b(Model::dnls, 16);
    auto cfg = config(Model::dnls, 16, 0.02, 1.0);
    CHECK_THROWS_AS(evolve(cfg, SpectralField(b)), std::invalid_argument);
    cfg.dt = 0;
    CHECK_THROWS_AS(evolve(cfg, SpectralField(b)), std::invalid_argument);
}

namespace {

// First mu draw with nonzero density weight.
SpectralField typical(Model m, int n, std::uint64_t seed) {
    const Basis b(m, n);
    const auto g = GibbsConfig::defaults(m, n);
    for (std::uint64_t i = 0;; ++i) {
        auto u = sample_mu(b, RngStream{seed, i});
        if (density(g, u) > 0) return u;
    }
}

}  // namespace

TEST_CASE("half-wave conservation at N = 16") {
    auto u0 = typical(Model::half_wave, 16, 2);
    auto d = invariant_drift(evolve(config(Model::half_wave, 16, 1e-3, 1.0), u0));
    CHECK(d.l2 <= 1e-10);
    CHECK(d.hamiltonian <= 1e-6);
}

TEST_CASE("energy drift is fourth order in dt") {
    for (Model m : {Model::half_wave, Model::benjamin_ono, Model::dnls, Model::zonal_nls, Model::torus_nls}) {
        auto u0 = typical(m, 16, 3);
        auto coarse = invariant_drift(evolve(config(m, 16, 2e-3, 1.0), u0));
        auto fine = invariant_drift(evolve(config(m, 16, 1e-3, 1.0), u0));
        CAPTURE(model_name(m));
        CHECK(coarse.hamiltonian / fine.hamiltonian > 10.0);
        CHECK(coarse.hamiltonian / fine.hamiltonian < 40.0);
    }
}

TEST_CASE("high modes evolve linearly and the BO mean stays zero") {
    Basis b(Model::benjamin_ono, 12);
    auto u0 = sample_mu(b, RngStream{2, 0});
    auto traj = evolve(config(Model::benjamin_ono, 8, 1e-3, 0.5), u0);
    for (const auto& s : traj.states) {
        CHECK(s.at(ModeIndex::circle(0)) == cplx(0));
        for (int n = 9; n <= 12; ++n)
            CHECK(std::abs(std::abs(s.at(ModeIndex::circle(n))) - std::abs(u0.at(ModeIndex::circle(n)))) < 1e-12);
    }
}

TEST_CASE("time reversal") {
    Basis b(Model::half_wave, 8);
    auto u0 = sample_mu(b, RngStream{4, 0});
    auto fwd = evolve(config(Model::half_wave, 8, 1e-3, 0.5), u0);
    auto back = evolve(config(Model::half_wave, 8, 1e-3, -0.5), fwd.states.back());
    CHECK(max_diff(back.states.back(), u0) < 1e-7);
}

TEST_CASE("drift of a constant trajectory is zero") {
    Basis b(Model::half_wave, 4);
    auto traj = evolve(config(Model::half_wave, 4, 1e-3, 0.0), unit_mode(b, ModeIndex::circle(1)));
    auto d = invariant_drift(traj);
    CHECK(d.l2 == 0);
    CHECK(d.hamiltonian == 0);
    CHECK_THROWS_AS(invariant_drift(Trajectory{}), std::invalid_argument);
}

TEST_CASE("blow-up is reported with the last good time") {
    Basis b(Model::zonal_nls, 4);
    auto u0 = unit_mode(b, ModeIndex::zonal(1), 1e200);
    auto cfg = config(Model::zonal_nls, 4, 1e-3, 1.0);
    try {
        evolve(cfg, u0);
        FAIL("expected blow-up");
    } catch (const BlowUpError& e) {
        CHECK(e.last_good_time >= 0);
    }
}

TEST_CASE("trajectory csv") {
    Basis b(Model::half_wave, 2);
    auto cfg = config(Model::half_wave, 2, 1e-2, 0.05);
    cfg.monitor_every = 2;
    auto traj = evolve(cfg, unit_mode(b, ModeIndex::circle(1)));
    CHECK(traj.records.size() == 4);
    auto csv = trajectory_csv(traj, {ModeIndex::circle(1)}, {"model=halfwave"});
    CHECK(csv.rfind("# model=halfwave\ntime,re_c1,im_c1,l2,hamiltonian\n", 0) == 0);
}
