#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gibbsflow/basis.hpp"
#include "gibbsflow/randfield.hpp"
#include "oracle.hpp"

using namespace gibbsflow;
using std::numbers::pi;

namespace {

SpectralField random_field(Model model, int cutoff, std::uint64_t index) {
    return sample_mu(Basis(model, cutoff), RngStream{11, index});
}

double max_diff(const SpectralField& a, const SpectralField& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("grid size is the smallest power of two above 8(N+1)") {
    CHECK(Basis::default_grid_size(0) == 8);
    CHECK(Basis::default_grid_size(1) == 16);
    CHECK(Basis::default_grid_size(16) == 256);
    CHECK(Basis(Model::half_wave, 16).grid_size() == 256);
    CHECK_THROWS_AS(Basis(Model::half_wave, 16, 128), std::invalid_argument);
    CHECK_NOTHROW(Basis(Model::half_wave, 16, 512));
}

TEST_CASE("mode layout") {
    Basis circle(Model::dnls, 3);
    CHECK(circle.mode_count() == 7);
    CHECK(circle.mode(0).n == -3);
    CHECK(*circle.index_of(ModeIndex::circle(2)) == 5);
    CHECK_FALSE(circle.index_of(ModeIndex::circle(4)));

    Basis zonal(Model::zonal_nls, 4);
    CHECK(zonal.mode_count() == 4);
    CHECK(zonal.mode(0).n == 1);
    CHECK_FALSE(zonal.index_of(ModeIndex::zonal(0)));

    Basis torus(Model::torus_nls, 4);
    CHECK(torus.mode_count() == 5);
    CHECK(torus.mode(0) == ModeIndex::lattice(0, 0));
    CHECK(torus.mode(1) == ModeIndex::lattice(-1, 0));
    CHECK(torus.mode(2) == ModeIndex::lattice(0, -1));
    CHECK(torus.mode(3) == ModeIndex::lattice(0, 1));
    CHECK(torus.mode(4) == ModeIndex::lattice(1, 0));
}

TEST_CASE("project truncates") {
    Basis b(Model::half_wave, 4);
    auto u = unit_mode(b, ModeIndex::circle(1)) + unit_mode(b, ModeIndex::circle(3));
    auto p = project(u, 2);
    CHECK(p.at(ModeIndex::circle(1)) == cplx(1));
    CHECK(p.at(ModeIndex::circle(3)) == cplx(0));
    CHECK(max_diff(project(u, 4), u) == 0);
    CHECK_THROWS_AS(project(u, 5), std::invalid_argument);

    Basis z(Model::zonal_nls, 6);
    auto zu = unit_mode(z, ModeIndex::zonal(1)) + unit_mode(z, ModeIndex::zonal(4));
    auto zp = project(zu, 3);
    CHECK(zp.at(ModeIndex::zonal(1)) == cplx(1));
    CHECK(zp.at(ModeIndex::zonal(4)) == cplx(0));
}

TEST_CASE("projections are idempotent") {
    auto u = random_field(Model::dnls, 8, 1);
    CHECK(max_diff(project(project(u, 5), 5), project(u, 5)) == 0);
    CHECK(max_diff(zero_mean_project(zero_mean_project(u)), zero_mean_project(u)) == 0);
}

TEST_CASE("smooth projector multipliers") {
    CHECK(chi_profile(0.25) == 1.0);
    CHECK(chi_profile(1.0) == 0.0);
    CHECK(chi_profile(0.75) == doctest::Approx(0.5).epsilon(1e-15));
    Basis z(Model::zonal_nls, 6);
    SpectralField u(z, std::vector<cplx>(6, 1.0));
    auto s = smooth_project(u, 4);
    CHECK(s.at(ModeIndex::zonal(1)) == cplx(1));
    CHECK(s.at(ModeIndex::zonal(4)) == cplx(0));
    CHECK(std::abs(s.at(ModeIndex::zonal(3)) - 0.5) < 1e-15);
    CHECK_THROWS_AS(smooth_project(random_field(Model::half_wave, 4, 0), 4), UnsupportedOperation);
}

TEST_CASE("smooth projector contracts and converges") {
    auto u = random_field(Model::zonal_nls, 64, 3);
    double prev = 1e300;
    for (int m : {2, 4, 8, 16, 32, 64, 128}) {
        auto s = smooth_project(u, m);
        CHECK(s.norm_squared() <= u.norm_squared() + 1e-15);
        const double err = (s - u).norm_squared();
        CHECK(err <= prev + 1e-15);
        prev = err;
    }
    CHECK(prev == 0.0);
}

TEST_CASE("zero mean projection") {
    Basis b(Model::dnls, 3);
    auto cosx = 0.5 * (unit_mode(b, ModeIndex::circle(1)) + unit_mode(b, ModeIndex::circle(-1)));
    auto u = cplx(2.0) * unit_mode(b, ModeIndex::circle(0)) + cosx;
    CHECK(max_diff(zero_mean_project(u), cosx) == 0);
    CHECK(max_diff(zero_mean_project(cosx), cosx) == 0);
    CHECK(zero_mean_project(unit_mode(b, ModeIndex::circle(0), 3.0)).norm_squared() == 0);
}

TEST_CASE("dispersion relations") {
    CHECK(dispersion(Model::half_wave, ModeIndex::circle(3)) == 4);
    CHECK(dispersion(Model::zonal_nls, ModeIndex::zonal(2)) == 4);
    CHECK(dispersion(Model::benjamin_ono, ModeIndex::circle(-2)) == -4);
    CHECK(dispersion(Model::dnls, ModeIndex::circle(-3)) == 9);
    CHECK(dispersion(Model::torus_nls, ModeIndex::lattice(1, 1)) == doctest::Approx(1 + 8 * pi * pi));
}

TEST_CASE("BO linear phase matches a direct solve of the linear equation") {
    // u_t + H u_xx = 0 on the grid: apply the symbol of -H d^2 to e^{inx} pointwise.
    Basis b(Model::benjamin_ono, 4);
    for (int n = 1; n <= 4; ++n) {
        auto u = unit_mode(b, ModeIndex::circle(n), 0.5);
        auto uxx = u;
        for (std::size_t i = 0; i < u.size(); ++i) uxx[i] *= -double(b.mode(i).n) * b.mode(i).n;
        auto rate = hilbert_transform(uxx);
        rate *= -1.0;
        // -i omega c_n must equal the computed time derivative.
        CHECK(std::abs(rate.at(ModeIndex::circle(n)) - cplx(0, -dispersion(Model::benjamin_ono, ModeIndex::circle(n))) * 0.5) < 1e-14);
        CHECK(std::abs(rate.at(ModeIndex::circle(-n)) - cplx(0, -dispersion(Model::benjamin_ono, ModeIndex::circle(-n))) * 0.5) < 1e-14);
    }
}

TEST_CASE("Hilbert transform") {
    Basis b(Model::half_wave, 3);
    auto cosx = 0.5 * (unit_mode(b, ModeIndex::circle(1)) + unit_mode(b, ModeIndex::circle(-1)));
    auto sinx = cplx(0, -0.5) * (unit_mode(b, ModeIndex::circle(1)) - unit_mode(b, ModeIndex::circle(-1)));
    CHECK(max_diff(hilbert_transform(cosx), sinx) < 1e-16);
    CHECK(max_diff(hilbert_transform(sinx), cplx(-1.0) * cosx) < 1e-16);
    CHECK(hilbert_transform(unit_mode(b, ModeIndex::circle(0))).norm_squared() == 0);

    auto u = random_field(Model::dnls, 6, 4);
    auto hh = hilbert_transform(hilbert_transform(u));
    CHECK(max_diff(hh, cplx(-1.0) * zero_mean_project(u)) == 0);
}

TEST_CASE("grid round trips") {
    for (Model m : {Model::zonal_nls, Model::benjamin_ono, Model::dnls, Model::half_wave, Model::torus_nls}) {
        auto u = random_field(m, 9, 5);
        CHECK(max_diff(from_grid(to_grid(u)), u) < 1e-12);
    }
}

TEST_CASE("to_grid of the first zonal function is constant") {
    Basis z(Model::zonal_nls, 4);
    auto g = to_grid(unit_mode(z, ModeIndex::zonal(1)));
    for (auto v : g.values) CHECK(std::abs(v - std::sqrt(2 / pi)) < 1e-14);
    Basis c(Model::dnls, 4);
    for (auto v : to_grid(unit_mode(c, ModeIndex::circle(0))).values) CHECK(std::abs(v - 1.0) < 1e-15);
}

TEST_CASE("grid values agree with direct synthesis") {
    auto u = random_field(Model::dnls, 5, 6);
    auto s = oracle::from_field(u, 5);
    auto g = to_grid(u);
    for (std::size_t j = 0; j < g.values.size(); j += 7)
        CHECK(std::abs(g.values[j] - oracle::eval(s, node_coordinate(u.basis(), j))) < 1e-12);

    auto z = random_field(Model::zonal_nls, 6, 6);
    auto zg = to_grid(z);
    for (std::size_t j = 0; j < zg.values.size(); j += 5) {
        const double th = node_coordinate(z.basis(), j);
        cplx direct = 0;
        for (int n = 1; n <= 6; ++n) direct += z.at(ModeIndex::zonal(n)) * oracle::zonal_basis(n, th);
        CHECK(std::abs(zg.values[j] - direct) < 1e-12);
    }
}

TEST_CASE("Parseval and orthonormality by quadrature") {
    for (Model m : {Model::zonal_nls, Model::half_wave, Model::torus_nls}) {
        auto u = random_field(m, 10, 7);
        auto g = to_grid(u);
        std::vector<double> f(g.values.size());
        for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::norm(g.values[j]);
        CHECK(std::abs(grid_integral(u.basis(), f) - u.norm_squared()) < 1e-10);
    }
    Basis z(Model::zonal_nls, 6);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            auto ga = to_grid(unit_mode(z, ModeIndex::zonal(a)));
            auto gb = to_grid(unit_mode(z, ModeIndex::zonal(b)));
            std::vector<double> f(ga.values.size());
            for (std::size_t j = 0; j < f.size(); ++j) f[j] = (ga.values[j] * std::conj(gb.values[j])).real();
            CHECK(std::abs(grid_integral(z, f) - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("Sogge L4 bound for zonal functions") {
    Basis z(Model::zonal_nls, 64);
    for (int n = 1; n <= 64; ++n) {
        auto g = to_grid(unit_mode(z, ModeIndex::zonal(n)));
        std::vector<double> f(g.values.size());
        for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::pow(std::abs(g.values[j]), 4);
        const double l4 = std::pow(grid_integral(z, f), 0.25);
        CHECK(l4 <= 2.0 * std::pow(n, 0.25));
    }
}

TEST_CASE("zonal product formula") {
    Basis z(Model::zonal_nls, 16);
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
            auto gk = to_grid(unit_mode(z, ModeIndex::zonal(k)));
            auto gl = to_grid(unit_mode(z, ModeIndex::zonal(l)));
            GridField prod{z, gk.values};
            for (std::size_t j = 0; j < prod.values.size(); ++j) prod.values[j] *= gl.values[j];
            auto c = from_grid(prod);
            SpectralField expected(z);
            for (int j = 1; j <= std::min(k, l); ++j) expected[std::abs(k - l) + 2 * j - 2] += std::sqrt(2 / pi);
            CHECK(max_diff(c, expected) <= 1e-10);
        }
}

TEST_CASE("BO fields stay real and mean-free") {
    Basis b(Model::benjamin_ono, 3);
    SpectralField u(b, {1.0, cplx(0, 2), 3.0, 4.0, cplx(0, 2), 1.0, 0.0});
    CHECK(u.at(ModeIndex::circle(0)) == cplx(0));
    CHECK(u.at(ModeIndex::circle(1)) == std::conj(u.at(ModeIndex::circle(-1))));
    for (auto v : to_grid(u).values) CHECK(std::abs(v.imag()) < 1e-14);
}
