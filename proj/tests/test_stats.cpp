#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gibbsflow/stats.hpp"

using namespace gibbsflow;

namespace {

// Monte Carlo mean and standard error of |f|^2 (or Re f) with g drawn from the library stream.
struct McResult {
    double mean = 0;
    double se = 0;
};

McResult monte_carlo(const PolynomialFunctional& f, bool squared, std::size_t samples, std::uint64_t seed) {
    double s = 0, s2 = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        RngStream st{seed, i};
        cplx v = f.evaluate([&](std::int64_t k) { return st.complex_gaussian(static_cast<std::uint64_t>(k)); });
        double x = squared ? std::norm(v) : v.real();
        s += x;
        s2 += x * x;
    }
    const double mean = s / samples;
    return {mean, std::sqrt(std::max(0.0, s2 / samples - mean * mean) / samples)};
}

}  // namespace

TEST_CASE("isserlis examples") {
    auto g = PolynomialFunctional::gaussian(5);
    auto g4 = g * g * g.conj() * g.conj();
    CHECK(isserlis_expect(g4).real() == doctest::Approx(2.0));
    CHECK(isserlis_expect(g * g).real() == 0.0);
    CHECK(isserlis_expect(g * g.conj()).real() == 1.0);
    CHECK(isserlis_expect(PolynomialFunctional::constant(2.5)).real() == 2.5);

    CHECK(isserlis_expect(quartic_hw_polynomial(1)).real() == doctest::Approx(3.0));
    for (int n : {1, 2, 4}) {
        double closed = 0;
        for (int k = -n; k <= n; ++k) closed += 2.0 / ((1.0 + std::abs(k)) * (1.0 + std::abs(k)));
        CHECK(isserlis_expect(quartic_hw_polynomial(n)).real() == doctest::Approx(closed).epsilon(1e-12));
    }
    auto d = dnls_current_polynomial(2) - dnls_current_polynomial(1);
    CHECK(isserlis_second_moment(d) == doctest::Approx(8.0 / 25.0).epsilon(1e-12));
    CHECK(*exact_cauchy_moment(Model::dnls, FunctionalId::dnls_current, 2, 1, 0) == doctest::Approx(8.0 / 25.0));
}

TEST_CASE("isserlis limits") {
    PolynomialFunctional s;
    for (int k = 0; k < 10; ++k) s += PolynomialFunctional::gaussian(k) * PolynomialFunctional::gaussian(k, 1.0, true);
    auto s4 = s * s * s * s;
    CHECK_THROWS_AS(isserlis_expect(s4, 10), ResourceError);
    CHECK_THROWS_AS(isserlis_expect(s4 * s), std::invalid_argument);
    CHECK_THROWS_AS(isserlis_second_moment(s4), std::invalid_argument);
    CHECK_FALSE(exact_cauchy_moment(Model::half_wave, FunctionalId::quartic_hw, 64, 8, 0).has_value());
}

TEST_CASE("isserlis agrees with Monte Carlo") {
    const std::size_t n = 40000;
    {
        auto f = quartic_hw_polynomial(2);
        auto mc = monte_carlo(f, false, n, 101);
        CHECK(std::abs(mc.mean - isserlis_expect(f).real()) < 4 * mc.se);
    }
    {
        auto f = dnls_current_polynomial(2) - dnls_current_polynomial(1);
        auto mc = monte_carlo(f, true, n, 102);
        CHECK(std::abs(mc.mean - isserlis_second_moment(f)) < 4 * mc.se);
    }
    for (int k : {1, 3, 6}) {
        auto f = bo_square_polynomial(4, k) - bo_square_polynomial(2, k);
        auto mc = monte_carlo(f, true, n, 103 + k);
        CHECK(std::abs(mc.mean - isserlis_second_moment(f)) < 4 * mc.se);
    }
    {
        auto f = wick_cubic_hw_polynomial(3, 1) - wick_cubic_hw_polynomial(1, 1);
        auto mc = monte_carlo(f, true, n, 110);
        CHECK(std::abs(mc.mean - isserlis_second_moment(f)) < 4 * mc.se);
    }
}

TEST_CASE("polynomials match the grid functionals on samples") {
    auto check = [](Model m, int n, const PolynomialFunctional& p, auto&& direct) {
        for (std::uint64_t i = 0; i < 5; ++i) {
            RngStream st{7, i};
            auto u = sample_mu(Basis(m, n), st);
            cplx v = p.evaluate([&](std::int64_t k) { return st.complex_gaussian(static_cast<std::uint64_t>(k)); });
            CHECK(std::abs(v - cplx(direct(u))) < 1e-10);
        }
    };
    check(Model::half_wave, 3, quartic_hw_polynomial(3), [](const SpectralField& u) { return quartic_hw(u, 3); });
    check(Model::dnls, 3, dnls_current_polynomial(3), [](const SpectralField& u) { return dnls_current(u, 3); });
    check(Model::half_wave, 3, mass_polynomial(Model::half_wave, 3),
          [](const SpectralField& u) { return u.norm_squared(); });
    check(Model::benjamin_ono, 3, bo_square_polynomial(3, 2),
          [](const SpectralField& u) { return bo_square(u, 3).at(ModeIndex::circle(2)); });
    check(Model::half_wave, 3, wick_cubic_hw_polynomial(3, -1),
          [](const SpectralField& u) { return wick_cubic_hw(u, 3).at(ModeIndex::circle(-1)); });
}

TEST_CASE("slope fit calibration") {
    std::vector<double> x{4, 8, 16, 32, 64}, y, se;
    for (double m : x) {
        y.push_back(1.0 / m);
        se.push_back(0.001 / m);
    }
    auto fit = fit_log_slope(x, y, se);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.02));
    CHECK(fit.ci_low <= -1.0);
    CHECK(fit.ci_high >= -1.0);
    auto plain = fit_log_slope(x, y);
    CHECK(std::abs(plain.slope + 1.0) < 1e-12);
    CHECK_THROWS_AS(fit_log_slope(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST_CASE("cauchy rate against exact values") {
    auto rep = cauchy_rate(Model::benjamin_ono, FunctionalId::bo_square, 8, {1, 2, 4}, 0.25, 4000, RngStream{9, 0});
    REQUIRE(rep.points.size() == 3);
    for (const auto& p : rep.points) {
        CHECK(p.estimate >= 0);
        REQUIRE(p.exact.has_value());
        CHECK(std::abs(p.estimate - *p.exact) < 4 * p.standard_error);
    }
    CHECK(rep.monotone());

    auto hw = cauchy_rate(Model::half_wave, FunctionalId::quartic_hw, 8, {1, 2, 4}, 0, 4000, RngStream{10, 0});
    for (const auto& p : hw.points) CHECK(std::abs(p.estimate - *p.exact) < 4 * p.standard_error);
    CHECK(hw.monotone());

    auto csv = rate_csv(hw, {"model=halfwave"});
    CHECK(csv.rfind("# model=halfwave\n# slope=", 0) == 0);
    CHECK(csv.find("m,estimate,standard_error,exact\n") != std::string::npos);
    CHECK_THROWS_AS(cauchy_rate(Model::half_wave, FunctionalId::quartic_hw, 8, {8}, 0, 10, RngStream{}),
                    std::invalid_argument);
}

TEST_CASE("two-sample examples") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> nd;
    std::vector<double> a(10000), b(10000), w(10000, 1.0);
    for (auto& v : a) v = nd(gen);
    for (auto& v : b) v = nd(gen) + 0.5;

    auto same = weighted_two_sample(a, a, w, RngStream{1, 0});
    CHECK(same.statistic == 0);
    CHECK(same.p_value == 1);

    std::vector<double> lo(50), hi(50), w50(50, 1.0);
    for (int i = 0; i < 50; ++i) {
        lo[i] = i;
        hi[i] = 100 + i;
    }
    CHECK(weighted_two_sample(lo, hi, w50, RngStream{1, 0}).statistic == doctest::Approx(1.0));

    auto shifted = weighted_two_sample(a, b, w, RngStream{1, 0});
    CHECK(shifted.p_value < 1e-3);

    std::vector<double> zero(50, 0.0);
    CHECK_THROWS_AS(weighted_two_sample(lo, hi, zero, RngStream{}), DegenerateDensityError);
    CHECK_THROWS_AS(weighted_two_sample(lo, hi, w50, RngStream{}, 100), std::invalid_argument);
}

TEST_CASE("two-sample is invariant under monotone transforms") {
    std::mt19937_64 gen(6);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> ud(0, 2);
    std::vector<double> a(300), b(300), w(300), ea(300), eb(300);
    for (int i = 0; i < 300; ++i) {
        a[i] = nd(gen);
        b[i] = nd(gen) + 0.1;
        w[i] = ud(gen);
        ea[i] = std::atan(a[i]) * 3 + 1;
        eb[i] = std::atan(b[i]) * 3 + 1;
    }
    auto r1 = weighted_two_sample(a, b, w, RngStream{3, 0});
    auto r2 = weighted_two_sample(ea, eb, w, RngStream{3, 0});
    CHECK(r1.statistic == doctest::Approx(r2.statistic).epsilon(1e-12));
    CHECK(r1.p_value == r2.p_value);
}

TEST_CASE("permutation p-values are uniform under the null") {
    std::mt19937_64 gen(8);
    std::normal_distribution<double> nd;
    const int runs = 200;
    std::vector<int> bins(10, 0);
    for (int r = 0; r < runs; ++r) {
        std::vector<double> a(100), b(100), w(100, 1.0);
        for (int i = 0; i < 100; ++i) {
            a[i] = nd(gen);
            b[i] = nd(gen);
        }
        auto res = weighted_two_sample(a, b, w, RngStream{11, std::uint64_t(r)}, 500);
        bins[std::min(9, int(res.p_value * 10))]++;
    }
    double chi2 = 0;
    for (int c : bins) chi2 += (c - runs / 10.0) * (c - runs / 10.0) / (runs / 10.0);
    CHECK(chi2 < 21.666);  // chi-square 9 dof at 1%
}

TEST_CASE("invariance report at T = 0") {
    auto g = GibbsConfig::defaults(Model::half_wave, 8);
    FlowConfig f;
    f.model = Model::half_wave;
    f.cutoff = 8;
    f.horizon = 0;
    auto rep = invariance_report(g, f, default_observables(Model::half_wave, 8), 300, RngStream{12, 0},
                                 InvarianceOptions{500, false});
    for (const auto& o : rep.observables) {
        CHECK(o.ks == 0);
        CHECK(o.p_value == 1);
    }
    auto js = report_json(rep, "model=halfwave");
    CHECK(js.find("\"observables\"") != std::string::npos);
    CHECK(js.find("\"version\"") != std::string::npos);
}

TEST_CASE("negative control: mu is not invariant under a strong flow") {
    // Soft expectation; reported, not enforced.
    auto g = GibbsConfig::defaults(Model::half_wave, 8);
    FlowConfig f;
    f.model = Model::half_wave;
    f.cutoff = 8;
    f.horizon = 1;
    f.dt = 1e-3;
    f.coupling = 5;
    auto rep = invariance_report(g, f, default_observables(Model::half_wave, 8), 1000, RngStream{13, 0},
                                 InvarianceOptions{500, true});
    double pmin = 1;
    for (const auto& o : rep.observables) pmin = std::min(pmin, o.p_value);
    WARN(pmin < 0.01);
}
