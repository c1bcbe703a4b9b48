#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gibbsflow/basis.hpp"
#include "gibbsflow/flow.hpp"
#include "gibbsflow/functionals.hpp"
#include "gibbsflow/gibbs.hpp"
#include "gibbsflow/randfield.hpp"

namespace gibbsflow {

// Product of g_k over `plain` and conj(g_k) over `conjugated`; keys kept sorted.
struct Monomial {
    std::vector<std::int64_t> plain;
    std::vector<std::int64_t> conjugated;

    std::size_t degree() const { return plain.size() + conjugated.size(); }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Finite polynomial in i.i.d. complex normalized Gaussians g_k and their conjugates.
class PolynomialFunctional {
public:
    PolynomialFunctional() = default;

    static PolynomialFunctional constant(cplx value);
    static PolynomialFunctional gaussian(std::int64_t key, cplx coefficient = 1.0, bool conjugated = false);

    const std::map<Monomial, cplx>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    std::size_t degree() const;

    PolynomialFunctional conj() const;
    cplx evaluate(const std::function<cplx(std::int64_t)>& g) const;

    PolynomialFunctional& operator+=(const PolynomialFunctional& other);
    PolynomialFunctional& operator-=(const PolynomialFunctional& other);
    PolynomialFunctional& operator*=(cplx s);
    friend PolynomialFunctional operator+(PolynomialFunctional a, const PolynomialFunctional& b) { return a += b; }
    friend PolynomialFunctional operator-(PolynomialFunctional a, const PolynomialFunctional& b) { return a -= b; }
    friend PolynomialFunctional operator*(cplx s, PolynomialFunctional a) { return a *= s; }
    friend PolynomialFunctional operator*(const PolynomialFunctional& a, const PolynomialFunctional& b);

private:
    void add_term(Monomial m, cplx c);
    std::map<Monomial, cplx> terms_;
};

constexpr std::size_t kDefaultPairingBudget = 1'000'000;

// E[f] by Wick pairing: only g-conj(g) pairs of equal keys contribute.
cplx isserlis_expect(const PolynomialFunctional& f, std::size_t budget = kDefaultPairingBudget);
// E|f|^2, pairing monomials only within equal charge classes.
double isserlis_second_moment(const PolynomialFunctional& f, std::size_t budget = kDefaultPairingBudget);

// Coefficient of the Gaussian field at a mode as a linear polynomial (BO pairs -n with conj of n).
PolynomialFunctional field_coefficient(Model model, ModeIndex mode);

PolynomialFunctional quartic_hw_polynomial(int cutoff);
PolynomialFunctional dnls_current_polynomial(int cutoff);
PolynomialFunctional mass_polynomial(Model model, int cutoff);
PolynomialFunctional bo_square_polynomial(int cutoff, int k);
PolynomialFunctional wick_cubic_hw_polynomial(int cutoff, int k);

// Exact E||F_N - F_M||^2 (H^{-sigma} for field functionals); nullopt when not available or over budget.
std::optional<double> exact_cauchy_moment(Model model, FunctionalId id, int n, int m, double sigma,
                                          std::size_t budget = kDefaultPairingBudget);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double standard_error = 0;
    double ci_low = 0;
    double ci_high = 0;
};

// Least-squares slope of log y against log x; y_se propagates into the interval.
SlopeFit fit_log_slope(std::span<const double> x, std::span<const double> y, std::span<const double> y_se = {});

struct RatePoint {
    int m = 0;
    double estimate = 0;
    double standard_error = 0;
    std::optional<double> exact;
};

struct RateReport {
    Model model = Model::half_wave;
    FunctionalId functional = FunctionalId::quartic_hw;
    int reference = 0;
    double sigma = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<RatePoint> points;
    SlopeFit fit;

    // Each estimate is at most the previous one plus z combined standard errors.
    bool monotone(double z = 2.0) const;
};

RateReport cauchy_rate(Model model, FunctionalId id, int n, const std::vector<int>& ms, double sigma,
                       std::size_t samples, const RngStream& stream, bool with_exact = true);

std::string rate_csv(const RateReport& report, const std::vector<std::string>& header_comments = {});

struct TwoSampleResult {
    double statistic = 0;
    double p_value = 1;
};

TwoSampleResult weighted_two_sample(std::span<const double> obs0, std::span<const double> obs_t,
                                    std::span<const double> weights, const RngStream& stream,
                                    std::size_t permutations = 1000);

struct Observable {
    std::string name;
    std::function<double(const SpectralField&)> eval;
};

std::vector<Observable> default_observables(Model model, int cutoff);

struct ObservableResult {
    std::string name;
    double ks = 0;
    double p_value = 1;
};

struct InvarianceOptions {
    std::size_t permutations = 1000;
    bool uniform_weights = false;  // tests mu itself instead of rho_N
};

struct InvarianceReport {
    GibbsConfig gibbs;
    FlowConfig flow;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    double ess = 0;
    bool uniform_weights = false;
    std::vector<ObservableResult> observables;
    DriftReport drifts;
};

InvarianceReport invariance_report(const GibbsConfig& gibbs, const FlowConfig& flow,
                                   const std::vector<Observable>& observables, std::size_t count,
                                   const RngStream& stream, const InvarianceOptions& options = {});

std::string report_json(const InvarianceReport& report, const std::string& resolved_config = {});

}  // namespace gibbsflow
