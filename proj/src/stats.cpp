#include "gibbsflow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gibbsflow/io.hpp"
#include "gibbsflow/parallel.hpp"

namespace gibbsflow {

namespace {

std::vector<std::int64_t> merged(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Number of complete g-conj(g) pairings of a sorted multiset matched against itself.
double pairing_count(const std::vector<std::int64_t>& keys) {
    double count = 1;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        count *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return count;
}

void charge_budget(double& used, double add, std::size_t budget) {
    used += add;
    if (used > double(budget))
        throw ResourceError("pairing budget of " + std::to_string(budget) +
                            " exceeded; use a Monte Carlo estimate instead");
}

std::vector<std::pair<std::int64_t, int>> charge_of(const Monomial& m) {
    std::map<std::int64_t, int> net;
    for (auto k : m.plain) ++net[k];
    for (auto k : m.conjugated) --net[k];
    std::vector<std::pair<std::int64_t, int>> out;
    for (auto [k, c] : net)
        if (c != 0) out.emplace_back(k, c);
    return out;
}

}  // namespace

PolynomialFunctional PolynomialFunctional::constant(cplx value) {
    PolynomialFunctional p;
    p.add_term({}, value);
    return p;
}

PolynomialFunctional PolynomialFunctional::gaussian(std::int64_t key, cplx coefficient, bool conjugated) {
    PolynomialFunctional p;
    Monomial m;
    (conjugated ? m.conjugated : m.plain).push_back(key);
    p.add_term(std::move(m), coefficient);
    return p;
}

void PolynomialFunctional::add_term(Monomial m, cplx c) {
    if (c == cplx{}) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx{}) terms_.erase(it);
    }
}

std::size_t PolynomialFunctional::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

PolynomialFunctional PolynomialFunctional::conj() const {
    PolynomialFunctional out;
    for (const auto& [m, c] : terms_) out.add_term({m.conjugated, m.plain}, std::conj(c));
    return out;
}

cplx PolynomialFunctional::evaluate(const std::function<cplx(std::int64_t)>& g) const {
    cplx total = 0;
    for (const auto& [m, c] : terms_) {
        cplx v = c;
        for (auto k : m.plain) v *= g(k);
        for (auto k : m.conjugated) v *= std::conj(g(k));
        total += v;
    }
    return total;
}

PolynomialFunctional& PolynomialFunctional::operator+=(const PolynomialFunctional& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

PolynomialFunctional& PolynomialFunctional::operator-=(const PolynomialFunctional& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

PolynomialFunctional& PolynomialFunctional::operator*=(cplx s) {
    if (s == cplx{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

PolynomialFunctional operator*(const PolynomialFunctional& a, const PolynomialFunctional& b) {
    PolynomialFunctional out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term({merged(ma.plain, mb.plain), merged(ma.conjugated, mb.conjugated)}, ca * cb);
    return out;
}

cplx isserlis_expect(const PolynomialFunctional& f, std::size_t budget) {
    if (f.degree() > 8) throw std::invalid_argument("isserlis_expect: degree above 8");
    double used = 0;
    cplx total = 0;
    for (const auto& [m, c] : f.terms()) {
        if (m.plain != m.conjugated) continue;
        const double pairs = pairing_count(m.plain);
        charge_budget(used, pairs, budget);
        total += c * pairs;
    }
    return total;
}

double isserlis_second_moment(const PolynomialFunctional& f, std::size_t budget) {
    if (2 * f.degree() > 8) throw std::invalid_argument("isserlis_second_moment: degree above 4");
    std::map<std::vector<std::pair<std::int64_t, int>>, std::vector<std::pair<const Monomial*, cplx>>> classes;
    for (const auto& [m, c] : f.terms()) classes[charge_of(m)].emplace_back(&m, c);
    double used = 0;
    cplx total = 0;
    for (const auto& [charge, members] : classes) {
        for (const auto& [ma, ca] : members)
            for (const auto& [mb, cb] : members) {
                const auto keys = merged(ma->plain, mb->conjugated);
                const double pairs = pairing_count(keys);
                charge_budget(used, pairs, budget);
                total += ca * std::conj(cb) * pairs;
            }
    }
    return total.real();
}

PolynomialFunctional field_coefficient(Model model, ModeIndex mode) {
    if (model == Model::benjamin_ono) {
        if (mode.n == 0) return {};
        const double s = gaussian_weight(model, mode);
        const auto key = static_cast<std::int64_t>(mode_key(ModeIndex::circle(std::abs(mode.n))));
        return PolynomialFunctional::gaussian(key, s, mode.n < 0);
    }
    return PolynomialFunctional::gaussian(static_cast<std::int64_t>(mode_key(mode)), gaussian_weight(model, mode));
}

namespace {

PolynomialFunctional circle_coefficient(Model model, int n, int cutoff) {
    if (std::abs(n) > cutoff) return {};
    return field_coefficient(model, ModeIndex::circle(n));
}

PolynomialFunctional l4_polynomial(Model model, int cutoff) {
    PolynomialFunctional out;
    for (int a = -cutoff; a <= cutoff; ++a)
        for (int b = -cutoff; b <= cutoff; ++b)
            for (int c = -cutoff; c <= cutoff; ++c) {
                const int d = a - b + c;
                if (std::abs(d) > cutoff) continue;
                out += circle_coefficient(model, a, cutoff) * circle_coefficient(model, b, cutoff).conj() *
                       circle_coefficient(model, c, cutoff) * circle_coefficient(model, d, cutoff).conj();
            }
    return out;
}

}  // namespace

PolynomialFunctional mass_polynomial(Model model, int cutoff) {
    PolynomialFunctional out;
    Basis basis(model, cutoff);
    for (std::size_t i = 0; i < basis.mode_count(); ++i) {
        const auto c = field_coefficient(model, basis.mode(i));
        out += c * c.conj();
    }
    return out;
}

PolynomialFunctional quartic_hw_polynomial(int cutoff) {
    const auto mass = mass_polynomial(Model::half_wave, cutoff);
    return cplx(2.0) * (mass * mass) - l4_polynomial(Model::half_wave, cutoff);
}

PolynomialFunctional dnls_current_polynomial(int cutoff) {
    PolynomialFunctional out;
    for (int n = -cutoff; n <= cutoff; ++n) {
        const auto c = circle_coefficient(Model::dnls, n, cutoff);
        out -= cplx(double(n)) * (c * c.conj());
    }
    return out;
}

PolynomialFunctional bo_square_polynomial(int cutoff, int k) {
    PolynomialFunctional out;
    if (k == 0) return out;
    for (int a = -cutoff; a <= cutoff; ++a) {
        const int b = k - a;
        if (std::abs(b) > cutoff) continue;
        out += circle_coefficient(Model::benjamin_ono, a, cutoff) * circle_coefficient(Model::benjamin_ono, b, cutoff);
    }
    return out;
}

PolynomialFunctional wick_cubic_hw_polynomial(int cutoff, int k) {
    PolynomialFunctional out;
    if (std::abs(k) > cutoff) return out;
    for (int a = -cutoff; a <= cutoff; ++a)
        for (int b = -cutoff; b <= cutoff; ++b) {
            const int c = k - a + b;
            if (std::abs(c) > cutoff) continue;
            out += circle_coefficient(Model::half_wave, a, cutoff) * circle_coefficient(Model::half_wave, b, cutoff).conj() *
                   circle_coefficient(Model::half_wave, c, cutoff);
        }
    out -= cplx(2.0) * (mass_polynomial(Model::half_wave, cutoff) * circle_coefficient(Model::half_wave, k, cutoff));
    return out;
}

std::optional<double> exact_cauchy_moment(Model model, FunctionalId id, int n, int m, double sigma, std::size_t budget) {
    if (n > 16 || m > n) return std::nullopt;
    auto bracket = [](int k) { return std::sqrt(1.0 + double(k) * k); };
    try {
        switch (id) {
            case FunctionalId::quartic_hw:
                if (model != Model::half_wave) return std::nullopt;
                return isserlis_second_moment(quartic_hw_polynomial(n) - quartic_hw_polynomial(m), budget);
            case FunctionalId::dnls_current:
                if (model != Model::dnls) return std::nullopt;
                return isserlis_second_moment(dnls_current_polynomial(n) - dnls_current_polynomial(m), budget);
            case FunctionalId::dnls_momentum: {
                if (model != Model::dnls) return std::nullopt;
                auto t = [](int c) {
                    return cplx(2.0) * dnls_current_polynomial(c) + cplx(1.5) * l4_polynomial(Model::dnls, c);
                };
                return isserlis_second_moment(t(n) - t(m), budget);
            }
            case FunctionalId::mass_recentered: {
                if (model == Model::torus_nls) return std::nullopt;
                auto g = [&](int c) { return mass_polynomial(model, c) - PolynomialFunctional::constant(alpha(model, c)); };
                return isserlis_second_moment(g(n) - g(m), budget);
            }
            case FunctionalId::bo_square: {
                if (model != Model::benjamin_ono) return std::nullopt;
                double total = 0;
                for (int k = -2 * n; k <= 2 * n; ++k) {
                    if (k == 0) continue;
                    total += std::pow(bracket(k), -2 * sigma) *
                             isserlis_second_moment(bo_square_polynomial(n, k) - bo_square_polynomial(m, k), budget);
                }
                return total;
            }
            case FunctionalId::wick_cubic_hw: {
                if (model != Model::half_wave) return std::nullopt;
                double total = 0;
                for (int k = -n; k <= n; ++k)
                    total += std::pow(bracket(k), -2 * sigma) *
                             isserlis_second_moment(wick_cubic_hw_polynomial(n, k) - wick_cubic_hw_polynomial(m, k), budget);
                return total;
            }
            default: return std::nullopt;
        }
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

SlopeFit fit_log_slope(std::span<const double> x, std::span<const double> y, std::span<const double> y_se) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_log_slope: need at least two matching points");
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("fit_log_slope: values must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double var = 0;
    if (y_se.size() == n) {
        for (std::size_t i = 0; i < n; ++i) {
            const double rel = y_se[i] / y[i];
            const double w = (lx[i] - mx) / sxx;
            var += w * w * rel * rel;
        }
    } else if (n > 2) {
        double rss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ly[i] - fit.intercept - fit.slope * lx[i];
            rss += r * r;
        }
        var = rss / double(n - 2) / sxx;
    }
    fit.standard_error = std::sqrt(var);
    fit.ci_low = fit.slope - 1.96 * fit.standard_error;
    fit.ci_high = fit.slope + 1.96 * fit.standard_error;
    return fit;
}

bool RateReport::monotone(double z) const {
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double tol = z * std::hypot(points[i].standard_error, points[i - 1].standard_error);
        if (points[i].estimate > points[i - 1].estimate + tol) return false;
    }
    return true;
}

namespace {

struct FunctionalValue {
    std::optional<SpectralField> field;
    double scalar = 0;
};

FunctionalValue evaluate(FunctionalId id, const SpectralField& u, int cutoff) {
    switch (id) {
        case FunctionalId::bo_square: return {bo_square(u, cutoff), 0};
        case FunctionalId::wick_cubic_hw: return {wick_cubic_hw(u, cutoff), 0};
        case FunctionalId::wick_cubic_torus: return {wick_cubic_torus(u, cutoff), 0};
        case FunctionalId::dnls_remainder: return {dnls_remainder(u, cutoff), 0};
        case FunctionalId::zonal_power: return {zonal_power(u, cutoff, 3.0), 0};
        case FunctionalId::mass_recentered: return {std::nullopt, mass_recentered(u, cutoff)};
        case FunctionalId::quartic_hw: return {std::nullopt, quartic_hw(u, cutoff)};
        case FunctionalId::quartic_torus: return {std::nullopt, quartic_torus(u, cutoff)};
        case FunctionalId::dnls_momentum: return {std::nullopt, dnls_momentum(u, cutoff)};
        case FunctionalId::dnls_current: return {std::nullopt, dnls_current(u, cutoff)};
        case FunctionalId::alpha: return {std::nullopt, alpha(u.model(), cutoff)};
    }
    return {};
}

}  // namespace

RateReport cauchy_rate(Model model, FunctionalId id, int n, const std::vector<int>& ms, double sigma,
                       std::size_t samples, const RngStream& stream, bool with_exact) {
    if (ms.empty()) throw std::invalid_argument("cauchy_rate: empty M list");
    for (int m : ms)
        if (m < 0 || m >= n) throw std::invalid_argument("cauchy_rate: every M must be below N");
    if (is_field_valued(id) && !(sigma > 0)) throw std::invalid_argument("cauchy_rate: sigma must be positive");
    if (samples < 2) throw std::invalid_argument("cauchy_rate: need at least two samples");

    const Basis basis(model, n);
    std::vector<double> values(samples * ms.size());
    parallel_for(samples, [&](std::size_t i) {
        const auto phi = sample_mu(basis, stream.at(stream.index + i));
        const auto top = evaluate(id, phi, n);
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const auto low = evaluate(id, phi, ms[j]);
            double v;
            if (top.field) {
                const auto diff = *top.field - resample(*low.field, top.field->basis());
                v = std::pow(sobolev_norm(diff, -sigma), 2);
            } else {
                v = std::pow(top.scalar - low.scalar, 2);
            }
            values[i * ms.size() + j] = v;
        }
    });

    RateReport rep;
    rep.model = model;
    rep.functional = id;
    rep.reference = n;
    rep.sigma = sigma;
    rep.samples = samples;
    rep.seed = stream.seed;
    std::vector<double> xs, ys, ses;
    for (std::size_t j = 0; j < ms.size(); ++j) {
        double s1 = 0, s2 = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            const double v = values[i * ms.size() + j];
            s1 += v;
            s2 += v * v;
        }
        const double mean = s1 / samples;
        const double var = std::max(0.0, (s2 / samples - mean * mean) * samples / (samples - 1.0));
        RatePoint p{ms[j], mean, std::sqrt(var / samples), std::nullopt};
        if (with_exact) p.exact = exact_cauchy_moment(model, id, n, ms[j], sigma);
        rep.points.push_back(p);
        if (ms[j] > 0 && mean > 0) {
            xs.push_back(ms[j]);
            ys.push_back(mean);
            ses.push_back(p.standard_error);
        }
    }
    if (xs.size() >= 2) rep.fit = fit_log_slope(xs, ys, ses);
    return rep;
}

std::string rate_csv(const RateReport& report, const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const auto& line : header_comments) out << "# " << line << '\n';
    out << "# slope=" << format_number(report.fit.slope) << " ci_low=" << format_number(report.fit.ci_low)
        << " ci_high=" << format_number(report.fit.ci_high) << '\n';
    out << "m,estimate,standard_error,exact\n";
    for (const auto& p : report.points)
        out << p.m << ',' << format_number(p.estimate) << ',' << format_number(p.standard_error) << ','
            << (p.exact ? format_number(*p.exact) : std::string()) << '\n';
    return out.str();
}

TwoSampleResult weighted_two_sample(std::span<const double> obs0, std::span<const double> obs_t,
                                    std::span<const double> weights, const RngStream& stream,
                                    std::size_t permutations) {
    const std::size_t n = obs0.size();
    if (obs_t.size() != n || weights.size() != n) throw std::invalid_argument("weighted_two_sample: length mismatch");
    if (permutations < 500) throw std::invalid_argument("weighted_two_sample: need at least 500 permutations");
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w)) throw std::invalid_argument("weighted_two_sample: weights must be finite and >= 0");
        total += w;
    }
    if (!(total > 0)) throw DegenerateDensityError("weighted_two_sample: all weights are zero");

    // Pairs with equal observations and pairs with zero weight never move the statistic.
    struct Entry {
        double value;
        std::uint32_t pair;
        bool second;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < n; ++i) {
        if (obs0[i] == obs_t[i] || weights[i] == 0) continue;
        entries.push_back({obs0[i], static_cast<std::uint32_t>(i), false});
        entries.push_back({obs_t[i], static_cast<std::uint32_t>(i), true});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.pair != b.pair) return a.pair < b.pair;
        return a.second < b.second;
    });
    std::vector<bool> group_end(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e)
        group_end[e] = e + 1 == entries.size() || entries[e + 1].value != entries[e].value;

    std::vector<std::uint8_t> flip(n, 0);
    auto sweep = [&] {
        double cum = 0, d = 0;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const auto& en = entries[e];
            const bool in_first = en.second == static_cast<bool>(flip[en.pair]);
            cum += in_first ? weights[en.pair] : -weights[en.pair];
            if (group_end[e]) d = std::max(d, std::abs(cum));
        }
        return d / total;
    };

    TwoSampleResult res;
    res.statistic = sweep();
    if (entries.empty()) return {0.0, 1.0};
    std::size_t extreme = 0;
    const std::size_t blocks = (n + 63) / 64;
    for (std::size_t p = 0; p < permutations; ++p) {
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::uint64_t bits = stream.bits(2, p * blocks + b);
            for (std::size_t k = 0; k < 64 && b * 64 + k < n; ++k) flip[b * 64 + k] = (bits >> k) & 1u;
        }
        if (sweep() >= res.statistic * (1 - 1e-12)) ++extreme;
    }
    res.p_value = double(1 + extreme) / double(1 + permutations);
    return res;
}

std::vector<Observable> default_observables(Model model, int cutoff) {
    const int low = std::min(8, cutoff);
    std::vector<Observable> obs;
    obs.push_back({"mass_low", [low](const SpectralField& u) { return project(u, low).norm_squared(); }});
    auto first = [model](const SpectralField& u) {
        const Basis& b = u.basis();
        if (model == Model::zonal_nls) return u[0];
        if (model == Model::torus_nls) return b.mode_count() > 1 ? u[1] : u[0];
        return u.at(ModeIndex::circle(1));
    };
    obs.push_back({"re_c1", [first](const SpectralField& u) { return first(u).real(); }});
    obs.push_back({"im_c1", [first](const SpectralField& u) { return first(u).imag(); }});
    if (model == Model::benjamin_ono)
        obs.push_back({"cubic", [cutoff](const SpectralField& u) { return signed_cubic_integral(project(u, cutoff)); }});
    if (model == Model::half_wave)
        obs.push_back({"quartic", [cutoff](const SpectralField& u) { return quartic_hw(u, cutoff); }});
    if (model == Model::torus_nls)
        obs.push_back({"quartic", [cutoff](const SpectralField& u) { return quartic_torus(u, cutoff); }});
    return obs;
}

InvarianceReport invariance_report(const GibbsConfig& gibbs, const FlowConfig& flow,
                                   const std::vector<Observable>& observables, std::size_t count,
                                   const RngStream& stream, const InvarianceOptions& options) {
    gibbs.validate();
    if (gibbs.model != flow.model || gibbs.cutoff != flow.cutoff)
        throw std::invalid_argument("invariance_report: gibbs and flow configs disagree on model or cutoff");
    if (count == 0) throw std::invalid_argument("invariance_report: need samples");
    const Basis basis(gibbs.model, gibbs.cutoff);
    flow.validate(basis);
    FlowConfig quiet = flow;
    quiet.monitor_every = std::numeric_limits<int>::max();

    const std::size_t k = observables.size();
    std::vector<double> w(count), before(count * k), after(count * k);
    std::vector<DriftReport> drift(count);
    parallel_for(count, [&](std::size_t i) {
        const auto v = sample_mu(basis, stream.at(stream.index + i));
        w[i] = options.uniform_weights ? 1.0 : density(gibbs, v);
        for (std::size_t j = 0; j < k; ++j) before[i * k + j] = observables[j].eval(v);
        if (w[i] == 0) {
            for (std::size_t j = 0; j < k; ++j) after[i * k + j] = before[i * k + j];
            return;
        }
        const auto traj = evolve(quiet, v);
        drift[i] = invariant_drift(traj);
        for (std::size_t j = 0; j < k; ++j) after[i * k + j] = observables[j].eval(traj.states.back());
    });

    InvarianceReport rep;
    rep.gibbs = gibbs;
    rep.flow = flow;
    rep.seed = stream.seed;
    rep.count = count;
    rep.ess = effective_sample_size(w);
    rep.uniform_weights = options.uniform_weights;
    for (const auto& d : drift) {
        rep.drifts.l2 = std::max(rep.drifts.l2, d.l2);
        rep.drifts.hamiltonian = std::max(rep.drifts.hamiltonian, d.hamiltonian);
        rep.drifts.mean = std::max(rep.drifts.mean, d.mean);
    }
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> a(count), b(count);
        for (std::size_t i = 0; i < count; ++i) {
            a[i] = before[i * k + j];
            b[i] = after[i * k + j];
        }
        const auto t = weighted_two_sample(a, b, w, stream.at(stream.index + count + j), options.permutations);
        rep.observables.push_back({observables[j].name, t.statistic, t.p_value});
    }
    return rep;
}

std::string report_json(const InvarianceReport& report, const std::string& resolved_config) {
    nlohmann::ordered_json j;
    j["model"] = model_name(report.gibbs.model);
    j["N"] = report.gibbs.cutoff;
    j["T"] = report.flow.horizon;
    j["seed"] = report.seed;
    j["ess"] = report.ess;
    j["count"] = report.count;
    j["uniform_weights"] = report.uniform_weights;
    j["observables"] = nlohmann::ordered_json::array();
    for (const auto& o : report.observables) j["observables"].push_back({{"name", o.name}, {"ks", o.ks}, {"p", o.p_value}});
    j["drifts"] = {{"l2", report.drifts.l2}, {"hamiltonian", report.drifts.hamiltonian}, {"mean", report.drifts.mean}};
    j["gibbs"] = report.gibbs.canonical();
    j["config"] = resolved_config;
    j["version"] = version_string();
    return j.dump(2) + "\n";
}

}  // namespace gibbsflow
