#include "gibbsflow/gibbs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "gibbsflow/functionals.hpp"
#include "gibbsflow/io.hpp"
#include "gibbsflow/parallel.hpp"

namespace gibbsflow {

namespace {

constexpr double kLogMax = 709.0;
constexpr std::uint64_t kAcceptChannel = 1;

double log_chi(const GibbsConfig& c, double x) {
    const double w = cutoff_weight(c, x);
    return w > 0 ? std::log(w) : -std::numeric_limits<double>::infinity();
}

}  // namespace

DensityFamily family_for(Model model) {
    switch (model) {
        case Model::zonal_nls: return DensityFamily::zonal_potential;
        case Model::benjamin_ono: return DensityFamily::bo_weight;
        case Model::dnls: return DensityFamily::dnls_weight;
        case Model::half_wave: return DensityFamily::half_wave_theta;
        case Model::torus_nls: return DensityFamily::torus_quartic;
    }
    return DensityFamily::zonal_potential;
}

std::string_view profile_name(CutoffProfile p) { return p == CutoffProfile::indicator ? "indicator" : "smooth"; }

CutoffProfile parse_profile(std::string_view name) {
    if (name == "indicator") return CutoffProfile::indicator;
    if (name == "smooth") return CutoffProfile::smooth;
    throw std::invalid_argument("unknown cutoff profile '" + std::string(name) + "'");
}

void GibbsConfig::validate() const {
    if (cutoff < 0) throw std::invalid_argument("gibbs: cutoff must be non-negative");
    if (!(kappa > 0) || !std::isfinite(kappa)) throw std::invalid_argument("gibbs: kappa must be positive");
    if (model == Model::zonal_nls && !(power >= 1 && power < 5))
        throw std::invalid_argument("gibbs: zonal power r must lie in [1, 5)");
    if (beta && !(*beta >= 0)) throw std::invalid_argument("gibbs: beta must be non-negative");
}

std::string GibbsConfig::canonical() const {
    return "model=" + std::string(model_name(model)) + ";cutoff=" + std::to_string(cutoff) +
           ";kappa=" + format_number(kappa) + ";profile=" + std::string(profile_name(profile)) +
           ";power=" + format_number(power);
}

std::uint64_t GibbsConfig::fingerprint() const { return fnv1a64(canonical()); }

GibbsConfig GibbsConfig::defaults(Model model, int cutoff) {
    GibbsConfig c;
    c.model = model;
    c.cutoff = cutoff;
    c.kappa = model == Model::dnls ? 1.0 : 2.0;
    return c;
}

GibbsConfig GibbsConfig::from_canonical(std::string_view text) {
    GibbsConfig c;
    while (!text.empty()) {
        const auto semi = text.find(';');
        const auto item = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) continue;
        const std::string key(item.substr(0, eq));
        const std::string value(item.substr(eq + 1));
        if (key == "model") c.model = parse_model(value);
        else if (key == "cutoff") c.cutoff = std::stoi(value);
        else if (key == "kappa") c.kappa = std::stod(value);
        else if (key == "profile") c.profile = parse_profile(value);
        else if (key == "power") c.power = std::stod(value);
    }
    return c;
}

double cutoff_weight(const GibbsConfig& config, double x) {
    if (config.profile == CutoffProfile::indicator) return std::abs(x) <= config.kappa ? 1.0 : 0.0;
    return chi_profile(x / config.kappa);
}

double log_density(const GibbsConfig& config, const SpectralField& u) {
    if (u.model() != config.model) throw std::invalid_argument("density: field model does not match config");
    const int n = config.cutoff;
    switch (config.family()) {
        case DensityFamily::zonal_potential: {
            const double r = config.power;
            const auto g = to_grid(smooth_project(u, std::max(n, 1)));
            std::vector<double> f(g.values.size());
            for (size_t j = 0; j < f.size(); ++j) f[j] = std::pow(std::abs(g.values[j]), r + 1);
            return -(2.0 / (r + 1)) * grid_integral(u.basis(), f);
        }
        case DensityFamily::bo_weight: {
            const double lc = log_chi(config, mass_recentered(u, n));
            if (std::isinf(lc)) return lc;
            return lc - (2.0 / 3.0) * signed_cubic_integral(project(u, n));
        }
        case DensityFamily::dnls_weight: {
            const double lc = log_chi(config, std::sqrt(project(u, n).norm_squared()));
            if (std::isinf(lc)) return lc;
            return lc + 0.75 * dnls_gauge_quartic(u, n) - 0.5 * sextic_integral(u, n);
        }
        case DensityFamily::half_wave_theta: {
            const double lc = log_chi(config, mass_recentered(u, n));
            if (std::isinf(lc)) return lc;
            return lc + 0.5 * quartic_hw(u, n);
        }
        case DensityFamily::torus_quartic: return -quartic_torus(u, n);
    }
    return 0.0;
}

double density(const GibbsConfig& config, const SpectralField& u) {
    const double l = log_density(config, u);
    if (std::isinf(l) && l < 0) return 0.0;
    return std::exp(std::min(l, kLogMax));
}

NormalizationEstimate estimate_normalization(GibbsConfig& config, std::size_t samples, const RngStream& stream) {
    config.validate();
    if (samples < 100) throw std::invalid_argument("estimate_normalization: need at least 100 samples");
    const Basis basis(config.model, config.cutoff);
    std::vector<double> logs(samples);
    parallel_for(samples, [&](std::size_t i) {
        logs[i] = log_density(config, sample_mu(basis, stream.at(stream.index + i)));
    });
    const double top = *std::max_element(logs.begin(), logs.end());
    if (std::isinf(top)) throw DegenerateDensityError("all density values are zero for config " + config.canonical());
    double s1 = 0, s2 = 0;
    for (double l : logs) {
        const double w = std::exp(l - top);
        s1 += w;
        s2 += w * w;
    }
    const double n = double(samples);
    const double mean_scaled = s1 / n;
    const double var_scaled = std::max(0.0, (s2 / n - mean_scaled * mean_scaled) * n / (n - 1));
    NormalizationEstimate est;
    est.beta = std::exp(-(top + std::log(mean_scaled)));
    est.standard_error = est.beta * std::sqrt(var_scaled / n) / mean_scaled;
    config.beta = est.beta;
    return est;
}

double effective_sample_size(std::span<const double> weights) {
    double top = 0;
    for (double w : weights) top = std::max(top, w);
    if (top <= 0) return 0.0;
    double s1 = 0, s2 = 0;
    for (double w : weights) {
        s1 += w / top;
        s2 += (w / top) * (w / top);
    }
    return s1 * s1 / s2;
}

WeightedEnsemble sample_rho(const GibbsConfig& config, std::size_t count, const RngStream& stream, SamplingMode mode) {
    config.validate();
    const Basis basis(config.model, config.cutoff);
    WeightedEnsemble ens{config, stream.seed, {}, 0, false};
    ens.samples.reserve(count);

    if (mode == SamplingMode::importance) {
        std::vector<std::optional<WeightedSample>> slots(count);
        parallel_for(count, [&](std::size_t i) {
            const std::uint64_t idx = stream.index + i;
            auto u = sample_mu(basis, stream.at(idx));
            const double w = density(config, u);
            slots[i] = WeightedSample{std::move(u), w, idx};
        });
        for (auto& s : slots) ens.samples.push_back(std::move(*s));
    } else {
        if (config.family() != DensityFamily::zonal_potential)
            throw UnsupportedOperation("rejection sampling needs a density bounded by 1 (zonal model)");
        const std::size_t max_attempts = 1000 * count + 1000;
        std::size_t attempted = 0;
        while (ens.samples.size() < count) {
            if (attempted >= max_attempts) throw ResourceError("rejection sampling: acceptance rate too low");
            const std::size_t batch = std::max<std::size_t>(count, 64);
            std::vector<std::optional<SpectralField>> accepted(batch);
            parallel_for(batch, [&](std::size_t b) {
                const RngStream s = stream.at(stream.index + attempted + b);
                auto u = sample_mu(basis, s);
                if (s.uniform(kAcceptChannel, 0) <= density(config, u)) accepted[b] = std::move(u);
            });
            for (std::size_t b = 0; b < batch && ens.samples.size() < count; ++b)
                if (accepted[b]) ens.samples.push_back({std::move(*accepted[b]), 1.0, stream.index + attempted + b});
            attempted += batch;
        }
    }
    std::vector<double> w;
    w.reserve(ens.samples.size());
    for (const auto& s : ens.samples) w.push_back(s.weight);
    ens.ess = effective_sample_size(w);
    ens.low_ess_warning = ens.ess < 10;
    return ens;
}

std::vector<TailPoint> tail_curve(const GibbsConfig& config, const std::vector<double>& lambdas, std::size_t samples,
                                  const RngStream& stream) {
    config.validate();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0)) throw std::invalid_argument("tail_curve: lambda must be positive");
        if (i > 0 && !(lambdas[i] > lambdas[i - 1])) throw std::invalid_argument("tail_curve: lambdas must increase");
    }
    const Basis basis(config.model, config.cutoff);
    const double log_beta = config.beta ? std::log(*config.beta) : 0.0;
    std::vector<double> logs(samples);
    parallel_for(samples, [&](std::size_t i) {
        logs[i] = log_density(config, sample_mu(basis, stream.at(stream.index + i))) + log_beta;
    });
    std::sort(logs.begin(), logs.end());
    std::vector<TailPoint> out;
    const double n = double(samples);
    for (double lam : lambdas) {
        const double ll = std::log(lam);
        const auto above = logs.end() - std::upper_bound(logs.begin(), logs.end(), ll);
        const double p = double(above) / n;
        out.push_back({lam, p, std::sqrt(p * (1 - p) / n)});
    }
    return out;
}

namespace {

template <class T>
void put(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

struct Reader {
    std::istream& in;
    std::size_t offset = 0;

    void raw(void* dst, std::size_t n, const char* what) {
        in.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            throw FormatError(std::string("ensemble file truncated while reading ") + what + " at offset " +
                                  std::to_string(offset),
                              offset);
        offset += n;
    }
    template <class T>
    T get(const char* what) {
        unsigned char bytes[sizeof(T)];
        raw(bytes, sizeof(T), what);
        if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
        T v;
        std::memcpy(&v, bytes, sizeof(T));
        return v;
    }
};

constexpr std::uint64_t kMaxProvenance = 1 << 20;

}  // namespace

void write_ensemble(const WeightedEnsemble& ensemble, std::ostream& out) {
    const Basis basis(ensemble.config.model, ensemble.config.cutoff);
    const std::string provenance = ensemble.config.canonical() + ";version=" + std::string(version_string());
    out.write("GFE1", 4);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(ensemble.config.model));
    put<std::uint64_t>(out, static_cast<std::uint64_t>(ensemble.config.cutoff));
    put<std::uint64_t>(out, ensemble.seed);
    put<std::uint64_t>(out, ensemble.samples.size());
    put<std::uint64_t>(out, ensemble.fingerprint());
    put<std::uint64_t>(out, basis.mode_count());
    put<std::uint64_t>(out, provenance.size());
    out.write(provenance.data(), static_cast<std::streamsize>(provenance.size()));
    for (const auto& s : ensemble.samples) {
        for (const auto& z : s.field.coefficients()) {
            put<double>(out, z.real());
            put<double>(out, z.imag());
        }
    }
    for (const auto& s : ensemble.samples) put<double>(out, s.weight);
    for (const auto& s : ensemble.samples) put<std::uint64_t>(out, s.rng_index);
}

WeightedEnsemble read_ensemble(std::istream& in, std::optional<std::uint64_t> expected_fingerprint) {
    Reader r{in};
    char magic[4];
    r.raw(magic, 4, "magic");
    if (std::memcmp(magic, "GFE1", 4) != 0) throw FormatError("bad magic at offset 0", 0);
    const auto tag = r.get<std::uint32_t>("model tag");
    if (tag > static_cast<std::uint32_t>(Model::torus_nls))
        throw FormatError("unknown model tag at offset 4", 4);
    const auto cutoff = r.get<std::uint64_t>("cutoff");
    const auto seed = r.get<std::uint64_t>("seed");
    const auto count = r.get<std::uint64_t>("count");
    const std::size_t fp_offset = r.offset;
    const auto fingerprint = r.get<std::uint64_t>("fingerprint");
    const auto modes = r.get<std::uint64_t>("mode count");
    const std::size_t prov_offset = r.offset;
    const auto prov_len = r.get<std::uint64_t>("provenance length");
    if (prov_len > kMaxProvenance) throw FormatError("provenance length out of range at offset " + std::to_string(prov_offset), prov_offset);
    std::string provenance(prov_len, '\0');
    r.raw(provenance.data(), prov_len, "provenance");

    GibbsConfig config = GibbsConfig::from_canonical(provenance);
    if (static_cast<std::uint32_t>(config.model) != tag || static_cast<std::uint64_t>(config.cutoff) != cutoff ||
        config.fingerprint() != fingerprint)
        throw FormatError("header inconsistent with provenance at offset " + std::to_string(fp_offset), fp_offset);
    if (expected_fingerprint && *expected_fingerprint != fingerprint)
        throw FingerprintMismatch("ensemble fingerprint mismatch: expected " + std::to_string(*expected_fingerprint) +
                                      ", file has " + std::to_string(fingerprint),
                                  *expected_fingerprint, fingerprint);
    const Basis basis(config.model, config.cutoff);
    if (modes != basis.mode_count())
        throw FormatError("mode count does not match basis at offset " + std::to_string(prov_offset - 8), prov_offset - 8);

    WeightedEnsemble ens{config, seed, {}, 0, false};
    std::vector<std::vector<cplx>> coeffs;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<cplx> c(modes);
        for (auto& z : c) {
            const double re = r.get<double>("coefficients");
            const double im = r.get<double>("coefficients");
            z = {re, im};
        }
        coeffs.push_back(std::move(c));
    }
    std::vector<double> weights(count);
    for (auto& w : weights) w = r.get<double>("weights");
    std::vector<std::uint64_t> idx(count);
    for (auto& v : idx) v = r.get<std::uint64_t>("rng indices");
    for (std::uint64_t i = 0; i < count; ++i) {
        SpectralField f(basis);
        std::copy(coeffs[i].begin(), coeffs[i].end(), f.coefficients().begin());
        ens.samples.push_back({std::move(f), weights[i], idx[i]});
    }
    ens.ess = effective_sample_size(weights);
    ens.low_ess_warning = ens.ess < 10;
    return ens;
}

}  // namespace gibbsflow
