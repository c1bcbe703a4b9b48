#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gibbsflow/basis.hpp"
#include "gibbsflow/randfield.hpp"

namespace gibbsflow {

enum class DensityFamily { zonal_potential, bo_weight, dnls_weight, half_wave_theta, torus_quartic };
enum class CutoffProfile { indicator, smooth };

DensityFamily family_for(Model model);
std::string_view profile_name(CutoffProfile p);
CutoffProfile parse_profile(std::string_view name);

struct GibbsConfig {
    Model model = Model::half_wave;
    int cutoff = 16;
    double kappa = 2.0;
    CutoffProfile profile = CutoffProfile::indicator;
    double power = 3.0;  // zonal nonlinearity exponent r
    std::optional<double> beta;

    DensityFamily family() const { return family_for(model); }
    void validate() const;
    // Stable key=value rendering; beta is not part of it.
    std::string canonical() const;
    std::uint64_t fingerprint() const;

    static GibbsConfig defaults(Model model, int cutoff);
    static GibbsConfig from_canonical(std::string_view text);
};

// chi_kappa(x): indicator of [-kappa, kappa] or the smooth profile at x / kappa.
double cutoff_weight(const GibbsConfig& config, double x);

// Log of the unnormalized density; -infinity outside the cutoff support.
double log_density(const GibbsConfig& config, const SpectralField& u);
double density(const GibbsConfig& config, const SpectralField& u);

struct NormalizationEstimate {
    double beta = 0;
    double standard_error = 0;
};

NormalizationEstimate estimate_normalization(GibbsConfig& config, std::size_t samples, const RngStream& stream);

struct WeightedSample {
    SpectralField field;
    double weight = 0;
    std::uint64_t rng_index = 0;
};

struct WeightedEnsemble {
    GibbsConfig config;
    std::uint64_t seed = 0;
    std::vector<WeightedSample> samples;
    double ess = 0;
    bool low_ess_warning = false;

    std::uint64_t fingerprint() const { return config.fingerprint(); }
};

enum class SamplingMode { importance, rejection };

double effective_sample_size(std::span<const double> weights);

// Sample i is drawn from stream.at(stream.index + i).
WeightedEnsemble sample_rho(const GibbsConfig& config, std::size_t count, const RngStream& stream,
                            SamplingMode mode = SamplingMode::importance);

struct TailPoint {
    double lambda = 0;
    double estimate = 0;
    double standard_error = 0;
};

// Survival function of the density under mu; scaled by beta when the config carries one.
std::vector<TailPoint> tail_curve(const GibbsConfig& config, const std::vector<double>& lambdas, std::size_t samples,
                                  const RngStream& stream);

void write_ensemble(const WeightedEnsemble& ensemble, std::ostream& out);
WeightedEnsemble read_ensemble(std::istream& in, std::optional<std::uint64_t> expected_fingerprint = std::nullopt);

}  // namespace gibbsflow
