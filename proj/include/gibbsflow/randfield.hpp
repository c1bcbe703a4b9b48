#pragma once

#include <cstdint>

#include "gibbsflow/basis.hpp"

namespace gibbsflow {

std::uint64_t mix64(std::uint64_t x);

// Counter-based stream: every draw is a pure function of (seed, index, key).
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t index = 0;

    RngStream at(std::uint64_t i) const { return {seed, i}; }

    // Complex normal with E|g|^2 = 1, keyed by mode.
    cplx complex_gaussian(std::uint64_t key) const;
    // Uniform on (0, 1], keyed by channel and counter.
    double uniform(std::uint64_t channel, std::uint64_t counter) const;
    std::uint64_t bits(std::uint64_t channel, std::uint64_t counter) const;
};

std::uint64_t mode_key(ModeIndex mode);

// Standard deviation of the Gaussian coefficient at this mode.
double gaussian_weight(Model model, ModeIndex mode);

SpectralField sample_mu(const Basis& basis, const RngStream& stream);
SpectralField sample_mu(Model model, int cutoff, const RngStream& stream);

// <mode> weight: sqrt(1 + n^2) on the circle, n for zonal, sqrt(1 + lambda^2) on the torus.
double sobolev_weight(const Basis& basis, std::size_t i);
double sobolev_norm(const SpectralField& u, double s);

double lq_norm(const SpectralField& u, double q);
// Normalized integral of (Re u)^3; the signed cubic potential for real fields.
double signed_cubic_integral(const SpectralField& u);

}  // namespace gibbsflow
