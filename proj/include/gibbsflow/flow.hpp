#pragma once

#include <string>
#include <vector>

#include "gibbsflow/basis.hpp"

namespace gibbsflow {

struct FlowConfig {
    Model model = Model::half_wave;
    int cutoff = 16;
    double dt = 1e-3;
    double horizon = 1.0;  // may be negative to run backwards
    int monitor_every = 100;
    double coupling = 1.0;  // 0 switches the nonlinearity off
    double power = 3.0;     // zonal nonlinearity exponent r

    // Throws invalid_argument on dt <= 0, non-finite horizon, or dt * max omega > pi.
    void validate(const Basis& basis) const;
};

struct InvariantRecord {
    double time = 0;
    double l2_norm = 0;
    double hamiltonian = 0;
    double mean = 0;
    double max_coefficient = 0;
};

struct Trajectory {
    std::vector<SpectralField> states;
    std::vector<InvariantRecord> records;
};

// Truncated nonlinear part: du/dt = -i omega u + nonlinear_part(u).
SpectralField nonlinear_part(Model model, const SpectralField& u, int cutoff, double power = 3.0);

SpectralField rhs(Model model, const SpectralField& u, int cutoff, double coupling = 1.0, double power = 3.0);

double hamiltonian(Model model, const SpectralField& u, int cutoff, double coupling = 1.0, double power = 3.0);

InvariantRecord measure_invariants(const FlowConfig& config, const SpectralField& u, double time);

Trajectory evolve(const FlowConfig& config, const SpectralField& u0);

struct DriftReport {
    double l2 = 0;
    double hamiltonian = 0;
    double mean = 0;
};

DriftReport invariant_drift(const Trajectory& trajectory);

// CSV: time, re/im of the selected modes, l2, hamiltonian.
std::string trajectory_csv(const Trajectory& trajectory, const std::vector<ModeIndex>& modes,
                           const std::vector<std::string>& header_comments = {});

}  // namespace gibbsflow
