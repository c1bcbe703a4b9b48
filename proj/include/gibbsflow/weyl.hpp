#pragma once

#include <string>
#include <vector>

#include "gibbsflow/basis.hpp"

namespace gibbsflow {

struct EigenEntry {
    double lambda_sq = 0;
    LatticePoint k;
};

struct EigenvalueTable {
    std::vector<EigenEntry> entries;

    // Entries with 4 pi^2 |k|^2 <= lambda^2.
    std::size_t count_at(double lambda) const;
};

EigenvalueTable enumerate(double lambda_max);

// alpha_0, ..., alpha_nmax in the shared lattice order.
std::vector<double> alpha_sequence(std::size_t nmax);

struct AlphaFit {
    double slope = 0;
    double intercept = 0;
    std::size_t points = 0;
};

// Least-squares fit of alpha_N against ln N over N in [nmax / 10, nmax].
AlphaFit alpha_asymptotics(std::size_t nmax);

// Max over grid nodes of |sum over the window of (1 + lambda^2)^{-1} (|e_k(x)|^2 - 1)|,
// window mu <= lambda < mu + delta sqrt(mu).
double spectral_window_defect(double mu, double delta, int grid);

std::string weyl_csv(std::size_t nmax, const std::vector<std::string>& header_comments = {});

}  // namespace gibbsflow
