#pragma once

#include <string_view>

#include "gibbsflow/basis.hpp"

namespace gibbsflow {

enum class FunctionalId {
    alpha,
    mass_recentered,
    bo_square,
    wick_cubic_hw,
    wick_cubic_torus,
    quartic_hw,
    quartic_torus,
    dnls_momentum,
    dnls_current,
    dnls_remainder,
    zonal_power,
};

std::string_view functional_name(FunctionalId id);
FunctionalId parse_functional(std::string_view name);
bool is_field_valued(FunctionalId id);

// E ||Pi_N phi||^2 under the Gaussian measure of the model.
double alpha(Model model, int cutoff);

double mass_recentered(const SpectralField& u, int cutoff);

// Pi^0((Pi_N u)^2), returned on a BO basis of cutoff 2N.
SpectralField bo_square(const SpectralField& u, int cutoff);

// Pi_N(|Pi_N u|^2 Pi_N u) on the circle or torus, in u's basis.
SpectralField cubic_projection(const SpectralField& u, int cutoff);

SpectralField wick_cubic_hw(const SpectralField& u, int cutoff);
SpectralField wick_cubic_torus(const SpectralField& u, int cutoff);

double quartic_hw(const SpectralField& u, int cutoff);
double quartic_torus(const SpectralField& u, int cutoff);

// 2 Im int u_N d(conj u_N) + 3/2 int |u_N|^4.
double dnls_momentum(const SpectralField& u, int cutoff);
// Im int u_N d(conj u_N) = -sum n |c_n|^2.
double dnls_current(const SpectralField& u, int cutoff);
// Im int conj(u_N)^2 d(u_N^2).
double dnls_gauge_quartic(const SpectralField& u, int cutoff);
// int |u_N|^6.
double sextic_integral(const SpectralField& u, int cutoff);

SpectralField dnls_remainder(const SpectralField& u, int cutoff);

SpectralField zonal_power(const SpectralField& u, int cutoff, double r);

}  // namespace gibbsflow
