#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gibbsflow/errors.hpp"

namespace gibbsflow {

using cplx = std::complex<double>;

enum class Model { zonal_nls, benjamin_ono, dnls, half_wave, torus_nls };

std::string_view model_name(Model model);
Model parse_model(std::string_view name);

bool is_circle_model(Model model);

enum class QuadratureRule { circle_uniform, zonal_sine, torus_uniform };

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Circle frequency n, zonal degree n >= 1, or a torus lattice point (n, m).
struct ModeIndex {
    int n = 0;
    int m = 0;

    static ModeIndex circle(int n) { return {n, 0}; }
    static ModeIndex zonal(int n) { return {n, 0}; }
    static ModeIndex lattice(int kx, int ky) { return {kx, ky}; }

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

// First `count` lattice points ordered by |k|^2, ties broken on (kx, ky).
std::shared_ptr<const std::vector<LatticePoint>> torus_lattice(std::size_t count);

bool lattice_before(LatticePoint a, LatticePoint b);

class Basis {
public:
    Basis(Model model, int cutoff);
    Basis(Model model, int cutoff, int grid_size);

    static int default_grid_size(int cutoff);

    Model model() const { return model_; }
    int cutoff() const { return cutoff_; }
    int grid_size() const { return grid_; }
    QuadratureRule rule() const;

    std::size_t mode_count() const;
    ModeIndex mode(std::size_t i) const;
    std::optional<std::size_t> index_of(ModeIndex mode) const;

    // |n| on the circle, n for zonal, position in the sorted eigenlist for the torus.
    int rank(std::size_t i) const;
    // Laplace-type eigenvalue: n^2 (circle, zonal), 4 pi^2 |k|^2 (torus).
    double eigenvalue(std::size_t i) const;

    // Number of quadrature nodes: G, G - 1 (interior sine nodes) or G^2.
    std::size_t node_count() const;

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.model_ == b.model_ && a.cutoff_ == b.cutoff_ && a.grid_ == b.grid_;
    }

private:
    Model model_;
    int cutoff_;
    int grid_;
    std::shared_ptr<const std::vector<LatticePoint>> lattice_;
};

class SpectralField {
public:
    explicit SpectralField(Basis basis);
    SpectralField(Basis basis, std::vector<cplx> coefficients);

    const Basis& basis() const { return basis_; }
    Model model() const { return basis_.model(); }
    std::size_t size() const { return c_.size(); }

    std::span<const cplx> coefficients() const { return c_; }
    std::span<cplx> coefficients() { return c_; }
    cplx& operator[](std::size_t i) { return c_[i]; }
    const cplx& operator[](std::size_t i) const { return c_[i]; }

    // Zero for modes outside the basis.
    cplx at(ModeIndex mode) const;
    // On BO also sets the conjugate partner; the mean stays zero.
    void set(ModeIndex mode, cplx value);

    // Projects onto real mean-free fields (BO only, no-op otherwise).
    void enforce_reality();

    double norm_squared() const;

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(cplx s);

private:
    Basis basis_;
    std::vector<cplx> c_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(cplx s, SpectralField a);

SpectralField unit_mode(const Basis& basis, ModeIndex mode, cplx value = 1.0);

// Copies shared modes into `target`, dropping modes it does not carry.
SpectralField resample(const SpectralField& u, const Basis& target);

SpectralField project(const SpectralField& u, int cutoff);
SpectralField smooth_project(const SpectralField& u, int cutoff);
SpectralField zero_mean_project(const SpectralField& u);
SpectralField hilbert_transform(const SpectralField& u);

double dispersion(Model model, ModeIndex mode);
double dispersion(const Basis& basis, std::size_t i);

// 1 on |t| <= 1/2, 0 on |t| >= 1, smooth blend in between.
double chi_profile(double t);

struct GridField {
    Basis basis;
    std::vector<cplx> values;
};

GridField to_grid(const SpectralField& u);
SpectralField from_grid(const GridField& g);

// Quadrature of f over the basis' nodes under the model's normalized measure.
double grid_integral(const Basis& basis, std::span<const double> f);
cplx grid_integral(const Basis& basis, std::span<const cplx> f);

// Node coordinate: x_j for the circle, theta_j for zonal; the torus uses (j / G, l / G).
double node_coordinate(const Basis& basis, std::size_t j);

}  // namespace gibbsflow
