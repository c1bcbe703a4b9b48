#include "gibbsflow/basis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace gibbsflow {

using std::numbers::pi;

std::string_view model_name(Model model) {
    switch (model) {
        case Model::zonal_nls: return "zonal";
        case Model::benjamin_ono: return "bo";
        case Model::dnls: return "dnls";
        case Model::half_wave: return "halfwave";
        case Model::torus_nls: return "torus";
    }
    return "unknown";
}

Model parse_model(std::string_view name) {
    for (Model m : {Model::zonal_nls, Model::benjamin_ono, Model::dnls, Model::half_wave, Model::torus_nls})
        if (model_name(m) == name) return m;
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

bool is_circle_model(Model model) {
    return model == Model::benjamin_ono || model == Model::dnls || model == Model::half_wave;
}

bool lattice_before(LatticePoint a, LatticePoint b) {
    const long ra = static_cast<long>(a.x) * a.x + static_cast<long>(a.y) * a.y;
    const long rb = static_cast<long>(b.x) * b.x + static_cast<long>(b.y) * b.y;
    if (ra != rb) return ra < rb;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::shared_ptr<const std::vector<LatticePoint>> torus_lattice(std::size_t count) {
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<LatticePoint>> cache;
    std::lock_guard lock(mutex);
    if (cache && cache->size() >= count) return cache;

    int radius = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count) / pi))) + 2;
    for (;;) {
        auto pts = std::make_shared<std::vector<LatticePoint>>();
        const long r2 = static_cast<long>(radius) * radius;
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                if (static_cast<long>(x) * x + static_cast<long>(y) * y <= r2) pts->push_back({x, y});
        if (pts->size() >= count) {
            std::sort(pts->begin(), pts->end(), lattice_before);
            cache = pts;
            return cache;
        }
        radius *= 2;
    }
}

int Basis::default_grid_size(int cutoff) {
    int g = 1;
    while (g < 8 * (cutoff + 1)) g *= 2;
    return g;
}

namespace {

int torus_half_width(const std::vector<LatticePoint>& pts, int cutoff) {
    int k = 0;
    for (int i = 0; i <= cutoff; ++i) k = std::max({k, std::abs(pts[i].x), std::abs(pts[i].y)});
    return k;
}

}  // namespace

Basis::Basis(Model model, int cutoff) : Basis(model, cutoff, -1) {}

Basis::Basis(Model model, int cutoff, int grid_size) : model_(model), cutoff_(cutoff), grid_(grid_size) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    int bandwidth = cutoff;
    if (model == Model::torus_nls) {
        lattice_ = torus_lattice(static_cast<std::size_t>(cutoff) + 1);
        bandwidth = torus_half_width(*lattice_, cutoff);
    }
    const int need = default_grid_size(bandwidth);
    if (grid_ < 0) grid_ = need;
    if (grid_ < 8 * (bandwidth + 1))
        throw std::invalid_argument("grid size " + std::to_string(grid_) + " below dealiasing bound " +
                                    std::to_string(8 * (bandwidth + 1)));
}

QuadratureRule Basis::rule() const {
    if (model_ == Model::zonal_nls) return QuadratureRule::zonal_sine;
    if (model_ == Model::torus_nls) return QuadratureRule::torus_uniform;
    return QuadratureRule::circle_uniform;
}

std::size_t Basis::mode_count() const {
    switch (model_) {
        case Model::zonal_nls: return static_cast<std::size_t>(cutoff_);
        case Model::torus_nls: return static_cast<std::size_t>(cutoff_) + 1;
        default: return 2 * static_cast<std::size_t>(cutoff_) + 1;
    }
}

ModeIndex Basis::mode(std::size_t i) const {
    switch (model_) {
        case Model::zonal_nls: return ModeIndex::zonal(static_cast<int>(i) + 1);
        case Model::torus_nls: return ModeIndex::lattice((*lattice_)[i].x, (*lattice_)[i].y);
        default: return ModeIndex::circle(static_cast<int>(i) - cutoff_);
    }
}

std::optional<std::size_t> Basis::index_of(ModeIndex mode) const {
    switch (model_) {
        case Model::zonal_nls:
            if (mode.m != 0 || mode.n < 1 || mode.n > cutoff_) return std::nullopt;
            return static_cast<std::size_t>(mode.n - 1);
        case Model::torus_nls: {
            const LatticePoint k{mode.n, mode.m};
            auto end = lattice_->begin() + cutoff_ + 1;
            auto it = std::lower_bound(lattice_->begin(), end, k, lattice_before);
            if (it == end || !(*it == k)) return std::nullopt;
            return static_cast<std::size_t>(it - lattice_->begin());
        }
        default:
            if (mode.m != 0 || std::abs(mode.n) > cutoff_) return std::nullopt;
            return static_cast<std::size_t>(mode.n + cutoff_);
    }
}

int Basis::rank(std::size_t i) const {
    switch (model_) {
        case Model::zonal_nls: return static_cast<int>(i) + 1;
        case Model::torus_nls: return static_cast<int>(i);
        default: return std::abs(static_cast<int>(i) - cutoff_);
    }
}

double Basis::eigenvalue(std::size_t i) const {
    const ModeIndex k = mode(i);
    if (model_ == Model::torus_nls) return 4 * pi * pi * (double(k.n) * k.n + double(k.m) * k.m);
    return double(k.n) * k.n;
}

std::size_t Basis::node_count() const {
    switch (model_) {
        case Model::zonal_nls: return static_cast<std::size_t>(grid_) - 1;
        case Model::torus_nls: return static_cast<std::size_t>(grid_) * grid_;
        default: return static_cast<std::size_t>(grid_);
    }
}

SpectralField::SpectralField(Basis basis) : basis_(std::move(basis)), c_(basis_.mode_count()) {}

SpectralField::SpectralField(Basis basis, std::vector<cplx> coefficients)
    : basis_(std::move(basis)), c_(std::move(coefficients)) {
    if (c_.size() != basis_.mode_count())
        throw std::invalid_argument("coefficient count " + std::to_string(c_.size()) + " does not match basis (" +
                                    std::to_string(basis_.mode_count()) + ")");
    enforce_reality();
}

void SpectralField::enforce_reality() {
    if (basis_.model() != Model::benjamin_ono) return;
    const int n_max = basis_.cutoff();
    c_[n_max] = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        cplx avg = 0.5 * (c_[n_max + n] + std::conj(c_[n_max - n]));
        c_[n_max + n] = avg;
        c_[n_max - n] = std::conj(avg);
    }
}

cplx SpectralField::at(ModeIndex mode) const {
    auto i = basis_.index_of(mode);
    return i ? c_[*i] : cplx{};
}

void SpectralField::set(ModeIndex mode, cplx value) {
    auto i = basis_.index_of(mode);
    if (!i) throw std::invalid_argument("mode outside basis");
    if (basis_.model() == Model::benjamin_ono) {
        if (mode.n == 0) return;
        c_[*i] = value;
        c_[*basis_.index_of(ModeIndex::circle(-mode.n))] = std::conj(value);
        return;
    }
    c_[*i] = value;
}

double SpectralField::norm_squared() const {
    double s = 0;
    for (const auto& z : c_) s += std::norm(z);
    return s;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    if (!(basis_ == other.basis_)) throw std::invalid_argument("basis mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    if (!(basis_ == other.basis_)) throw std::invalid_argument("basis mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
    for (auto& z : c_) z *= s;
    enforce_reality();
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(cplx s, SpectralField a) { return a *= s; }

SpectralField unit_mode(const Basis& basis, ModeIndex mode, cplx value) {
    SpectralField u(basis);
    u.set(mode, value);
    return u;
}

SpectralField resample(const SpectralField& u, const Basis& target) {
    if (u.model() != target.model()) throw std::invalid_argument("resample: model mismatch");
    SpectralField out(target);
    const Basis& src = u.basis();
    if (target.model() == Model::torus_nls) {
        const size_t n = std::min(src.mode_count(), target.mode_count());
        for (size_t i = 0; i < n; ++i) out[i] = u[i];
        return out;
    }
    for (size_t i = 0; i < target.mode_count(); ++i) out[i] = u.at(target.mode(i));
    return out;
}

SpectralField project(const SpectralField& u, int cutoff) {
    if (cutoff < 0 || cutoff > u.basis().cutoff())
        throw std::invalid_argument("project: cutoff " + std::to_string(cutoff) + " exceeds basis cutoff " +
                                    std::to_string(u.basis().cutoff()));
    SpectralField out = u;
    for (size_t i = 0; i < out.size(); ++i)
        if (u.basis().rank(i) > cutoff) out[i] = 0.0;
    return out;
}

double chi_profile(double t) {
    t = std::abs(t);
    if (t <= 0.5) return 1.0;
    if (t >= 1.0) return 0.0;
    const double s = 2.0 * (1.0 - t);
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

SpectralField smooth_project(const SpectralField& u, int cutoff) {
    if (u.model() != Model::zonal_nls) throw UnsupportedOperation("smooth_project is defined for the zonal model only");
    if (cutoff < 1) throw std::invalid_argument("smooth_project: cutoff must be >= 1");
    SpectralField out = u;
    for (size_t i = 0; i < out.size(); ++i) out[i] *= chi_profile(double(u.basis().rank(i)) / cutoff);
    return out;
}

SpectralField zero_mean_project(const SpectralField& u) {
    if (!is_circle_model(u.model())) throw UnsupportedOperation("zero_mean_project needs a circle model");
    SpectralField out = u;
    out[u.basis().cutoff()] = 0.0;
    return out;
}

SpectralField hilbert_transform(const SpectralField& u) {
    if (!is_circle_model(u.model())) throw UnsupportedOperation("hilbert_transform needs a circle model");
    SpectralField out = u;
    const int n_max = u.basis().cutoff();
    for (int n = -n_max; n <= n_max; ++n) {
        const double s = n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0);
        out[n + n_max] *= cplx(0.0, -s);
    }
    return out;
}

double dispersion(Model model, ModeIndex mode) {
    const double n = mode.n;
    switch (model) {
        case Model::half_wave: return 1.0 + std::abs(n);
        case Model::zonal_nls:
        case Model::dnls: return n * n;
        case Model::benjamin_ono: return n * std::abs(n);
        case Model::torus_nls: return 1.0 + 4 * pi * pi * (n * n + double(mode.m) * mode.m);
    }
    return 0.0;
}

double dispersion(const Basis& basis, std::size_t i) { return dispersion(basis.model(), basis.mode(i)); }

namespace {

constexpr double zonal_scale() { return 0.79788456080286535588; }  // sqrt(2/pi)

}  // namespace

double node_coordinate(const Basis& basis, std::size_t j) {
    const double g = basis.grid_size();
    switch (basis.model()) {
        case Model::zonal_nls: return pi * double(j + 1) / g;
        case Model::torus_nls: return double(j) / g;
        default: return 2 * pi * double(j) / g;
    }
}

GridField to_grid(const SpectralField& u) {
    const Basis& b = u.basis();
    const int g = b.grid_size();
    GridField out{b, {}};
    if (b.model() == Model::zonal_nls) {
        std::vector<cplx> amp(g - 1);
        for (size_t i = 0; i < u.size(); ++i) amp[i] = zonal_scale() * u[i];
        out.values = detail::sine_synthesize(amp);
        for (int j = 0; j < g - 1; ++j) out.values[j] /= std::sin(pi * (j + 1) / g);
        return out;
    }
    if (b.model() == Model::torus_nls) {
        out.values.assign(static_cast<size_t>(g) * g, 0.0);
        for (size_t i = 0; i < u.size(); ++i) {
            const ModeIndex k = b.mode(i);
            out.values[detail::fft_slot(k.n, g) * size_t(g) + detail::fft_slot(k.m, g)] = u[i];
        }
        detail::fft_2d(out.values, g, +1);
        return out;
    }
    std::vector<cplx> spec(g);
    const int n_max = b.cutoff();
    for (int n = -n_max; n <= n_max; ++n) spec[detail::fft_slot(n, g)] = u[n + n_max];
    out.values = detail::circle_synthesize(spec);
    return out;
}

SpectralField from_grid(const GridField& grid) {
    const Basis& b = grid.basis;
    const int g = b.grid_size();
    if (grid.values.size() != b.node_count())
        throw std::invalid_argument("from_grid: expected " + std::to_string(b.node_count()) + " nodes");
    SpectralField out(b);
    if (b.model() == Model::zonal_nls) {
        std::vector<cplx> s(grid.values);
        for (int j = 0; j < g - 1; ++j) s[j] *= std::sin(pi * (j + 1) / g);
        auto amp = detail::sine_analyze(s);
        for (size_t i = 0; i < out.size(); ++i) out[i] = amp[i] / zonal_scale();
        return out;
    }
    if (b.model() == Model::torus_nls) {
        std::vector<cplx> spec(grid.values);
        detail::fft_2d(spec, g, -1);
        const double inv = 1.0 / (double(g) * g);
        for (size_t i = 0; i < out.size(); ++i) {
            const ModeIndex k = b.mode(i);
            out[i] = inv * spec[detail::fft_slot(k.n, g) * size_t(g) + detail::fft_slot(k.m, g)];
        }
        return out;
    }
    auto spec = detail::circle_analyze(grid.values);
    const int n_max = b.cutoff();
    for (int n = -n_max; n <= n_max; ++n) out[n + n_max] = spec[detail::fft_slot(n, g)];
    out.enforce_reality();
    return out;
}

double grid_integral(const Basis& basis, std::span<const double> f) {
    if (f.size() != basis.node_count()) throw std::invalid_argument("grid_integral: node count mismatch");
    double s = 0;
    if (basis.model() == Model::zonal_nls) {
        for (size_t j = 0; j < f.size(); ++j) {
            const double sn = std::sin(node_coordinate(basis, j));
            s += f[j] * sn * sn;
        }
        return s * pi / basis.grid_size();
    }
    for (double v : f) s += v;
    return s / double(f.size());
}

cplx grid_integral(const Basis& basis, std::span<const cplx> f) {
    std::vector<double> re(f.size()), im(f.size());
    for (size_t j = 0; j < f.size(); ++j) {
        re[j] = f[j].real();
        im[j] = f[j].imag();
    }
    return {grid_integral(basis, re), grid_integral(basis, im)};
}

}  // namespace gibbsflow
