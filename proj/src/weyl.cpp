#include "gibbsflow/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gibbsflow/io.hpp"

namespace gibbsflow {

using std::numbers::pi;

namespace {

double lattice_eigenvalue(LatticePoint k) { return 4 * pi * pi * (double(k.x) * k.x + double(k.y) * k.y); }

long radius_bound(double lambda) {
    const double r2 = lambda * lambda / (4 * pi * pi);
    return static_cast<long>(std::floor(r2 * (1 + 1e-12) + 1e-12));
}

}  // namespace

std::size_t EigenvalueTable::count_at(double lambda) const {
    if (lambda < 0) return 0;
    const long bound = radius_bound(lambda);
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [bound](const EigenEntry& e) {
        return static_cast<long>(e.k.x) * e.k.x + static_cast<long>(e.k.y) * e.k.y <= bound;
    }));
}

EigenvalueTable enumerate(double lambda_max) {
    if (!(lambda_max >= 0)) throw std::invalid_argument("enumerate: lambda_max must be non-negative");
    const long bound = radius_bound(lambda_max);
    const int r = static_cast<int>(std::floor(std::sqrt(double(bound)))) + 1;
    std::vector<LatticePoint> pts;
    for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y)
            if (static_cast<long>(x) * x + static_cast<long>(y) * y <= bound) pts.push_back({x, y});
    std::sort(pts.begin(), pts.end(), lattice_before);
    EigenvalueTable t;
    t.entries.reserve(pts.size());
    for (auto k : pts) t.entries.push_back({lattice_eigenvalue(k), k});
    return t;
}

std::vector<double> alpha_sequence(std::size_t nmax) {
    auto pts = torus_lattice(nmax + 1);
    std::vector<double> out(nmax + 1);
    double s = 0;
    for (std::size_t i = 0; i <= nmax; ++i) {
        const auto k = (*pts)[i];
        s += 1.0 / (1.0 + 4 * pi * pi * (double(k.x) * k.x + double(k.y) * k.y));
        out[i] = s;
    }
    return out;
}

AlphaFit alpha_asymptotics(std::size_t nmax) {
    if (nmax < 1000) throw std::invalid_argument("alpha_asymptotics: nmax must be at least 1000");
    const auto a = alpha_sequence(nmax);
    const std::size_t lo = nmax / 10;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = lo; i <= nmax; ++i) {
        const double x = std::log(double(i));
        sx += x;
        sy += a[i];
        sxx += x * x;
        sxy += x * a[i];
        ++n;
    }
    AlphaFit fit;
    fit.points = n;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

double spectral_window_defect(double mu, double delta, int grid) {
    if (grid < 1) throw std::invalid_argument("spectral_window_defect: grid must be positive");
    const double hi = mu + delta * std::sqrt(std::max(mu, 0.0));
    const auto table = enumerate(hi);
    double worst = 0;
    for (int j = 0; j < grid; ++j)
        for (int l = 0; l < grid; ++l) {
            double s = 0;
            for (const auto& e : table.entries) {
                const double lam = std::sqrt(e.lambda_sq);
                if (lam < mu || lam >= hi) continue;
                const double phase = 2 * pi * (double(e.k.x) * j + double(e.k.y) * l) / grid;
                const double mod2 = std::norm(std::polar(1.0, phase));
                s += (mod2 - 1.0) / (1.0 + e.lambda_sq);
            }
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

std::string weyl_csv(std::size_t nmax, const std::vector<std::string>& header_comments) {
    auto pts = torus_lattice(nmax + 1);
    const auto a = alpha_sequence(nmax);
    std::ostringstream out;
    for (const auto& line : header_comments) out << "# " << line << '\n';
    out << "n,kx,ky,lambda_sq,alpha\n";
    for (std::size_t i = 0; i <= nmax; ++i) {
        const auto k = (*pts)[i];
        out << i << ',' << k.x << ',' << k.y << ',' << format_number(lattice_eigenvalue(k)) << ','
            << format_number(a[i]) << '\n';
    }
    return out.str();
}

}  // namespace gibbsflow
