#include "movest/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace movest {

double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, int iterations) {
    if (a > b) std::swap(a, b);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && (d - c) > 0.0; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations) {
    return golden_section_min([&f](double x) { return -f(x); }, a, b, iterations);
}

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, double step, int max_iterations, double ftol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1,
                                             std::vector<double>(x0.begin(), x0.end()));
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;

    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        s2.reserve(n + 1);
        f2.reserve(n + 1);
        for (auto i : idx) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex.swap(s2);
        fv.swap(f2);
    };

    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, shrink = 0.5;
    int iter = 0;
    bool converged = false;
    for (; iter < max_iterations; ++iter) {
        order();
        if (std::abs(fv[n] - fv[0]) <= ftol * (std::abs(fv[0]) + ftol)) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;

        auto blend = [&](const std::vector<double>& from, double coef) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + coef * (centroid[j] - from[j]);
            return p;
        };

        auto xr = blend(simplex[n], alpha);
        const double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = blend(simplex[n], gamma);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[n] = std::move(xe);
                fv[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = std::move(xr);
            fv[n] = fr;
        } else {
            auto xc = blend(simplex[n], fr < fv[n] ? rho : -rho);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[i][j] =
                            simplex[0][j] + shrink * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return {simplex[0], fv[0], iter, converged};
}

}  // namespace movest
