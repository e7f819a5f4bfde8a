#include "movest/estimate_static.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "movest/errors.hpp"
#include "movest/optimize.hpp"
#include "movest/special_functions.hpp"

namespace movest {

WeightedSample::WeightedSample(std::vector<double> values,
                               std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.empty()) {
        throw std::invalid_argument("WeightedSample: empty sample");
    }
    if (values_.size() != weights_.size()) {
        throw std::invalid_argument("WeightedSample: values/weights length mismatch");
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("WeightedSample: weights must be nonnegative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("WeightedSample: weights sum to zero");
    }
    for (double& w : weights_) w /= total;
}

WeightedSample WeightedSample::equal(std::vector<double> values) {
    const std::size_t n = values.size();
    return WeightedSample(std::move(values),
                          std::vector<double>(n, n ? 1.0 / double(n) : 0.0));
}

double sigma_mle(const WeightedSample& s, double kappa, double mu) {
    double scale = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.weights()[i] > 0.0) {
            scale = std::max(scale, std::abs(s.values()[i] - mu));
        }
    }
    if (scale == 0.0) {
        throw degenerate_sample_error(
            "sigma_mle: every weighted point equals mu, scale estimate would be 0");
    }
    // factor out the largest deviation so the powers stay in range
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double r = std::abs(s.values()[i] - mu) / scale;
        if (r > 0.0 && s.weights()[i] > 0.0) {
            acc += s.weights()[i] * std::pow(r, kappa);
        }
    }
    return scale * std::pow(acc, 1.0 / kappa);
}

double mu_objective(const WeightedSample& s, double kappa, double mu) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double r = std::abs(s.values()[i] - mu);
        if (r > 0.0) acc += s.weights()[i] * std::pow(r, kappa);
    }
    return acc;
}

namespace {

double weighted_mean(const WeightedSample& s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        acc += s.weights()[i] * s.values()[i];
    return acc;
}

double weighted_median(const WeightedSample& s) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return s.values()[a] < s.values()[b];
    });
    double cum = 0.0;
    for (auto i : idx) {
        cum += s.weights()[i];
        if (cum >= 0.5) return s.values()[i];
    }
    return s.values()[idx.back()];
}

// For kappa < 1 the objective is concave between consecutive data points, so
// the global minimizer is a data point. Scan candidates; for large samples the
// scan runs on order-statistic candidates first and then exhaustively inside
// the winning gaps.
double mu_scan_below_one(const WeightedSample& s, double kappa) {
    std::vector<double> sorted(s.values());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const std::size_t m = sorted.size();
    constexpr std::size_t kExhaustiveLimit = 4096;
    constexpr std::size_t kCandidates = 513;

    auto best_of = [&](const std::vector<double>& cands) {
        double best_mu = cands.front();
        double best_f = mu_objective(s, kappa, best_mu);
        for (std::size_t i = 1; i < cands.size(); ++i) {
            const double f = mu_objective(s, kappa, cands[i]);
            if (f < best_f) {
                best_f = f;
                best_mu = cands[i];
            }
        }
        return std::pair(best_mu, best_f);
    };

    if (m <= kExhaustiveLimit) {
        return best_of(sorted).first;
    }

    // coarse pass over evenly spaced order statistics
    std::vector<double> coarse;
    coarse.reserve(kCandidates);
    std::vector<std::size_t> coarse_idx;
    for (std::size_t j = 0; j < kCandidates; ++j) {
        const std::size_t i = j * (m - 1) / (kCandidates - 1);
        if (coarse_idx.empty() || coarse_idx.back() != i) {
            coarse_idx.push_back(i);
            coarse.push_back(sorted[i]);
        }
    }
    std::vector<std::pair<double, std::size_t>> ranked;  // (objective, coarse slot)
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        ranked.emplace_back(mu_objective(s, kappa, coarse[j]), j);
    }
    std::sort(ranked.begin(), ranked.end());

    // exhaustive pass inside the gaps around the best few coarse candidates
    std::vector<double> fine;
    const std::size_t top = std::min<std::size_t>(3, ranked.size());
    for (std::size_t r = 0; r < top; ++r) {
        const std::size_t j = ranked[r].second;
        const std::size_t lo = j > 0 ? coarse_idx[j - 1] : 0;
        const std::size_t hi = j + 1 < coarse_idx.size() ? coarse_idx[j + 1] : m - 1;
        for (std::size_t i = lo; i <= hi; ++i) fine.push_back(sorted[i]);
    }
    return best_of(fine).first;
}

}  // namespace

double mu_estimate(const WeightedSample& s, double kappa) {
    if (kappa == 2.0) return weighted_mean(s);
    if (kappa == 1.0) return weighted_median(s);

    const auto [lo_it, hi_it] =
        std::minmax_element(s.values().begin(), s.values().end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) return lo;

    if (kappa > 1.0) {
        // convex objective, golden section over the data hull
        return golden_section_min(
            [&](double mu) { return mu_objective(s, kappa, mu); }, lo, hi, 200);
    }
    return mu_scan_below_one(s, kappa);
}

StaticFit fit_fixed_kappa(const WeightedSample& s, double kappa) {
    const double mu = mu_estimate(s, kappa);
    const double sigma = sigma_mle(s, kappa, mu);
    // at the scale optimum the weighted sum collapses to 1/kappa
    const double loglik = log_norm_const(kappa) - std::log(sigma) - 1.0 / kappa;
    return {EpdParams(kappa, mu, sigma), loglik};
}

namespace {

// Profile log-likelihood with a cheap location seed (weighted mean or median,
// whichever scores better) for the coarse stages of the kappa search on large
// samples; the final fit always uses the full mu_estimate.
double profile_loglik_seeded(const WeightedSample& s, double kappa,
                             double mu_mean, double mu_median) {
    double best = -std::numeric_limits<double>::infinity();
    for (double mu : {mu_mean, mu_median}) {
        const double sigma = sigma_mle(s, kappa, mu);
        best = std::max(best,
                        log_norm_const(kappa) - std::log(sigma) - 1.0 / kappa);
    }
    return best;
}

}  // namespace

StaticFit fit_full(const WeightedSample& s, KappaRange range) {
    if (!(range.lo > 0.0) || !(range.hi > range.lo)) {
        throw std::invalid_argument("fit_full: invalid kappa range");
    }

    constexpr std::size_t kExactProfileLimit = 4096;
    const bool exact = s.size() <= kExactProfileLimit;
    const double mu_mean = weighted_mean(s);
    const double mu_median = weighted_median(s);

    auto profile = [&](double kappa) {
        return exact ? fit_fixed_kappa(s, kappa).mean_loglik
                     : profile_loglik_seeded(s, kappa, mu_mean, mu_median);
    };

    // coarse 0.05-step grid pre-scan guards against local maxima
    double best_kappa = range.lo;
    double best_l = profile(range.lo);
    constexpr double kGridStep = 0.05;
    for (double k = range.lo + kGridStep; k < range.hi + 1e-12; k += kGridStep) {
        const double kk = std::min(k, range.hi);
        const double l = profile(kk);
        if (l > best_l) {
            best_l = l;
            best_kappa = kk;
        }
    }

    const double lo = std::max(range.lo, best_kappa - kGridStep);
    const double hi = std::min(range.hi, best_kappa + kGridStep);
    const double log_kappa = golden_section_max(
        [&](double lk) { return profile(std::exp(lk)); }, std::log(lo),
        std::log(hi), 60);

    return fit_fixed_kappa(s, std::exp(log_kappa));
}

double kappa_from_moments(double variance, double sigma, KappaRange range) {
    if (!(variance > 0.0) || !(sigma > 0.0)) {
        throw std::invalid_argument("kappa_from_moments: variance and sigma must be positive");
    }
    const double target = variance / (sigma * sigma);
    auto ratio = [](double kappa) {
        return std::exp(2.0 / kappa * std::log(kappa) + sf::ln_gamma(3.0 / kappa) -
                        sf::ln_gamma(1.0 / kappa));
    };
    // the ratio is strictly decreasing in kappa
    double lo = range.lo;
    double hi = range.hi;
    if (target > ratio(lo) || target < ratio(hi)) {
        throw no_solution_error(
            "kappa_from_moments: variance/sigma^2 ratio outside the achievable range");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ratio(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace movest
