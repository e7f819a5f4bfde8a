#include "movest/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace movest::sf {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos coefficients, g = 7, 9 terms (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double ln_gamma_lanczos(double a) {
    // valid for a >= 0.5
    const double z = a - 1.0;
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        x += kLanczos[i] / (z + i);
    }
    const double t = z + kLanczosG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

double ln_gamma(double a) {
    if (!(a > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive, got " +
                                std::to_string(a));
    }
    if (a < 0.5) {
        // reflection keeps the Lanczos sum in its well-conditioned range
        return std::log(M_PI / std::sin(M_PI * a)) - ln_gamma_lanczos(1.0 - a);
    }
    return ln_gamma_lanczos(a);
}

namespace {

// P(a, z) by the power series around z = 0; use for z < a + 1.
double lower_gamma_series(double a, double z) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= z / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(a * std::log(z) - z - ln_gamma(a));
}

// Q(a, z) by modified Lentz continued fraction; use for z >= a + 1.
double upper_gamma_cf(double a, double z) {
    constexpr double tiny = 1e-300;
    double b = z + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(a * std::log(z) - z - ln_gamma(a));
}

}  // namespace

double reg_lower_gamma(double a, double z) {
    if (!(a > 0.0)) {
        throw std::domain_error("reg_lower_gamma: a must be positive, got " +
                                std::to_string(a));
    }
    if (z < 0.0) {
        throw std::domain_error("reg_lower_gamma: z must be nonnegative, got " +
                                std::to_string(z));
    }
    if (z == 0.0) return 0.0;
    double p;
    if (z < a + 1.0) {
        p = lower_gamma_series(a, z);
    } else {
        p = 1.0 - upper_gamma_cf(a, z);
    }
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

double reg_upper_gamma(double a, double z) {
    if (!(a > 0.0)) {
        throw std::domain_error("reg_upper_gamma: a must be positive, got " +
                                std::to_string(a));
    }
    if (z < 0.0) {
        throw std::domain_error("reg_upper_gamma: z must be nonnegative, got " +
                                std::to_string(z));
    }
    if (z == 0.0) return 1.0;
    if (z < a + 1.0) return 1.0 - lower_gamma_series(a, z);
    return upper_gamma_cf(a, z);
}

double inv_reg_lower_gamma(double a, double p) {
    if (!(a > 0.0)) {
        throw std::domain_error("inv_reg_lower_gamma: a must be positive, got " +
                                std::to_string(a));
    }
    if (!(p >= 0.0) || p >= 1.0) {
        throw std::domain_error("inv_reg_lower_gamma: p must lie in [0,1), got " +
                                std::to_string(p));
    }
    if (p == 0.0) return 0.0;

    // expand an upper bracket until P(a, hi) >= p
    double lo = 0.0;
    double hi = a > 1.0 ? a : 1.0;
    while (reg_lower_gamma(a, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e308) {
            throw std::runtime_error("inv_reg_lower_gamma: bracket expansion failed");
        }
    }

    // bisection to localize the root
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 60; ++i) {
        mid = 0.5 * (lo + hi);
        if (reg_lower_gamma(a, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton polish; P'(a,z) = z^{a-1} e^{-z} / Gamma(a)
    const double lg = ln_gamma(a);
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double f = reg_lower_gamma(a, z) - p;
        const double logd = (a - 1.0) * std::log(z) - z - lg;
        if (logd < -700.0) break;  // derivative underflow, bisection result stands
        const double step = f / std::exp(logd);
        double next = z - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (reg_lower_gamma(a, next) < p) {
            lo = next;
        } else {
            hi = next;
        }
        if (std::abs(next - z) <= 1e-15 * std::abs(z)) {
            z = next;
            break;
        }
        z = next;
    }
    return z;
}

double inv_reg_upper_gamma(double a, double q) {
    if (!(a > 0.0)) {
        throw std::domain_error("inv_reg_upper_gamma: a must be positive, got " +
                                std::to_string(a));
    }
    if (!(q > 0.0) || q > 1.0) {
        throw std::domain_error("inv_reg_upper_gamma: q must lie in (0,1], got " +
                                std::to_string(q));
    }
    if (q == 1.0) return 0.0;
    if (q >= 0.5) return inv_reg_lower_gamma(a, 1.0 - q);

    // bracket on the decreasing tail
    double lo = 0.0;
    double hi = a > 1.0 ? a : 1.0;
    while (reg_upper_gamma(a, hi) > q) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e308) {
            throw std::runtime_error("inv_reg_upper_gamma: bracket expansion failed");
        }
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reg_upper_gamma(a, mid) > q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton on ln Q keeps relative accuracy when q underflows toward 0;
    // dz (ln Q) = -z^{a-1} e^{-z} / (Gamma(a) Q)
    const double lg = ln_gamma(a);
    const double log_q = std::log(q);
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 20; ++i) {
        const double qz = reg_upper_gamma(a, z);
        if (qz <= 0.0) break;
        const double f = std::log(qz) - log_q;
        const double dlog = -std::exp((a - 1.0) * std::log(z) - z - lg) / qz;
        double next = z - f / dlog;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (reg_upper_gamma(a, next) > q) {
            lo = next;
        } else {
            hi = next;
        }
        if (std::abs(next - z) <= 1e-15 * std::abs(z)) {
            z = next;
            break;
        }
        z = next;
    }
    return z;
}

double digamma(double a) {
    if (!(a > 0.0)) {
        throw std::domain_error("digamma: argument must be positive, got " +
                                std::to_string(a));
    }
    // recurrence psi(x) = psi(x+1) - 1/x until x >= 10, then the
    // asymptotic series in 1/x^2
    double result = 0.0;
    double x = a;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli tail: sum B_{2n} / (2n x^{2n})
    const double tail =
        inv2 * (1.0 / 12.0 +
        inv2 * (-1.0 / 120.0 +
        inv2 * (1.0 / 252.0 +
        inv2 * (-1.0 / 240.0 +
        inv2 * (1.0 / 132.0 +
        inv2 * (-691.0 / 32760.0 +
        inv2 * (1.0 / 12.0)))))));
    result += std::log(x) - 0.5 * inv - tail;
    return result;
}

}  // namespace movest::sf
