#pragma once

#include <functional>
#include <span>
#include <vector>

namespace movest {

/// Golden-section minimization of a unimodal function on [a, b].
double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, int iterations = 100);

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations = 100);

struct NelderMeadResult {
    std::vector<double> x;
    double fmin;
    int iterations;
    bool converged;
};

/// Derivative-free simplex minimization from x0 with per-coordinate initial
/// step. Stops when the simplex function spread falls below ftol.
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, double step, int max_iterations = 500,
    double ftol = 1e-12);

}  // namespace movest
