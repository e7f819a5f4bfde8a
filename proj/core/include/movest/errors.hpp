#pragma once

#include <stdexcept>
#include <string>

namespace movest {

/// Sample where every |x_i - mu| is zero, so the scale estimate would
/// collapse to the boundary of the parameter space.
class degenerate_sample_error : public std::runtime_error {
public:
    explicit degenerate_sample_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Moving estimator queried before it has seen any observation.
class insufficient_history_error : public std::runtime_error {
public:
    explicit insufficient_history_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Moment ratio outside the range the shape parameter can produce.
class no_solution_error : public std::runtime_error {
public:
    explicit no_solution_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Rate estimation with zero residual variance in the denominator.
class undefined_rate_error : public std::runtime_error {
public:
    explicit undefined_rate_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Walk-forward evaluation produced a non-finite log-density (e.g. the
/// scale estimate collapsed on a constant stream).
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// File ingestion failure: missing file, missing column, bad row.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace movest
