#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "movest/epd.hpp"
#include "movest/garch.hpp"

namespace movest {

/// Strictly positive price observations, optionally dated.
struct PriceSeries {
    std::vector<std::string> timestamps;  // empty when the file has no date column
    std::vector<double> values;
};

struct ReturnSeries {
    std::vector<double> values;
    std::string source_id;
};

/// Column to read prices from: header name (requires a header row) or
/// 0-based column index.
using ColumnSelector = std::variant<std::string, std::size_t>;

/// Load a comma-separated file of daily prices. A non-numeric first row is
/// treated as a header; lines starting with '#' and blank lines are skipped.
/// Unparseable or non-positive values fail with the offending row number.
PriceSeries load_price_csv(const std::filesystem::path& path,
                           const ColumnSelector& column);

/// x_t = ln v_{t+1} - ln v_t; length n - 1.
ReturnSeries log_returns(const PriceSeries& prices, std::string source_id = "");

/// One value per line, optional "x" header, '#' comment lines skipped.
ReturnSeries load_return_csv(const std::filesystem::path& path);
void write_return_csv(const ReturnSeries& series,
                      const std::filesystem::path& path,
                      const std::string& preamble = "");

/// Stationary EPD fixture; delegates to sample(). n must be positive.
ReturnSeries gen_epd_series(const EpdParams& params, std::size_t n,
                            std::uint64_t seed);

struct RegimeBlock {
    std::size_t length;
    double sigma;
};

struct RegimeSeries {
    ReturnSeries returns;
    std::vector<double> latent_sigma;  // ground-truth scale per observation
};

/// Concatenated zero-mean EPD blocks with block-wise scale, plus the latent
/// scale trajectory.
RegimeSeries gen_regime_switching(double kappa,
                                  std::span<const RegimeBlock> schedule,
                                  std::uint64_t seed);

struct GarchSeries {
    ReturnSeries returns;
    std::vector<double> latent_variance;
};

/// Standard GARCH(1,1) simulation with Gaussian shocks, started at the
/// unconditional variance.
GarchSeries gen_garch_series(const GarchParams& params, std::size_t n,
                             std::uint64_t seed);

}  // namespace movest
