#include "movest/data_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "movest/errors.hpp"

namespace movest {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string out = s.substr(b, e - b);
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
        out = out.substr(1, out.size() - 2);
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool looks_like_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::vector<std::string> read_csv_rows(const std::filesystem::path& path,
                                       std::vector<std::size_t>& line_numbers) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open file: " + path.string());
    }
    std::vector<std::string> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        rows.push_back(line);
        line_numbers.push_back(lineno);
    }
    return rows;
}

}  // namespace

PriceSeries load_price_csv(const std::filesystem::path& path,
                           const ColumnSelector& column) {
    std::vector<std::size_t> linenos;
    const auto rows = read_csv_rows(path, linenos);
    if (rows.empty()) {
        throw io_error("no data rows in " + path.string());
    }

    const auto first = split_csv_line(rows[0]);
    std::size_t col = 0;
    std::size_t start_row = 0;

    if (std::holds_alternative<std::string>(column)) {
        // named column: the first row must be a header containing it
        const std::string& name = std::get<std::string>(column);
        auto match = std::find_if(first.begin(), first.end(), [&](const std::string& h) {
            return std::equal(h.begin(), h.end(), name.begin(), name.end(),
                              [](char a, char b) {
                                  return std::tolower(static_cast<unsigned char>(a)) ==
                                         std::tolower(static_cast<unsigned char>(b));
                              }) &&
                   h.size() == name.size();
        });
        if (match == first.end()) {
            throw io_error("column '" + name + "' not found in header of " +
                           path.string());
        }
        col = std::size_t(match - first.begin());
        start_row = 1;
    } else {
        col = std::get<std::size_t>(column);
        if (col >= first.size()) {
            throw io_error("column index " + std::to_string(col) +
                           " out of range in " + path.string());
        }
        // header auto-detection: a non-numeric first row is a header
        double probe;
        start_row = parse_double(first[col], probe) ? 0 : 1;
        if (start_row == 1 && rows.size() == 1) {
            throw io_error("no data rows after header in " + path.string());
        }
    }

    // timestamp column: a leading non-numeric column other than the price one
    std::optional<std::size_t> ts_col;
    {
        const auto probe_fields = split_csv_line(rows[start_row]);
        if (!probe_fields.empty() && col != 0) {
            double probe;
            if (!parse_double(probe_fields[0], probe)) ts_col = 0;
        }
    }

    PriceSeries series;
    series.values.reserve(rows.size() - start_row);
    for (std::size_t i = start_row; i < rows.size(); ++i) {
        const auto fields = split_csv_line(rows[i]);
        if (col >= fields.size()) {
            throw io_error("row " + std::to_string(linenos[i]) + " of " +
                           path.string() + ": missing column " + std::to_string(col));
        }
        double v;
        if (!parse_double(fields[col], v)) {
            throw io_error("row " + std::to_string(linenos[i]) + " of " +
                           path.string() + ": unparseable value '" + fields[col] + "'");
        }
        if (!(v > 0.0)) {
            throw io_error("row " + std::to_string(linenos[i]) + " of " +
                           path.string() + ": non-positive price " + fields[col]);
        }
        series.values.push_back(v);
        if (ts_col && *ts_col < fields.size()) {
            series.timestamps.push_back(fields[*ts_col]);
        }
    }

    if (!series.timestamps.empty() &&
        series.timestamps.size() == series.values.size() &&
        std::all_of(series.timestamps.begin(), series.timestamps.end(),
                    looks_like_iso_date)) {
        for (std::size_t i = 1; i < series.timestamps.size(); ++i) {
            if (!(series.timestamps[i - 1] < series.timestamps[i])) {
                throw io_error("timestamps not strictly increasing at row " +
                               std::to_string(i + 1) + " of " + path.string());
            }
        }
    }
    return series;
}

ReturnSeries log_returns(const PriceSeries& prices, std::string source_id) {
    if (prices.values.size() < 2) {
        throw std::invalid_argument(
            "log_returns: need at least two prices, got " +
            std::to_string(prices.values.size()));
    }
    ReturnSeries out;
    out.source_id = std::move(source_id);
    out.values.reserve(prices.values.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.values.size(); ++i) {
        out.values.push_back(std::log(prices.values[i + 1]) -
                             std::log(prices.values[i]));
    }
    return out;
}

ReturnSeries load_return_csv(const std::filesystem::path& path) {
    std::vector<std::size_t> linenos;
    const auto rows = read_csv_rows(path, linenos);
    ReturnSeries out;
    out.source_id = path.stem().string();
    out.values.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string field = trim(rows[i]);
        double v;
        if (parse_double(field, v)) {
            out.values.push_back(v);
        } else if (i == 0 && (field == "x" || field == "X")) {
            continue;  // optional header
        } else {
            throw io_error("row " + std::to_string(linenos[i]) + " of " +
                           path.string() + ": unparseable return '" + field + "'");
        }
    }
    if (out.values.empty()) {
        throw io_error("no return values in " + path.string());
    }
    return out;
}

void write_return_csv(const ReturnSeries& series,
                      const std::filesystem::path& path,
                      const std::string& preamble) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write file: " + path.string());
    }
    if (!preamble.empty()) out << preamble;
    out << "x\n";
    out.precision(17);
    for (double v : series.values) out << v << "\n";
}

ReturnSeries gen_epd_series(const EpdParams& params, std::size_t n,
                            std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("gen_epd_series: n must be positive");
    }
    ReturnSeries out;
    out.source_id = "epd";
    out.values = sample(params, n, seed);
    return out;
}

RegimeSeries gen_regime_switching(double kappa,
                                  std::span<const RegimeBlock> schedule,
                                  std::uint64_t seed) {
    if (schedule.empty()) {
        throw std::invalid_argument("gen_regime_switching: empty schedule");
    }
    for (const auto& block : schedule) {
        if (!(block.sigma > 0.0)) {
            throw std::invalid_argument("gen_regime_switching: sigma must be positive");
        }
    }
    std::mt19937_64 rng(seed);
    std::gamma_distribution<double> gamma(1.0 / kappa, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);

    RegimeSeries out;
    out.returns.source_id = "regime";
    for (const auto& block : schedule) {
        for (std::size_t i = 0; i < block.length; ++i) {
            const double g = gamma(rng);
            const double mag = std::pow(kappa * g, 1.0 / kappa);
            const double s = sign(rng) == 0 ? -1.0 : 1.0;
            out.returns.values.push_back(s * block.sigma * mag);
            out.latent_sigma.push_back(block.sigma);
        }
    }
    return out;
}

GarchSeries gen_garch_series(const GarchParams& params, std::size_t n,
                             std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("gen_garch_series: n must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    GarchSeries out;
    out.returns.source_id = "garch";
    out.returns.values.reserve(n);
    out.latent_variance.reserve(n);
    double sigma2 = params.omega / (1.0 - params.alpha - params.beta);
    for (std::size_t i = 0; i < n; ++i) {
        out.latent_variance.push_back(sigma2);
        const double x = params.mu + std::sqrt(sigma2) * normal(rng);
        out.returns.values.push_back(x);
        const double e = x - params.mu;
        sigma2 = params.omega + params.alpha * e * e + params.beta * sigma2;
    }
    return out;
}

}  // namespace movest
