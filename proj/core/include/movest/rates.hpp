#pragma once

namespace movest {

/// Forgetting-rate configuration for the moving estimators.
///
/// All retention rates weight the OLD state: new = rate * old + (1 - rate) * fresh.
/// A rate close to 1 therefore means long memory (eta ~ 0.94 for scale,
/// nu ~ 0.997 for location on daily returns). `mu_weight_on_new` flips the
/// location/moment convention to new = (1 - nu) * old + nu * fresh for
/// compatibility with sources that write the update the other way around.
struct RateConfig {
    double eta = 0.94;           // scale retention, in (0, 1]
    double nu = 0.997;           // location / moment retention, in (0, 1]
    double xi = 0.99;            // AEPD alpha retention (frequency mode), in (0, 1)
    double epsilon_eta = 0.0;    // gradient learning rate for eta; 0 disables
    double epsilon_kappa = 0.0;  // gradient learning rate for kappa; 0 disables
    bool debias = false;         // exact normalized-weight estimator instead of plain EMA
    bool mu_weight_on_new = false;

    void validate() const;
};

/// Clamp range applied to gradient-adapted eta.
inline constexpr double kEtaClampLo = 0.5;
inline constexpr double kEtaClampHi = 0.9999;

}  // namespace movest
