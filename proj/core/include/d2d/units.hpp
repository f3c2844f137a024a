#pragma once

#include <cmath>

namespace d2d {

// All internal computation is in linear units (watts, linear power gains,
// linear SINR). dB / dBm appear only at configuration and reporting edges.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline constexpr double kLn2 = 0.6931471805599453094;
inline constexpr double kInvLn2 = 1.4426950408889634074;

// Shannon spectral efficiency in bit/s/Hz for a linear SINR.
inline double rate_from_sinr(double sinr) { return std::log1p(sinr) * kInvLn2; }

// Minimum linear SINR needed to hit a spectral-efficiency target r (bit/s/Hz).
inline double gamma_min_from_rate(double r_min) { return std::exp2(r_min) - 1.0; }

}  // namespace d2d
