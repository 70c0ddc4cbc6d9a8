#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wedgekit {

/// Global comparison policy for every inexact (floating-point) test in the
/// library.  Exact rational computations never consult it.
struct ToleranceConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double eig_cluster_tol = 1e-7;  // grouping of nearby eigenvalues

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(eig_cluster_tol > 0.0))
            throw std::invalid_argument("ToleranceConfig: tolerances must be strictly positive");
    }
};

inline const ToleranceConfig& default_tolerance() {
    static const ToleranceConfig cfg{};
    return cfg;
}

/// Combined absolute/relative test: |a-b| <= abs_tol + rel_tol*max(|a|,|b|).
inline bool approx_equal(double a, double b, const ToleranceConfig& tol = default_tolerance()) {
    return std::abs(a - b) <= tol.abs_tol + tol.rel_tol * std::max(std::abs(a), std::abs(b));
}

inline bool approx_zero(double a, const ToleranceConfig& tol = default_tolerance()) {
    return std::abs(a) <= tol.abs_tol;
}

}  // namespace wedgekit
