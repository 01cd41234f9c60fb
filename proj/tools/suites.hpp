#pragma once

// Verification suites behind `tdes verify`.

#include "tdes/eisenstein.hpp"

#include <string>
#include <vector>

namespace tdes::cli {

struct Check {
    std::string name;
    double value = 0.0;      // measured deviation
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;      // optional human-readable context
};

std::vector<Check> suite_specfun();

// Building blocks of the suites, one per verified property.
Check check_rationality_sweep();
std::vector<Check> checks_closed_form();
std::vector<Check> checks_series_vs_exact(const Truncation& tr);
std::vector<Check> checks_residual(const Truncation& tr);
std::vector<Check> checks_functional_equation();
Check check_product_form_sign();
std::vector<Check> checks_tau();
std::vector<Check> checks_l_values();
std::vector<Check> checks_petersson(const Truncation& tr);

std::vector<Check> suite_identity(const Truncation& tr);
std::vector<Check> suite_oracle(const Truncation& tr);
std::vector<Check> suite_spectral(const Truncation& tr);

// Relative deviation with a magnitude floor: |a - b| / max(|b|, scale).
double rel_dev(ComplexValue a, ComplexValue b, double scale = 0.0);

} // namespace tdes::cli
