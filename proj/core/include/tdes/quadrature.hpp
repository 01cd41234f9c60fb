#pragma once

#include <complex>
#include <functional>

namespace tdes {

// Integrand receives x together with the distances x - lo and hi - x, both
// computed without cancellation so endpoint singularities can be evaluated.
using EndpointIntegrand = std::function<std::complex<double>(double x, double dlo, double dhi)>;

struct QuadResult {
    std::complex<double> value;
    double abs_err;
    int evaluations;
};

// Double-exponential (tanh-sinh) quadrature on [lo, hi]; refines the step
// until successive levels agree to tol (absolute or relative to the value).
QuadResult tanh_sinh(const EndpointIntegrand& f, double lo, double hi, double tol = 1e-13,
                     int max_level = 9);

// Gauss-Kronrod 7-15 adaptive panels on [lo, hi] for smooth integrands.
QuadResult gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-14, int max_depth = 40);

} // namespace tdes
