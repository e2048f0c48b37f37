#pragma once

#include <functional>

namespace hlab {

// Adaptive Gauss-Kronrod integral of f over [a, b].  The tolerance is a
// target for the absolute error of smooth single-signed integrands; callers
// should split at known kinks of f.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}
