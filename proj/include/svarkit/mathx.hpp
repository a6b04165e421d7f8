#pragma once

namespace svarkit {

// Digamma (psi) for x > 0: upward recurrence into the asymptotic regime, then
// the standard Bernoulli-number series. Accurate to ~1e-13 relative.
double digamma(double x);

// log-density of a Student-t with df nu and scale sigma, evaluated at x.
double log_t_density(double x, double nu, double sigma);

// Scale that gives a unit-variance Student-t: sqrt((nu-2)/nu), nu > 2.
double unit_variance_t_scale(double nu);

}  // namespace svarkit
