#include "symmspace/kernels.hpp"

#include <cmath>
#include <limits>

#include "symmspace/errors.hpp"

namespace symmspace {

namespace {

double checked_lambda(double lambda) {
  if (lambda < -1e-10) throw DomainError("curvature eigenvalue is negative");
  return lambda < 0.0 ? 0.0 : lambda;
}

}  // namespace

double sinh_ratio(double lambda, double t) {
  lambda = checked_lambda(lambda);
  if (t < 0.0) throw DomainError("sinh_ratio needs t >= 0");
  const double x = lambda * t * t;
  if (x < 1e-6) return t * (1.0 + x / 6.0 + x * x / 120.0);
  const double root = std::sqrt(lambda);
  return std::sinh(root * t) / root;
}

double log_sinh_ratio(double lambda, double t) {
  lambda = checked_lambda(lambda);
  if (t < 0.0) throw DomainError("log_sinh_ratio needs t >= 0");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  const double x = lambda * t * t;
  if (x < 1e-6) return std::log(t) + std::log1p(x / 6.0 + x * x / 120.0);
  const double u = std::sqrt(lambda) * t;
  // log(sinh u) = u - log 2 + log(1 - exp(-2u)), safe for any large u
  return u - std::log(2.0) + std::log1p(-std::exp(-2.0 * u)) - 0.5 * std::log(lambda);
}

double sqrt_coth(double lambda, double s) {
  lambda = checked_lambda(lambda);
  if (!(s > 0.0)) throw DomainError("sqrt_coth needs s > 0");
  const double x = lambda * s * s;
  if (x < 1e-6) return 1.0 / s + lambda * s / 3.0 - x * lambda * s / 45.0;
  const double root = std::sqrt(lambda);
  const double u = root * s;
  const double e = std::exp(-2.0 * u);
  return root * (1.0 + 2.0 * e / (1.0 - e));
}

}  // namespace symmspace
