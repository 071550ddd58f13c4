#pragma once

#include <cmath>

#include "xychain/errors.hpp"

namespace xychain {

// Inverse temperature of the initial equilibrium state.  Zero temperature
// (beta -> infinity) is a distinct variant handled analytically, never by
// evaluating tanh at a large argument.
class Temperature {
 public:
  static Temperature zero() { return Temperature(-1.0); }

  static Temperature finite(double beta) {
    if (!(beta > 0.0)) {
      throw DomainError("Temperature::finite requires beta > 0");
    }
    return Temperature(beta);
  }

  bool is_zero() const { return beta_ < 0.0; }

  double beta() const {
    if (is_zero()) {
      throw DomainError("beta() is undefined for the zero-temperature variant");
    }
    return beta_;
  }

  bool operator==(const Temperature& o) const { return beta_ == o.beta_; }

 private:
  explicit Temperature(double beta) : beta_(beta) {}
  double beta_;
};

// Quench parameters: the chain is prepared in equilibrium at transverse field
// a and inverse temperature beta, then the field is switched off at t = 0 and
// observables are read out at time time_t.  All quantities dimensionless
// (hbar = k = 1, couplings of order unity).
struct ModelParams {
  double gamma = 0.5;                      // anisotropy, must be nonzero
  double field_a = 0.5;                    // initial transverse field
  Temperature temperature = Temperature::zero();
  double time_t = 0.0;                     // time after the quench, >= 0

  void validate() const {
    if (gamma == 0.0) {
      throw DomainError("nonvanishing anisotropy gamma is required");
    }
    if (!(time_t >= 0.0)) {
      throw DomainError("time_t must be >= 0");
    }
  }

  // a = 0 means no quench; accepted, but callers may want to warn.
  bool field_a_flagged() const { return field_a == 0.0; }

  ModelParams with_field(double a) const {
    ModelParams p = *this;
    p.field_a = a;
    return p;
  }
  ModelParams with_time(double t) const {
    ModelParams p = *this;
    p.time_t = t;
    return p;
  }
  ModelParams with_temperature(const Temperature& T) const {
    ModelParams p = *this;
    p.temperature = T;
    return p;
  }
};

// Quasiparticle energy Lambda(h) = sqrt(gamma^2 sin^2 phi + (h - cos phi)^2).
inline double dispersion(double h, double gamma, double phi) {
  return std::hypot(gamma * std::sin(phi), h - std::cos(phi));
}

// tanh(beta * lambda / 2), with the beta -> infinity limit taken exactly.
inline double thermal_weight(const Temperature& temperature, double lambda_a) {
  if (temperature.is_zero()) return 1.0;
  return std::tanh(0.5 * temperature.beta() * lambda_a);
}

}  // namespace xychain
