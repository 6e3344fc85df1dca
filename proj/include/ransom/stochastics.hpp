#pragma once

#include <string>
#include <variant>

#include "ransom/rng.hpp"

namespace ransom {

// ---------------------------------------------------------------------------
// Valuation distributions: the hacker's belief about what the victim's files
// are worth. All supports lie in [0, inf).
// ---------------------------------------------------------------------------

struct Exponential {
  double rate = 1.0;
};

struct LogNormal {
  double mu = 0.0;
  double sigma = 1.0;
};

struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
};

using ValuationDistribution = std::variant<Exponential, LogNormal, Uniform>;

/// Throws std::invalid_argument when the parameters leave the family's domain.
void validate(const ValuationDistribution& dist);

/// F(x); 0 below the support.
double cdf(const ValuationDistribution& dist, double x);

/// 1 - F(x), evaluated directly so deep tails keep full relative precision.
double survival(const ValuationDistribution& dist, double x);

/// Inverse CDF for q in [0, 1]. quantile(1) is +inf for unbounded supports.
double quantile(const ValuationDistribution& dist, double q);

/// Inverse-transform draw; consumes exactly one uniform from the stream.
double sample(const ValuationDistribution& dist, RngStream& rng);

std::string describe(const ValuationDistribution& dist);

// ---------------------------------------------------------------------------
// Payment willingness p2(r): the probability that a victim whose crack attempt
// failed goes on to pay the ransom (plus the punishment fee).
// ---------------------------------------------------------------------------

/// p2(r) = (1 + r)^(-exponent)
struct PowerDecay {
  double exponent = 2.0;
};

/// p2(r) = exp(-rate * r)
struct ExpDecay {
  double rate = 1.0;
};

/// p2(r) = level * max(0, 1 - r / cutoff)
struct LinearCutoff {
  double level = 1.0;
  double cutoff = 1.0;
};

using PaymentWillingness = std::variant<PowerDecay, ExpDecay, LinearCutoff>;

void validate(const PaymentWillingness& w);

double p2_eval(const PaymentWillingness& w, double r);

/// Outcome of the boundedness check on r * p2(r).
struct Con1Check {
  bool bounded = false;
  /// sup_{r >= 0} r * p2(r); +inf when unbounded.
  double bound = 0.0;
  /// Location of the supremum; +inf when it is only approached asymptotically.
  double argsup = 0.0;
  /// lim_{r -> inf} r * p2(r).
  double limit_at_infinity = 0.0;
};

Con1Check check_con1(const PaymentWillingness& w);

std::string describe(const PaymentWillingness& w);

}  // namespace ransom
