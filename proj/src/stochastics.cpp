#include "ransom/stochastics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>

namespace ransom {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Standard normal tail probabilities via erfc so that both tails stay accurate.
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double normal_quantile(double q) {
  if (q <= 0.0) return -kInf;
  if (q >= 1.0) return kInf;
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * q);
}

}  // namespace

void validate(const ValuationDistribution& dist) {
  std::visit(overloaded{
                 [](const Exponential& d) {
                   require(std::isfinite(d.rate) && d.rate > 0.0, "exponential rate must be positive");
                 },
                 [](const LogNormal& d) {
                   require(std::isfinite(d.mu), "lognormal mu must be finite");
                   require(std::isfinite(d.sigma) && d.sigma > 0.0, "lognormal sigma must be positive");
                 },
                 [](const Uniform& d) {
                   require(std::isfinite(d.lo) && std::isfinite(d.hi), "uniform bounds must be finite");
                   require(d.lo >= 0.0, "uniform lo must be >= 0");
                   require(d.hi > d.lo, "uniform hi must exceed lo");
                 },
             },
             dist);
}

double cdf(const ValuationDistribution& dist, double x) {
  if (std::isnan(x)) throw std::invalid_argument("cdf: x is NaN");
  return std::visit(overloaded{
                        [x](const Exponential& d) { return x <= 0.0 ? 0.0 : -std::expm1(-d.rate * x); },
                        [x](const LogNormal& d) {
                          if (x <= 0.0) return 0.0;
                          return normal_cdf((std::log(x) - d.mu) / d.sigma);
                        },
                        [x](const Uniform& d) {
                          if (x <= d.lo) return 0.0;
                          if (x >= d.hi) return 1.0;
                          return (x - d.lo) / (d.hi - d.lo);
                        },
                    },
                    dist);
}

double survival(const ValuationDistribution& dist, double x) {
  if (std::isnan(x)) throw std::invalid_argument("survival: x is NaN");
  return std::visit(overloaded{
                        [x](const Exponential& d) { return x <= 0.0 ? 1.0 : std::exp(-d.rate * x); },
                        [x](const LogNormal& d) {
                          if (x <= 0.0) return 1.0;
                          return normal_sf((std::log(x) - d.mu) / d.sigma);
                        },
                        [x](const Uniform& d) {
                          if (x <= d.lo) return 1.0;
                          if (x >= d.hi) return 0.0;
                          return (d.hi - x) / (d.hi - d.lo);
                        },
                    },
                    dist);
}

double quantile(const ValuationDistribution& dist, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: q must lie in [0, 1]");
  return std::visit(overloaded{
                        [q](const Exponential& d) { return q >= 1.0 ? kInf : -std::log1p(-q) / d.rate; },
                        [q](const LogNormal& d) {
                          if (q <= 0.0) return 0.0;
                          return std::exp(d.mu + d.sigma * normal_quantile(q));
                        },
                        [q](const Uniform& d) { return d.lo + q * (d.hi - d.lo); },
                    },
                    dist);
}

double sample(const ValuationDistribution& dist, RngStream& rng) {
  return quantile(dist, rng.uniform_open());
}

std::string describe(const ValuationDistribution& dist) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Exponential& d) { os << "Exponential(rate=" << d.rate << ")"; },
                 [&](const LogNormal& d) { os << "LogNormal(mu=" << d.mu << ", sigma=" << d.sigma << ")"; },
                 [&](const Uniform& d) { os << "Uniform(" << d.lo << ", " << d.hi << ")"; },
             },
             dist);
  return os.str();
}

void validate(const PaymentWillingness& w) {
  std::visit(overloaded{
                 [](const PowerDecay& f) {
                   // Exponents in (0, 1) are representable; check_con1 flags them.
                   require(std::isfinite(f.exponent) && f.exponent > 0.0, "power_decay exponent must be positive");
                 },
                 [](const ExpDecay& f) {
                   require(std::isfinite(f.rate) && f.rate > 0.0, "exp_decay rate must be positive");
                 },
                 [](const LinearCutoff& f) {
                   require(f.level >= 0.0 && f.level <= 1.0, "linear_cutoff level must lie in [0, 1]");
                   require(std::isfinite(f.cutoff) && f.cutoff > 0.0, "linear_cutoff cutoff must be positive");
                 },
             },
             w);
}

double p2_eval(const PaymentWillingness& w, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("p2_eval: ransom must be >= 0");
  return std::visit(overloaded{
                        [r](const PowerDecay& f) { return std::pow(1.0 + r, -f.exponent); },
                        [r](const ExpDecay& f) { return std::exp(-f.rate * r); },
                        [r](const LinearCutoff& f) { return f.level * std::max(0.0, 1.0 - r / f.cutoff); },
                    },
                    w);
}

Con1Check check_con1(const PaymentWillingness& w) {
  return std::visit(
      overloaded{
          [](const PowerDecay& f) -> Con1Check {
            const double a = f.exponent;
            if (a < 1.0) return {false, kInf, kInf, kInf};
            if (a == 1.0) return {true, 1.0, kInf, 1.0};
            // d/dr [r (1+r)^-a] = 0  =>  r = 1 / (a - 1)
            const double r_star = 1.0 / (a - 1.0);
            return {true, r_star * std::pow(1.0 + r_star, -a), r_star, 0.0};
          },
          [](const ExpDecay& f) -> Con1Check {
            const double r_star = 1.0 / f.rate;
            return {true, 1.0 / (f.rate * std::numbers::e), r_star, 0.0};
          },
          [](const LinearCutoff& f) -> Con1Check {
            return {true, f.level * f.cutoff / 4.0, f.cutoff / 2.0, 0.0};
          },
      },
      w);
}

std::string describe(const PaymentWillingness& w) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const PowerDecay& f) { os << "PowerDecay(exponent=" << f.exponent << ")"; },
                 [&](const ExpDecay& f) { os << "ExpDecay(rate=" << f.rate << ")"; },
                 [&](const LinearCutoff& f) { os << "LinearCutoff(level=" << f.level << ", cutoff=" << f.cutoff << ")"; },
             },
             w);
  return os.str();
}

}  // namespace ransom
