#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spiraldet/errors.hpp"
#include "spiraldet/random.hpp"

namespace spiraldet::funceq {

/// Evaluation runs in extended precision: g(x^3) reaches ~3e7 for
/// alpha = 2.5 on [0.1, 10], and the residual bound is absolute.
using Real = long double;

enum class Kind { Zero, LogAffine, PowerSymmetric };

/// The continuous solution families of f(a)g(x) = f(ax) + f(a/x):
///   Zero:           f = 0 (g is reported as 2)
///   LogAffine:      f = c1 + c2 log x,               g = 2
///   PowerSymmetric: f = c1 x^alpha + c2 x^-alpha,    g = x^alpha + x^-alpha
/// With `imaginary` set, alpha = i*t for t = `alpha`; then g = 2 cos(t log x)
/// and f = c1 cos(t log x) + c2 sin(t log x), the real span of x^(+-it).
struct FamilySpec {
  Kind kind = Kind::Zero;
  Real alpha = 0;
  bool imaginary = false;
  Real c1 = 0;
  Real c2 = 0;

  static FamilySpec zero() { return {}; }
  static FamilySpec log_affine(Real c1, Real c2) {
    return {Kind::LogAffine, 0, false, c1, c2};
  }
  static FamilySpec power(Real alpha, Real c1 = 1, Real c2 = -1) {
    return {Kind::PowerSymmetric, alpha, false, c1, c2};
  }
  static FamilySpec imaginary_power(Real t, Real c1 = 1, Real c2 = 0) {
    return {Kind::PowerSymmetric, t, true, c1, c2};
  }
};

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Zero: return "zero";
    case Kind::LogAffine: return "logaffine";
    case Kind::PowerSymmetric: return "power";
  }
  return "?";
}

namespace detail {
inline void require_positive(Real x) {
  if (!(x > 0)) throw DomainError("argument must be positive");
}
}  // namespace detail

inline Real eval_g(const FamilySpec& s, Real x) {
  detail::require_positive(x);
  if (s.kind != Kind::PowerSymmetric) return 2;
  if (s.imaginary) return 2 * std::cos(s.alpha * std::log(x));
  return std::pow(x, s.alpha) + std::pow(x, -s.alpha);
}

inline Real eval_f(const FamilySpec& s, Real x) {
  detail::require_positive(x);
  switch (s.kind) {
    case Kind::Zero: return 0;
    case Kind::LogAffine: return s.c1 + s.c2 * std::log(x);
    case Kind::PowerSymmetric:
      if (s.imaginary) {
        const Real phase = s.alpha * std::log(x);
        return s.c1 * std::cos(phase) + s.c2 * std::sin(phase);
      }
      return s.c1 * std::pow(x, s.alpha) + s.c2 * std::pow(x, -s.alpha);
  }
  return 0;
}

enum class Relation { R6_1, R6_14, R6_15, R6_16, R6_17 };

inline constexpr Relation kAllRelations[] = {
    Relation::R6_1, Relation::R6_14, Relation::R6_15, Relation::R6_16,
    Relation::R6_17};

inline std::string_view relation_id(Relation r) {
  switch (r) {
    case Relation::R6_1: return "6.1";
    case Relation::R6_14: return "6.14";
    case Relation::R6_15: return "6.15";
    case Relation::R6_16: return "6.16";
    case Relation::R6_17: return "6.17";
  }
  return "?";
}

inline Relation parse_relation(std::string_view s) {
  for (Relation r : kAllRelations) {
    if (relation_id(r) == s) return r;
  }
  throw UnknownRelation("unknown relation '" + std::string(s) + "'");
}

struct ResidualReport {
  Relation relation = Relation::R6_1;
  std::size_t samples = 0;
  Real max_residual = 0;
  /// The sample attaining max_residual: (x) or (a, x).
  std::vector<Real> argmax;
};

inline nlohmann::json to_json(const ResidualReport& r) {
  std::vector<double> arg(r.argmax.begin(), r.argmax.end());
  return {{"relation", relation_id(r.relation)},
          {"samples", r.samples},
          {"max_residual", static_cast<double>(r.max_residual)},
          {"argmax", arg}};
}

using RealFunction = std::function<Real(Real)>;

/// Log-uniform sample in [0.1, 10].
inline Real log_uniform(SplitMix64& rng) {
  const Real lo = std::log(Real(0.1));
  const Real hi = std::log(Real(10));
  return std::exp(lo + (hi - lo) * static_cast<Real>(rng.unit()));
}

/// lhs - rhs of a relation for the pair (f, g) at (a, x).
inline Real residual(Relation rel, const RealFunction& f, const RealFunction& g,
                     Real a, Real x) {
  switch (rel) {
    case Relation::R6_1: return f(a) * g(x) - (f(a * x) + f(a / x));
    case Relation::R6_14: return g(x) - g(1 / x);
    case Relation::R6_15: {
      const Real gx = g(x);
      return g(x * x) - (gx * gx - 2);
    }
    case Relation::R6_16: {
      const Real gx = g(x);
      return g(x * x * x) - (gx * gx * gx - 3 * gx);
    }
    case Relation::R6_17: return g(a) * g(x) - (g(a * x) + g(a / x));
  }
  return 0;
}

inline bool uses_two_arguments(Relation rel) {
  return rel == Relation::R6_1 || rel == Relation::R6_17;
}

/// Max |residual| over `samples` log-uniform points; sample k draws from
/// stream (seed, k), so the report does not depend on evaluation order.
inline ResidualReport check_functions(Relation rel, const RealFunction& f,
                                      const RealFunction& g,
                                      std::size_t samples,
                                      std::uint64_t seed) {
  if (samples == 0) throw DomainError("check_relation needs samples >= 1");
  ResidualReport report{rel, samples, 0, {}};
  bool first = true;
  for (std::size_t k = 0; k < samples; ++k) {
    SplitMix64 rng(seed, k);
    const Real a = log_uniform(rng);
    const Real x = log_uniform(rng);
    const Real r = std::fabs(residual(rel, f, g, a, x));
    if (first || r > report.max_residual) {
      first = false;
      report.max_residual = r;
      report.argmax = uses_two_arguments(rel) ? std::vector<Real>{a, x}
                                              : std::vector<Real>{x};
    }
  }
  return report;
}

inline ResidualReport check_relation(const FamilySpec& spec, Relation rel,
                                     std::size_t samples,
                                     std::uint64_t seed) {
  return check_functions(
      rel, [&](Real t) { return eval_f(spec, t); },
      [&](Real t) { return eval_g(spec, t); }, samples, seed);
}

inline ResidualReport check_relation(const FamilySpec& spec,
                                     std::string_view rel, std::size_t samples,
                                     std::uint64_t seed) {
  return check_relation(spec, parse_relation(rel), samples, seed);
}

inline constexpr Real kBasePoint = 2;
inline constexpr Real kDefaultTolerance = 1e-9L;

/// Fits g = x^alpha + x^-alpha (real alpha >= 0) or g = 2 cos(t log x)
/// (t >= 0) from the value at x0 = 2, then requires the oracle to match the
/// fitted g and to satisfy g(a)g(x) = g(ax) + g(a/x) on the samples.
/// A constant 2 is reported as LogAffine with alpha = 0.
inline FamilySpec classify(const RealFunction& oracle, std::size_t samples,
                           std::uint64_t seed,
                           Real tolerance = kDefaultTolerance) {
  const Real g0 = oracle(kBasePoint);
  if (!(g0 >= -2)) {
    throw Unclassifiable("g(2) < -2 is outside the characterised families");
  }
  FamilySpec fitted;
  if (g0 >= 2) {
    // Larger root of z^2 - g0 z + 1 = 0 is 2^alpha.
    const Real z = (g0 + std::sqrt(g0 * g0 - 4)) / 2;
    const Real alpha = std::log(z) / std::log(kBasePoint);
    fitted = alpha == 0 ? FamilySpec::log_affine(1, 0)
                        : FamilySpec::power(alpha, 1, 0);
  } else {
    const Real t = std::acos(g0 / 2) / std::log(kBasePoint);
    fitted = FamilySpec::imaginary_power(t, 1, 0);
  }

  const RealFunction zero = [](Real) { return Real(0); };
  const RealFunction fitted_g = [&](Real x) { return eval_g(fitted, x); };
  Real worst = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    SplitMix64 rng(seed, k);
    const Real x = log_uniform(rng);
    worst = std::max(worst, std::fabs(oracle(x) - fitted_g(x)));
  }
  const ResidualReport r17 =
      check_functions(Relation::R6_17, zero, oracle, samples, seed);
  worst = std::max(worst, r17.max_residual);
  if (!(worst <= tolerance)) {
    throw Unclassifiable("fitted family misses the oracle by " +
                         std::to_string(static_cast<double>(worst)));
  }
  return fitted;
}

}  // namespace spiraldet::funceq
