#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spiraldet/determinant.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/matrix.hpp"
#include "spiraldet/random.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

struct Witness {
  std::vector<std::string> point;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a batch of exact checks. Every failed trial leaves a witness.
struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;

  bool ok() const noexcept { return failures == 0; }

  void record(bool passed, Witness w) {
    ++trials;
    if (!passed) {
      ++failures;
      witnesses.push_back(std::move(w));
    }
  }

  /// Folds another report's trials into this one.
  void absorb(const VerificationReport& other) {
    trials += other.trials;
    failures += other.failures;
    witnesses.insert(witnesses.end(), other.witnesses.begin(),
                     other.witnesses.end());
  }

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"point", x.point}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  return {{"seed", r.seed},
          {"trials", r.trials},
          {"failures", r.failures},
          {"witnesses", std::move(w)}};
}

/// Values of a, b, c, x, y at the point (root coordinates squared).
inline std::vector<std::string> point_strings(const EvalPoint& pt) {
  std::vector<std::string> out;
  for (const auto& v : pt.plain_values()) out.push_back(to_string(v));
  return out;
}

/// Evaluation point for trial `trial`: nonzero integers in [-50, 50], with
/// the coordinates flagged in `root` read as square roots.
inline EvalPoint sample_point(std::uint64_t seed, std::uint64_t trial,
                              const std::array<bool, kNumVars>& root = {}) {
  SplitMix64 rng(seed, trial);
  std::array<Rational, kNumVars> v;
  for (auto& c : v) c = Rational(static_cast<long>(rng.nonzero(50)));
  return EvalPoint(v, root);
}

using MatrixGenerator = std::function<SquareMatrix<Rational>(const EvalPoint&)>;
using Evaluator = std::function<Rational(const EvalPoint&)>;

/// Randomised identity test det(gen(p)) == rhs(p). Arithmetic is exact, so
/// every recorded failure is a genuine counterexample.
inline VerificationReport verify_identity(
    const MatrixGenerator& lhs_gen, const Evaluator& rhs, std::size_t trials,
    std::uint64_t seed, const std::array<bool, kNumVars>& root = {}) {
  if (trials == 0) throw DomainError("verify_identity needs trials >= 1");
  VerificationReport report;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    const EvalPoint pt = sample_point(seed, t, root);
    const Rational lhs = det_bareiss_rational(lhs_gen(pt));
    const Rational r = rhs(pt);
    report.record(lhs == r, {point_strings(pt), to_string(lhs), to_string(r)});
  }
  return report;
}

/// As above with a polynomial right-hand side; variables carrying
/// half-integer exponents in `rhs` are sampled as square roots.
inline VerificationReport verify_identity(const MatrixGenerator& lhs_gen,
                                          const LaurentPoly& rhs,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  return verify_identity(
      lhs_gen, [&rhs](const EvalPoint& p) { return evaluate(rhs, p); }, trials,
      seed, rhs.half_exponent_vars());
}

/// Generator that specialises a symbolic matrix at the sampled point.
inline MatrixGenerator specializing(SquareMatrix<LaurentPoly> m) {
  return [m = std::move(m)](const EvalPoint& pt) {
    return m.map([&](const LaurentPoly& p) { return evaluate(p, pt); });
  };
}

}  // namespace spiraldet
