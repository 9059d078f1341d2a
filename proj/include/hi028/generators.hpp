#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hi028/forward.hpp"
#include "hi028/pairs.hpp"

namespace hi028::hirotaka {

/// Knuth's MMIX linear congruential generator.  The constants are part of the
/// tool's reproducibility contract: a given seed must yield the same sample
/// stream on every platform and in every build.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform-ish draw in [0, n); the top bits feed the reduction.
  std::uint64_t bounded(std::uint64_t n) { return (next() >> 33) % n; }

 private:
  std::uint64_t state_;
};

/// p/q with p, q drawn from [1, 1000].
inline Rational random_rational(Lcg64& rng) {
  exactnum::Integer num(rng.bounded(1000) + 1);
  exactnum::Integer den(rng.bounded(1000) + 1);
  return exactnum::make_rational(std::move(num), std::move(den));
}

struct CriterionTriple {
  Rational r1;
  Rational r2;
  Rational d;
};

/// Solutions of d^2 = 2*(r1^2 + r2^2) with all three entries positive and the
/// circles separate.  Integer seeds come from the ladder (1, 7, 10) ->
/// (1, 2d + 3 r2, 3d + 4 r2) -> ..., whose members all satisfy the criterion:
/// if d^2 = 2 + 2 r2^2 then (3d+4r2)^2 - 2(2d+3r2)^2 = d^2 - 2 r2^2 = 2.
/// Each rung is then blown up by a random rational similarity factor.
inline std::vector<CriterionTriple> criterion_solutions(std::uint64_t seed, int count) {
  if (count < 0) throw Error(ErrorCode::nonpositive_input, "count must be nonnegative");
  Lcg64 rng(seed);
  std::vector<CriterionTriple> out;
  out.reserve(static_cast<std::size_t>(count));
  exactnum::Integer r2 = 7;
  exactnum::Integer d = 10;
  for (int i = 0; i < count; ++i) {
    Rational s = random_rational(rng);
    out.push_back({s, s * Rational(r2), s * Rational(d)});
    exactnum::Integer d_next = 3 * d + 4 * r2;
    r2 = 2 * d + 3 * r2;
    d = d_next;
  }
  return out;
}

enum class SweepMode { forward, reverse };

struct SweepSummary {
  SweepMode mode;
  std::uint64_t seed = 0;
  int count = 0;
  int failures = 0;
  std::optional<std::string> first_counterexample;
};

/// Forward mode samples radius pairs, builds the figure and checks every
/// claim; reverse mode samples separate circle pairs and checks that the
/// three equivalence predicates agree.
inline SweepSummary sweep(SweepMode mode, std::uint64_t seed, int count) {
  if (count < 0) throw Error(ErrorCode::nonpositive_input, "count must be nonnegative");
  SweepSummary summary{mode, seed, count, 0, std::nullopt};
  Lcg64 rng(seed);
  for (int i = 0; i < count; ++i) {
    if (mode == SweepMode::forward) {
      Rational r = random_rational(rng);
      Rational rp = random_rational(rng);
      while (rp == r) rp = random_rational(rng);
      ClaimReport rep = verify_forward(construct_forward(r, rp));
      if (!rep.all()) {
        ++summary.failures;
        if (!summary.first_counterexample) {
          std::string what = "r=" + exactnum::to_string(r) + " r_prime=" + exactnum::to_string(rp);
          for (const std::string& name : rep.failed()) what += " " + name;
          summary.first_counterexample = what;
        }
      }
    } else {
      Rational r1 = random_rational(rng);
      Rational r2 = random_rational(rng);
      Rational d = r1 + r2 + random_rational(rng);
      EquivalenceReport rep = equivalence_check(make_pair(r1, r2, d));
      if (!rep.consistent) {
        ++summary.failures;
        if (!summary.first_counterexample)
          summary.first_counterexample = "r1=" + exactnum::to_string(r1) +
                                         " r2=" + exactnum::to_string(r2) +
                                         " d=" + exactnum::to_string(d);
      }
    }
  }
  return summary;
}

}  // namespace hi028::hirotaka
