#pragma once

// Seeded generators of pole-free parameter sets for the identity checks.
//
// Parameters are p/q with p uniform in [-6, 6] and q uniform in [1, 6],
// reduced to lowest terms.  The termination index m is uniform in
// [0, m_max].  Draws that put a denominator parameter on a pole (see
// strictly_pole_free) are rejected and redrawn from the same stream, so a
// seed fixes the whole sample.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "schmidt/hypergeometric.hpp"

namespace schmidt {

class ParameterSampler {
 public:
  static constexpr int kNumeratorBound = 6;
  static constexpr int kDenominatorBound = 6;
  static constexpr int kMaxRejections = 100000;

  ParameterSampler(std::uint64_t seed, unsigned m_max)
      : engine_(seed), m_max_(m_max) {}

  ExactRat rational() {
    std::uniform_int_distribution<int> num(-kNumeratorBound, kNumeratorBound);
    std::uniform_int_distribution<int> den(1, kDenominatorBound);
    const int p = num(engine_);
    const int q = den(engine_);
    return make_rat(p, q);
  }

  unsigned termination() {
    std::uniform_int_distribution<unsigned> dist(0, m_max_);
    return dist(engine_);
  }

  /// Random pole-free very-well-poised spec with s parameter pairs.
  WellPoisedSpec well_poised(std::size_t s) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
      WellPoisedSpec spec;
      spec.a = rational();
      for (std::size_t i = 0; i < s; ++i) {
        ExactRat b = rational();
        ExactRat c = rational();
        spec.pairs.emplace_back(std::move(b), std::move(c));
      }
      spec.m = termination();
      if (strictly_pole_free(spec)) return spec;
    }
    throw std::runtime_error("ParameterSampler: rejection limit reached");
  }

 private:
  std::mt19937_64 engine_;
  unsigned m_max_;
};

}  // namespace schmidt
