#pragma once

// Terminating hypergeometric series at z = 1, evaluated exactly, and the
// very-well-poised summation/transformation formulas used to reduce t_{n,j}:
//
//   5F4  (Dougall)   ->  ratio of four Pochhammer symbols,
//   7F6  (Whipple)   ->  Pochhammer prefactor times a balanced 4F3,
//   (2s+3)F(2s+2)    ->  Pochhammer prefactor times an (s-1)-fold sum
//                        (the q -> 1 limit of Andrews' multiple transformation).
//
// Series are never regularized: a denominator Pochhammer symbol that vanishes
// inside the summation range raises PoleError.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/exact.hpp"

namespace schmidt {

namespace detail {

/// x is one of 0, -1, ..., -(m-1), i.e. (x)_m == 0.
inline bool kills_within(const ExactRat& x, unsigned m) {
  return is_nonpositive_integer(x) && x > -static_cast<long long>(m);
}

inline ExactRat pochhammer_den(const ExactRat& x, unsigned m,
                               const char* where) {
  ExactRat p = pochhammer(x, m);
  if (p == 0) {
    throw PoleError(std::string(where) + ": (" + to_string(x) + ")_" +
                    std::to_string(m) + " vanishes in a denominator");
  }
  return p;
}

}  // namespace detail

/// p F q (numerators; denominators | 1) terminated by a numerator -m.
class HypSeries {
 public:
  HypSeries(std::vector<ExactRat> numerators, std::vector<ExactRat> denominators,
            unsigned m)
      : num_(std::move(numerators)), den_(std::move(denominators)), m_(m) {
    const ExactRat stop = -static_cast<long long>(m_);
    bool terminates = false;
    for (const auto& x : num_) terminates = terminates || x == stop;
    if (!terminates) {
      throw DomainError("HypSeries: no numerator parameter equals -" +
                        std::to_string(m_));
    }
    for (const auto& x : den_) {
      if (detail::kills_within(x, m_)) {
        throw PoleError("HypSeries: denominator parameter " + to_string(x) +
                        " vanishes before termination at m = " +
                        std::to_string(m_));
      }
    }
  }

  const std::vector<ExactRat>& numerators() const noexcept { return num_; }
  const std::vector<ExactRat>& denominators() const noexcept { return den_; }
  unsigned m() const noexcept { return m_; }

 private:
  std::vector<ExactRat> num_;
  std::vector<ExactRat> den_;
  unsigned m_;
};

/// sum_{l=0..m} prod (num_i)_l / (l! prod (den_i)_l), accumulated with the
/// ratio of consecutive terms.
inline ExactRat eval_terminating(const HypSeries& series) {
  ExactRat term = 1;
  ExactRat sum = 1;
  for (unsigned l = 0; l < series.m(); ++l) {
    ExactRat up = 1;
    for (const auto& x : series.numerators()) up *= x + l;
    ExactRat down = l + 1;
    for (const auto& x : series.denominators()) down *= x + l;
    if (up == 0) break;  // every later term carries the same zero factor
    if (down == 0) {
      throw PoleError("eval_terminating: pole at l = " + std::to_string(l + 1));
    }
    term *= up / down;
    sum += term;
  }
  return sum;
}

/// a; (b_1, c_1), ..., (b_s, c_s); m of a very-well-poised series
///   (a, 1+a/2, b_1, c_1, ..., b_s, c_s, -m;
///    a/2, 1+a-b_1, 1+a-c_1, ..., 1+a-b_s, 1+a-c_s, 1+a+m).
struct WellPoisedSpec {
  ExactRat a;
  std::vector<std::pair<ExactRat, ExactRat>> pairs;
  unsigned m = 0;

  std::size_t s() const noexcept { return pairs.size(); }

  HypSeries expand() const {
    if (a == 0) throw DomainError("WellPoisedSpec: a = 0 makes a/2 a zero parameter");
    if (pairs.empty()) throw DomainError("WellPoisedSpec: need s >= 1 pairs");
    const ExactRat one_a = 1 + a;
    std::vector<ExactRat> num{a, 1 + a / 2};
    std::vector<ExactRat> den{a / 2};
    for (const auto& [b, c] : pairs) {
      num.push_back(b);
      num.push_back(c);
      den.push_back(one_a - b);
      den.push_back(one_a - c);
    }
    num.push_back(-static_cast<long long>(m));
    den.push_back(one_a + m);
    return HypSeries(std::move(num), std::move(den), m);
  }
};

/// Structural very-well-poised test: the first numerator a pairs with the
/// implicit l!, the rest pair with the denominators to the constant sum 1+a,
/// and the second numerator is 1 + a/2.
inline bool is_very_well_poised(const HypSeries& series) {
  const auto& num = series.numerators();
  const auto& den = series.denominators();
  if (num.size() < 2 || num.size() != den.size() + 1) return false;
  const ExactRat& a = num.front();
  if (num[1] != 1 + a / 2) return false;
  for (std::size_t i = 1; i < num.size(); ++i) {
    if (num[i] + den[i - 1] != 1 + a) return false;
  }
  return true;
}

// Dougall --------------------------------------------------------------------

inline HypSeries dougall_lhs(const ExactRat& a, const ExactRat& c,
                             const ExactRat& d, unsigned m) {
  return WellPoisedSpec{a, {{c, d}}, m}.expand();
}

/// (1+a)_m (1+a-c-d)_m / ((1+a-c)_m (1+a-d)_m).
inline ExactRat dougall_rhs(const ExactRat& a, const ExactRat& c,
                            const ExactRat& d, unsigned m) {
  const ExactRat one_a = 1 + a;
  return pochhammer(one_a, m) * pochhammer(one_a - c - d, m) /
         (detail::pochhammer_den(one_a - c, m, "dougall_rhs") *
          detail::pochhammer_den(one_a - d, m, "dougall_rhs"));
}

inline bool check_dougall(const ExactRat& a, const ExactRat& c,
                          const ExactRat& d, unsigned m) {
  return eval_terminating(dougall_lhs(a, c, d, m)) == dougall_rhs(a, c, d, m);
}

// Whipple --------------------------------------------------------------------

inline HypSeries whipple_lhs(const ExactRat& a, const ExactRat& b,
                             const ExactRat& c, const ExactRat& d,
                             const ExactRat& e, unsigned m) {
  return WellPoisedSpec{a, {{b, c}, {d, e}}, m}.expand();
}

/// (1+a)_m (1+a-d-e)_m / ((1+a-d)_m (1+a-e)_m)
///   * 4F3(1+a-b-c, d, e, -m; 1+a-b, 1+a-c, d+e-a-m).
inline ExactRat whipple_rhs(const ExactRat& a, const ExactRat& b,
                            const ExactRat& c, const ExactRat& d,
                            const ExactRat& e, unsigned m) {
  const ExactRat one_a = 1 + a;
  const ExactRat minus_m = -static_cast<long long>(m);
  const ExactRat prefactor =
      pochhammer(one_a, m) * pochhammer(one_a - d - e, m) /
      (detail::pochhammer_den(one_a - d, m, "whipple_rhs") *
       detail::pochhammer_den(one_a - e, m, "whipple_rhs"));
  const HypSeries balanced({one_a - b - c, d, e, minus_m},
                           {one_a - b, one_a - c, d + e - a - m}, m);
  return prefactor * eval_terminating(balanced);
}

inline bool check_whipple(const ExactRat& a, const ExactRat& b,
                          const ExactRat& c, const ExactRat& d,
                          const ExactRat& e, unsigned m) {
  return eval_terminating(whipple_lhs(a, b, c, d, e, m)) ==
         whipple_rhs(a, b, c, d, e, m);
}

// Andrews --------------------------------------------------------------------

/// Right-hand side of the multiple transformation:
///
///   (1+a)_m (1+a-b_s-c_s)_m / ((1+a-b_s)_m (1+a-c_s)_m)
///   * sum_{l_1..l_{s-1}} prod_{i<s} (1+a-b_i-c_i)_{l_i} (b_{i+1})_{L_i} (c_{i+1})_{L_i}
///                                   / (l_i! (1+a-b_i)_{L_i} (1+a-c_i)_{L_i})
///                        * (-m)_{L_{s-1}} / (b_s+c_s-a-m)_{L_{s-1}},
///
/// with L_i = l_1 + ... + l_i.  Each l_i runs to m - L_{i-1}; past that the
/// trailing (-m)_{L_{s-1}} is zero.
inline ExactRat andrews_rhs(const WellPoisedSpec& spec) {
  if (spec.pairs.empty()) throw DomainError("andrews_rhs: need s >= 1 pairs");
  const std::size_t s = spec.s();
  const unsigned m = spec.m;
  const ExactRat one_a = 1 + spec.a;
  const auto& [bs, cs] = spec.pairs.back();

  const ExactRat prefactor =
      pochhammer(one_a, m) * pochhammer(one_a - bs - cs, m) /
      (detail::pochhammer_den(one_a - bs, m, "andrews_rhs") *
       detail::pochhammer_den(one_a - cs, m, "andrews_rhs"));
  if (s == 1) return prefactor;

  const ExactRat minus_m = -static_cast<long long>(m);
  const ExactRat last_den = bs + cs - spec.a - m;

  // layer is 0-based: layer i sums l_{i+1}.
  std::function<ExactRat(std::size_t, unsigned)> nest =
      [&](std::size_t layer, unsigned total) -> ExactRat {
    if (layer + 1 == s) {
      return pochhammer(minus_m, total) /
             detail::pochhammer_den(last_den, total, "andrews_rhs");
    }
    const auto& [b, c] = spec.pairs[layer];
    const auto& [b_next, c_next] = spec.pairs[layer + 1];
    ExactRat sum = 0;
    for (unsigned l = 0; total + l <= m; ++l) {
      const unsigned L = total + l;
      const ExactRat up = pochhammer(one_a - b - c, l) *
                          pochhammer(b_next, L) * pochhammer(c_next, L);
      if (up == 0) continue;
      const ExactRat down =
          ExactRat(factorial(l)) *
          detail::pochhammer_den(one_a - b, L, "andrews_rhs") *
          detail::pochhammer_den(one_a - c, L, "andrews_rhs");
      sum += up / down * nest(layer + 1, L);
    }
    return sum;
  };
  return prefactor * nest(0, 0);
}

inline bool check_andrews(const WellPoisedSpec& spec) {
  return eval_terminating(spec.expand()) == andrews_rhs(spec);
}

/// Every denominator parameter appearing on either side of the three
/// identities for this spec stays off {0, -1, ..., -(m-1)}, and a != 0.
/// Inside that region both sides are continuous rational functions of the
/// parameters, so the identities hold without any limiting argument.
inline bool strictly_pole_free(const WellPoisedSpec& spec) {
  if (spec.a == 0 || spec.pairs.empty()) return false;
  const unsigned m = spec.m;
  const ExactRat one_a = 1 + spec.a;
  std::vector<ExactRat> dens{spec.a / 2, one_a + m};
  for (const auto& [b, c] : spec.pairs) {
    dens.push_back(one_a - b);
    dens.push_back(one_a - c);
  }
  const auto& [bs, cs] = spec.pairs.back();
  dens.push_back(bs + cs - spec.a - m);
  for (const auto& x : dens) {
    if (detail::kills_within(x, m)) return false;
  }
  return true;
}

// t as a hypergeometric series -----------------------------------------------

/// t_{n,j}^(r) = C(n+j,n-j)^r
///   * (r+2)F(r+1)(-(2n+1), -(2n-1)/2, -(n-j) [r times];
///                  -(2n+1)/2, -(n+j) [r times] | 1).
/// The first denominator pole sits at l = n+j+1, past m = n-j.
inline HypSeries t_series(std::size_t n, std::size_t j, unsigned r) {
  if (r < 1) throw DomainError("t_series: r must be at least 1");
  if (j > n) throw DomainError("t_series: j exceeds n");
  const auto sn = static_cast<long long>(n);
  const auto sj = static_cast<long long>(j);
  std::vector<ExactRat> num{make_rat(-(2 * sn + 1)), make_rat(-(2 * sn - 1), 2)};
  std::vector<ExactRat> den{make_rat(-(2 * sn + 1), 2)};
  for (unsigned i = 0; i < r; ++i) {
    num.push_back(make_rat(-(sn - sj)));
    den.push_back(make_rat(-(sn + sj)));
  }
  return HypSeries(std::move(num), std::move(den), static_cast<unsigned>(n - j));
}

inline ExactInt t_as_hypergeometric(std::size_t n, std::size_t j, unsigned r) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sj = static_cast<std::int64_t>(j);
  const ExactRat value = ExactRat(ipow(binomial(sn + sj, sn - sj), r)) *
                         eval_terminating(t_series(n, j, r));
  return exact_integer(value);
}

}  // namespace schmidt
