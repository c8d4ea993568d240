#pragma once

// Schmidt's numbers c_n^(r), defined for r >= 1 by
//
//   sum_k C(n,k)^r C(n+k,k)^r = sum_k C(n,k) C(n+k,k) c_k^(r)   for all n,
//
// together with the inner sums
//
//   t_{n,j}^(r) = sum_{k=j..n} (-1)^{n-k} d_{n,k} C(k+j,k-j)^r,
//   C(2n,n) c_n^(r) = sum_j C(2j,j)^r t_{n,j}^(r),
//
// and every closed form for t and c built on them.  All routes are exact;
// divisions that are integral only by theorem go through exact_divide so a
// failure surfaces as DivisibilityError instead of a wrong number.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schmidt/exact.hpp"
#include "schmidt/legendre.hpp"

namespace schmidt {

/// Exponent r of the defining identity with its parity split r = 2s or
/// r = 2s + 1.
struct SchmidtQuery {
  unsigned r = 2;
  std::size_t n_max = 0;

  SchmidtQuery(unsigned r_, std::size_t n_max_) : r(r_), n_max(n_max_) {
    if (r < 1) throw DomainError("SchmidtQuery: r must be at least 1");
  }

  unsigned s() const noexcept { return r / 2; }
  bool even() const noexcept { return r % 2 == 0; }
};

/// One t_{n,j}^(r) together with C(2j,j) t / C(2n,n).
struct TnjValue {
  std::size_t n = 0;
  std::size_t j = 0;
  unsigned r = 0;
  ExactInt value;
  ExactInt theorem2_ratio;
};

namespace detail {

inline void require_r(unsigned r) {
  if (r < 1) throw DomainError("exponent r must be at least 1");
}

inline void require_j(std::size_t n, std::size_t j) {
  if (j > n) {
    throw DomainError("j = " + std::to_string(j) + " exceeds n = " +
                      std::to_string(n));
  }
}

inline std::int64_t si(std::size_t x) { return static_cast<std::int64_t>(x); }

inline const ExactInt& fac(std::int64_t x) {
  return factorial(static_cast<std::size_t>(x));
}

}  // namespace detail

// defining identity ----------------------------------------------------------

/// a_n^(r) = sum_k C(n,k)^r C(n+k,k)^r.
inline ExactInt lhs_sum(std::size_t n, unsigned r) {
  detail::require_r(r);
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t k = 0; k <= sn; ++k) {
    acc += ipow(binomial(sn, k) * binomial(sn + k, k), r);
  }
  return acc;
}

/// c_0^(r), ..., c_nMax^(r) by triangular solve of the defining identity.
inline IntegerSequence c_by_definition(unsigned r, std::size_t n_max) {
  detail::require_r(r);
  std::vector<ExactInt> a;
  a.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) a.push_back(lhs_sum(n, r));
  return triangular_solve(IntegerSequence(std::move(a)));
}

// inner sums -----------------------------------------------------------------

/// t_{n,j}^(r) straight from its alternating d-weighted sum.
inline ExactInt t_sum(std::size_t n, std::size_t j, unsigned r) {
  detail::require_r(r);
  detail::require_j(n, j);
  const auto sj = detail::si(j);
  ExactInt acc = 0;
  for (std::size_t k = j; k <= n; ++k) {
    const auto sk = detail::si(k);
    ExactInt term = legendre_coefficient(n, k) * ipow(binomial(sk + sj, sk - sj), r);
    if ((n - k) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// C(2j,j) t_{n,j}^(r) / C(2n,n), divided exactly.
inline ExactInt theorem2_ratio(std::size_t n, std::size_t j, unsigned r) {
  return exact_divide(central_binomial(j) * t_sum(n, j, r),
                      central_binomial(n));
}

inline TnjValue tnj(std::size_t n, std::size_t j, unsigned r) {
  TnjValue out;
  out.n = n;
  out.j = j;
  out.r = r;
  out.value = t_sum(n, j, r);
  out.theorem2_ratio =
      exact_divide(central_binomial(j) * out.value, central_binomial(n));
  return out;
}

/// c_n^(r) = C(2n,n)^{-1} sum_j C(2j,j)^r t_{n,j}^(r).
inline ExactInt c_from_t(std::size_t n, unsigned r) {
  detail::require_r(r);
  ExactInt acc = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    acc += ipow(central_binomial(j), r) * t_sum(n, j, r);
  }
  return exact_divide(acc, central_binomial(n));
}

/// 1/m!, with 1/m! = 0 for negative m.
inline ExactRat reciprocal_factorial(std::int64_t m) {
  if (m < 0) return ExactRat(0);
  return ExactRat(ExactInt(1), factorial(static_cast<std::size_t>(m)));
}

// r = 2, 3 -------------------------------------------------------------------

/// sum_j C(n,j)^3.
inline ExactInt franel_cubes(std::size_t n) {
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) acc += ipow(binomial(sn, j), 3);
  return acc;
}

/// sum_j C(n,j)^2 C(2j,n).
inline ExactInt franel_central(std::size_t n) {
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) {
    acc += ipow(binomial(sn, j), 2) * binomial(2 * j, sn);
  }
  return acc;
}

/// c_n^(2): the Franel number, with both sum forms required to agree.
inline ExactInt c2_closed(std::size_t n) {
  ExactInt cubes = franel_cubes(n);
  if (cubes != franel_central(n)) {
    throw std::logic_error("c2_closed: Franel forms disagree at n = " +
                           std::to_string(n));
  }
  return cubes;
}

/// t_{n,j}^(3) = (2n)! / ((3j-n)! (n-j)!^3); zero when 3j < n.
inline ExactInt t3_closed(std::size_t n, std::size_t j) {
  detail::require_j(n, j);
  const auto sn = detail::si(n);
  const auto sj = detail::si(j);
  ExactRat v = ExactRat(factorial(2 * n)) * reciprocal_factorial(3 * sj - sn);
  const ExactRat rf = reciprocal_factorial(sn - sj);
  v *= rf * rf * rf;
  return exact_integer(v);
}

/// c_n^(3) = sum_j C(2j,j)^2 C(2j,n-j) C(n,j)^2.
inline ExactInt c3_closed(std::size_t n) {
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) {
    const auto& cb = central_binomial(static_cast<std::size_t>(j));
    acc += cb * cb * binomial(2 * j, sn - j) * ipow(binomial(sn, j), 2);
  }
  return acc;
}

// r = 4, 5 -------------------------------------------------------------------

namespace detail {

/// sum_k C(k+j,k-j) C(j,n-k) C(k,j) C(2j,k-j).
inline ExactInt inner_sum_r4(std::int64_t n, std::int64_t j) {
  ExactInt acc = 0;
  for (std::int64_t k = j; k <= n; ++k) {
    acc += binomial(k + j, k - j) * binomial(j, n - k) * binomial(k, j) *
           binomial(2 * j, k - j);
  }
  return acc;
}

/// sum_k C(k+j,k-j)^2 C(2j,n-k) C(2j,k-j).
inline ExactInt inner_sum_r5(std::int64_t n, std::int64_t j) {
  ExactInt acc = 0;
  for (std::int64_t k = j; k <= n; ++k) {
    acc += ipow(binomial(k + j, k - j), 2) * binomial(2 * j, n - k) *
           binomial(2 * j, k - j);
  }
  return acc;
}

/// sum * (2n)! j! / (n! (n-j)! (2j)!), divided exactly.
inline ExactInt apply_even_prefactor(const ExactInt& sum, std::int64_t n,
                                     std::int64_t j) {
  return exact_divide(fac(2 * n) * fac(j) * sum,
                      fac(n) * fac(n - j) * fac(2 * j));
}

/// sum * (2n)! / ((2j)! (n-j)!^2), divided exactly.
inline ExactInt apply_odd_prefactor(const ExactInt& sum, std::int64_t n,
                                    std::int64_t j) {
  return exact_divide(fac(2 * n) * sum,
                      fac(2 * j) * fac(n - j) * fac(n - j));
}

}  // namespace detail

inline ExactInt t4_closed(std::size_t n, std::size_t j) {
  detail::require_j(n, j);
  const auto sn = detail::si(n);
  const auto sj = detail::si(j);
  return detail::apply_even_prefactor(detail::inner_sum_r4(sn, sj), sn, sj);
}

inline ExactInt t5_closed(std::size_t n, std::size_t j) {
  detail::require_j(n, j);
  const auto sn = detail::si(n);
  const auto sj = detail::si(j);
  return detail::apply_odd_prefactor(detail::inner_sum_r5(sn, sj), sn, sj);
}

/// c_n^(4) = sum_j C(2j,j)^3 C(n,j) sum_k C(k+j,k-j) C(j,n-k) C(k,j) C(2j,k-j).
inline ExactInt c4_closed(std::size_t n) {
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) {
    acc += ipow(central_binomial(static_cast<std::size_t>(j)), 3) *
           binomial(sn, j) * detail::inner_sum_r4(sn, j);
  }
  return acc;
}

/// c_n^(5) = sum_j C(2j,j)^4 C(n,j)^2 sum_k C(k+j,k-j)^2 C(2j,n-k) C(2j,k-j).
inline ExactInt c5_closed(std::size_t n) {
  const auto sn = detail::si(n);
  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) {
    acc += ipow(central_binomial(static_cast<std::size_t>(j)), 4) *
           ipow(binomial(sn, j), 2) * detail::inner_sum_r5(sn, j);
  }
  return acc;
}

// general r >= 4 -------------------------------------------------------------
//
// Both nested formulas are chains of s - 1 sums.  Each middle layer carries a
// link binomial C(2j, step) to the previous layer and a squared
// C(x+j, x-j); the last layer is closed by C(2j, x-j), and only the first
// layer depends on the parity of r.  The chains are evaluated from the
// innermost layer outwards, one vector per layer, which is the same sum
// with the common factors pulled out of the inner loops.

namespace detail {

inline void require_general_r(unsigned r) {
  if (r < 4) {
    throw DomainError("general nested formula needs r >= 4, got r = " +
                      std::to_string(r));
  }
}

/// Inner chain in the l-orientation.  Returns tail[L] for L = l_1 in
/// [0, n-j]: the sum over l_2..l_{s-1} of every factor after layer 1.
/// The running total L = l_1 + ... + l_i enters through C(n-L+j, n-L-j).
inline std::vector<ExactInt> l_chain_tail(std::int64_t n, std::int64_t j,
                                          unsigned s) {
  const std::int64_t span = n - j;
  const auto width = static_cast<std::size_t>(span + 1);
  auto sq = [&](std::int64_t L) {
    return ipow(binomial(n - L + j, n - L - j), 2);
  };
  auto close = [&](std::int64_t L) { return binomial(2 * j, span - L); };

  std::vector<ExactInt> tail(width);
  if (s < 3) {
    for (std::int64_t L = 0; L <= span; ++L) tail[static_cast<std::size_t>(L)] = close(L);
    return tail;
  }
  // Layer s-1.
  std::vector<ExactInt> layer(width);
  for (std::int64_t L = 0; L <= span; ++L) {
    layer[static_cast<std::size_t>(L)] = sq(L) * close(L);
  }
  auto link_down = [&](const std::vector<ExactInt>& inner) {
    std::vector<ExactInt> out(width);
    for (std::int64_t L = 0; L <= span; ++L) {
      ExactInt acc = 0;
      for (std::int64_t l = 0; L + l <= span; ++l) {
        acc += binomial(2 * j, l) * inner[static_cast<std::size_t>(L + l)];
      }
      out[static_cast<std::size_t>(L)] = std::move(acc);
    }
    return out;
  };
  // Layers s-2 down to 2.
  for (unsigned layer_index = s - 2; layer_index >= 2; --layer_index) {
    layer = link_down(layer);
    for (std::int64_t L = 0; L <= span; ++L) {
      layer[static_cast<std::size_t>(L)] *= sq(L);
    }
  }
  return link_down(layer);
}

/// Inner chain in the k-orientation, k_i in [j, n].  Returns tail[k] for
/// k = k_1 (entries below j are zero).
inline std::vector<ExactInt> k_chain_tail(std::int64_t n, std::int64_t j,
                                          unsigned s) {
  const auto width = static_cast<std::size_t>(n + 1);
  auto sq = [&](std::int64_t k) { return ipow(binomial(k + j, k - j), 2); };
  auto close = [&](std::int64_t k) { return binomial(2 * j, k - j); };

  std::vector<ExactInt> tail(width);
  if (s < 3) {
    for (std::int64_t k = j; k <= n; ++k) tail[static_cast<std::size_t>(k)] = close(k);
    return tail;
  }
  std::vector<ExactInt> layer(width);
  for (std::int64_t k = j; k <= n; ++k) {
    layer[static_cast<std::size_t>(k)] = sq(k) * close(k);
  }
  auto link_down = [&](const std::vector<ExactInt>& inner) {
    std::vector<ExactInt> out(width);
    for (std::int64_t k = j; k <= n; ++k) {
      ExactInt acc = 0;
      for (std::int64_t k2 = j; k2 <= k; ++k2) {
        acc += binomial(2 * j, k - k2) * inner[static_cast<std::size_t>(k2)];
      }
      out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return out;
  };
  for (unsigned layer_index = s - 2; layer_index >= 2; --layer_index) {
    layer = link_down(layer);
    for (std::int64_t k = j; k <= n; ++k) {
      layer[static_cast<std::size_t>(k)] *= sq(k);
    }
  }
  return link_down(layer);
}

}  // namespace detail

/// t_{n,j}^(r) for r >= 4 from the nested l-sums obtained by the multiple
/// very-well-poised transformation.
inline ExactInt t_general(std::size_t n, std::size_t j, unsigned r) {
  detail::require_general_r(r);
  detail::require_j(n, j);
  const auto sn = detail::si(n);
  const auto sj = detail::si(j);
  const unsigned s = r / 2;
  const auto tail = detail::l_chain_tail(sn, sj, s);

  ExactInt acc = 0;
  for (std::int64_t l = 0; l <= sn - sj; ++l) {
    const auto& rest = tail[static_cast<std::size_t>(l)];
    const auto& link = binomial(sn - l + sj, sn - l - sj);
    if (r % 2 == 0) {
      acc += binomial(sj, l) * binomial(sn - l, sj) * link * rest;
    } else {
      acc += binomial(2 * sj, l) * link * link * rest;
    }
  }
  return r % 2 == 0 ? detail::apply_even_prefactor(acc, sn, sj)
                    : detail::apply_odd_prefactor(acc, sn, sj);
}

/// c_n^(r) for r >= 4 from the nested k-sums:
///   even r: sum_j C(2j,j)^{r-1} C(n,j)   * (chain),
///   odd r:  sum_j C(2j,j)^{r-1} C(n,j)^2 * (chain).
inline ExactInt c_general(std::size_t n, unsigned r) {
  detail::require_general_r(r);
  const auto sn = detail::si(n);
  const unsigned s = r / 2;

  ExactInt acc = 0;
  for (std::int64_t j = 0; j <= sn; ++j) {
    const auto tail = detail::k_chain_tail(sn, j, s);
    ExactInt chain = 0;
    for (std::int64_t k = j; k <= sn; ++k) {
      const auto& rest = tail[static_cast<std::size_t>(k)];
      const auto& link = binomial(k + j, k - j);
      if (r % 2 == 0) {
        chain += binomial(j, sn - k) * binomial(k, j) * link * rest;
      } else {
        chain += binomial(2 * j, sn - k) * link * link * rest;
      }
    }
    const ExactInt weight = r % 2 == 0 ? binomial(sn, j) : ipow(binomial(sn, j), 2);
    acc += ipow(central_binomial(static_cast<std::size_t>(j)), r - 1) * weight *
           chain;
  }
  return acc;
}

/// The closed-form route for any r >= 1: trivial for r = 1, the Franel sum
/// for r = 2, the single sum for r = 3 and the nested sums beyond.
inline ExactInt c_closed(std::size_t n, unsigned r) {
  detail::require_r(r);
  switch (r) {
    case 1:
      return 1;
    case 2:
      return c2_closed(n);
    case 3:
      return c3_closed(n);
    default:
      return c_general(n, r);
  }
}

/// t by the fastest exact closed form available for r, else the sum.
inline ExactInt t_closed(std::size_t n, std::size_t j, unsigned r) {
  if (r == 3) return t3_closed(n, j);
  if (r >= 4) return t_general(n, j, r);
  return t_sum(n, j, r);
}

}  // namespace schmidt
