#pragma once

// Legendre transform a_n = sum_k C(n,k) C(n+k,k) c_k, its inversion through
// the coefficients d_{n,k}, and the triangular solve of the pair relation.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/exact.hpp"

namespace schmidt {

/// Dense prefix x_0, ..., x_N of an integer sequence.
class IntegerSequence {
 public:
  explicit IntegerSequence(std::vector<ExactInt> values)
      : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("IntegerSequence: empty prefix");
  }

  IntegerSequence(std::initializer_list<long long> values) {
    values_.reserve(values.size());
    for (long long v : values) values_.emplace_back(v);
    if (values_.empty()) throw DomainError("IntegerSequence: empty prefix");
  }

  /// Last populated index.
  std::size_t last() const noexcept { return values_.size() - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  const ExactInt& operator[](std::size_t i) const { return values_[i]; }

  const ExactInt& at(std::size_t i) const {
    if (i >= values_.size()) {
      throw IndexError("sequence index " + std::to_string(i) +
                       " beyond last index " + std::to_string(last()));
    }
    return values_[i];
  }

  const std::vector<ExactInt>& values() const noexcept { return values_; }

  friend bool operator==(const IntegerSequence&,
                         const IntegerSequence&) = default;

 private:
  std::vector<ExactInt> values_;
};

namespace detail {

inline void require_index(const IntegerSequence& seq, std::size_t n) {
  seq.at(n);
}

inline std::int64_t as_signed(std::size_t n) {
  return static_cast<std::int64_t>(n);
}

}  // namespace detail

/// a_n = sum_{k=0..n} C(n,k) C(n+k,k) c_k.
inline ExactInt legendre_forward(const IntegerSequence& c, std::size_t n) {
  detail::require_index(c, n);
  const auto sn = detail::as_signed(n);
  ExactInt acc = 0;
  for (std::int64_t k = 0; k <= sn; ++k) {
    acc += binomial(sn, k) * binomial(sn + k, k) * c[static_cast<std::size_t>(k)];
  }
  return acc;
}

/// The same transform written as sum_k C(2k,k) C(n+k,n-k) c_k.
inline ExactInt legendre_forward_central(const IntegerSequence& c,
                                         std::size_t n) {
  detail::require_index(c, n);
  const auto sn = detail::as_signed(n);
  ExactInt acc = 0;
  for (std::int64_t k = 0; k <= sn; ++k) {
    acc += central_binomial(static_cast<std::size_t>(k)) *
           binomial(sn + k, sn - k) * c[static_cast<std::size_t>(k)];
  }
  return acc;
}

/// Transform of the whole prefix.
inline IntegerSequence legendre_forward(const IntegerSequence& c) {
  std::vector<ExactInt> out;
  out.reserve(c.size());
  for (std::size_t n = 0; n <= c.last(); ++n) {
    out.push_back(legendre_forward(c, n));
  }
  return IntegerSequence(std::move(out));
}

/// d_{n,k} = C(2n,n-k) - C(2n,n-k-1).
inline ExactInt legendre_coefficient(std::size_t n, std::size_t k) {
  if (k > n) {
    throw DomainError("legendre_coefficient: k = " + std::to_string(k) +
                      " exceeds n = " + std::to_string(n));
  }
  const auto sn = detail::as_signed(n);
  const auto sk = detail::as_signed(k);
  ExactInt d = binomial(2 * sn, sn - sk) - binomial(2 * sn, sn - sk - 1);
  // The second closed form, (2k+1) C(2n,n-k) = (n+k+1) d, as an integer
  // identity.
  if ((2 * sk + 1) * binomial(2 * sn, sn - sk) != (sn + sk + 1) * d) {
    throw std::logic_error("legendre_coefficient: closed forms disagree");
  }
  return d;
}

/// c_n recovered from a_0..a_n as an exact rational:
///   C(2n,n) c_n = sum_k (-1)^{n-k} d_{n,k} a_k.
inline ExactRat legendre_inverse(const IntegerSequence& a, std::size_t n) {
  detail::require_index(a, n);
  ExactInt acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    ExactInt term = legendre_coefficient(n, k) * a[k];
    if ((n - k) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return ExactRat(acc, central_binomial(n));
}

/// Solves a_n = sum_k C(n,k) C(n+k,k) c_k for c in increasing n.  The
/// leading coefficient C(n,n) C(2n,n) is divided out exactly, so a prefix
/// that is not the transform of an integer sequence raises
/// DivisibilityError.
inline IntegerSequence triangular_solve(const IntegerSequence& a) {
  std::vector<ExactInt> c;
  c.reserve(a.size());
  for (std::size_t n = 0; n <= a.last(); ++n) {
    const auto sn = detail::as_signed(n);
    ExactInt rest = a[n];
    for (std::int64_t k = 0; k < sn; ++k) {
      rest -= binomial(sn, k) * binomial(sn + k, k) *
              c[static_cast<std::size_t>(k)];
    }
    c.push_back(exact_divide(rest, central_binomial(n)));
  }
  return IntegerSequence(std::move(c));
}

}  // namespace schmidt
