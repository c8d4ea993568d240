#pragma once

// Exact integer/rational arithmetic and memoized combinatorial primitives.
//
// Every quantity in the library is computed without rounding.  Integers are
// unbounded (boost cpp_int); rationals are kept in lowest terms with a
// positive denominator (boost cpp_rational), so equality of two ExactRat
// values is equality of their canonical forms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schmidt {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// errors ---------------------------------------------------------------------

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an exact division leaves a remainder.  Inside this library
/// that means an integrality claim failed or an index is wrong, so the
/// operands are kept for the witness.
class DivisibilityError : public std::runtime_error {
 public:
  DivisibilityError(ExactInt dividend, ExactInt divisor)
      : std::runtime_error("divisibility error: " + dividend.str() +
                           " is not divisible by " + divisor.str()),
        dividend_(std::move(dividend)),
        divisor_(std::move(divisor)) {}

  const ExactInt& dividend() const noexcept { return dividend_; }
  const ExactInt& divisor() const noexcept { return divisor_; }

 private:
  ExactInt dividend_;
  ExactInt divisor_;
};

/// A denominator Pochhammer symbol vanished before the series terminated.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rational helpers -----------------------------------------------------------

inline ExactRat make_rat(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  // boost 1.74's rational_adaptor rejects a negative denominator.
  if (den < 0) return ExactRat(-ExactInt(num), -ExactInt(den));
  return ExactRat(ExactInt(num), ExactInt(den));
}

inline ExactInt numerator(const ExactRat& x) {
  return boost::multiprecision::numerator(x);
}

inline ExactInt denominator(const ExactRat& x) {
  return boost::multiprecision::denominator(x);
}

inline bool is_integer(const ExactRat& x) { return denominator(x) == 1; }

/// True when x is one of 0, -1, -2, ...
inline bool is_nonpositive_integer(const ExactRat& x) {
  return is_integer(x) && x <= 0;
}

inline std::string to_string(const ExactRat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Quotient a/b, throwing DivisibilityError unless b divides a.
inline ExactInt exact_divide(const ExactInt& a, const ExactInt& b) {
  if (b == 0) throw DomainError("exact_divide: zero divisor");
  ExactInt q;
  ExactInt r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw DivisibilityError(a, b);
  return q;
}

/// Integer value of a rational that must be integral.
inline ExactInt exact_integer(const ExactRat& x) {
  return exact_divide(numerator(x), denominator(x));
}

inline ExactInt ipow(const ExactInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Rising factorial x (x+1) ... (x+m-1); 1 when m = 0.
inline ExactRat pochhammer(const ExactRat& x, unsigned m) {
  ExactRat acc = 1;
  for (unsigned i = 0; i < m; ++i) {
    acc *= x + i;
    if (acc == 0) break;
  }
  return acc;
}

// combinatorics table --------------------------------------------------------

/// Memoized factorials and Pascal rows.
///
/// Entries live in deques, which never relocate existing elements on
/// push_back, so references handed out stay valid while the table grows.
/// Reads take a shared lock; growth takes the exclusive lock and extends
/// geometrically.
class CombinatoricsTable {
 public:
  CombinatoricsTable() {
    factorials_.emplace_back(1);
    rows_.push_back({ExactInt(1)});
  }

  CombinatoricsTable(const CombinatoricsTable&) = delete;
  CombinatoricsTable& operator=(const CombinatoricsTable&) = delete;

  /// Largest n for which n! is currently stored.
  std::size_t cap() const {
    std::shared_lock lock(mutex_);
    return factorials_.size() - 1;
  }

  const ExactInt& factorial(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < factorials_.size()) return factorials_[n];
    }
    std::unique_lock lock(mutex_);
    grow_factorials(n);
    return factorials_[n];
  }

  /// C(n, k) for n >= 0, zero outside 0 <= k <= n.  Negative n is rejected.
  const ExactInt& binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
      throw DomainError("binomial: negative upper index " + std::to_string(n));
    }
    if (k < 0 || k > n) return zero_;
    const auto row = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return rows_[row][static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    grow_rows(row);
    return rows_[row][static_cast<std::size_t>(k)];
  }

  /// Pre-extend both tables so later reads never need the exclusive lock.
  void warm_up(std::size_t n) {
    std::unique_lock lock(mutex_);
    grow_factorials(n);
    grow_rows(n);
  }

 private:
  void grow_factorials(std::size_t n) {
    if (n < factorials_.size()) return;
    const std::size_t target = std::max(n, 2 * factorials_.size());
    while (factorials_.size() <= target) {
      factorials_.push_back(factorials_.back() * factorials_.size());
    }
  }

  void grow_rows(std::size_t n) {
    if (n < rows_.size()) return;
    const std::size_t target = std::max(n, 2 * rows_.size());
    while (rows_.size() <= target) {
      const auto& prev = rows_.back();
      std::vector<ExactInt> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k + 1 < next.size(); ++k) {
        next[k] = prev[k - 1] + prev[k];
      }
      rows_.push_back(std::move(next));
    }
  }

  mutable std::shared_mutex mutex_;
  std::deque<ExactInt> factorials_;
  std::deque<std::vector<ExactInt>> rows_;
  const ExactInt zero_{0};
};

/// Process-wide table shared by the free functions below.
inline CombinatoricsTable& shared_table() {
  static CombinatoricsTable table;
  return table;
}

inline const ExactInt& factorial(std::size_t n) {
  return shared_table().factorial(n);
}

inline const ExactInt& binomial(std::int64_t n, std::int64_t k) {
  return shared_table().binomial(n, k);
}

inline const ExactInt& central_binomial(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return shared_table().binomial(2 * m, m);
}

}  // namespace schmidt
