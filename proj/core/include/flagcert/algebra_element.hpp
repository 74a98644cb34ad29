#pragma once

#include <map>
#include <string>

#include "flagcert/canonical.hpp"
#include "flagcert/flag_type.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// A finite rational combination of flag classes of one type and one
/// level. Over the empty type the keys are model keys. Zero coefficients
/// are never stored, and iteration follows key order.
class AlgebraElement {
 public:
  using Coefficients = std::map<CanonicalKey, Rational>;

  AlgebraElement() = default;
  AlgebraElement(FlagType type, int level);

  const FlagType& type() const { return type_; }
  int level() const { return level_; }
  const Coefficients& coefficients() const { return coefficients_; }
  std::size_t term_count() const { return coefficients_.size(); }
  bool is_zero() const { return coefficients_.empty(); }

  Rational coefficient(const CanonicalKey& key) const;
  /// Adds `value` to the coefficient of `key`. Throws std::invalid_argument
  /// if the key has the wrong vertex count for this level.
  void add(const CanonicalKey& key, const Rational& value);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Rational& factor);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Sum of all coefficients.
  Rational coefficient_sum() const;

 private:
  void check_compatible(const AlgebraElement& rhs) const;

  FlagType type_;
  int level_ = 0;
  Coefficients coefficients_;
};

std::string to_string(const AlgebraElement& a);

}  // namespace flagcert
