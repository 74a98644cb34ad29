#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "flagcert/rational.hpp"

namespace flagcert {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order);
  /// Throws std::invalid_argument unless entries.size() == order * order.
  RationalMatrix(std::size_t order, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

  bool is_symmetric() const;
  RationalMatrix scaled(const Rational& factor) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

enum class PsdClass { positive_definite, positive_semidefinite, indefinite_or_negative };

const char* to_string(PsdClass c);

/// Outcome of symmetric Gaussian elimination with diagonal pivoting.
///
/// `pivots[i]` is the i-th pivot, taken at original index `pivot_order[i]`.
/// Elimination stops when every remaining diagonal entry is zero. If an
/// off-diagonal entry survives at that point the remaining Schur complement
/// contains a 2x2 principal minor -b^2 < 0 and `blocked` is set.
struct SymmetricDecomposition {
  std::vector<Rational> pivots;
  std::vector<std::size_t> pivot_order;
  bool blocked = false;

  std::size_t rank() const { return pivots.size(); }
};

/// Throws std::invalid_argument for a non-symmetric matrix.
SymmetricDecomposition decompose_symmetric(const RationalMatrix& m);

/// Exact inertia-based classification; no floating point.
/// Throws std::invalid_argument for a non-symmetric matrix.
PsdClass psd_classify(const RationalMatrix& m);

/// v^T M v. Throws std::invalid_argument on a dimension mismatch.
Rational quadratic_value(const RationalMatrix& m, std::span<const Rational> v);

}  // namespace flagcert
