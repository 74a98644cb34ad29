#include "flagcert/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace flagcert {

RationalMatrix::RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}

RationalMatrix::RationalMatrix(std::size_t order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_)
    throw std::invalid_argument("matrix: expected " + std::to_string(order_ * order_) + " entries, got " +
                                std::to_string(entries_.size()));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : order_(rows.size()) {
  entries_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("matrix: rows must form a square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

const char* to_string(PsdClass c) {
  switch (c) {
    case PsdClass::positive_definite: return "POSITIVE_DEFINITE";
    case PsdClass::positive_semidefinite: return "POSITIVE_SEMIDEFINITE";
    case PsdClass::indefinite_or_negative: return "INDEFINITE_OR_NEGATIVE";
  }
  return "?";
}

SymmetricDecomposition decompose_symmetric(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  const std::size_t n = m.order();
  RationalMatrix work = m;
  std::vector<bool> done(n, false);
  SymmetricDecomposition out;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !work(i, i).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == n) {
      for (std::size_t i = 0; i < n && !out.blocked; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && !work(i, j).is_zero()) {
            out.blocked = true;
            break;
          }
      break;
    }

    const Rational pivot = work(p, p);
    out.pivots.push_back(pivot);
    out.pivot_order.push_back(p);
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || work(i, p).is_zero()) continue;
      const Rational factor = work(i, p) / pivot;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        work(i, j) -= factor * work(p, j);
      }
    }
  }
  return out;
}

PsdClass psd_classify(const RationalMatrix& m) {
  const auto d = decompose_symmetric(m);
  if (d.blocked) return PsdClass::indefinite_or_negative;
  for (const auto& p : d.pivots)
    if (p.sign() < 0) return PsdClass::indefinite_or_negative;
  return d.rank() == m.order() ? PsdClass::positive_definite : PsdClass::positive_semidefinite;
}

Rational quadratic_value(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.order())
    throw std::invalid_argument("quadratic_value: vector has " + std::to_string(v.size()) + " entries, matrix order " +
                                std::to_string(m.order()));
  Rational total;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < v.size(); ++j) row += m(i, j) * v[j];
    total += v[i] * row;
  }
  return total;
}

}  // namespace flagcert
