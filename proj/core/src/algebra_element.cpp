#include "flagcert/algebra_element.hpp"

#include <sstream>
#include <stdexcept>

namespace flagcert {

AlgebraElement::AlgebraElement(FlagType type, int level) : type_(std::move(type)), level_(level) {
  if (level < type_.size()) throw std::invalid_argument("algebra element: level below type size");
}

Rational AlgebraElement::coefficient(const CanonicalKey& key) const {
  const auto it = coefficients_.find(key);
  return it == coefficients_.end() ? Rational() : it->second;
}

void AlgebraElement::add(const CanonicalKey& key, const Rational& value) {
  if (key.vertex_count != level_)
    throw std::invalid_argument("algebra element: key on " + std::to_string(key.vertex_count) +
                                " vertices added at level " + std::to_string(level_));
  if (value.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

void AlgebraElement::check_compatible(const AlgebraElement& rhs) const {
  if (!(type_ == rhs.type_)) throw std::invalid_argument("algebra element: type mismatch");
  if (level_ != rhs.level_)
    throw std::invalid_argument("algebra element: level mismatch (" + std::to_string(level_) + " vs " +
                                std::to_string(rhs.level_) + ")");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  check_compatible(rhs);
  for (const auto& [key, value] : rhs.coefficients_) add(key, value);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  check_compatible(rhs);
  for (const auto& [key, value] : rhs.coefficients_) add(key, -value);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& [key, value] : coefficients_) value *= factor;
  return *this;
}

Rational AlgebraElement::coefficient_sum() const {
  Rational total;
  for (const auto& [key, value] : coefficients_) total += value;
  return total;
}

std::string to_string(const AlgebraElement& a) {
  std::ostringstream out;
  out << "level " << a.level() << ", type on " << a.type().size() << " labels:";
  if (a.is_zero()) out << " 0";
  for (const auto& [key, value] : a.coefficients()) out << "\n  " << value << " * [" << key.bitstring() << "]";
  return out.str();
}

}  // namespace flagcert
