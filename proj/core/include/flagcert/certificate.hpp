#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/flag_type.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/rational_matrix.hpp"
#include "flagcert/small_graph.hpp"

namespace flagcert {

/// A named type slot. The edge set may be left open ("edges = ?") in a
/// template that is handed to type inference.
struct TypeSlot {
  std::string name;
  int k = 0;
  std::optional<SmallGraph> graph;

  bool known() const { return graph.has_value(); }
  /// Throws std::logic_error for a placeholder slot.
  FlagType type() const;
};

enum class EntryKind {
  centered,    // f{V}
  difference,  // F{V}-F{W}
};

struct VectorEntry {
  EntryKind kind = EntryKind::centered;
  LabelSet first = 0;
  LabelSet second = 0;

  friend bool operator==(const VectorEntry&, const VectorEntry&) = default;
};

/// One vector of algebra elements, e.g. "g1-", over one type slot.
struct VectorSpec {
  std::string name;
  std::size_t type_index = 0;
  std::vector<VectorEntry> entries;

  /// True for vectors whose name ends in '+'.
  bool is_plus() const { return !name.empty() && name.back() == '+'; }
};

/// Symmetric integer matrix times a positive rational scale.
struct MatrixSpec {
  std::string name;
  Rational scale;
  std::size_t order = 0;
  std::vector<BigInt> integers;  // row-major, order * order

  const BigInt& at(std::size_t i, std::size_t j) const { return integers[i * order + j]; }
  BigInt& at(std::size_t i, std::size_t j) { return integers[i * order + j]; }
  RationalMatrix matrix() const;
};

/// The complete proof object. vectors[i] is paired with matrices[i].
struct Certificate {
  std::vector<TypeSlot> types;
  std::vector<VectorSpec> vectors;
  std::vector<MatrixSpec> matrices;
  SmallGraph target;
  Rational bound;

  bool has_placeholder_types() const;
  /// Level at which the identity is checked: the larger of the target size
  /// and the largest quadratic-form product level.
  int level() const;
  /// Nonempty subsets named by the centered entries of the '+' vectors of a
  /// type slot, in listing order.
  std::vector<LabelSet> listed_plus_subsets(std::size_t type_index) const;
};

/// Structural problem in certificate text; line 0 means "whole file".
class CertificateError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Parses the sectioned certificate format and checks every structural
/// invariant (dimensions, subsets, symmetry, positive scales, section
/// order). Throws CertificateError with the offending line.
Certificate parse_certificate(std::string_view text);

/// Inverse of parse_certificate up to whitespace and comments.
std::string format_certificate(const Certificate& cert);

/// Structural validation on an in-memory certificate. Throws CertificateError.
void validate(const Certificate& cert);

/// "f{1,3}" or "F{1,3}-F{2,4}".
std::string format_entry(const VectorEntry& e);

}  // namespace flagcert
