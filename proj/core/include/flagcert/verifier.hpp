#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "flagcert/algebra.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/rational_matrix.hpp"

namespace flagcert {

/// Expands a vector's descriptors over a concrete type: f{V} via f_element,
/// F{V}-F{W} via difference_element. Entries live at level k+1.
std::vector<AlgebraElement> build_vector_entries(const VectorSpec& vector, const FlagType& type);
/// Same, using the certificate's own type for the vector. Requires the
/// slot to be known.
std::vector<AlgebraElement> build_vector_entries(const Certificate& cert, std::size_t vector_index);

/// Sum of the averaged quadratic forms of every vector attached to one type
/// slot, evaluated with `type` in that slot and lifted to `level`.
AlgebraElement slot_contribution(const Certificate& cert, std::size_t type_index, const FlagType& type, int level);

/// R: the sum over all vectors of the averaged quadratic forms, at cert.level().
AlgebraElement compute_R(const Certificate& cert);

struct MatrixCheck {
  std::string name;
  std::size_t order = 0;
  PsdClass psd = PsdClass::indefinite_or_negative;
};

struct VerificationReport {
  std::vector<MatrixCheck> matrices;
  int level = 0;
  std::size_t model_count = 0;
  /// hat(target) + star(hat(target))
  AlgebraElement lhs;
  /// bound + R + star(R)
  AlgebraElement rhs;
  AlgebraElement residual;
  bool identity_holds = false;
  bool all_psd = false;
  bool all_pd = false;

  bool passed() const { return identity_holds && all_psd; }
};

/// Exact check of  hat(T) + hat(T)* = bound + R + R*  over every model of
/// the certificate level, plus PSD classification of every matrix. The
/// verdict needs a zero residual and PSD matrices; PD is reported apart.
/// Throws std::invalid_argument if a type slot is still a placeholder.
VerificationReport verify(const Certificate& cert);

/// Whether the listed subsets meet every nonempty Aut(type)-orbit exactly
/// once (any representative of an orbit is accepted).
bool matches_orbit_pattern(const OrbitPartition& orbits, const std::vector<LabelSet>& listed);

struct TypeInference {
  /// Candidate types per slot after the orbit filter, in labeled-key order.
  std::vector<std::vector<FlagType>> candidates;
  /// Every full assignment (one type per slot) that verifies.
  std::vector<std::vector<FlagType>> assignments;
  /// Number of assignments tried.
  std::size_t searched = 0;
};

/// Recovers type edge sets for a certificate whose slots may be
/// placeholders. Known slots are kept as given. For an open slot, every
/// labeled graph on [k] whose subset orbits match the slot's '+' vectors is
/// a candidate; each combination is verified and the passing ones returned
/// in lexicographic order of their edge-set tuples. `jobs` threads are used
/// to precompute per-candidate contributions.
TypeInference infer_types(const Certificate& templ, int jobs = 1);

/// Copy of `cert` with the given types filled into its slots.
Certificate with_types(Certificate cert, const std::vector<FlagType>& types);

struct ResidualRow {
  SmallGraph model;
  Rational lhs;
  Rational rhs;
  Rational difference;
};

/// One row per model of the certificate level, in model-table order.
std::vector<ResidualRow> residual_table(const VerificationReport& report);

/// Tab-separated: edge list, lhs, rhs, difference; '#' header line first.
void write_residual_table(const VerificationReport& report, std::ostream& out);

/// "1-2,1-3" style edge list used in residual tables; "-" for no edges.
std::string compact_edge_list(const SmallGraph& g);

}  // namespace flagcert
