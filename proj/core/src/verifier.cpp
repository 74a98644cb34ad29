#include "flagcert/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "flagcert/densities.hpp"
#include "flagcert/model_table.hpp"

namespace flagcert {

std::vector<AlgebraElement> build_vector_entries(const VectorSpec& vector, const FlagType& type) {
  std::vector<AlgebraElement> out;
  out.reserve(vector.entries.size());
  for (const auto& e : vector.entries) {
    out.push_back(e.kind == EntryKind::centered ? f_element(type, e.first)
                                                : difference_element(type, e.first, e.second));
  }
  return out;
}

std::vector<AlgebraElement> build_vector_entries(const Certificate& cert, std::size_t vector_index) {
  const auto& v = cert.vectors.at(vector_index);
  return build_vector_entries(v, cert.types.at(v.type_index).type());
}

AlgebraElement slot_contribution(const Certificate& cert, std::size_t type_index, const FlagType& type, int level) {
  AlgebraElement out(FlagType(), level);
  for (std::size_t i = 0; i < cert.vectors.size(); ++i) {
    if (cert.vectors[i].type_index != type_index) continue;
    const QuadraticFormSpec form{type, cert.matrices[i].matrix(), build_vector_entries(cert.vectors[i], type)};
    const AlgebraElement averaged = average(quadratic_form_value(form));
    out += averaged.level() == level ? averaged : lift(averaged, level);
  }
  return out;
}

AlgebraElement compute_R(const Certificate& cert) {
  const int level = cert.level();
  AlgebraElement out(FlagType(), level);
  for (std::size_t t = 0; t < cert.types.size(); ++t) out += slot_contribution(cert, t, cert.types[t].type(), level);
  return out;
}

namespace {

AlgebraElement target_side(const Certificate& cert, int level) {
  const AlgebraElement h = hat(cert.target, level);
  return h + star(h);
}

std::vector<MatrixCheck> check_matrices(const Certificate& cert) {
  std::vector<MatrixCheck> out;
  for (const auto& m : cert.matrices) out.push_back({m.name, m.order, psd_classify(m.matrix())});
  return out;
}

}  // namespace

VerificationReport verify(const Certificate& cert) {
  if (cert.has_placeholder_types()) throw std::invalid_argument("verify: certificate has unresolved type slots");
  VerificationReport report;
  report.level = cert.level();
  report.model_count = model_table(report.level).size();
  report.matrices = check_matrices(cert);
  report.all_psd = std::all_of(report.matrices.begin(), report.matrices.end(),
                               [](const MatrixCheck& m) { return m.psd != PsdClass::indefinite_or_negative; });
  report.all_pd = std::all_of(report.matrices.begin(), report.matrices.end(),
                              [](const MatrixCheck& m) { return m.psd == PsdClass::positive_definite; });

  const AlgebraElement r = compute_R(cert);
  report.lhs = target_side(cert, report.level);
  report.rhs = constant(cert.bound, report.level) + r + star(r);
  report.residual = report.lhs - report.rhs;
  report.identity_holds = report.residual.is_zero();
  return report;
}

bool matches_orbit_pattern(const OrbitPartition& orbits, const std::vector<LabelSet>& listed) {
  if (listed.size() != orbits.nonempty_orbit_count()) return false;
  std::vector<bool> hit(orbits.orbits.size(), false);
  for (auto s : listed) {
    if (s == 0 || static_cast<std::size_t>(s) >= orbits.orbit_of.size()) return false;
    const int o = orbits.orbit_of[s];
    if (hit[o]) return false;
    hit[o] = true;
  }
  return true;
}

Certificate with_types(Certificate cert, const std::vector<FlagType>& types) {
  if (types.size() != cert.types.size()) throw std::invalid_argument("with_types: wrong number of types");
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i].size() != cert.types[i].k) throw std::invalid_argument("with_types: type size differs from slot");
    cert.types[i].graph = types[i].graph();
  }
  return cert;
}

namespace {

std::vector<FlagType> slot_candidates(const Certificate& templ, std::size_t slot) {
  const auto& t = templ.types[slot];
  if (t.known()) return {t.type()};
  const auto listed = templ.listed_plus_subsets(slot);
  const bool constrained = std::any_of(templ.vectors.begin(), templ.vectors.end(), [&](const VectorSpec& v) {
    return v.type_index == slot && v.is_plus();
  });
  const int pairs = t.k * (t.k - 1) / 2;
  std::vector<CanonicalKey> keys;
  for (std::uint32_t bits = 0; bits < (1U << pairs); ++bits) {
    CanonicalKey key;
    key.vertex_count = t.k;
    for (int p = 0; p < pairs; ++p)
      if ((bits >> p) & 1U) key.set_bit(p);
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<FlagType> out;
  for (const auto& key : keys) {
    FlagType type(graph_from_key(key));
    if (!constrained || matches_orbit_pattern(subset_orbits(type), listed)) out.push_back(type);
  }
  return out;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool edge_tuple_less(const std::vector<FlagType>& a, const std::vector<FlagType>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ea = a[i].graph().edges();
    const auto eb = b[i].graph().edges();
    if (ea != eb) return ea < eb;
  }
  return false;
}

}  // namespace

TypeInference infer_types(const Certificate& templ, int jobs) {
  validate(templ);
  TypeInference out;
  const std::size_t slots = templ.types.size();
  for (std::size_t s = 0; s < slots; ++s) out.candidates.push_back(slot_candidates(templ, s));

  bool all_psd = true;
  for (const auto& m : templ.matrices)
    if (psd_classify(m.matrix()) == PsdClass::indefinite_or_negative) all_psd = false;

  const int level = templ.level();
  const ModelTable& models = model_table(level);
  const auto dense = [&](const AlgebraElement& a) {
    std::vector<Rational> v(models.size());
    for (const auto& [key, value] : a.coefficients()) v[models.index_of_key(key)] = value;
    return v;
  };

  // contribution[s][c] = (R_s + R_s*) for candidate c of slot s, as a dense vector
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t c = 0; c < out.candidates[s].size(); ++c) work.emplace_back(s, c);
  std::vector<std::vector<std::vector<Rational>>> contribution(slots);
  for (std::size_t s = 0; s < slots; ++s) contribution[s].resize(out.candidates[s].size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
    const auto [s, c] = work[i];
    const AlgebraElement r = slot_contribution(templ, s, out.candidates[s][c], level);
    contribution[s][c] = dense(r + star(r));
  });

  const auto base = dense(target_side(templ, level) - constant(templ.bound, level));

  std::vector<std::size_t> choice(slots, 0);
  const auto search = [&](auto&& self, std::size_t s, const std::vector<Rational>& remaining) -> void {
    if (s == slots) {
      ++out.searched;
      const bool zero = std::all_of(remaining.begin(), remaining.end(), [](const Rational& r) { return r.is_zero(); });
      if (zero && all_psd) {
        std::vector<FlagType> assignment;
        for (std::size_t i = 0; i < slots; ++i) assignment.push_back(out.candidates[i][choice[i]]);
        out.assignments.push_back(std::move(assignment));
      }
      return;
    }
    for (std::size_t c = 0; c < out.candidates[s].size(); ++c) {
      choice[s] = c;
      std::vector<Rational> next = remaining;
      for (std::size_t m = 0; m < next.size(); ++m) next[m] -= contribution[s][c][m];
      self(self, s + 1, next);
    }
  };
  search(search, 0, base);

  std::sort(out.assignments.begin(), out.assignments.end(), edge_tuple_less);
  return out;
}

std::vector<ResidualRow> residual_table(const VerificationReport& report) {
  const ModelTable& models = model_table(report.level);
  std::vector<ResidualRow> rows;
  rows.reserve(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& key = models.key(i);
    rows.push_back({models.model(i), report.lhs.coefficient(key), report.rhs.coefficient(key),
                    report.residual.coefficient(key)});
  }
  return rows;
}

std::string compact_edge_list(const SmallGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out.empty() ? "-" : out;
}

void write_residual_table(const VerificationReport& report, std::ostream& out) {
  out << "# model\tlhs\trhs\tdifference\n";
  for (const auto& row : residual_table(report))
    out << compact_edge_list(row.model) << '\t' << row.lhs << '\t' << row.rhs << '\t' << row.difference << '\n';
}

}  // namespace flagcert
