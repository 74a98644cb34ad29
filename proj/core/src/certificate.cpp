#include "flagcert/certificate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace flagcert {

FlagType TypeSlot::type() const {
  if (!graph) throw std::logic_error("type slot " + name + " has no edge set");
  return FlagType(*graph);
}

RationalMatrix MatrixSpec::matrix() const {
  std::vector<Rational> entries;
  entries.reserve(integers.size());
  for (const auto& v : integers) entries.emplace_back(Rational(v) * scale);
  return RationalMatrix(order, std::move(entries));
}

bool Certificate::has_placeholder_types() const {
  return std::any_of(types.begin(), types.end(), [](const TypeSlot& t) { return !t.known(); });
}

int Certificate::level() const {
  int level = target.vertex_count();
  for (const auto& v : vectors) level = std::max(level, types[v.type_index].k + 2);
  return level;
}

std::vector<LabelSet> Certificate::listed_plus_subsets(std::size_t type_index) const {
  std::vector<LabelSet> out;
  for (const auto& v : vectors) {
    if (v.type_index != type_index || !v.is_plus()) continue;
    for (const auto& e : v.entries)
      if (e.kind == EntryKind::centered) out.push_back(e.first);
  }
  return out;
}

std::string format_entry(const VectorEntry& e) {
  if (e.kind == EntryKind::centered) return "f" + format_label_set(e.first);
  return "F" + format_label_set(e.first) + "-F" + format_label_set(e.second);
}

void validate(const Certificate& cert) {
  if (cert.types.empty()) throw CertificateError(0, "no type sections");
  for (const auto& t : cert.types) {
    if (t.k < 0 || t.k > FlagType::kMaxSize)
      throw CertificateError(0, "type " + t.name + ": k must be in [0, " + std::to_string(FlagType::kMaxSize) + "]");
    if (t.graph && t.graph->vertex_count() != t.k) throw CertificateError(0, "type " + t.name + ": graph size differs from k");
  }
  if (cert.vectors.size() != cert.matrices.size())
    throw CertificateError(0, "every vector needs exactly one matrix");
  for (std::size_t i = 0; i < cert.vectors.size(); ++i) {
    const auto& v = cert.vectors[i];
    const auto& m = cert.matrices[i];
    if (v.type_index >= cert.types.size()) throw CertificateError(0, "vector " + v.name + ": unknown type");
    const int k = cert.types[v.type_index].k;
    if (v.entries.empty()) throw CertificateError(0, "vector " + v.name + ": no entries");
    for (const auto& e : v.entries) {
      if ((e.first >> k) != 0 || (e.second >> k) != 0)
        throw CertificateError(0, "vector " + v.name + ": subset outside [" + std::to_string(k) + "]");
      if (e.kind == EntryKind::centered && e.first == 0)
        throw CertificateError(0, "vector " + v.name + ": f{} needs a nonempty subset");
    }
    if (m.order != v.entries.size())
      throw CertificateError(0, "matrix " + m.name + " has order " + std::to_string(m.order) + " but vector " + v.name +
                                    " has " + std::to_string(v.entries.size()) + " entries");
    if (m.integers.size() != m.order * m.order) throw CertificateError(0, "matrix " + m.name + ": wrong entry count");
    if (m.scale.sign() <= 0) throw CertificateError(0, "matrix " + m.name + ": scale must be positive");
    for (std::size_t r = 0; r < m.order; ++r)
      for (std::size_t c = r + 1; c < m.order; ++c)
        if (m.at(r, c) != m.at(c, r))
          throw CertificateError(0, "matrix " + m.name + " is not symmetric at (" + std::to_string(r + 1) + "," +
                                        std::to_string(c + 1) + ")");
  }
  if (cert.target.vertex_count() == 0) throw CertificateError(0, "target graph is empty");
  if (cert.level() > 7) throw CertificateError(0, "identity level exceeds 7");
}

}  // namespace flagcert
