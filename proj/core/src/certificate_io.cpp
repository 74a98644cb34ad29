#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "flagcert/certificate.hpp"

namespace flagcert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

enum class SectionKind { type, plus_vector, minus_vector, matrix, target };

int rank(SectionKind kind) { return static_cast<int>(kind); }

struct PendingVector {
  VectorSpec spec;
  std::string type_name;
  bool has_entries = false;
  int line = 0;
};

struct PendingMatrix {
  MatrixSpec spec;
  bool has_scale = false;
  bool has_rows = false;
  std::size_t rows_read = 0;
  int line = 0;
};

// Parses "{1,3}" / "{13}" starting at s[pos]; advances pos past '}'.
LabelSet parse_braced_subset(std::string_view s, std::size_t& pos, int k, int line) {
  if (pos >= s.size() || s[pos] != '{') throw CertificateError(line, "expected '{' in '" + std::string(s) + "'");
  ++pos;
  LabelSet out = 0;
  while (pos < s.size() && s[pos] != '}') {
    const char c = s[pos++];
    if (c == ',') continue;
    if (c < '1' || c > '9') throw CertificateError(line, "malformed subset in '" + std::string(s) + "'");
    const int label = c - '0';
    if (label > k)
      throw CertificateError(line, "label " + std::to_string(label) + " outside [" + std::to_string(k) + "] in '" +
                                       std::string(s) + "'");
    const auto bit = static_cast<LabelSet>(1U << (label - 1));
    if (out & bit) throw CertificateError(line, "repeated label in '" + std::string(s) + "'");
    out |= bit;
  }
  if (pos >= s.size()) throw CertificateError(line, "unterminated subset in '" + std::string(s) + "'");
  ++pos;
  return out;
}

VectorEntry parse_entry(std::string_view item, int k, int line) {
  const std::string s = strip_spaces(item);
  std::size_t pos = 1;
  VectorEntry e;
  if (s.size() > 1 && s[0] == 'f') {
    e.kind = EntryKind::centered;
    e.first = parse_braced_subset(s, pos, k, line);
    if (e.first == 0) throw CertificateError(line, "f{} requires a nonempty subset");
  } else if (s.size() > 1 && s[0] == 'F') {
    e.kind = EntryKind::difference;
    e.first = parse_braced_subset(s, pos, k, line);
    if (pos + 1 >= s.size() || s[pos] != '-' || s[pos + 1] != 'F')
      throw CertificateError(line, "expected F{..}-F{..}, got '" + s + "'");
    pos += 2;
    e.second = parse_braced_subset(s, pos, k, line);
  } else {
    throw CertificateError(line, "unknown entry '" + s + "'");
  }
  if (pos != s.size()) throw CertificateError(line, "trailing characters in entry '" + s + "'");
  return e;
}

std::vector<BigInt> parse_integer_row(std::string_view text, int line) {
  std::vector<BigInt> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    try {
      const Rational r = Rational::parse(token);
      if (!r.is_integer()) throw std::invalid_argument("not an integer");
      out.push_back(r.numerator());
    } catch (const std::exception&) {
      throw CertificateError(line, "expected an integer, got '" + token + "'");
    }
  }
  return out;
}

Rational parse_rational_value(std::string_view text, int line) {
  try {
    return Rational::parse(strip_spaces(text));
  } catch (const std::exception& e) {
    throw CertificateError(line, std::string("bad rational: ") + e.what());
  }
}

int parse_int_value(std::string_view text, int line) {
  const Rational r = parse_rational_value(text, line);
  if (!r.is_integer() || !r.numerator().fits_sint_p()) throw CertificateError(line, "expected an integer");
  return static_cast<int>(r.numerator().get_si());
}

SmallGraph build_graph(int n, std::string_view edges, int line) {
  const auto pairs = parse_edge_list(edges, line);
  SmallGraph g;
  try {
    g = SmallGraph(n);
  } catch (const std::exception& e) {
    throw CertificateError(line, e.what());
  }
  for (auto [u, v] : pairs) {
    if (u == v) throw CertificateError(line, "loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n)
      throw CertificateError(line, "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside [" +
                                       std::to_string(n) + "]");
    if (g.adjacent(u - 1, v - 1))
      throw CertificateError(line, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.set_edge(u - 1, v - 1);
  }
  return g;
}

// Numeric suffix in names such as "g1+" or "sigma3"; empty if none.
std::string index_digits(std::string_view name) {
  std::string out;
  for (char c : name)
    if (c >= '0' && c <= '9') out.push_back(c);
  return out;
}

class CertificateParser {
 public:
  Certificate run(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      auto body = std::string_view(raw);
      if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      body = trim(body);
      if (body.empty()) continue;
      if (body.front() == '[') {
        open_section(body);
      } else if (const auto eq = body.find('='); eq != std::string_view::npos) {
        assign(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
      } else {
        matrix_row(body);
      }
    }
    ++line_;
    return finish();
  }

 private:
  void open_section(std::string_view header) {
    close_section();
    if (header.back() != ']') throw CertificateError(line_, "unterminated section header");
    const auto inner = trim(header.substr(1, header.size() - 2));
    const auto space = inner.find_first_of(" \t");
    const auto word = inner.substr(0, space);
    const auto name = space == std::string_view::npos ? std::string_view() : trim(inner.substr(space));

    SectionKind kind;
    if (word == "type") {
      kind = SectionKind::type;
    } else if (word == "vector") {
      if (name.empty() || (name.back() != '+' && name.back() != '-'))
        throw CertificateError(line_, "vector name must end in '+' or '-'");
      kind = name.back() == '+' ? SectionKind::plus_vector : SectionKind::minus_vector;
    } else if (word == "matrix") {
      kind = SectionKind::matrix;
    } else if (word == "target") {
      kind = SectionKind::target;
    } else {
      throw CertificateError(line_, "unknown section '" + std::string(inner) + "'");
    }
    if (kind != SectionKind::target && name.empty()) throw CertificateError(line_, "section needs a name");
    if (section_ && rank(kind) < rank(*section_))
      throw CertificateError(line_, "section out of order; expected types, + vectors, - vectors, matrices, target");
    if (kind == SectionKind::target && seen_target_) throw CertificateError(line_, "duplicate [target] section");
    section_ = kind;
    section_line_ = line_;

    switch (kind) {
      case SectionKind::type:
        if (type_index_.count(std::string(name))) throw CertificateError(line_, "duplicate type " + std::string(name));
        type_lines_.push_back(line_);
        slot_ = TypeSlot{std::string(name), -1, std::nullopt};
        slot_edges_.reset();
        break;
      case SectionKind::plus_vector:
      case SectionKind::minus_vector:
        vector_ = PendingVector{};
        vector_->spec.name = std::string(name);
        vector_->line = line_;
        break;
      case SectionKind::matrix:
        matrix_ = PendingMatrix{};
        matrix_->spec.name = std::string(name);
        matrix_->line = line_;
        break;
      case SectionKind::target:
        seen_target_ = true;
        break;
    }
  }

  void assign(std::string_view key, std::string_view value) {
    if (!section_) throw CertificateError(line_, "key outside any section");
    switch (*section_) {
      case SectionKind::type:
        if (key == "k") {
          slot_->k = parse_int_value(value, line_);
          if (slot_->k < 0 || slot_->k > FlagType::kMaxSize)
            throw CertificateError(line_, "k must be in [0, " + std::to_string(FlagType::kMaxSize) + "]");
        } else if (key == "edges") {
          slot_edges_ = std::make_pair(std::string(value), line_);
        } else {
          throw CertificateError(line_, "unknown key '" + std::string(key) + "' in type section");
        }
        return;
      case SectionKind::plus_vector:
      case SectionKind::minus_vector:
        if (key == "type") {
          vector_->type_name = std::string(value);
        } else if (key == "entries") {
          vector_->has_entries = true;
          pending_entry_text_.emplace_back(std::string(value), line_);
        } else {
          throw CertificateError(line_, "unknown key '" + std::string(key) + "' in vector section");
        }
        return;
      case SectionKind::matrix:
        if (key == "scale") {
          matrix_->spec.scale = parse_rational_value(value, line_);
          if (matrix_->spec.scale.sign() <= 0) throw CertificateError(line_, "scale must be positive");
          matrix_->has_scale = true;
        } else if (key == "rows") {
          const int rows = parse_int_value(value, line_);
          if (rows < 1) throw CertificateError(line_, "rows must be positive");
          matrix_->spec.order = static_cast<std::size_t>(rows);
          matrix_->has_rows = true;
        } else {
          throw CertificateError(line_, "unknown key '" + std::string(key) + "' in matrix section");
        }
        return;
      case SectionKind::target:
        if (key == "graph") {
          target_edges_ = std::make_pair(std::string(value), line_);
        } else if (key == "vertices") {
          target_vertices_ = parse_int_value(value, line_);
        } else if (key == "bound") {
          bound_ = parse_rational_value(value, line_);
        } else {
          throw CertificateError(line_, "unknown key '" + std::string(key) + "' in target section");
        }
        return;
    }
  }

  void matrix_row(std::string_view body) {
    if (section_ != SectionKind::matrix) throw CertificateError(line_, "unexpected line '" + std::string(body) + "'");
    auto& m = *matrix_;
    if (!m.has_rows) throw CertificateError(line_, "matrix rows before 'rows ='");
    if (m.rows_read == m.spec.order) throw CertificateError(line_, "matrix " + m.spec.name + " has too many rows");
    auto row = parse_integer_row(body, line_);
    if (row.size() != m.spec.order)
      throw CertificateError(line_, "matrix " + m.spec.name + " row has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(m.spec.order));
    for (auto& v : row) m.spec.integers.push_back(std::move(v));
    ++m.rows_read;
  }

  void close_section() {
    if (!section_) return;
    switch (*section_) {
      case SectionKind::type: {
        if (slot_->k < 0) throw CertificateError(section_line_, "type " + slot_->name + " lacks 'k ='");
        if (!slot_edges_) throw CertificateError(section_line_, "type " + slot_->name + " lacks 'edges ='");
        if (strip_spaces(slot_edges_->first) != "?")
          slot_->graph = build_graph(slot_->k, slot_edges_->first, slot_edges_->second);
        type_index_.emplace(slot_->name, cert_.types.size());
        cert_.types.push_back(std::move(*slot_));
        slot_.reset();
        break;
      }
      case SectionKind::plus_vector:
      case SectionKind::minus_vector: {
        auto& v = *vector_;
        if (!v.has_entries) throw CertificateError(v.line, "vector " + v.spec.name + " lacks 'entries ='");
        if (v.type_name.empty()) v.type_name = "sigma" + index_digits(v.spec.name);
        const auto it = type_index_.find(v.type_name);
        if (it == type_index_.end()) throw CertificateError(v.line, "vector " + v.spec.name + ": unknown type " + v.type_name);
        v.spec.type_index = it->second;
        const int k = cert_.types[it->second].k;
        for (const auto& [text, line] : pending_entry_text_) {
          std::size_t start = 0;
          const std::string_view all(text);
          while (start <= all.size()) {
            auto semi = all.find(';', start);
            if (semi == std::string_view::npos) semi = all.size();
            const auto item = trim(all.substr(start, semi - start));
            if (!item.empty()) v.spec.entries.push_back(parse_entry(item, k, line));
            start = semi + 1;
          }
        }
        pending_entry_text_.clear();
        if (v.spec.entries.empty()) throw CertificateError(v.line, "vector " + v.spec.name + " has no entries");
        for (const auto& other : vectors_)
          if (other.spec.name == v.spec.name) throw CertificateError(v.line, "duplicate vector " + v.spec.name);
        vectors_.push_back(std::move(v));
        vector_.reset();
        break;
      }
      case SectionKind::matrix: {
        auto& m = *matrix_;
        if (!m.has_scale) throw CertificateError(m.line, "matrix " + m.spec.name + " lacks 'scale ='");
        if (!m.has_rows) throw CertificateError(m.line, "matrix " + m.spec.name + " lacks 'rows ='");
        if (m.rows_read != m.spec.order)
          throw CertificateError(line_, "matrix " + m.spec.name + " has " + std::to_string(m.rows_read) +
                                            " rows, expected " + std::to_string(m.spec.order));
        for (std::size_t r = 0; r < m.spec.order; ++r)
          for (std::size_t c = r + 1; c < m.spec.order; ++c)
            if (m.spec.at(r, c) != m.spec.at(c, r))
              throw CertificateError(m.line, "matrix " + m.spec.name + " is not symmetric at (" + std::to_string(r + 1) +
                                                 "," + std::to_string(c + 1) + ")");
        for (const auto& other : matrices_)
          if (other.spec.name == m.spec.name) throw CertificateError(m.line, "duplicate matrix " + m.spec.name);
        matrices_.push_back(std::move(m));
        matrix_.reset();
        break;
      }
      case SectionKind::target:
        break;
    }
  }

  Certificate finish() {
    close_section();
    if (cert_.types.empty()) throw CertificateError(line_, "no [type] sections");
    if (!seen_target_) throw CertificateError(line_, "missing [target] section");
    if (!target_edges_) throw CertificateError(line_, "target lacks 'graph ='");
    if (!bound_) throw CertificateError(line_, "target lacks 'bound ='");

    int n = target_vertices_.value_or(0);
    if (!target_vertices_) {
      for (auto [u, v] : parse_edge_list(target_edges_->first, target_edges_->second)) n = std::max({n, u, v});
    }
    cert_.target = build_graph(n, target_edges_->first, target_edges_->second);
    cert_.bound = *bound_;

    std::vector<bool> used(matrices_.size(), false);
    for (auto& v : vectors_) {
      const std::string wanted = "M" + v.spec.name.substr(1);
      const auto it = std::find_if(matrices_.begin(), matrices_.end(),
                                   [&](const PendingMatrix& m) { return m.spec.name == wanted; });
      if (it == matrices_.end()) throw CertificateError(v.line, "vector " + v.spec.name + " has no matrix " + wanted);
      if (it->spec.order != v.spec.entries.size())
        throw CertificateError(it->line, "matrix " + it->spec.name + " is " + std::to_string(it->spec.order) + "x" +
                                             std::to_string(it->spec.order) + " but vector " + v.spec.name + " lists " +
                                             std::to_string(v.spec.entries.size()) + " entries");
      used[static_cast<std::size_t>(it - matrices_.begin())] = true;
      cert_.vectors.push_back(std::move(v.spec));
      cert_.matrices.push_back(it->spec);
    }
    for (std::size_t i = 0; i < matrices_.size(); ++i)
      if (!used[i]) throw CertificateError(matrices_[i].line, "matrix " + matrices_[i].spec.name + " has no vector");

    try {
      validate(cert_);
    } catch (const CertificateError& e) {
      throw CertificateError(line_, e.what());
    }
    return std::move(cert_);
  }

  int line_ = 0;
  int section_line_ = 0;
  std::optional<SectionKind> section_;
  bool seen_target_ = false;

  std::optional<TypeSlot> slot_;
  std::optional<std::pair<std::string, int>> slot_edges_;
  std::optional<PendingVector> vector_;
  std::vector<std::pair<std::string, int>> pending_entry_text_;
  std::optional<PendingMatrix> matrix_;
  std::optional<std::pair<std::string, int>> target_edges_;
  std::optional<int> target_vertices_;
  std::optional<Rational> bound_;

  std::map<std::string, std::size_t> type_index_;
  std::vector<int> type_lines_;
  std::vector<PendingVector> vectors_;
  std::vector<PendingMatrix> matrices_;
  Certificate cert_;
};

}  // namespace

Certificate parse_certificate(std::string_view text) { return CertificateParser().run(text); }

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  for (const auto& t : cert.types) {
    out << "[type " << t.name << "]\n";
    out << "k = " << t.k << "\n";
    out << "edges = " << (t.graph ? format_edge_list(*t.graph) : std::string("?")) << "\n\n";
  }
  std::vector<std::size_t> order(cert.vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return cert.vectors[i].is_plus(); });
  for (auto i : order) {
    const auto& v = cert.vectors[i];
    out << "[vector " << v.name << "]\n";
    out << "type = " << cert.types[v.type_index].name << "\n";
    out << "entries = ";
    for (std::size_t e = 0; e < v.entries.size(); ++e) out << (e ? "; " : "") << format_entry(v.entries[e]);
    out << "\n\n";
  }
  for (auto i : order) {
    const auto& m = cert.matrices[i];
    out << "[matrix " << m.name << "]\n";
    out << "scale = " << m.scale << "\n";
    out << "rows = " << m.order << "\n";
    for (std::size_t r = 0; r < m.order; ++r) {
      for (std::size_t c = 0; c < m.order; ++c) out << (c ? " " : "") << m.at(r, c).get_str();
      out << "\n";
    }
    out << "\n";
  }
  out << "[target]\n";
  out << "vertices = " << cert.target.vertex_count() << "\n";
  out << "graph = " << format_edge_list(cert.target) << "\n";
  out << "bound = " << cert.bound << "\n";
  return out.str();
}

}  // namespace flagcert
