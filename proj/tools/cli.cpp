#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "flagcert/densities.hpp"
#include "flagcert/model_table.hpp"
#include "flagcert/verifier.hpp"
#include "monte_carlo.hpp"

namespace flagcert::cli {

namespace {

constexpr const char* kGeneratorHelp =
    "Random numbers come from std::mt19937_64 (64-bit Mersenne Twister, "
    "fully specified by the C++ standard) seeded with --seed; integers are "
    "drawn by rejection from raw 64-bit outputs, so results are identical "
    "across platforms.";

/// Bad input (missing file, parse error, out-of-range argument).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Certificate load_certificate(const std::string& path) {
  try {
    return parse_certificate(read_file(path));
  } catch (const CertificateError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

SmallGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Options {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output;
};

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  j["level"] = report.level;
  j["models"] = report.model_count;
  j["identity_holds"] = report.identity_holds;
  j["all_psd"] = report.all_psd;
  j["all_positive_definite"] = report.all_pd;
  j["matrices"] = nlohmann::json::array();
  for (const auto& m : report.matrices)
    j["matrices"].push_back({{"name", m.name}, {"order", m.order}, {"class", to_string(m.psd)}});
  j["nonzero_residual"] = nlohmann::json::array();
  for (const auto& row : residual_table(report)) {
    if (row.difference.is_zero()) continue;
    j["nonzero_residual"].push_back({{"model", compact_edge_list(row.model)},
                                     {"lhs", row.lhs.to_string()},
                                     {"rhs", row.rhs.to_string()},
                                     {"difference", row.difference.to_string()}});
  }
  return j;
}

int cmd_verify(const std::string& path, const Options& opts, std::ostream& out) {
  const Certificate cert = load_certificate(path);
  if (cert.has_placeholder_types()) throw InputError(path + ": type slots are placeholders; run infer-types first");
  const VerificationReport report = verify(cert);

  std::size_t pd = 0;
  for (const auto& m : report.matrices) {
    out << "matrix " << m.name << " (" << m.order << "x" << m.order << "): " << to_string(m.psd) << '\n';
    if (m.psd == PsdClass::positive_definite) ++pd;
  }
  const auto rows = residual_table(report);
  const auto bad = static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ResidualRow& r) { return !r.difference.is_zero(); }));

  if (report.passed()) {
    out << "PASS: identity holds over " << report.model_count << " models; " << pd << "/" << report.matrices.size()
        << " matrices positive definite\n";
  } else {
    out << "FAIL:";
    if (!report.identity_holds) out << " identity fails on " << bad << " of " << report.model_count << " models;";
    if (!report.all_psd) out << " some matrix is not positive semidefinite;";
    out << '\n';
    for (const auto& r : rows) {
      if (r.difference.is_zero()) continue;
      out << "first nonzero residual: model " << compact_edge_list(r.model) << " lhs " << r.lhs << " rhs " << r.rhs
          << " difference " << r.difference << '\n';
      break;
    }
  }

  if (!opts.output.empty()) {
    std::ofstream json_out(opts.output);
    if (!json_out) throw InputError("cannot write '" + opts.output + "'");
    json_out << report_json(report).dump(2) << '\n';
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_enumerate(int n, bool list, std::ostream& out) {
  if (n < 1 || n > 8) throw InputError("enumerate: n must be in [1, 8]");
  const ModelTable& table = model_table(n);
  out << table.size() << '\n';
  if (list)
    for (const auto& g : table.models()) out << compact_edge_list(g) << '\n';
  return kSuccess;
}

int cmd_density(const std::string& h_path, const std::string& g_path, const std::string& mode, std::ostream& out) {
  const SmallGraph h = load_graph(h_path);
  const SmallGraph g = load_graph(g_path);
  if (h.vertex_count() > g.vertex_count()) throw InputError("density: pattern has more vertices than host");
  if (mode == "injective") {
    if (g.vertex_count() > 12) throw InputError("density: injective counting supports hosts up to 12 vertices");
    out << t0(h, g).value() << '\n';
  } else {
    out << induced_density(h, g).value() << '\n';
  }
  return kSuccess;
}

int cmd_common_estimate(int n, long long samples, const std::string& graph_path, const Options& opts,
                        std::ostream& out) {
  if (samples < 1) throw InputError("common-estimate: --samples must be at least 1");
  std::mt19937_64 rng(opts.seed);
  const SmallGraph wheel = SmallGraph::wheel(5);
  DenseGraph host = graph_path.empty() ? DenseGraph(0) : DenseGraph(load_graph(graph_path));
  if (graph_path.empty()) {
    if (n < 6) throw InputError("common-estimate: --n must be at least 6");
    host = DenseGraph::random_half(n, rng);
  } else if (host.vertex_count() < 6) {
    throw InputError("common-estimate: --graph needs at least 6 vertices");
  }

  const auto est = estimate_common(wheel, host, static_cast<std::uint64_t>(samples), rng);
  const double reference = 1.0 / 512.0;
  out << "# statistical estimate; not part of the exact verification path\n";
  out << "# generator: mt19937_64, seed " << opts.seed << '\n';
  out << "host = " << (graph_path.empty() ? "G(n,1/2)" : graph_path) << '\n';
  out << "n = " << host.vertex_count() << '\n';
  out << "samples = " << est.samples << '\n';
  out << std::setprecision(10);
  out << "estimate = " << est.mean << '\n';
  out << "standard_error = " << est.standard_error << '\n';
  out << "reference = " << reference << '\n';
  if (est.standard_error > 0) {
    const double z = (est.mean - reference) / est.standard_error;
    out << "z = " << z << '\n';
    out << "within_5_standard_errors = " << (std::abs(z) <= 5 ? "yes" : "no") << '\n';
  }
  return kSuccess;
}

int cmd_infer_types(const std::string& path, const Options& opts, std::ostream& out) {
  const Certificate templ = load_certificate(path);
  const TypeInference result = infer_types(templ, opts.jobs);
  out << "candidates per slot:";
  for (std::size_t s = 0; s < templ.types.size(); ++s)
    out << ' ' << templ.types[s].name << '=' << result.candidates[s].size();
  out << '\n';
  out << "searched " << result.searched << " assignments\n";
  if (result.assignments.empty()) {
    out << "no consistent assignment\n";
    return kVerificationFailed;
  }
  for (std::size_t a = 0; a < result.assignments.size(); ++a) {
    out << "assignment " << a + 1 << ":\n";
    for (std::size_t s = 0; s < templ.types.size(); ++s)
      out << "  " << templ.types[s].name << ": edges = " << format_edge_list(result.assignments[a][s].graph()) << '\n';
  }
  return kSuccess;
}

int cmd_export(const std::string& path, const std::string& out_path, std::ostream& out) {
  const Certificate cert = load_certificate(path);
  if (cert.has_placeholder_types()) throw InputError(path + ": type slots are placeholders; run infer-types first");
  const VerificationReport report = verify(cert);
  if (out_path.empty() || out_path == "-") {
    write_residual_table(report, out);
    return kSuccess;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  write_residual_table(report, file);
  file.flush();
  if (!file) throw InputError("failed writing '" + out_path + "'");
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact flag-algebra certificate verifier", "flagcert"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--seed", opts.seed, "Seed for the random generator (default 0)");
  app.add_option("--jobs", opts.jobs, "Worker threads for type inference")->check(CLI::PositiveNumber);
  app.add_option("--output", opts.output, "Output path (verify: JSON report; export: residual table)");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate exactly");
  verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();

  int n = 0;
  bool list = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count graphs on n vertices up to isomorphism");
  enumerate_cmd->add_option("n", n, "Number of vertices (1..8)")->required();
  enumerate_cmd->add_flag("--list", list, "Print each model's canonical edge list");

  std::string h_path, g_path, mode = "injective";
  auto* density_cmd = app.add_subcommand("density", "Exact density of H in G");
  density_cmd->add_option("H", h_path, "Pattern graph file")->required();
  density_cmd->add_option("G", g_path, "Host graph file")->required();
  density_cmd->add_option("--mode", mode, "injective (t0) or induced (p)")
      ->check(CLI::IsMember({"injective", "induced"}));

  int host_n = 40;
  long long samples = 1000000;
  std::string graph_path;
  auto* estimate_cmd = app.add_subcommand(
      "common-estimate",
      std::string("Monte-Carlo estimate of t0(W5;G) + t0(W5;G*) on G(n,1/2); statistical, not trusted. ") +
          kGeneratorHelp);
  estimate_cmd->add_option("--n", host_n, "Vertices of the random host graph");
  estimate_cmd->add_option("--samples", samples, "Number of sampled injections");
  estimate_cmd->add_option("--graph", graph_path, "Use this graph file as host instead of a random graph");

  auto* infer_cmd = app.add_subcommand("infer-types", "Recover type edge sets for a certificate template");
  infer_cmd->add_option("template", cert_path, "Certificate template file")->required();

  std::string export_path;
  auto* export_cmd = app.add_subcommand("export", "Write the per-model residual table");
  export_cmd->add_option("certificate", cert_path, "Certificate file")->required();
  export_cmd->add_option("out", export_path, "Destination (default: --output or stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*verify_cmd) return cmd_verify(cert_path, opts, out);
    if (*enumerate_cmd) return cmd_enumerate(n, list, out);
    if (*density_cmd) return cmd_density(h_path, g_path, mode, out);
    if (*estimate_cmd) return cmd_common_estimate(host_n, samples, graph_path, opts, out);
    if (*infer_cmd) return cmd_infer_types(cert_path, opts, out);
    if (*export_cmd) return cmd_export(cert_path, export_path.empty() ? opts.output : export_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace flagcert::cli
