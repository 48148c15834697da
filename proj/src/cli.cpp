#include <affpow/cli.hpp>
#include <affpow/errors.hpp>
#include <affpow/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace affpow {

namespace {

using Json = nlohmann::json;
namespace aj = affpow::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// Coefficient list "c0,c1,..." or {"coeffs": [...]}; a generate --json
// document is accepted through its "poly" field.
UniPoly read_unipoly(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  if (looks_like_json(text)) {
    Json j = parse_json(text);
    if (j.is_object() && j.contains("poly")) j = j.at("poly");
    return aj::unipoly_from_json(j);
  }
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw Error(ErrorKind::ParseError, "empty polynomial input");
  return parse_unipoly_text(compact);
}

std::string term_text(const Rational& coeff, const Rational& node, unsigned exponent) {
  std::string s = to_string(coeff);
  if (exponent == 0) return s;
  s += " * ";
  if (node == 0) {
    s += "x";
  } else if (node > 0) {
    s += "(x - " + to_string(node) + ")";
  } else {
    s += "(x + " + to_string(Rational(-node)) + ")";
  }
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

bool algorithmic(ErrorKind k) {
  switch (k) {
    case ErrorKind::IrrationalNodeDetected:
    case ErrorKind::ReconstructionFailed:
    case ErrorKind::DeltaExhausted:
    case ErrorKind::UnsatisfiableSpec:
    case ErrorKind::ZeroPolynomial:
      return true;
    default:
      return false;
  }
}

struct Common {
  bool as_json = false;
  unsigned threads = 1;
};

int report_failure(const Common& common, std::ostream& out, std::ostream& err, const std::string& kind,
                   const std::string& message) {
  if (common.as_json) out << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  err << "error: " << message << '\n';
  return kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decomposition of polynomials into sums of affine powers"};
  app.require_subcommand(1);
  Common common;

  std::string input;
  std::string algorithm_name = "auto";
  std::string delta_text = "auto";
  bool verify = true;
  bool stats = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Write f as a sum of affine powers");
  decompose_cmd->add_option("input", input, "Coefficient list or JSON file (stdin when omitted)");
  decompose_cmd->add_option("--algorithm", algorithm_name, "auto, big-exp, distinct-nodes, small-intervals, big-gaps")
      ->capture_default_str();
  decompose_cmd->add_option("--delta", delta_text, "Factor degree for small-intervals, or auto")->capture_default_str();
  decompose_cmd->add_flag("--verify,!--no-verify", verify, "Report the re-expansion check");
  decompose_cmd->add_flag("--stats", stats, "Per-iteration coefficient bit sizes (distinct-nodes)");

  std::string regime_name = "big-exp";
  InstanceSpec spec;
  std::string truth_path;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a planted instance inside a regime");
  generate_cmd->add_option("--regime", regime_name, "big-exp, distinct-nodes, small-intervals, big-gaps, waring, sparsest-shift")
      ->capture_default_str();
  generate_cmd->add_option("-s,--terms", spec.s, "Number of terms (nodes for small-intervals)")->capture_default_str();
  generate_cmd->add_option("--min-exponent", spec.exponent_profile.min, "Smallest exponent (0: regime bound)");
  generate_cmd->add_option("--max-exponent", spec.exponent_profile.max, "Largest exponent (0: automatic)");
  generate_cmd->add_option("--min-gap", spec.exponent_profile.min_gap, "Smallest gap between exponents at one node");
  generate_cmd->add_option("--node-range", spec.node_range, "Nodes are drawn from [-R, R]")->capture_default_str();
  generate_cmd->add_flag("--repeated-nodes,!--distinct-nodes", spec.repeated_nodes, "Share nodes (big-gaps)");
  generate_cmd->add_option("--delta", spec.delta, "Factor degree (small-intervals)")->capture_default_str();
  generate_cmd->add_option("--truth", truth_path, "Write the planted decomposition to this JSON file");

  std::string poly_path, decomposition_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a decomposition re-expands to f");
  verify_cmd->add_option("poly", poly_path, "Polynomial file")->required();
  verify_cmd->add_option("decomposition", decomposition_path, "Decomposition JSON file")->required();

  unsigned shift = 0;
  std::optional<unsigned> max_order;
  auto* sde_cmd = app.add_subcommand("sde", "Minimal shifted differential equation of f");
  sde_cmd->add_option("input", input, "Coefficient list or JSON file (stdin when omitted)");
  sde_cmd->add_option("--shift", shift, "Shift l")->capture_default_str();
  sde_cmd->add_option("--max-order", max_order, "Largest order tried (default deg f + 1)");

  auto* waring_cmd = app.add_subcommand("waring", "Waring decomposition below sqrt(2d/3) terms");
  waring_cmd->add_option("input", input, "Coefficient list or JSON file (stdin when omitted)");
  auto* sparsest_cmd = app.add_subcommand("sparsest-shift", "Sparsest shift below sqrt(d) terms");
  sparsest_cmd->add_option("input", input, "Coefficient list or JSON file (stdin when omitted)");

  MultiBuildOptions multi_options;
  std::string backend_name = "distinct-nodes";
  auto* multi_cmd = app.add_subcommand("multi", "Multivariate reconstruction from a MultiPoly JSON file");
  multi_cmd->add_option("input", input, "MultiPoly JSON file (stdin when omitted)");
  multi_cmd->add_option("--backend", backend_name, "Univariate algorithm")->capture_default_str();
  multi_cmd->add_option("--retries", multi_options.retries, "Extra attempts")->capture_default_str();
  multi_cmd->add_flag("--verify,!--no-verify", verify, "Compare the expansion with the input");

  for (auto* cmd : {decompose_cmd, generate_cmd, verify_cmd, sde_cmd, waring_cmd, sparsest_cmd, multi_cmd}) {
    cmd->add_flag("--json", common.as_json, "Machine-readable output");
    cmd->add_option("--threads", common.threads, "Worker threads")->capture_default_str();
  }
  for (auto* cmd : {generate_cmd, multi_cmd}) cmd->add_option("--seed", spec.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose_cmd) {
      const UniPoly f = read_unipoly(input, in);
      const Algorithm algorithm = parse_algorithm(algorithm_name);
      std::optional<unsigned> delta;
      if (delta_text != "auto") {
        try {
          delta = static_cast<unsigned>(std::stoul(delta_text));
        } catch (const std::exception&) {
          throw UsageError("--delta must be a non-negative integer or auto");
        }
      }
      std::vector<IterationStats> iteration_stats;
      DecomposeOptions options;
      options.threads = common.threads;
      if (stats) options.stats = &iteration_stats;
      try {
        const AutoResult result = decompose(f, algorithm, delta, options);
        const bool ok = expand(result.decomposition) == f;
        if (common.as_json) {
          Json doc{{"algorithm", std::string(to_string(result.algorithm))},
                   {"decomposition", aj::to_json(result.decomposition)}};
          if (verify) doc["verified"] = ok;
          if (stats) {
            doc["stats"] = Json::array();
            for (const auto& s : iteration_stats) doc["stats"].push_back(aj::to_json(s));
          }
          out << doc.dump() << '\n';
        } else {
          out << "algorithm: " << to_string(result.algorithm) << '\n';
          for (const auto& t : result.decomposition.terms) out << term_text(t.coeff, t.node, t.exponent) << '\n';
          if (stats) {
            for (const auto& s : iteration_stats) {
              out << "iteration " << s.iteration << ": derivative order " << s.derivative_order << ", "
                  << s.terms_recovered << " terms, term bits " << s.term_bits << ", residual bits "
                  << s.residual_bits << '\n';
            }
          }
          if (verify) out << "verified: " << (ok ? "yes" : "no") << '\n';
        }
        return ok ? kExitOk : kExitFailure;
      } catch (const Error& e) {
        if (!algorithmic(e.kind())) throw;
        return report_failure(common, out, err, std::string(to_string(e.kind())), e.what());
      }
    }

    if (*generate_cmd) {
      const Regime regime = parse_regime(regime_name);
      try {
        const Instance inst = generate_instance(spec, regime);
        const Json truth = aj::to_json(inst.truth);
        if (!truth_path.empty()) {
          std::ofstream file(truth_path);
          if (!file) throw UsageError("cannot write '" + truth_path + "'");
          file << truth.dump() << '\n';
        }
        if (common.as_json) {
          out << Json{{"regime", std::string(to_string(regime))},
                      {"delta", inst.delta},
                      {"poly", aj::to_json(inst.f)},
                      {"truth", truth}}
                     .dump()
              << '\n';
        } else {
          out << to_text(inst.f) << '\n';
        }
        return kExitOk;
      } catch (const Error& e) {
        if (!algorithmic(e.kind())) throw;
        return report_failure(common, out, err, std::string(to_string(e.kind())), e.what());
      }
    }

    if (*verify_cmd) {
      const UniPoly f = read_unipoly(poly_path, in);
      const Decomposition d = aj::decomposition_from_json(parse_json(read_source(decomposition_path, in)));
      const bool ok = expand(d) == f;
      if (common.as_json) {
        out << Json{{"verified", ok}}.dump() << '\n';
      } else {
        out << (ok ? "verified" : "mismatch") << '\n';
      }
      return ok ? kExitOk : kExitFailure;
    }

    if (*sde_cmd) {
      const UniPoly f = read_unipoly(input, in);
      if (f.is_zero()) throw Error(ErrorKind::ParseError, "the zero polynomial has no minimal equation");
      const auto s = find_min_sde(f, shift, max_order);
      if (!s) return report_failure(common, out, err, "NotFound", "no equation up to the requested order");
      out << aj::to_json(*s).dump() << '\n';
      return kExitOk;
    }

    if (*waring_cmd || *sparsest_cmd) {
      const UniPoly f = read_unipoly(input, in);
      if (f.degree() < 1) throw Error(ErrorKind::ParseError, "input must have degree at least 1");
      try {
        if (*waring_cmd) {
          const WaringResult r = waring_decompose(f);
          out << aj::to_json(r).dump() << '\n';
          return r.above_threshold ? kExitFailure : kExitOk;
        }
        const SparsestResult r = sparsest_shift(f);
        out << aj::to_json(r).dump() << '\n';
        return r.above_threshold ? kExitFailure : kExitOk;
      } catch (const Error& e) {
        if (!algorithmic(e.kind())) throw;
        return report_failure(common, out, err, std::string(to_string(e.kind())), e.what());
      }
    }

    if (*multi_cmd) {
      const MultiPoly f = aj::multipoly_from_json(parse_json(read_source(input, in)));
      multi_options.backend = parse_algorithm(backend_name);
      multi_options.seed = spec.seed;
      multi_options.threads = common.threads;
      try {
        const MultiDecomposition d = multi_build(BlackBox::from(f), multi_options);
        Json doc{{"decomposition", aj::to_json(d)}};
        const bool ok = !verify || expand_multi(d) == f;
        if (verify) doc["verified"] = ok;
        out << doc.dump() << '\n';
        return ok ? kExitOk : kExitFailure;
      } catch (const Error& e) {
        if (!algorithmic(e.kind())) throw;
        return report_failure(common, out, err, std::string(to_string(e.kind())), e.what());
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace affpow
