// Copyright 2026 The EntangleKit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "entanglekit/io.hpp"
#include "entanglekit/verify.hpp"

namespace entanglekit::cli {

namespace {

constexpr const char* kToolName = "entanglekit";

// Wrong state kind for a command, or a command-line value that cannot be used.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::optional<double> tol;
  bool json = false;
  bool pretty = false;
};

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open file");
    ss << f.rdbuf();
  }
  return ss.str();
}

Tolerance resolve_tolerance(const GlobalOptions& g) {
  if (g.tol) return Tolerance(*g.tol);
  if (const char* env = std::getenv("ENTANGLEKIT_TOL")) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || *end != '\0') throw UsageError("ENTANGLEKIT_TOL is not a number");
    return Tolerance(eps);
  }
  return Tolerance{};
}

std::optional<BipartiteDims> dims_option(const std::vector<std::size_t>& dims) {
  if (dims.empty()) return std::nullopt;
  if (dims.size() != 2) throw UsageError("--dims expects two values d1,d2");
  return BipartiteDims(dims[0], dims[1]);
}

Side side_option(int side) {
  if (side != 1 && side != 2) throw UsageError("side must be 1 or 2");
  return side == 1 ? Side::First : Side::Second;
}

// Bipartite view of a state that carries (or is given) a factorization.
BipartiteVector as_bipartite_vector(const StateFile& state, const std::optional<BipartiteDims>& dims) {
  if (const auto* t = std::get_if<BipartiteVector>(&state)) {
    if (dims && !(*dims == t->dims())) throw DimensionError("--dims does not match the file's dims");
    return *t;
  }
  if (const auto* x = std::get_if<PureState>(&state)) {
    if (!dims) throw DimensionError("a pure state needs --dims d1,d2 to be read as bipartite");
    return BipartiteVector(x->vec(), *dims);
  }
  throw UsageError(std::string("expected a bipartite vector, got a \"") +
                   std::string(state_type(state)) + "\" state");
}

std::optional<BipartiteDims> density_dims(const DensityFile& d, const std::optional<BipartiteDims>& dims) {
  if (dims && d.dims && !(*dims == *d.dims)) throw DimensionError("--dims does not match the file's dims");
  return dims ? dims : d.dims;
}

class Command {
 public:
  Command(std::string name, const GlobalOptions& g, std::ostream& out)
      : name_(std::move(name)), g_(g), out_(out), start_(std::chrono::steady_clock::now()) {}

  bool json() const { return g_.json || g_.pretty; }

  void emit(const Tolerance& tol, const std::string& digest, Json result, const std::string& text) {
    if (!json()) {
      out_ << text;
      return;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    Json report = {{"tool", kToolName},
                   {"version", ENTANGLEKIT_VERSION},
                   {"command", name_},
                   {"tolerance", tol.eps()},
                   {"result", std::move(result)},
                   {"timing_ms", ms}};
    if (!digest.empty()) report["input_digest"] = digest;
    out_ << dump(report, g_.pretty) << '\n';
  }

 private:
  std::string name_;
  const GlobalOptions& g_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (double x : v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    if (!s.empty()) s += ' ';
    s += buf;
  }
  return s;
}

std::string classification_text(const Classification& c) {
  std::ostringstream ss;
  ss << "verdict: " << to_string(c.verdict) << '\n';
  std::visit(
      [&](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, ProductCertificate> || std::is_same_v<T, EntangledCertificate>) {
          ss << "schmidt rank: " << cert.schmidt.rank << '\n'
             << "schmidt coefficients: " << join_doubles(cert.schmidt.coeffs) << '\n';
          if constexpr (std::is_same_v<T, ProductCertificate>)
            ss << "x: " << dump(vec_to_json(cert.x.vec()), false) << '\n'
               << "y: " << dump(vec_to_json(cert.y.vec()), false) << '\n';
        } else if constexpr (std::is_same_v<T, SeparableCertificate>) {
          ss << "terms: " << cert.decomposition.terms().size() << '\n'
             << "range criterion: " << (cert.range.holds ? "holds" : "FAILS") << " (range rank "
             << cert.range.range_rank << ", product span rank " << cert.range.span_rank << ")\n";
        } else if constexpr (std::is_same_v<T, RangeReport>) {
          ss << "range rank: " << cert.basis.size() << '\n'
             << "elementary range basis found: " << (cert.elementary_spanning_set_found ? "yes" : "no")
             << " (screening only)\n";
        } else {
          ss << "product terms: " << cert.terms.size() << '\n';
          for (const auto& t : cert.terms)
            ss << "  " << join_doubles({t.weight}) << " x " << t.fx.support().front().first << " (x) "
               << t.gy.support().front().first << '\n';
        }
      },
      c.certificate);
  return ss.str();
}

int run_classify(const GlobalOptions& g, const std::string& path, const std::vector<std::size_t>& dims_arg,
                 std::istream& in, std::ostream& out) {
  Command cmd("classify", g, out);
  const Tolerance tol = resolve_tolerance(g);
  const std::string text = read_input(path, in);
  const StateFile state = parse_state(text, tol);
  const auto dims = dims_option(dims_arg);

  const Classification c = std::visit(
      [&](const auto& s) -> Classification {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CompositeClassicalState>) {
          return classify(s);
        } else if constexpr (std::is_same_v<T, ClassicalState>) {
          throw UsageError("classify needs a composite state; got a single-system \"classical\" state");
        } else if constexpr (std::is_same_v<T, DensityFile>) {
          const auto d = density_dims(s, dims);
          if (!d) throw DimensionError("density operator has no \"dims\"; pass --dims d1,d2");
          return classify(s.rho, *d, tol);
        } else if constexpr (std::is_same_v<T, SeparableDecomposition>) {
          return classify(s, tol);
        } else {
          return classify(as_bipartite_vector(state, dims), tol);
        }
      },
      state);
  cmd.emit(tol, fnv1a64(text), to_json(c), classification_text(c));
  return kOk;
}

int run_schmidt(const GlobalOptions& g, const std::string& path, const std::vector<std::size_t>& dims_arg,
                std::istream& in, std::ostream& out) {
  Command cmd("schmidt", g, out);
  const Tolerance tol = resolve_tolerance(g);
  const std::string text = read_input(path, in);
  const StateFile state = parse_state(text, tol);
  const SchmidtDecomposition s = schmidt(as_bipartite_vector(state, dims_option(dims_arg)), tol);
  std::ostringstream ss;
  ss << "rank: " << s.rank << '\n' << "coefficients: " << join_doubles(s.coeffs) << '\n';
  cmd.emit(tol, fnv1a64(text), to_json(s), ss.str());
  return kOk;
}

int run_ptrace(const GlobalOptions& g, const std::string& path, const std::vector<std::size_t>& dims_arg,
               int keep, std::istream& in, std::ostream& out) {
  Command cmd("ptrace", g, out);
  const Tolerance tol = resolve_tolerance(g);
  const std::string text = read_input(path, in);
  const StateFile state = parse_state(text, tol);
  const auto dims = dims_option(dims_arg);
  const Side side = side_option(keep);

  std::optional<DensityOperator> rho;
  std::optional<BipartiteDims> factors;
  if (const auto* d = std::get_if<DensityFile>(&state)) {
    factors = density_dims(*d, dims);
    if (!factors) throw DimensionError("density operator has no \"dims\"; pass --dims d1,d2");
    rho = d->rho;
  } else if (const auto* dec = std::get_if<SeparableDecomposition>(&state)) {
    if (dims && !(*dims == dec->dims())) throw DimensionError("--dims does not match the file's dims");
    factors = dec->dims();
    rho = separable_density(*dec, tol);
  } else if (std::holds_alternative<CompositeClassicalState>(state) ||
             std::holds_alternative<ClassicalState>(state)) {
    throw UsageError(std::string("ptrace needs a quantum state, got \"") + std::string(state_type(state)) +
                     "\"; use marginal for classical composites");
  } else {
    const BipartiteVector t = as_bipartite_vector(state, dims);
    factors = t.dims();
    rho = projector(PureState(t.vec(), tol));
  }
  const DensityOperator reduced = partial_trace(*rho, *factors, side, tol);
  const Json reduced_json = to_json(reduced);
  cmd.emit(tol, fnv1a64(text), Json{{"keep", keep}, {"state", reduced_json}}, dump(reduced_json, true) + "\n");
  return kOk;
}

int run_marginal(const GlobalOptions& g, const std::string& path, int side, std::istream& in,
                 std::ostream& out) {
  Command cmd("marginal", g, out);
  const Tolerance tol = resolve_tolerance(g);
  const std::string text = read_input(path, in);
  const StateFile state = parse_state(text, tol);
  const auto* h = std::get_if<CompositeClassicalState>(&state);
  if (h == nullptr)
    throw UsageError(std::string("marginal needs a \"classical2\" state, got \"") +
                     std::string(state_type(state)) + "\"");
  const Json reduced_json = to_json(marginal(*h, side_option(side)));
  cmd.emit(tol, fnv1a64(text), Json{{"side", side}, {"state", reduced_json}}, dump(reduced_json, true) + "\n");
  return kOk;
}

int run_verify(const GlobalOptions& g, const VerifyOptions& options, std::ostream& out) {
  Command cmd("verify", g, out);
  const Tolerance tol = resolve_tolerance(g);
  const VerifyReport report = run_verification(options);
  std::ostringstream ss;
  std::size_t passed = 0;
  for (const SuiteResult& s : report.suites) {
    passed += s.passed ? 1 : 0;
    ss << (s.passed ? "PASS" : "FAIL") << "  " << s.name << "  checks=" << s.checks
       << " failures=" << s.failures << "  " << s.claim << '\n';
    if (s.counterexample) ss << "      counterexample: " << dump(*s.counterexample, false) << '\n';
  }
  ss << passed << '/' << report.suites.size() << " suites passed (seed " << report.seed << ", "
     << report.instances << " instances per suite)\n";
  cmd.emit(tol, "", to_json(report), ss.str());
  return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical and quantum composite states: classification, Schmidt decomposition, "
               "partial traces, marginals and randomized verification.",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", ENTANGLEKIT_VERSION);

  GlobalOptions g;
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "relative tolerance (default 1e-9, or $ENTANGLEKIT_TOL)");
  app.add_flag("--json", g.json, "emit a compact JSON report");
  app.add_flag("--pretty", g.pretty, "emit an indented JSON report");
  VerifyOptions vopts;
  app.add_option("--seed", vopts.seed, "seed for randomized verification")->capture_default_str();

  std::string path;
  std::vector<std::size_t> dims;
  int keep = 1;
  int side = 1;

  auto* classify_cmd = app.add_subcommand("classify", "classify a composite state");
  classify_cmd->add_option("path", path, "state file, or - for stdin")->required();
  classify_cmd->add_option("--dims", dims, "tensor factor dimensions d1,d2")->delimiter(',')->expected(2);

  auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite vector");
  schmidt_cmd->add_option("path", path, "state file, or - for stdin")->required();
  schmidt_cmd->add_option("--dims", dims, "tensor factor dimensions d1,d2")->delimiter(',')->expected(2);

  auto* ptrace_cmd = app.add_subcommand("ptrace", "partial trace of a bipartite state");
  ptrace_cmd->add_option("path", path, "state file, or - for stdin")->required();
  ptrace_cmd->add_option("--keep", keep, "factor to keep (1 or 2)")->capture_default_str();
  ptrace_cmd->add_option("--dims", dims, "tensor factor dimensions d1,d2")->delimiter(',')->expected(2);

  auto* marginal_cmd = app.add_subcommand("marginal", "marginal of a composite classical state");
  marginal_cmd->add_option("path", path, "state file, or - for stdin")->required();
  marginal_cmd->add_option("--side", side, "side to keep (1 or 2)")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run the randomized verification suites");
  verify_cmd->add_option("--seed", vopts.seed, "seed")->capture_default_str();
  verify_cmd->add_option("--instances", vopts.instances, "instances per suite")->capture_default_str();
  verify_cmd->add_flag("--serial", [&](std::int64_t) { vopts.parallel = false; }, "run suites one after another");
  verify_cmd->add_option("--inject-fault", vopts.inject_fault, "force the named suite to fail")
      ->group("");

  std::vector<std::string> argv_storage{kToolName};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  if (*tol_opt) g.tol = tol_value;

  try {
    if (*classify_cmd) return run_classify(g, path, dims, in, out);
    if (*schmidt_cmd) return run_schmidt(g, path, dims, in, out);
    if (*ptrace_cmd) return run_ptrace(g, path, dims, keep, in, out);
    if (*marginal_cmd) return run_marginal(g, path, side, in, out);
    if (*verify_cmd) {
      if (!vopts.inject_fault.empty()) {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), vopts.inject_fault) == names.end())
          throw UsageError("unknown suite \"" + vopts.inject_fault + "\"");
      }
      return run_verify(g, vopts, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ZeroVectorError& e) {
    err << "error: " << e.what() << '\n';
    return kZeroVector;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kParseError;
}

}  // namespace entanglekit::cli
