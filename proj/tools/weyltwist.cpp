// Command-line front end for the weyltwist library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wt/combinatorics.hpp"
#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"
#include "wt/render.hpp"
#include "wt/verify.hpp"

namespace {

using nlohmann::json;
using namespace wt;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string basis;  // empty: keep the natural basis of the result
  std::string format = "text";
  int qmax = -1;
  std::string output;
};

std::optional<Basis> requested_basis(const Globals& g) {
  if (g.basis.empty()) return std::nullopt;
  return g.basis == "xy" ? Basis::XY : Basis::ZZBAR;
}

Spinor in_basis(const Spinor& s, const Globals& g) {
  auto b = requested_basis(g);
  return b ? change_basis(s, *b) : s;
}

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string render(const Spinor& s, const std::string& format) {
  if (format == "latex") return to_latex(s) + "\n";
  if (format == "json") return to_json(s).dump(2) + "\n";
  return to_text(s) + "\n";
}

void emit(const Globals& g, const std::string& body) {
  if (g.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + g.output);
  out << body;
}

Spinor read_spinor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  // Accept the output envelopes of `generate` (single spinor) and `apply`.
  if (j.is_object() && j.contains("result")) return spinor_from_json(j["result"]);
  if (j.is_object() && j.contains("spinors")) {
    if (!j["spinors"].is_array() || j["spinors"].size() != 1) {
      throw SchemaError("$.spinors", "expected exactly one spinor");
    }
    return spinor_from_json(j["spinors"][0]);
  }
  return spinor_from_json(j);
}

WeylOperator resolve_operator(const std::string& expr, Basis basis) {
  if (auto named = named_operator(expr, basis)) return *named;
  return change_basis(parse_operator(expr, basis), basis);
}

std::optional<RecursionKind> recursion_kind(const std::string& name) {
  for (const auto& k : all_recursion_kinds()) {
    std::string s = to_string(k);
    for (auto& ch : s) ch = static_cast<char>(std::tolower(ch == '/' ? '-' : ch));
    if (s == name) return k;
  }
  return std::nullopt;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::vector<std::string>& perturb, bool serial) {
  OperatorTable table = OperatorTable::standard();
  for (const auto& name : perturb) {
    try {
      table.perturb(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const VerificationReport report = run_suite(suite, table, serial ? Exec::Serial : Exec::Parallel);
  if (g.format == "json") {
    json j = envelope("verify");
    j["report"] = to_json(report);
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "latex") {
    emit(g, to_latex(report));
  } else {
    emit(g, to_text(report));
  }
  return report.exit_code();
}

int cmd_generate(const Globals& g, const std::string& kind, unsigned m) {
  std::vector<Spinor> items;
  std::optional<KernelFamily> family;
  if (kind == "monogenic+") {
    items.push_back(monogenic_plus(m));
  } else if (kind == "monogenic-") {
    items.push_back(monogenic_minus(m));
  } else if (kind == "twistor") {
    items = twistor_kernel_basis(m);
  } else if (auto rk = recursion_kind(kind)) {
    const unsigned qmax = g.qmax >= 0 ? static_cast<unsigned>(g.qmax) : 2 * m + 2;
    try {
      family = solve_recursion(*rk, m, QPoly(Scalar(1)), qmax);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    items = family->basis;
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }
  for (auto& s : items) s = in_basis(s, g);

  if (g.format == "json") {
    json j = envelope("generate");
    j["kind"] = kind;
    j["m"] = m;
    if (family) {
      family->basis = items;
      j["family"] = to_json(*family);
    } else {
      j["spinors"] = json::array();
      for (const auto& s : items) j["spinors"].push_back(to_json(s));
    }
    emit(g, j.dump(2) + "\n");
    return kOk;
  }
  std::string body;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (family && i > 0) body += "# free parameter " + family->free_parameters[i - 1] + "\n";
    body += render(items[i], g.format);
  }
  emit(g, body);
  return kOk;
}

int cmd_apply(const Globals& g, const std::string& expr, const std::string& file) {
  const Spinor s = read_spinor(file);
  const Spinor out = in_basis(apply(resolve_operator(expr, s.basis()), s), g);
  if (g.format == "json") {
    json j = envelope("apply");
    j["operator"] = expr;
    j["result"] = to_json(out);
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, render(out, g.format));
  }
  return kOk;
}

int cmd_decompose(const Globals& g, const std::string& file) {
  const Spinor s = read_spinor(file);
  std::map<unsigned, std::vector<HoweComponent>> by_degree;
  std::set<unsigned> degrees;
  for (const auto& [e, p] : s.terms()) degrees.insert(e.first + e.second);
  bool ok = true;
  Spinor rebuilt(s.basis());
  for (unsigned d : degrees) {
    try {
      by_degree[d] = howe_decompose(homogeneous_part(s, d));
    } catch (const HoweError& e) {
      std::cerr << "error: " << e.what() << "\n";
      ok = false;
    }
    rebuilt += howe_reconstruct(by_degree[d], s.basis());
  }
  ok = ok && rebuilt == s;

  if (g.format == "json") {
    json j = envelope("decompose");
    j["reconstruction"] = ok ? "pass" : "fail";
    j["homogeneities"] = json::array();
    for (const auto& [d, parts] : by_degree) {
      json comps = json::array();
      for (const auto& p : parts) {
        comps.push_back({{"l", p.l}, {"j", p.j}, {"monogenic", to_json(in_basis(p.monogenic, g))}});
      }
      j["homogeneities"].push_back({{"degree", d}, {"components", comps}});
    }
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& [d, parts] : by_degree) {
      out << "homogeneity " << d << "\n";
      for (const auto& p : parts) {
        const Spinor m = in_basis(p.monogenic, g);
        out << "  l=" << p.l << " j=" << p.j << "  "
            << (g.format == "latex" ? to_latex(m) : to_text(m)) << "\n";
      }
    }
    out << "reconstruction: " << (ok ? "pass" : "fail") << "\n";
    emit(g, out.str());
  }
  return ok ? kOk : kVerifyFailed;
}

std::string latex_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{" << std::string(header.size(), 'r') << "}\n";
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? " & " : "") << header[c];
  out << " \\\\\n\\hline\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " & " : "") << row[c];
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

int cmd_tables(const Globals& g, const std::string& which, unsigned n) {
  json data;
  std::string text;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (which == "A") {
    const auto t = a_table(n);
    data = to_json(t);
    text = to_text(t);
    header = {"n", "j", "k", "A^n_{jk}"};
    for (const auto& [jk, v] : t.entries) rows.push_back({std::to_string(n), std::to_string(jk.first), std::to_string(jk.second), to_latex(v)});
  } else if (which == "stirling") {
    data = stirling_json(n);
    text = stirling_text(n);
    header = {"n", "m", "s(n,m)"};
    for (unsigned m = n == 0 ? 0 : 1; m <= n; ++m) rows.push_back({std::to_string(n), std::to_string(m), stirling(n, m).get_str()});
  } else if (which == "stirling-tilde") {
    const auto t = stirling_tilde(n);
    data = to_json(t);
    text = to_text(t);
    header = {"n", "i", "r", "\\tilde{s}(n,i,r)"};
    for (const auto& [ir, v] : t.entries) rows.push_back({std::to_string(n), std::to_string(ir.first), std::to_string(ir.second), v.get_str()});
  } else {
    throw UsageError("unknown table '" + which + "'");
  }
  if (g.format == "json") {
    json j = envelope("tables");
    j["data"] = data;
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "latex") {
    emit(g, latex_table(header, rows));
  } else {
    emit(g, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic Dirac and twistor operator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--basis", g.basis, "Output coordinates")->check(CLI::IsMember({"xy", "zzbar"}));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_option("--qmax", g.qmax, "q-degree truncation for recursion families")->check(CLI::NonNegativeNumber);
  app.add_option("--output", g.output, "Write output to PATH instead of stdout");

  std::string suite;
  std::vector<std::string> perturb;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "algebra | kernels | combinatorics | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--perturb", perturb, "Corrupt a named operator before checking (adds the identity)");
  verify->add_flag("--serial", serial, "Run checks on one thread");

  std::string kind;
  unsigned m = 0;
  auto* generate = app.add_subcommand("generate", "Print a canonical representative");
  generate->add_option("kind", kind, "monogenic+ | monogenic- | twistor | ds-odd | ds-even | ts-odd | ts-even | ds2-even | ds2-odd")
      ->required();
  generate->add_option("m", m, "Homogeneity")->required();

  std::string expr;
  std::string file;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a spinor read from JSON");
  apply_cmd->add_option("operator", expr, "Operator expression or registry name")->required();
  apply_cmd->add_option("spinor", file, "Spinor JSON file")->required();

  auto* decompose = app.add_subcommand("decompose", "Howe decomposition of a spinor read from JSON");
  decompose->add_option("spinor", file, "Spinor JSON file")->required();

  std::string which;
  unsigned n = 0;
  auto* tables = app.add_subcommand("tables", "Export coefficient tables");
  tables->add_option("table", which, "A | stirling | stirling-tilde")
      ->required()
      ->check(CLI::IsMember({"A", "stirling", "stirling-tilde"}));
  tables->add_option("n", n, "Exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(g, suite, perturb, serial);
    if (*generate) return cmd_generate(g, kind, m);
    if (*apply_cmd) return cmd_apply(g, expr, file);
    if (*decompose) return cmd_decompose(g, file);
    if (*tables) return cmd_tables(g, which, n);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BasisMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
