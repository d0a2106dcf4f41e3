// command-line front end: exact value tables, coefficient dumps, point
// evaluation, and relation-verification suites

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "deszeta/coeff_table.hpp"
#include "deszeta/desing_values.hpp"
#include "deszeta/numeric/desing_numeric.hpp"
#include "deszeta/relations.hpp"

namespace {

using nlohmann::json;
using namespace deszeta;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;
constexpr int kExitVerifyFail = 4;

std::string rat_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

// complex literal "a", "bi", or "a+bi" (optional exponent parts)
bool parse_complex(const std::string& text, Cplx& out) {
  std::string s = text;
  if (s.empty()) return false;
  auto parse_double = [](const std::string& t, double& d) {
    if (t.empty()) return false;
    try {
      size_t pos = 0;
      d = std::stod(t, &pos);
      return pos == t.size();
    } catch (...) {
      return false;
    }
  };
  if (s.back() != 'i' && s.back() != 'I') {
    double re;
    if (!parse_double(s, re)) return false;
    out = Cplx{re};
    return true;
  }
  s.pop_back();
  // locate the sign splitting real and imaginary parts (not a leading sign,
  // not an exponent sign)
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part = (split == std::string::npos) ? "" : s.substr(0, split);
  std::string im_part = (split == std::string::npos) ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  double re = 0, im = 0;
  if (!re_part.empty() && !parse_double(re_part, re)) return false;
  if (!parse_double(im_part, im)) return false;
  out = Cplx{re, im};
  return true;
}

std::vector<MultiIndex> indices_up_to(size_t len, unsigned max_weight) {
  std::vector<MultiIndex> out;
  MultiIndex cur(len, 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, max_weight);
  return out;
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) return false;
    os = &file;
    return true;
  }
};

void emit_table_rows(Sink& sink, const std::string& format,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows,
                     const json& as_json) {
  std::ostream& os = *sink.os;
  if (format == "json") {
    os << as_json.dump(2) << "\n";
  } else if (format == "csv") {
    for (size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << csv_escape(header[i]);
    os << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
      os << "\n";
    }
  } else {
    std::vector<size_t> widths(header.size());
    for (size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
      for (size_t i = 0; i < row.size(); ++i)
        widths[i] = std::max(widths[i], row[i].size());
    for (size_t i = 0; i < header.size(); ++i)
      os << std::left << std::setw(static_cast<int>(widths[i]) + 2) << header[i];
    os << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i)
        os << std::left << std::setw(static_cast<int>(widths[i]) + 2) << row[i];
      os << "\n";
    }
  }
}

int cmd_values(Sink& sink, const std::string& format, int r, int w) {
  if (r < 1 || r > 4 || w < 0 || w > 12) {
    std::cerr << "values: need 1 <= r <= 4 and 0 <= max weight <= 12\n";
    return kExitUsage;
  }
  std::vector<std::string> header;
  for (int j = 1; j <= r; ++j) header.push_back("k" + std::to_string(j));
  header.push_back("value");
  std::vector<std::vector<std::string>> rows;
  json arr = json::array();
  for (const auto& k : indices_up_to(static_cast<size_t>(r), static_cast<unsigned>(w))) {
    const Rational v = zeta_des_value(k);
    std::vector<std::string> row;
    for (unsigned kj : k) row.push_back(std::to_string(kj));
    row.push_back(rat_str(v));
    rows.push_back(std::move(row));
    arr.push_back(json{{"k", k}, {"value", rat_str(v)}});
  }
  emit_table_rows(sink, format, header, rows, arr);
  return kExitOk;
}

int cmd_coeffs(Sink& sink, const std::string& format, int r) {
  if (r < 1 || r > 6) {
    std::cerr << "coeffs: need 1 <= r <= 6\n";
    return kExitUsage;
  }
  const CoeffTable& table = expand_G(r);
  std::vector<std::string> header;
  for (int j = 1; j <= r; ++j) header.push_back("l" + std::to_string(j));
  for (int j = 1; j <= r; ++j) header.push_back("m" + std::to_string(j));
  header.push_back("a");
  std::vector<std::vector<std::string>> rows;
  json arr = json::array();
  for (const auto& e : table.entries) {
    std::vector<std::string> row;
    for (unsigned lj : e.l) row.push_back(std::to_string(lj));
    for (int mj : e.m) row.push_back(std::to_string(mj));
    row.push_back(e.a.str());
    rows.push_back(std::move(row));
    arr.push_back(json{{"l", e.l}, {"m", e.m}, {"a", e.a.str()}});
  }
  emit_table_rows(sink, format, header, rows, arr);
  return kExitOk;
}

int cmd_eval(Sink& sink, const std::string& format, const std::vector<std::string>& args,
             const EvalOptions& opts) {
  std::vector<Cplx> s;
  for (const auto& a : args) {
    Cplx z;
    if (!parse_complex(a, z)) {
      std::cerr << "eval: cannot parse complex literal '" << a << "'\n";
      return kExitUsage;
    }
    s.push_back(z);
  }
  if (s.empty()) {
    std::cerr << "eval: need at least one argument\n";
    return kExitUsage;
  }

  const unsigned digits = digits_for_bits(opts.precision_bits);
  EvalResult res;
  try {
    const Cplx& last = s.back();
    const Real rounded = round(last.re);
    const bool trailing_int =
        abs(last.im) <= 1e-9 && abs(last.re - rounded) <= 1e-9 && rounded <= 0;
    if (trailing_int) {
      std::vector<Cplx> head(s.begin(), s.end() - 1);
      res = zeta_des_mixed(head, static_cast<unsigned>((-rounded).convert_to<long>()),
                           opts);
    } else {
      res = zeta_des_numeric(s, opts);
    }
  } catch (const Error& e) {
    std::cerr << "eval: " << e.what() << "\n";
    return kExitEval;
  }

  const std::string re_s = format_real(res.value.re, digits);
  const std::string im_s = format_real(res.value.im, digits);
  const std::string err_s = format_real(res.err_estimate, digits);
  const json j{{"re", re_s}, {"im", im_s}, {"err", err_s}};
  emit_table_rows(sink, format, {"re", "im", "err"}, {{re_s, im_s, err_s}}, j);
  return kExitOk;
}

int cmd_verify(Sink& sink, const std::string& format, const std::string& suite,
               const EvalOptions& opts, const SuiteConfig& cfg) {
  std::vector<RelationReport> reports;
  try {
    reports = run_suite(suite, opts, cfg);
  } catch (const UnknownSuite& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitEval;
  }

  const unsigned digits = digits_for_bits(opts.precision_bits);
  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  bool any_fail = false;
  for (const auto& rep : reports) {
    const json j = report_to_json(rep, digits);
    arr.push_back(j);
    auto cell = [&](const char* key) {
      const auto& v = j.at(key);
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    rows.push_back({cell("relation"), j.at("params").dump(), cell("lhs"), cell("rhs"),
                    cell("residual"), cell("tolerance"), cell("verdict")});
    if (rep.verdict == Verdict::fail) any_fail = true;
  }
  emit_table_rows(sink, format,
                  {"relation", "params", "lhs", "rhs", "residual", "tolerance", "verdict"},
                  rows, arr);
  return any_fail ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desingularized multiple zeta-functions: values, coefficients, "
               "evaluation, and relation verification"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  unsigned precision = 128;
  int cutoff = 400;
  std::string format = "json";
  std::string out_path;
  unsigned long long seed = 42;
  double tolerance_scale = 1.0;
  app.add_option("--precision", precision, "working precision in significand bits");
  app.add_option("--cutoff", cutoff, "series truncation per summation variable");
  app.add_option("--format", format, "output format: json, csv, or table");
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--tolerance-scale", tolerance_scale, "multiplier on pass tolerances");

  auto* values = app.add_subcommand("values", "exact values at non-positive integers");
  int values_r = 1, values_w = 0;
  values->add_option("-r,--depth", values_r, "depth r")->required();
  values->add_option("-w,--max-weight", values_w, "maximum total weight")->required();

  auto* coeffs = app.add_subcommand("coeffs", "integer coefficient table");
  int coeffs_r = 1;
  coeffs->add_option("-r,--depth", coeffs_r, "depth r")->required();

  auto* eval = app.add_subcommand("eval", "evaluate at a complex point");
  std::vector<std::string> eval_args;
  eval->add_option("s", eval_args, "components s_1 ... s_r as complex literals a+bi")
      ->required();

  auto* verify = app.add_subcommand("verify", "run a relation-verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (precision < 53 || (format != "json" && format != "csv" && format != "table") ||
      cutoff < 1 || tolerance_scale <= 0) {
    std::cerr << "invalid global options (precision >= 53, positive cutoff, "
                 "format json|csv|table, positive tolerance scale)\n";
    return kExitUsage;
  }

  EvalOptions opts;
  opts.precision_bits = precision;
  opts.series_cutoff = cutoff;
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.tolerance_scale = tolerance_scale;

  Sink sink;
  if (!sink.open(out_path)) {
    std::cerr << "cannot open output file " << out_path << "\n";
    return kExitUsage;
  }

  try {
    if (values->parsed()) return cmd_values(sink, format, values_r, values_w);
    if (coeffs->parsed()) return cmd_coeffs(sink, format, coeffs_r);
    if (eval->parsed()) return cmd_eval(sink, format, eval_args, opts);
    if (verify->parsed()) return cmd_verify(sink, format, suite, opts, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
  return kExitUsage;
}
