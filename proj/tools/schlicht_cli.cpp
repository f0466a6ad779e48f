// Command-line front end: identity/inequality verification, certified
// maximization, exact root isolation, and the reproduction report.
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schlicht/functions.hpp"
#include "schlicht/optimize.hpp"
#include "schlicht/polynomial.hpp"
#include "schlicht/report.hpp"

namespace {

// 0: all executed checks passed; 1: tool/usage error; 2: a check failed;
// 3: search budget exhausted.
enum ExitCode { kOk = 0, kToolError = 1, kCheckFailed = 2, kBudget = 3 };

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const std::string& s : out) {
    if (s.empty()) throw schlicht::Error("empty entry in list: '" + text + "'");
  }
  return out;
}

void emit(const std::string& content, const std::string& output) {
  std::string body = content;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (output.empty()) {
    std::fputs(body.c_str(), stdout);
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw schlicht::Error("cannot open output file: " + output);
  f << body;
}

std::string polynomial_text(const std::vector<schlicht::Rational>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    std::string term = schlicht::rational_to_string(coeffs[k]);
    if (k >= 1) {
      if (term == "1") term.clear();
      else if (term == "-1") term = "-";
      term += "x";
    }
    if (k >= 2) term += "^" + std::to_string(k);
    if (s.empty()) {
      s = term;
    } else if (!term.empty() && term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
  }
  return s.empty() ? "0" : s;
}

schlicht::Objective parse_objective(const std::string& name) {
  return name == "f1" ? schlicht::Objective::F1 : schlicht::Objective::F2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous Hankel determinant bounds for univalent functions"};
  app.require_subcommand(1);

  // verify
  auto* verify =
      app.add_subcommand("verify", "series -> Grunsky table -> coefficient "
                                   "identities, quadratic-form slack, and "
                                   "coefficient cascade");
  std::string v_function = "koebe";
  std::string v_coeffs;
  int v_order = 9;
  std::string v_mode = "exact";
  std::string v_output;
  struct OmegaFlag {
    int p, q;
    const char* flag;
    std::string value;
  };
  std::vector<OmegaFlag> omega_flags = {
      {1, 1, "--omega11", ""}, {1, 3, "--omega13", ""}, {1, 5, "--omega15", ""},
      {1, 7, "--omega17", ""}, {3, 3, "--omega33", ""}, {3, 5, "--omega35", ""},
      {3, 7, "--omega37", ""}};
  verify->add_option("--function", v_function, "built-in function name")
      ->capture_default_str();
  verify->add_option("--coeffs", v_coeffs,
                     "comma-separated coefficients a2,a3,... (rationals or "
                     "decimals; takes precedence over --function)");
  verify->add_option("--order", v_order, "series truncation degree (>= 7)")
      ->capture_default_str();
  verify->add_option("--mode", v_mode, "arithmetic mode")
      ->check(CLI::IsMember({"exact", "floating"}))
      ->capture_default_str();
  for (OmegaFlag& f : omega_flags) {
    verify->add_option(f.flag, f.value,
                       "override the stored table entry (applied "
                       "symmetrically)");
  }
  verify->add_option("--output", v_output, "write the report to a file");

  // maximize
  auto* maximize = app.add_subcommand(
      "maximize", "certified global maximum via interval branch-and-bound");
  std::string m_objective;
  double m_tol = 1e-6;
  long long m_budget = 10000000;
  int m_workers = 0;
  std::string m_output;
  maximize->add_option("--objective", m_objective, "objective to maximize")
      ->required()
      ->check(CLI::IsMember({"f1", "f2"}));
  maximize->add_option("--tol", m_tol, "enclosure width")
      ->capture_default_str();
  maximize->add_option("--budget", m_budget, "box budget")
      ->capture_default_str();
  maximize
      ->add_option("--workers", m_workers,
                   "worker threads (0: SCHLICHT_WORKERS env or 1)")
      ->capture_default_str();
  maximize->add_option("--output", m_output, "write the certificate to a file");

  // roots
  auto* roots = app.add_subcommand(
      "roots", "exact real-root isolation (Sturm sequence + bisection)");
  std::string r_coeffs;
  std::string r_range = "0,1";
  std::string r_output;
  roots->add_option("--coeffs", r_coeffs,
                    "ascending rational coefficients c0,c1,...; default is "
                    "the y=0 edge stationarity polynomial with artifact "
                    "annotations");
  roots->add_option("--range", r_range, "isolation interval a,b")
      ->capture_default_str();
  roots->add_option("--output", r_output, "write the listing to a file");

  // report
  auto* report =
      app.add_subcommand("report", "one-shot reproduction document");
  std::string p_format = "text";
  std::string p_section;
  std::string p_objective;
  double p_tol = 1e-6;
  std::string p_output;
  report->add_option("--format", p_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  report->add_option("--section", p_section,
                     "identities|bounds|critical|boundary|roots|improvement");
  report->add_option("--objective", p_objective, "restrict to one objective")
      ->check(CLI::IsMember({"f1", "f2"}));
  report->add_option("--tol", p_tol, "bound tolerance")
      ->capture_default_str();
  report->add_option("--output", p_output, "write the document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kToolError;
  }

  try {
    if (*verify) {
      schlicht::VerifyOptions opts;
      opts.function = v_function;
      if (!v_coeffs.empty()) opts.coeffs = split_list(v_coeffs);
      opts.order = v_order;
      opts.mode =
          v_mode == "exact" ? schlicht::Mode::Exact : schlicht::Mode::Floating;
      for (const OmegaFlag& f : omega_flags) {
        if (!f.value.empty()) opts.overrides.push_back({f.p, f.q, f.value});
      }
      schlicht::VerificationResult result = schlicht::verify_function(opts);
      emit(schlicht::verification_json(result), v_output);
      if (!result.passed()) {
        std::fprintf(stderr, "verification failed:%s%s%s\n",
                     result.residuals_pass ? "" : " identity-residuals",
                     result.slack_pass ? "" : " quadratic-form-slack",
                     result.cascade_pass ? "" : " coefficient-cascade");
        return kCheckFailed;
      }
      return kOk;
    }
    if (*maximize) {
      schlicht::Objective obj = parse_objective(m_objective);
      schlicht::BnbOptions opts;
      opts.tol = m_tol;
      opts.box_budget = m_budget;
      opts.workers = m_workers;
      schlicht::CertifiedBound bound = schlicht::branch_and_bound_max(obj, opts);
      emit(schlicht::certificate_json(obj, bound), m_output);
      return kOk;
    }
    if (*roots) {
      std::string description;
      std::vector<schlicht::FilteredRoot> found;
      bool annotated = false;
      if (r_coeffs.empty() && r_range == "0,1") {
        description = "5x^8 - 5x^6 + 4x^4 - 4x^2 + 1";
        found = schlicht::filtered_edge_roots(schlicht::Objective::F1);
        annotated = true;
      } else {
        std::vector<schlicht::Rational> coeffs;
        for (const std::string& c :
             split_list(r_coeffs.empty() ? "1,0,-4,0,4,0,-5,0,5" : r_coeffs)) {
          coeffs.push_back(schlicht::parse_rational(c));
        }
        std::vector<std::string> range = split_list(r_range);
        if (range.size() != 2) {
          throw schlicht::Error("--range takes exactly two endpoints");
        }
        schlicht::Polynomial poly(coeffs);
        description = polynomial_text(coeffs);
        for (const schlicht::RootInterval& ri : schlicht::isolate_roots(
                 poly, schlicht::parse_rational(range[0]),
                 schlicht::parse_rational(range[1]))) {
          schlicht::FilteredRoot fr;
          fr.interval = ri;
          fr.location = schlicht::to_double((ri.lo + ri.hi) / 2);
          fr.genuine = true;
          found.push_back(fr);
        }
      }
      emit(schlicht::roots_json(description, found, annotated), r_output);
      return kOk;
    }
    if (*report) {
      schlicht::ReportOptions opts;
      opts.format = p_format == "text"   ? schlicht::ReportFormat::Text
                    : p_format == "json" ? schlicht::ReportFormat::Json
                                         : schlicht::ReportFormat::Csv;
      opts.section = p_section;
      if (!p_objective.empty()) opts.objective = parse_objective(p_objective);
      opts.tol = p_tol;
      emit(schlicht::build_report(opts), p_output);
      return kOk;
    }
  } catch (const schlicht::BudgetExceededError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBudget;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kToolError;
  }
  return kToolError;
}
