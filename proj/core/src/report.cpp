#include "schlicht/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "schlicht/functions.hpp"
#include "schlicht/hankel.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kFloatResidualTol = 1e-10;
constexpr double kFloatSlackTol = -1e-12;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Shortest round-trip decimal form (what the JSON serializer emits).
std::string fmt_full(double v) { return ordered_json(v).dump(); }

std::string objective_name(Objective obj) {
  return obj == Objective::F1 ? "F1" : "F2";
}

std::string function_label(const VerifyOptions& opts) {
  if (!opts.coeffs.empty()) {
    std::string s = "coefficients:";
    for (std::size_t i = 0; i < opts.coeffs.size(); ++i) {
      if (i) s += ",";
      s += opts.coeffs[i];
    }
    return s;
  }
  return opts.function;
}

VerificationResult verify_exact(const VerifyOptions& opts) {
  Series1<Rational> f;
  if (!opts.coeffs.empty()) {
    std::vector<Rational> tail;
    tail.reserve(opts.coeffs.size());
    for (const std::string& c : opts.coeffs) tail.push_back(parse_rational(c));
    f = series_from_tail(tail, opts.order);
  } else {
    f = builtin_series_exact(opts.function, opts.order);
  }
  GrunskyTable<Rational> table = grunsky_from_series(odd_transform(f), opts.order);
  for (const OmegaOverride& o : opts.overrides) {
    table.set(o.p, o.q, parse_rational(o.value));
  }
  VerificationResult r;
  r.function = function_label(opts);
  r.order = opts.order;
  r.mode = Mode::Exact;
  CoefficientVector<Rational> cv{f.coeff(2), f.coeff(3), f.coeff(4),
                                 f.coeff(5)};
  std::array<Rational, 6> res = verify_coefficient_identities(table, cv);
  r.residuals_pass = true;
  for (int i = 0; i < 6; ++i) {
    r.residuals[i] = to_double(res[i]);
    if (!is_zero(res[i])) r.residuals_pass = false;
  }
  bool first = true;
  Rational slack_min;
  for (const auto& v : sample_test_vectors_exact(100)) {
    Rational s = quadratic_form_slack(table, v);
    if (first || s < slack_min) slack_min = s;
    first = false;
  }
  r.slack_min = to_double(slack_min);
  r.slack_pass = slack_min >= 0;
  CascadeReport casc = omega_cascade_bounds(table);
  for (int k = 0; k < 4; ++k) {
    if (casc.entries[k].evaluable) r.cascade_margins[k] = casc.entries[k].margin;
  }
  r.cascade_pass = casc.all_hold;
  return r;
}

VerificationResult verify_floating(const VerifyOptions& opts) {
  Series1<std::complex<double>> f;
  if (!opts.coeffs.empty()) {
    std::vector<std::complex<double>> tail;
    tail.reserve(opts.coeffs.size());
    for (const std::string& c : opts.coeffs) {
      tail.emplace_back(to_double(parse_rational(c)), 0.0);
    }
    f = series_from_tail(tail, opts.order);
  } else {
    f = builtin_series_floating(opts.function, opts.order);
  }
  GrunskyTable<std::complex<double>> table =
      grunsky_from_series(odd_transform(f), opts.order);
  for (const OmegaOverride& o : opts.overrides) {
    table.set(o.p, o.q, {to_double(parse_rational(o.value)), 0.0});
  }
  VerificationResult r;
  r.function = function_label(opts);
  r.order = opts.order;
  r.mode = Mode::Floating;
  CoefficientVector<std::complex<double>> cv{f.coeff(2), f.coeff(3),
                                             f.coeff(4), f.coeff(5)};
  std::array<std::complex<double>, 6> res =
      verify_coefficient_identities(table, cv);
  r.residuals_pass = true;
  for (int i = 0; i < 6; ++i) {
    r.residuals[i] = std::abs(res[i]);
    if (!(r.residuals[i] <= kFloatResidualTol)) r.residuals_pass = false;
  }
  double slack_min = HUGE_VAL;
  for (const auto& v : sample_test_vectors_floating(100)) {
    slack_min = std::min(slack_min, quadratic_form_slack(table, v));
  }
  r.slack_min = slack_min;
  r.slack_pass = slack_min >= kFloatSlackTol;
  CascadeReport casc = omega_cascade_bounds(table);
  for (int k = 0; k < 4; ++k) {
    if (casc.entries[k].evaluable) r.cascade_margins[k] = casc.entries[k].margin;
  }
  r.cascade_pass = casc.all_hold;
  return r;
}

ordered_json verification_to_json(const VerificationResult& r) {
  ordered_json j;
  j["function"] = r.function;
  j["order"] = r.order;
  j["residuals"] = r.residuals;
  j["slack_min"] = r.slack_min;
  ordered_json margins = ordered_json::array();
  for (const auto& m : r.cascade_margins) {
    if (m) {
      margins.push_back(*m);
    } else {
      margins.push_back(nullptr);
    }
  }
  j["cascade_margins"] = margins;
  return j;
}

ordered_json certificate_to_json(Objective obj, const CertifiedBound& b) {
  ReferenceBounds ref;
  ordered_json j;
  j["objective"] = objective_name(obj);
  j["upper"] = b.upper;
  j["lower"] = b.lower;
  j["witness"] = {b.witness.x, b.witness.y};
  j["tol"] = b.tolerance;
  j["boxes"] = b.boxes_processed;
  j["improves_over"] = {
      {"old_bound", obj == Objective::F1 ? ref.h2_old : ref.h3_old}};
  return j;
}

}  // namespace

VerificationResult verify_function(const VerifyOptions& opts) {
  if (opts.order < 7) {
    throw Error("verification order must be at least 7 (identities read "
                "table indices up to 7)");
  }
  if (opts.coeffs.empty() && !is_builtin_function(opts.function)) {
    throw Error("unknown function: " + opts.function);
  }
  return opts.mode == Mode::Exact ? verify_exact(opts) : verify_floating(opts);
}

std::string verification_json(const VerificationResult& r) {
  return verification_to_json(r).dump(2);
}

std::string certificate_json(Objective obj, const CertifiedBound& bound) {
  return certificate_to_json(obj, bound).dump(2);
}

std::string roots_json(const std::string& description,
                       const std::vector<FilteredRoot>& roots,
                       bool annotated) {
  ordered_json j;
  j["polynomial"] = description;
  ordered_json arr = ordered_json::array();
  for (const FilteredRoot& r : roots) {
    ordered_json e;
    e["interval"] = {rational_to_string(r.interval.lo),
                     rational_to_string(r.interval.hi)};
    e["location"] = r.location;
    if (annotated) e["genuine"] = r.genuine;
    arr.push_back(e);
  }
  j["roots"] = arr;
  return j.dump(2);
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

struct ReportData {
  std::vector<VerificationResult> identities;
  struct BoundEntry {
    Objective obj;
    CertifiedBound bound;
    double old_bound;
  };
  std::vector<BoundEntry> bounds;
  struct CriticalEntry {
    Objective obj;
    std::vector<CriticalPoint> points;
  };
  std::vector<CriticalEntry> critical;
  struct BoundaryEntry {
    Objective obj;
    std::array<EdgeMaximum, 3> edges;
  };
  std::vector<BoundaryEntry> boundary;
  struct RootsEntry {
    Objective obj;
    std::string edge;
    std::vector<FilteredRoot> roots;
  };
  std::vector<RootsEntry> roots;
};

ReportData gather(const ReportOptions& opts) {
  auto want = [&](const char* s) {
    return opts.section.empty() || opts.section == s;
  };
  std::vector<Objective> objectives;
  if (!opts.objective || *opts.objective == Objective::F1) {
    objectives.push_back(Objective::F1);
  }
  if (!opts.objective || *opts.objective == Objective::F2) {
    objectives.push_back(Objective::F2);
  }
  ReportData d;
  if (want("identities")) {
    for (const std::string& name : builtin_function_names()) {
      VerifyOptions vo;
      vo.function = name;
      d.identities.push_back(verify_function(vo));
    }
  }
  if (want("bounds") || want("improvement")) {
    ReferenceBounds ref;
    for (Objective obj : objectives) {
      BnbOptions bo;
      bo.tol = opts.tol;
      d.bounds.push_back({obj, branch_and_bound_max(obj, bo),
                          obj == Objective::F1 ? ref.h2_old : ref.h3_old});
    }
  }
  if (want("critical")) {
    for (Objective obj : objectives) {
      d.critical.push_back({obj, multi_start_critical_points(obj)});
    }
  }
  if (want("boundary")) {
    for (Objective obj : objectives) {
      d.boundary.push_back({obj, boundary_scan(obj)});
    }
  }
  if (want("roots")) {
    for (Objective obj : objectives) {
      d.roots.push_back({obj, obj == Objective::F1 ? "y=0" : "ellipse",
                         filtered_edge_roots(obj)});
    }
  }
  return d;
}

std::string render_text(const ReportOptions& opts, const ReportData& d) {
  auto want = [&](const char* s) {
    return opts.section.empty() || opts.section == s;
  };
  std::ostringstream os;
  os << "hankel determinant bound reproduction\n";
  if (!d.identities.empty()) {
    os << "\n== identity verification (exact, order 9)\n";
    for (const VerificationResult& r : d.identities) {
      double rmax = 0.0;
      for (double x : r.residuals) rmax = std::max(rmax, std::abs(x));
      double margin_min = HUGE_VAL;
      for (const auto& m : r.cascade_margins) {
        if (m) margin_min = std::min(margin_min, *m);
      }
      os << "  " << r.function << ": residual_max " << fmt12(rmax)
         << ", slack_min " << fmt12(r.slack_min) << ", cascade_margin_min "
         << fmt12(margin_min) << (r.passed() ? "  [ok]" : "  [FAIL]") << "\n";
    }
  }
  if (!d.bounds.empty() && want("bounds")) {
    os << "\n== certified bounds\n";
    for (const auto& e : d.bounds) {
      os << "  " << (e.obj == Objective::F1 ? "|H2(2)|" : "|H3(1)|")
         << " <= " << fmt12(e.bound.upper) << "  (enclosure ["
         << fmt12(e.bound.lower) << ", " << fmt12(e.bound.upper) << "], tol "
         << fmt12(e.bound.tolerance) << ", boxes " << e.bound.boxes_processed
         << ")\n";
      os << "    witness (" << fmt12(e.bound.witness.x) << ", "
         << fmt12(e.bound.witness.y) << ")\n";
    }
  }
  if (!d.critical.empty()) {
    os << "\n== interior critical points (multi-start Newton)\n";
    for (const auto& e : d.critical) {
      os << "  " << objective_name(e.obj) << ":\n";
      for (const CriticalPoint& c : e.points) {
        os << "    (" << fmt12(c.point.x) << ", " << fmt12(c.point.y)
           << ")  value " << fmt12(c.value) << "  grad_norm "
           << fmt12(c.gradient_norm) << "\n";
      }
    }
  }
  if (!d.boundary.empty()) {
    os << "\n== boundary maxima\n";
    for (const auto& e : d.boundary) {
      os << "  " << objective_name(e.obj) << ":\n";
      for (const EdgeMaximum& m : e.edges) {
        os << "    " << m.edge << ": " << fmt12(m.value) << " at ("
           << fmt12(m.location.x) << ", " << fmt12(m.location.y) << ")  ["
           << edge_method_name(m.method) << "]\n";
      }
    }
  }
  if (!d.roots.empty()) {
    os << "\n== edge stationarity roots (exact isolation)\n";
    for (const auto& e : d.roots) {
      os << "  " << objective_name(e.obj) << " " << e.edge << " edge:\n";
      for (const FilteredRoot& r : e.roots) {
        os << "    x = " << fmt12(r.location)
           << (r.genuine ? "  (stationary point)" : "  (squaring artifact)")
           << "\n";
      }
    }
  }
  if (want("improvement") && !d.bounds.empty()) {
    os << "\n== improvement over the prior bounds\n";
    for (const auto& e : d.bounds) {
      os << "  " << (e.obj == Objective::F1 ? "|H2(2)|" : "|H3(1)|") << ": "
         << fmt12(e.bound.upper) << " vs " << fmt12(e.old_bound) << "  (ratio "
         << fmt12(e.bound.upper / e.old_bound) << ")\n";
    }
  }
  return os.str();
}

std::string render_json(const ReportOptions& opts, const ReportData& d) {
  auto want = [&](const char* s) {
    return opts.section.empty() || opts.section == s;
  };
  ordered_json doc;
  if (want("identities")) {
    ordered_json arr = ordered_json::array();
    for (const VerificationResult& r : d.identities) {
      arr.push_back(verification_to_json(r));
    }
    doc["identities"] = arr;
  }
  if (want("bounds")) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : d.bounds) {
      arr.push_back(certificate_to_json(e.obj, e.bound));
    }
    doc["bounds"] = arr;
  }
  if (want("critical")) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : d.critical) {
      for (const CriticalPoint& c : e.points) {
        ordered_json p;
        p["objective"] = objective_name(e.obj);
        p["x"] = c.point.x;
        p["y"] = c.point.y;
        p["value"] = c.value;
        p["gradient_norm"] = c.gradient_norm;
        arr.push_back(p);
      }
    }
    doc["critical_points"] = arr;
  }
  if (want("boundary")) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : d.boundary) {
      for (const EdgeMaximum& m : e.edges) {
        ordered_json b;
        b["objective"] = objective_name(e.obj);
        b["edge"] = m.edge;
        b["max"] = m.value;
        b["location"] = {m.location.x, m.location.y};
        b["method"] = edge_method_name(m.method);
        arr.push_back(b);
      }
    }
    doc["boundary"] = arr;
  }
  if (want("roots")) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : d.roots) {
      for (const FilteredRoot& r : e.roots) {
        ordered_json x;
        x["objective"] = objective_name(e.obj);
        x["edge"] = e.edge;
        x["interval"] = {rational_to_string(r.interval.lo),
                         rational_to_string(r.interval.hi)};
        x["location"] = r.location;
        x["genuine"] = r.genuine;
        arr.push_back(x);
      }
    }
    doc["roots"] = arr;
  }
  if (want("improvement")) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : d.bounds) {
      ordered_json x;
      x["objective"] = objective_name(e.obj);
      x["old_bound"] = e.old_bound;
      x["new_bound"] = e.bound.upper;
      x["ratio"] = e.bound.upper / e.old_bound;
      arr.push_back(x);
    }
    doc["improvement"] = arr;
  }
  return doc.dump(2);
}

std::string render_csv(const ReportOptions& opts, const ReportData& d) {
  auto want = [&](const char* s) {
    return opts.section.empty() || opts.section == s;
  };
  std::ostringstream os;
  os << "quantity,value,lower,upper,source\n";
  auto row = [&](const std::string& q, const std::string& v,
                 const std::string& lo, const std::string& hi,
                 const std::string& src) {
    os << q << "," << v << "," << lo << "," << hi << "," << src << "\n";
  };
  for (const VerificationResult& r : d.identities) {
    double rmax = 0.0;
    for (double x : r.residuals) rmax = std::max(rmax, std::abs(x));
    double margin_min = HUGE_VAL;
    for (const auto& m : r.cascade_margins) {
      if (m) margin_min = std::min(margin_min, *m);
    }
    row("residual_max[" + r.function + "]", fmt_full(rmax), "", "",
        "identities");
    row("slack_min[" + r.function + "]", fmt_full(r.slack_min), "", "",
        "identities");
    row("cascade_margin_min[" + r.function + "]", fmt_full(margin_min), "", "",
        "identities");
  }
  if (want("bounds")) {
    for (const auto& e : d.bounds) {
      std::string q = e.obj == Objective::F1 ? "H2_bound" : "H3_bound";
      row(q, fmt_full(e.bound.upper), fmt_full(e.bound.lower),
          fmt_full(e.bound.upper), "branch-and-bound");
    }
  }
  for (const auto& e : d.critical) {
    int i = 0;
    for (const CriticalPoint& c : e.points) {
      ++i;
      std::string base =
          objective_name(e.obj) + "_critical_" + std::to_string(i);
      row(base + "_x", fmt_full(c.point.x), "", "", "newton");
      row(base + "_y", fmt_full(c.point.y), "", "", "newton");
      row(base + "_value", fmt_full(c.value), "", "", "newton");
    }
  }
  for (const auto& e : d.boundary) {
    for (const EdgeMaximum& m : e.edges) {
      row(objective_name(e.obj) + "_edge_max[" + m.edge + "]",
          fmt_full(m.value), "", "", edge_method_name(m.method));
    }
  }
  for (const auto& e : d.roots) {
    int i = 0;
    for (const FilteredRoot& r : e.roots) {
      ++i;
      row(objective_name(e.obj) + "_edge_root_" + std::to_string(i),
          fmt_full(r.location), fmt_full(to_double(r.interval.lo)),
          fmt_full(to_double(r.interval.hi)),
          r.genuine ? "stationary" : "squaring-artifact");
    }
  }
  if (want("improvement")) {
    for (const auto& e : d.bounds) {
      std::string base = e.obj == Objective::F1 ? "H2" : "H3";
      row(base + "_old_bound", fmt_full(e.old_bound), "", "", "comparison");
      row(base + "_new_bound", fmt_full(e.bound.upper), "", "", "comparison");
      row(base + "_ratio", fmt_full(e.bound.upper / e.old_bound), "", "",
          "comparison");
    }
  }
  return os.str();
}

}  // namespace

std::string build_report(const ReportOptions& opts) {
  static const std::vector<std::string> kSections = {
      "identities", "bounds", "critical", "boundary", "roots", "improvement"};
  if (!opts.section.empty() &&
      std::find(kSections.begin(), kSections.end(), opts.section) ==
          kSections.end()) {
    throw Error("unknown report section: " + opts.section);
  }
  ReportData d = gather(opts);
  switch (opts.format) {
    case ReportFormat::Text: return render_text(opts, d);
    case ReportFormat::Json: return render_json(opts, d);
    case ReportFormat::Csv: return render_csv(opts, d);
  }
  throw Error("unknown report format");
}

}  // namespace schlicht
