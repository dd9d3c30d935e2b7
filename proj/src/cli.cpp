#include "qmlde/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qmlde/deligne.hpp"
#include "qmlde/errors.hpp"
#include "qmlde/json_io.hpp"
#include "qmlde/mlde.hpp"
#include "qmlde/modforms.hpp"
#include "qmlde/qseries.hpp"
#include "qmlde/scan.hpp"

namespace qmlde {

namespace {

enum class Status { ok, verification_failed, usage_error };

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::verification_failed: return 1;
    case Status::usage_error: return 2;
  }
  return 2;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification_failed";
    case Status::usage_error: return "usage_error";
  }
  return "usage_error";
}

enum class Format { text, json, latex };

std::string exponent_text(const Rational& e) {
  const bool plain = e.is_integer() && e.sign() >= 0;
  return plain ? e.to_string() : "(" + e.to_string() + ")";
}

// "1 + 3*q + 9*q^2 + 19*q^3 + O(q^4)" resp. "q^{1/4} + 3q^{5/4} + ..." in latex.
std::string render_series(const QSeries& s, Format fmt) {
  if (s.is_zero()) return "0";
  const bool latex = fmt == Format::latex;
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= s.trunc_order(); ++n) {
    Rational c = s.coeff(n);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    const Rational e = s.lead_exp() + Rational(static_cast<long>(n));
    const bool unit_coeff = c == Rational(1);
    if (e.is_zero()) {
      os << c.to_string();
    } else {
      if (!unit_coeff) os << c.to_string() << (latex ? "" : "*");
      if (e == Rational(1))
        os << "q";
      else if (latex)
        os << "q^{" << e.to_string() << "}";
      else
        os << "q^" << exponent_text(e);
    }
  }
  const Rational next = s.end_exp() + Rational(1);
  if (latex)
    os << " + O(q^{" << next.to_string() << "})";
  else
    os << " + O(q^" << exponent_text(next) << ")";
  return os.str();
}

std::string render_rational_list(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  return os.str();
}

struct Emitter {
  std::ostream& out;
  Format fmt = Format::text;

  int emit(const std::string& command, const json& params, Status status, const json& payload,
           const std::string& text) {
    if (fmt == Format::json) {
      json envelope;
      envelope["command"] = command;
      envelope["parameters"] = params;
      envelope["status"] = status_name(status);
      envelope["payload"] = payload;
      out << envelope.dump(2) << "\n";
    } else {
      out << text;
    }
    return exit_code(status);
  }
};

bool parse_rational_arg(const std::string& s, Rational& out_value, std::ostream& err,
                        const std::string& what) {
  try {
    out_value = Rational::from_string(s);
    return true;
  } catch (const std::exception& e) {
    err << "error: invalid " << what << " '" << s << "': " << e.what() << "\n";
    return false;
  }
}

int run_expand(Emitter& em, std::ostream& err, const std::string& name, int order,
               E1Variant variant) {
  const auto form = named_form(name, order, variant);
  if (!form) {
    std::ostringstream names;
    for (const auto& n : named_form_names()) names << " " << n;
    err << "error: unknown form '" << name << "'; known forms:" << names.str() << "\n";
    return exit_code(Status::usage_error);
  }
  json payload;
  payload["name"] = name;
  payload["weight"] = form->weight.to_string();
  payload["quasi_modular_depth"] = form->quasi_modular_depth;
  payload["series"] = to_json(form->series);

  std::ostringstream text;
  text << name << " (weight " << form->weight.to_string() << ") = "
       << render_series(form->series, em.fmt) << "\n";
  return em.emit("expand", json{{"form", name}, {"order", order}}, Status::ok, payload, text.str());
}

int run_mlde(Emitter& em, std::ostream& err, const std::string& k_str, const std::string& alpha_str,
             int order) {
  Rational k;
  if (!parse_rational_arg(k_str, k, err, "--k")) return exit_code(Status::usage_error);
  Rational lambda;
  if (alpha_str == "minus") {
    lambda = -k / Rational(12);
  } else if (alpha_str == "plus") {
    lambda = (k + Rational(2)) / Rational(12);
  } else if (!parse_rational_arg(alpha_str, lambda, err, "--alpha")) {
    return exit_code(Status::usage_error);
  }

  const Mlde m = second_order_weight0(k);
  const IndicialData ind = indicial(m);
  const auto res = resonances(m);

  json payload;
  payload["k"] = k.to_string();
  payload["lambda"] = lambda.to_string();
  payload["indicial"] = to_json(ind);
  payload["resonances"] = json::array();
  for (const auto& r : res) payload["resonances"].push_back(to_json(r));

  const json params{{"k", k_str}, {"alpha", alpha_str}, {"order", order}};
  std::ostringstream text;
  text << "second-order weight-0 equation, k = " << k.to_string() << "\n";
  text << "indicial polynomial coefficients (ascending): "
       << render_rational_list(ind.polynomial) << "\n";
  text << "indicial roots: " << render_rational_list(ind.roots) << "\n";
  if (!res.empty()) {
    text << "resonances:";
    for (const auto& r : res)
      text << " (" << r.lambda_small.to_string() << ", " << r.lambda_large.to_string()
           << ", gap " << r.gap << ")";
    text << "\n";
  }

  Status status = Status::ok;
  try {
    const FrobeniusSolution sol = frobenius_solve(m, lambda, order);
    payload["solution"] = to_json(sol);
    text << "solution exponent " << lambda.to_string() << ", coefficients: "
         << render_rational_list(sol.coeffs) << "\n";
    if (sol.resonant) text << "resonant offsets encountered; free coefficients set to 0\n";
  } catch (const not_an_exponent& e) {
    status = Status::verification_failed;
    payload["error"] = std::string("not_an_exponent: ") + e.what();
    text << "no solution: " << e.what() << "\n";
  } catch (const logarithmic_obstruction& e) {
    status = Status::verification_failed;
    payload["error"] = "logarithmic_obstruction";
    payload["obstruction_at"] = e.offset();
    text << "no power-series solution: nonzero obstruction at offset " << e.offset()
         << " (a logarithmic solution exists instead)\n";
  }
  return em.emit("mlde", params, status, payload, text.str());
}

int run_deligne(Emitter& em, std::ostream& err, const std::string& action,
                const std::string& label_str, int order, E1Variant variant) {
  const json params{{"action", action}, {"label", label_str}, {"order", order}};
  if (action == "table") {
    json payload = json::array();
    std::ostringstream text;
    text << "label  h_dual  level  central_charge  dim_g  dim_l2theta  admissible  "
            "quasi_modular_depth_positive\n";
    for (const auto& e : registry()) {
      payload.push_back(to_json(e));
      text << to_string(e.label) << "  " << e.h_dual << "  " << e.level.to_string() << "  "
           << e.central_charge.to_string() << "  " << e.dim_g.get_str() << "  "
           << e.dim_l2theta.get_str() << "  " << (e.admissible ? "yes" : "no") << "  "
           << (e.quasi_modular_depth_positive ? "yes" : "no") << "\n";
    }
    return em.emit("deligne", params, Status::ok, payload, text.str());
  }

  if (action == "verify-all") {
    json payload = json::array();
    std::ostringstream text;
    bool all_agree = true;
    for (const auto& e : registry()) {
      const CharacterReport r = verify_character(e, order, variant);
      payload.push_back(to_json(r));
      const bool ok = r.agree_to_order == r.checked_order;
      all_agree = all_agree && ok;
      text << to_string(e.label) << ": lead q^" << exponent_text(r.closed_form.lead_exp())
           << ", next coefficient " << r.first_coefficient.to_string() << ", agree to order "
           << r.agree_to_order << " of " << r.checked_order << (ok ? "" : "  [MISMATCH]") << "\n";
    }
    return em.emit("deligne", params, all_agree ? Status::ok : Status::verification_failed,
                   payload, text.str());
  }

  if (action == "char") {
    const auto label = label_from_string(label_str);
    if (!label) {
      err << "error: unknown algebra label '" << label_str << "' (A1 A2 G2 D4 F4 E6 E7 E8)\n";
      return exit_code(Status::usage_error);
    }
    const CharacterReport r = verify_character(entry(*label), order, variant);
    const bool ok = r.agree_to_order == r.checked_order;
    std::ostringstream text;
    text << to_string(*label) << " character = " << render_series(r.closed_form, em.fmt) << "\n";
    text << "equation solution agrees to order " << r.agree_to_order << " of " << r.checked_order
         << "\n";
    if (!ok) {
      const int d = r.agree_to_order + 1;
      text << "first disagreement at offset " << d << ": closed form "
           << r.closed_form.coeff(d).to_string() << " vs solution "
           << r.mlde_solution.coeffs[static_cast<size_t>(d)].to_string() << "\n";
    }
    return em.emit("deligne", params, ok ? Status::ok : Status::verification_failed, to_json(r),
                   text.str());
  }

  err << "error: unknown deligne action '" << action << "' (table, verify-all, char)\n";
  return exit_code(Status::usage_error);
}

int run_scan_lists(Emitter& em, int order) {
  const CandidateListReport report = verify_candidate_lists(order);
  json payload;
  payload["all_pass"] = report.all_pass;
  payload["minus_branch"] = json::array();
  payload["plus_branch"] = json::array();
  std::ostringstream text;
  const auto describe = [&](const ScanResult& r) {
    text << (r.vacuum_type ? "pass" : "fail") << " k = " << r.k.to_string() << " ("
         << to_string(r.branch) << " branch, lambda " << r.lambda.to_string() << ")";
    if (r.vacuum_type)
      text << ", coefficients " << render_rational_list(r.leading_coeffs) << ", ...";
    else
      text << " at offset " << *r.failure_offset << " (" << to_string(*r.failure_kind) << ")";
    text << "\n";
  };
  for (const auto& r : report.minus_branch) {
    payload["minus_branch"].push_back(to_json(r));
    describe(r);
  }
  for (const auto& r : report.plus_branch) {
    payload["plus_branch"].push_back(to_json(r));
    describe(r);
  }
  payload["printed_variant"] = to_json(report.printed_variant);
  text << "printed variant of the 13/5 entry: ";
  describe(report.printed_variant);
  return em.emit("scan", json{{"lists", true}, {"order", order}},
                 report.all_pass ? Status::ok : Status::verification_failed, payload, text.str());
}

int run_scan(Emitter& em, std::ostream& err, const std::string& branch_str, int max_num,
             int max_den, int order) {
  const Branch branch = branch_str == "plus" ? Branch::plus : Branch::minus;
  std::vector<ScanResult> results;
  try {
    results = scan_grid(max_num, max_den, branch, order);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(Status::usage_error);
  }
  json payload = json::array();
  std::ostringstream text;
  int passes = 0;
  for (const auto& r : results) {
    payload.push_back(to_json(r));
    if (r.vacuum_type) {
      ++passes;
      text << "pass k = " << r.k.to_string() << " (lambda " << r.lambda.to_string()
           << "), coefficients " << render_rational_list(r.leading_coeffs) << ", ...\n";
    } else {
      text << "fail k = " << r.k.to_string() << " at offset " << *r.failure_offset << " ("
           << to_string(*r.failure_kind) << ")\n";
    }
  }
  text << passes << " of " << results.size() << " candidates are vacuum type to order " << order
       << " on the " << to_string(branch) << " branch\n";
  const json params{{"branch", to_string(branch)}, {"max_num", max_num}, {"max_den", max_den},
                    {"order", order}};
  return em.emit("scan", params, Status::ok, payload, text.str());
}

int run_dims(Emitter& em, std::ostream& err, const std::string& h_str) {
  Rational h;
  if (!parse_rational_arg(h_str, h, err, "--hdual")) return exit_code(Status::usage_error);
  json payload;
  payload["h_dual"] = h.to_string();
  std::ostringstream text;
  try {
    const Rational dg = deligne_dim(h);
    const Rational dl = dim_l2theta(h);
    payload["dim_g"] = dg.to_string();
    payload["dim_g_integer"] = dg.is_integer();
    payload["dim_l2theta"] = dl.to_string();
    payload["dim_l2theta_integer"] = dl.is_integer();
    text << "dim g = " << dg.to_string() << (dg.is_integer() ? "" : " (not an integer)") << "\n";
    text << "dim L(2theta) = " << dl.to_string() << (dl.is_integer() ? "" : " (not an integer)")
         << "\n";
    if (h == Rational(24)) {
      const std::string note =
          "h_dual = 24 is not a Deligne-series dual Coxeter number, yet the second-order "
          "equation with k = 23 still has a vacuum-type solution";
      payload["note"] = note;
      text << "note: " << note << "\n";
    }
  } catch (const zero_division& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(Status::usage_error);
  }
  return em.emit("dims", json{{"hdual", h_str}}, Status::ok, payload, text.str());
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact q-series arithmetic, modular linear differential equations, and the "
               "Deligne-series character verifier"};
  app.name("qmlde");
  app.require_subcommand(0, 1);

  std::string format_str = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->default_val("text");
  };

  std::string variant_str = "eisenstein";
  const auto add_variant = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant_str, "E1^(3) convention")
        ->check(CLI::IsMember({"eisenstein", "printed"}))
        ->default_val("eisenstein");
  };

  // expand
  auto* expand = app.add_subcommand("expand", "q-expansion of a named form");
  std::string form_name;
  int expand_order = 200;
  expand->add_option("form", form_name, "form name (E2 E4 E6 Gt2 Gt4 Gt6 eta delta E2^(2) E1^(3))")
      ->required();
  expand->add_option("--order", expand_order, "truncation order")->default_val(200);
  add_format(expand);
  add_variant(expand);

  // mlde
  auto* mlde = app.add_subcommand("mlde", "solve the second-order weight-0 equation");
  std::string k_str, alpha_str = "plus";
  int mlde_order = 200;
  mlde->add_option("--k", k_str, "parameter k (rational, e.g. 3 or 13/4)")->required();
  mlde->add_option("--alpha", alpha_str, "exponent: minus (-k/12), plus ((k+2)/12), or a rational")
      ->default_val("plus");
  mlde->add_option("--order", mlde_order, "truncation order")->default_val(200);
  add_format(mlde);

  // deligne
  auto* deligne = app.add_subcommand("deligne", "Deligne-series registry and characters");
  std::string action, label_str;
  int deligne_order = 200;
  deligne->add_option("action", action, "table | verify-all | char")->required();
  deligne->add_option("label", label_str, "algebra label for 'char'");
  deligne->add_option("--order", deligne_order, "verification order")->default_val(200);
  add_format(deligne);
  add_variant(deligne);

  // scan
  auto* scan = app.add_subcommand("scan", "vacuum-type integrality scan over rational k");
  std::string branch_str = "minus";
  int max_num = 6, max_den = 12, scan_order = 200;
  bool scan_lists = false;
  scan->add_flag("--lists", scan_lists, "check the known integral lists instead of a grid");
  scan->add_option("--branch", branch_str, "indicial branch")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->default_val("minus");
  scan->add_option("--max-num", max_num, "largest k")->default_val(6);
  scan->add_option("--max-den", max_den, "largest denominator")->default_val(12);
  scan->add_option("--order", scan_order, "integrality check order")->default_val(200);
  add_format(scan);

  // dims
  auto* dims = app.add_subcommand("dims", "Deligne dimension formulas at rational h_dual");
  std::string h_str;
  dims->add_option("--hdual", h_str, "dual Coxeter number (rational)")->required();
  add_format(dims);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(Status::usage_error);
  }

  const Format fmt = format_str == "json" ? Format::json
                     : format_str == "latex" ? Format::latex
                                             : Format::text;
  Emitter em{out, fmt};
  const E1Variant variant = variant_str == "printed" ? E1Variant::printed_divisor_square
                                                     : E1Variant::weight_one_eisenstein;

  if (expand->parsed()) return run_expand(em, err, form_name, expand_order, variant);
  if (mlde->parsed()) return run_mlde(em, err, k_str, alpha_str, mlde_order);
  if (deligne->parsed()) return run_deligne(em, err, action, label_str, deligne_order, variant);
  if (scan->parsed()) {
    if (scan_lists) return run_scan_lists(em, scan_order);
    return run_scan(em, err, branch_str, max_num, max_den, scan_order);
  }
  if (dims->parsed()) return run_dims(em, err, h_str);

  out << app.help();
  return 0;
}

}  // namespace qmlde
