#include "trigint/cli.hpp"

#include "trigint/closed_form.hpp"
#include "trigint/euler_sums.hpp"
#include "trigint/half_line.hpp"
#include "trigint/quadrature.hpp"
#include "trigint/recurrence.hpp"
#include "trigint/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace trigint {

namespace {

using nlohmann::json;

const std::vector<std::string> kFormats{"exact", "latex", "float", "json"};

/// Accepts "0.5", "3/4", "pi", "pi/2", "3pi/4", "3*pi/4", "π/2".
Real parse_real_arg(std::string text) {
  std::string s;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "\xCF\x80") == 0) {  // π
      s += "pi";
      i += 2;
    } else {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      ++i;
    }
  }
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  const auto at = s.find("pi");
  if (at == std::string::npos) return to_real(parse_rational(s));
  std::string head = s.substr(0, at);
  std::string tail = s.substr(at + 2);
  if (!head.empty() && head.back() == '*') head.pop_back();
  Rational coeff(1);
  if (head == "-")
    coeff = -1;
  else if (!head.empty())
    coeff = parse_rational(head);
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("cannot parse real value '" + text + "'");
    const Rational den = parse_rational(tail.substr(1));
    if (den == 0) throw std::invalid_argument("division by zero in '" + text + "'");
    coeff /= den;
  }
  return to_real(coeff) * pi_real();
}

TrigKind parse_kind(const std::string& s) { return s == "sin" || s == "s" ? TrigKind::sin : TrigKind::cos; }

struct Output {
  std::ostream& out;
  std::string format;
  int digits;

  void emit(const std::string& integral, const json& params, const std::string& exact_text,
            const std::string& exact_latex, const json& exact_json, const Real& value,
            std::optional<bool> verified) const {
    if (format == "exact") {
      out << exact_text << '\n';
    } else if (format == "latex") {
      out << exact_latex << '\n';
    } else if (format == "float") {
      out << format_real(value, digits) << '\n';
    } else {
      json j{{"integral", integral},
             {"params", params},
             {"exact", exact_json},
             {"float", format_real(value, digits)},
             {"verified", verified ? json(*verified) : json(nullptr)}};
      out << j.dump(2) << '\n';
    }
  }
};

int verified_exit(std::optional<bool> verified) {
  return verified && !*verified ? kExitVerificationFailed : kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string family = "c";
  unsigned n = 0;
  unsigned p = 0;
  std::string via = "recurrence";
  bool verify = false;
  double tol = 1e-10;
};

int run_eval(const EvalArgs& a, const Output& o, std::ostream& err) {
  const bool cos_family = a.family == "c";
  PiPoly value;
  json extra;
  if (a.via == "closed-form") {
    if (!cos_family) {
      err << "error: --via closed-form is available for --family c only\n";
      return kExitUsage;
    }
    const auto br = a.n % 2 == 0 ? even_branch(a.n / 2, a.p) : odd_branch(a.n / 2, a.p);
    value = br.assembled;
    extra = br.to_json();
  } else {
    value = cos_family ? c_complete(a.n, a.p) : s_complete(a.n, a.p);
  }
  const Real v = value.evaluate();
  std::optional<bool> verified;
  if (a.verify) {
    const unsigned n = a.n, p = a.p;
    auto f = [cos_family, n, p](double x) {
      return std::pow(x, p) * std::pow(cos_family ? std::cos(x) : std::sin(x), n);
    };
    const auto q = integrate_finite(f, 0.0, std::numbers::pi / 2, std::max(1e-13, a.tol / 10));
    verified = q.converged && std::fabs(v.convert_to<double>() - q.value) <= a.tol;
  }
  json params{{"family", a.family}, {"n", a.n}, {"p", a.p}, {"via", a.via}};
  json exact = value.to_json();
  if (!extra.is_null()) exact["expansion"] = extra;
  const std::string id = a.family + "(" + std::to_string(a.n) + "," + std::to_string(a.p) + ")";
  o.emit(id, params, value.to_text(), value.to_latex(), exact, v, verified);
  return verified_exit(verified);
}

// ---------------------------------------------------------------- halfline

struct HalfLineArgs {
  std::string form = "power";
  std::string kind = "cos";
  unsigned n = 0;
  std::string p = "1/2";
  std::string q = "1/2";
  std::string a = "1";
  std::string b = "0";
  std::string x = "1";
  bool verify = false;
  double tol = 1e-6;
};

std::optional<bool> oracle_check(double value, double oracle, const QuadratureResult& q, double tol) {
  return q.converged && std::fabs(value - oracle) <= tol;
}

int run_halfline(const HalfLineArgs& a, const Output& o) {
  const TrigKind kind = parse_kind(a.kind);
  const std::string kname = to_string(kind);
  json params{{"form", a.form}};
  std::optional<bool> verified;

  auto numeric_only = [&](const std::string& id, const Real& v) {
    const std::string text = format_real(v, o.digits);
    o.emit(id, params, text, text, nullptr, v, verified);
    return verified_exit(verified);
  };

  if (a.form == "power" || a.form == "gr822") {
    HalfLineValue hv;
    std::string id;
    if (a.form == "power") {
      const Rational p = parse_rational(a.p);
      const Real b = parse_real_arg(a.b);
      hv = halfline_power(kind, a.n, p, b);
      params.update({{"kind", kname}, {"n", a.n}, {"p", to_fraction_string(p)}, {"b", a.b}});
      id = std::string(kind == TrigKind::cos ? "C" : "S") + "_" + std::to_string(a.n) + "(" +
           to_display_string(p) + "," + a.b + ")";
      if (a.verify) {
        OscillatorySpec spec;
        spec.p = to_double(p);
        spec.kind = kind;
        spec.n = a.n;
        spec.b = b.convert_to<double>();
        spec.tol = a.tol;
        const auto q = integrate_halfline_osc(spec);
        verified = oracle_check(hv.value.to_double(), q.value, q, a.tol);
      }
    } else {
      hv = gr_822_1(a.n);
      params.update({{"n", a.n}});
      id = "gr822(" + std::to_string(a.n) + ")";
      if (a.verify) {
        OscillatorySpec spec;
        spec.n = a.n;
        spec.tol = a.tol;
        const auto q = integrate_halfline_osc(spec);
        verified = oracle_check(hv.value.to_double(), q.value, q, a.tol);
      }
    }
    o.emit(id, params, hv.form.to_text(o.digits), hv.form.to_latex(o.digits), hv.form.to_json(),
           hv.value.value, verified);
    return verified_exit(verified);
  }
  if (a.form == "power-arg") {
    const Real p = parse_real_arg(a.p);
    params.update({{"kind", kname}, {"n", a.n}, {"p", a.p}});
    const auto v = power_arg(kind, a.n, p);
    if (a.verify) {
      // t = x^p turns the integrand into (1/p) t^{1/p-1} trig(t)
      OscillatorySpec spec;
      spec.p = 1 - 1 / p.convert_to<double>();
      spec.kind = kind;
      spec.n = a.n;
      spec.tol = a.tol;
      const auto q = integrate_halfline_osc(spec);
      verified = oracle_check(v.to_double(), q.value / p.convert_to<double>(), q, a.tol);
    }
    return numeric_only("power_arg(" + kname + "," + std::to_string(a.n) + "," + a.p + ")", v.value);
  }
  if (a.form == "linear") {
    const Rational p = parse_rational(a.p);
    const Real av = parse_real_arg(a.a), bv = parse_real_arg(a.b);
    params.update({{"kind", kname}, {"p", to_fraction_string(p)}, {"a", a.a}, {"b", a.b}});
    const auto v = linear_phase(kind, av, bv, p);
    if (a.verify) {
      // t = a x: a^{p-1} ∫ t^{-p} trig(t + b) dt
      OscillatorySpec spec;
      spec.p = to_double(p);
      spec.kind = kind;
      spec.b = bv.convert_to<double>();
      spec.tol = a.tol;
      const auto q = integrate_halfline_osc(spec);
      const double scale = std::pow(av.convert_to<double>(), spec.p - 1);
      verified = oracle_check(v.to_double(), scale * q.value, q, a.tol);
    }
    return numeric_only("linear(" + kname + "," + a.a + "," + a.b + "," + to_display_string(p) + ")", v.value);
  }
  if (a.form == "log-weighted") {
    params.update({{"n", a.n}});
    const auto v = log_weighted(a.n);
    if (a.verify) {
      OscillatorySpec spec;
      spec.p = 0.5;
      spec.n = a.n;
      spec.log_weight = true;
      spec.tol = a.tol / 4;
      const auto q = integrate_halfline_osc(spec);
      verified = oracle_check(v.to_double(), q.value / 4, q, a.tol);
    }
    return numeric_only("log_weighted(" + std::to_string(a.n) + ")", v.value);
  }
  if (a.form == "double-log") {
    const Rational p = parse_rational(a.p), q = parse_rational(a.q);
    params.update({{"n", a.n}, {"p", to_fraction_string(p)}, {"q", to_fraction_string(q)}});
    const auto v = double_log(p, q, a.n);
    return numeric_only("double_log(" + to_display_string(p) + "," + to_display_string(q) + "," +
                            std::to_string(a.n) + ")",
                        v.value);
  }
  if (a.form == "double-log-special") {
    return numeric_only("double_log_special", double_log_special().value);
  }
  if (a.form == "multidim") {
    const auto m = multidim_log(a.n);
    params.update({{"n", a.n},
                   {"delta", m.delta},
                   {"psi_re", format_real(m.psi.re, o.digits)},
                   {"psi_im", format_real(m.psi.im, o.digits)}});
    return numeric_only("multidim(" + std::to_string(a.n) + ")", m.value.value);
  }
  if (a.form == "fresnel") {
    const Real x = parse_real_arg(a.x);
    params.update({{"x", a.x}});
    return numeric_only("FresnelC(" + a.x + ")", fresnel_c(x).value);
  }
  throw std::invalid_argument("unknown --form '" + a.form + "'");
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string gr;
  std::string range = "0..5";
  std::string format = "markdown";
};

struct TableRow {
  std::string key;
  std::string integral;
  std::string exact;
  std::string value;
};

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--range must look like A..B");
  const long lo = std::stol(s.substr(0, dots));
  const long hi = std::stol(s.substr(dots + 2));
  if (lo < 0 || hi < lo || hi > 200) throw std::invalid_argument("--range must satisfy 0 <= A <= B <= 200");
  return {unsigned(lo), unsigned(hi)};
}

int run_table(const TableArgs& a, std::ostream& out, int digits) {
  const auto [lo, hi] = parse_range(a.range);
  std::vector<TableRow> rows;
  auto complete_row = [&](const std::string& key, const std::string& id, const PiPoly& v) {
    rows.push_back({key, id, v.to_text(), format_real(v.evaluate(), digits)});
  };
  auto halfline_row = [&](const std::string& key, const std::string& id, const HalfLineValue& v) {
    rows.push_back({key, id, v.form.to_text(digits), v.value.to_string().empty() ? "" : format_real(v.value.value, digits)});
  };
  for (unsigned i = lo; i <= hi; ++i) {
    const std::string is = std::to_string(i);
    if (a.gr == "3.621.3") {
      complete_row("n=" + is, "c(" + std::to_string(2 * i) + ",0)", c_complete(2 * i, 0));
    } else if (a.gr == "3.621.4") {
      complete_row("n=" + is, "c(" + std::to_string(2 * i + 1) + ",0)", c_complete(2 * i + 1, 0));
    } else if (a.gr == "3.761.11") {
      complete_row("p=" + is, "c(1," + is + ")", base_value(BaseKind::c1p, i));
    } else if (a.gr == "3.821.3") {
      complete_row("n=" + is, "c(" + is + ",1)", c_complete(i, 1));
    } else if (a.gr == "3.822.1") {
      halfline_row("n=" + is, "gr822(" + is + ")", gr_822_1(i));
    } else if (a.gr == "3.822.2") {
      halfline_row("n=" + is, "C_" + is + "(1/2,0)", halfline_power(TrigKind::cos, i, Rational(1, 2), Real(0)));
    } else if (a.gr == "3.821.14") {
      halfline_row("n=" + is, "S_" + is + "(1/2,0)", halfline_power(TrigKind::sin, i, Rational(1, 2), Real(0)));
    } else if (a.gr == "3.764.1" || a.gr == "3.764.2") {
      // rows over a = i (a >= 1), p = 1/2, b = 0
      if (i == 0) continue;
      const TrigKind kind = a.gr == "3.764.1" ? TrigKind::cos : TrigKind::sin;
      const auto v = linear_phase(kind, Real(i), Real(0), Rational(1, 2));
      const std::string s = format_real(v.value, digits);
      rows.push_back({"a=" + is, std::string("linear(") + to_string(kind) + "," + is + ",0,1/2)", s, s});
    } else {
      throw std::invalid_argument("unknown --gr entry '" + a.gr + "'");
    }
  }
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"gr", a.gr}, {"key", r.key}, {"integral", r.integral}, {"exact", r.exact}, {"float", r.value}});
    out << arr.dump(2) << '\n';
  } else {
    out << "| GR | key | integral | exact | float |\n|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << a.gr << " | " << r.key << " | " << r.integral << " | " << r.exact << " | " << r.value << " |\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- identities

struct IdentityArgs {
  std::string check;
  unsigned max_n = 0;  // 0 → per-check default
  bool verbose = false;
  std::string format = "text";
};

VerificationReport c1p_report(unsigned max_p) {
  VerificationReport r;
  for (unsigned p = 0; p <= max_p; ++p) {
    const PiPoly a = c1p_sum_form(p), b = c1p_taylor_form(p);
    r.add_exact("c1p[p=" + std::to_string(p) + "]", a.to_text(), a.evaluate().convert_to<double>(),
                b.evaluate().convert_to<double>(), a == b);
  }
  return r;
}

VerificationReport star_report(unsigned max_n) {
  VerificationReport r;
  for (Parity par : {Parity::even, Parity::odd}) {
    const char* tag = par == Parity::even ? "even" : "odd";
    for (unsigned n = 0; n <= max_n; ++n) {
      for (unsigned p = 3; p <= 2 * max_n + 3; p += 2) {
        const auto br = par == Parity::even ? even_branch(n, p) : odd_branch(n, p);
        const unsigned full_n = par == Parity::even ? 2 * n : 2 * n + 1;
        const Rational reference = c_complete(full_n, p).coeff(0);
        const auto printed = star_term_report(par, n, p);
        const std::string exact = "star=" + to_display_string(*br.star) +
                                  "; largest-index form=" + to_display_string(printed.largest_index_form);
        r.add_exact(std::string("star[") + tag + ",n=" + std::to_string(n) + ",p=" + std::to_string(p) + "]",
                    exact, to_double(*br.star), to_double(reference), *br.star == reference);
      }
    }
  }
  return r;
}

VerificationReport tails_report(unsigned max_m) {
  VerificationReport r;
  for (unsigned m = 1; m <= max_m; ++m) {
    for (SumKind kind : {SumKind::even, SumKind::odd}) {
      const Rational exact = central_tail(kind, m);
      const Real num = central_tail_numeric(kind, m);
      const double e = to_double(exact), v = num.convert_to<double>();
      r.add(std::string("tail[") + (kind == SumKind::even ? "even" : "odd") + ",m=" + std::to_string(m) + "]",
            to_display_string(exact), e, v, std::fabs(e - v), 1e-14 * std::max(1.0, std::fabs(e)));
    }
  }
  return r;
}

VerificationReport ode_report(unsigned max_n) {
  VerificationReport r;
  for (unsigned n = 0; n <= max_n; ++n)
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      for (const char* b : {"0.3", "1"}) r.merge(check_ode_system(n, p, Real(b)));
  return r;
}

void print_report(const VerificationReport& r, const std::string& format, bool verbose, std::ostream& out) {
  if (format == "json") {
    out << r.to_json().dump(2) << '\n';
    return;
  }
  if (verbose) {
    r.print(out);
    return;
  }
  VerificationReport failures;
  for (const auto& c : r.cases())
    if (!c.pass) failures.add(c.id, c.exact, c.numeric, c.oracle, c.abs_err, c.tol);
  for (const auto& c : failures.cases())
    out << "FAIL " << c.id << " exact=" << c.exact << " numeric=" << c.numeric << " oracle=" << c.oracle
        << " abs_err=" << c.abs_err << " tol=" << c.tol << '\n';
  const auto s = r.summary();
  out << "total=" << s.total << " passed=" << s.passed << " failed=" << s.failed << '\n';
}

int run_identities(const IdentityArgs& a, std::ostream& out) {
  VerificationReport r;
  auto pick = [&](unsigned def) { return a.max_n == 0 ? def : a.max_n; };
  if (a.check == "sum1")
    r = check_wallis_identities(pick(50));
  else if (a.check == "sum99")
    r = check_sum99(pick(30));
  else if (a.check == "ode")
    r = ode_report(pick(3));
  else if (a.check == "c1p")
    r = c1p_report(pick(40));
  else if (a.check == "star")
    r = star_report(pick(4));
  else if (a.check == "tails")
    r = tails_report(pick(60));
  else
    throw std::invalid_argument("unknown --check '" + a.check + "'");
  print_report(r, a.format, a.verbose, out);
  return r.all_passed() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string family;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_p;
  std::optional<double> tol;
  std::string format = "text";
  bool verbose = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerificationReport r;
  if (a.family == "complete") {
    CompleteSweepBounds b;
    if (a.max_n) b.max_n = *a.max_n;
    if (a.max_p) b.max_p = *a.max_p;
    if (a.tol) b.tol = *a.tol;
    r = verify_complete(b);
  } else if (a.family == "halfline") {
    HalfLineSweepBounds b;
    if (a.max_n) b.max_n = *a.max_n;
    if (a.tol) b.tol = *a.tol;
    r = verify_halfline(b);
  } else if (a.family == "examples") {
    ExamplesSweepBounds b;
    if (a.max_n) b.max_n = *a.max_n;
    if (a.tol) b.oracle_tol = *a.tol;
    r = verify_examples(b);
  } else {
    throw std::invalid_argument("unknown --family '" + a.family + "'");
  }
  print_report(r, a.format, a.verbose, out);
  return r.all_passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int default_cli_digits() {
  if (const char* env = std::getenv("TRIG_ENGINE_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxDigits) return int(v);
  }
  return 20;
}

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric evaluation of trigonometric integrals", "trigint"};
  app.require_subcommand(1, 1);
  int digits = default_cli_digits();
  std::string format = "exact";

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Complete integral c(n,p) or s(n,p) over [0, pi/2]");
  eval->add_option("--family", ev.family, "c (cosine) or s (sine)")->check(CLI::IsMember({"c", "s"}));
  eval->add_option("--n", ev.n, "power of the trigonometric factor")->required();
  eval->add_option("--p", ev.p, "power of x")->required();
  eval->add_option("--via", ev.via, "evaluation route")->check(CLI::IsMember({"recurrence", "closed-form"}));
  eval->add_option("--format", format)->check(CLI::IsMember(kFormats));
  eval->add_option("--digits", digits)->check(CLI::Range(1, kMaxDigits));
  eval->add_flag("--verify", ev.verify, "compare against adaptive quadrature");
  eval->add_option("--tol", ev.tol, "tolerance for --verify");

  HalfLineArgs hl;
  auto* half = app.add_subcommand("halfline", "Half-line integrals and their special cases");
  half->add_option("--form", hl.form)
      ->check(CLI::IsMember({"power", "power-arg", "linear", "gr822", "log-weighted", "double-log",
                             "double-log-special", "multidim", "fresnel"}));
  half->add_option("--kind", hl.kind)->check(CLI::IsMember({"cos", "sin"}));
  half->add_option("--n", hl.n);
  half->add_option("--p", hl.p, "exponent (exact rational; real for power-arg)");
  half->add_option("--q", hl.q, "second exponent for double-log");
  half->add_option("--a", hl.a, "frequency for linear (accepts pi multiples)");
  half->add_option("--b", hl.b, "phase shift (accepts pi multiples)");
  half->add_option("--x", hl.x, "upper limit for fresnel");
  half->add_option("--format", format)->check(CLI::IsMember(kFormats));
  half->add_option("--digits", digits)->check(CLI::Range(1, kMaxDigits));
  half->add_flag("--verify", hl.verify, "compare against the oscillatory quadrature oracle");
  half->add_option("--tol", hl.tol, "tolerance for --verify");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Regenerate classical table entries");
  table->add_option("--gr", tb.gr, "table entry")
      ->required()
      ->check(CLI::IsMember({"3.621.3", "3.621.4", "3.761.11", "3.821.3", "3.822.1", "3.822.2", "3.821.14",
                             "3.764.1", "3.764.2"}));
  table->add_option("--range", tb.range, "index range A..B");
  table->add_option("--format", tb.format)->check(CLI::IsMember({"markdown", "json"}));
  table->add_option("--digits", digits)->check(CLI::Range(1, kMaxDigits));

  IdentityArgs id;
  auto* ident = app.add_subcommand("identities", "Exact identity checkers");
  ident->add_option("--check", id.check)
      ->required()
      ->check(CLI::IsMember({"sum1", "sum99", "ode", "c1p", "star", "tails"}));
  ident->add_option("--max-n", id.max_n);
  ident->add_flag("--verbose", id.verbose);
  ident->add_option("--format", id.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Verification sweeps against numeric oracles");
  verify->add_option("--family", vf.family)->required()->check(CLI::IsMember({"complete", "halfline", "examples"}));
  verify->add_option("--max-n", vf.max_n);
  verify->add_option("--max-p", vf.max_p);
  verify->add_option("--tol", vf.tol);
  verify->add_option("--format", vf.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--verbose", vf.verbose);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    const Output o{out, format, digits};
    if (*eval) return run_eval(ev, o, err);
    if (*half) return run_halfline(hl, o);
    if (*table) return run_table(tb, out, digits);
    if (*ident) return run_identities(id, out);
    if (*verify) return run_verify(vf, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trigint
