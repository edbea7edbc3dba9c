#include "cli.hpp"

#include <zetakit/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace zetakit::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Csv };

/// One output row.
struct Record {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> extras;
  std::string value;
  std::string value_im;  // empty for real values
  std::optional<double> err;
  std::string method;
  bool exact = false;
  bool certified = false;
  bool zero = false;
};

// ---------------------------------------------------------------------------
// formatting

long decimal_digits(const PrecisionContext& ctx) {
  return static_cast<long>(std::ceil(ctx.precision_bits * 0.3));
}

std::string format_real(const Real& x, const PrecisionContext& ctx) {
  return x.to_string(static_cast<int>(decimal_digits(ctx) - 1));
}

std::string format_err(double e) {
  if (e == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", e);
  return buf;
}

void fill_value(Record& r, const EvalResult& res, const PrecisionContext& ctx) {
  r.method = method_name(res.method);
  r.certified = res.certified;
  r.zero = res.zero_note;
  if (res.exact) {
    r.value = to_string(*res.exact);
    r.exact = true;
    r.err = 0.0;
    r.method = "exact";
    return;
  }
  r.value = format_real(res.value.re, ctx);
  if (!res.value.im.is_zero()) r.value_im = format_real(res.value.im, ctx);
  r.err = res.err;
}

Record exact_record(const BigRational& q) {
  Record r;
  r.value = to_string(q);
  r.exact = true;
  r.err = 0.0;
  r.method = "exact";
  return r;
}

json record_json(const Record& r) {
  json j;
  json in = json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  for (const auto& [k, v] : r.extras) j[k] = v;
  j["value"] = r.value;
  if (!r.value_im.empty()) j["value_im"] = r.value_im;
  if (r.err)
    j["err"] = *r.err;
  else
    j["err"] = nullptr;
  j["method"] = r.method;
  j["exact"] = r.exact;
  j["certified"] = r.certified;
  if (r.zero) j["zero"] = true;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_records(const std::vector<Record>& rows, Format fmt, bool as_list, std::ostream& out) {
  if (fmt == Format::Json) {
    if (!as_list && rows.size() == 1) {
      out << record_json(rows.front()).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(record_json(r));
      out << arr.dump(2) << "\n";
    }
    return;
  }
  if (fmt == Format::Csv) {
    if (rows.empty()) return;
    bool any_im = false;
    for (const auto& r : rows) any_im = any_im || !r.value_im.empty();
    std::vector<std::string> head;
    for (const auto& kv : rows.front().inputs) head.push_back(kv.first);
    for (const auto& kv : rows.front().extras) head.push_back(kv.first);
    head.push_back("value");
    if (any_im) head.push_back("value_im");
    head.push_back("err");
    head.push_back("method");
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
    out << "\n";
    for (const auto& r : rows) {
      std::vector<std::string> cells;
      for (const auto& kv : r.inputs) cells.push_back(kv.second);
      for (const auto& kv : r.extras) cells.push_back(kv.second);
      cells.push_back(r.value);
      if (any_im) cells.push_back(r.value_im.empty() ? "0" : r.value_im);
      cells.push_back(r.err ? format_err(*r.err) : "");
      cells.push_back(r.method);
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
      out << "\n";
    }
    return;
  }
  for (const auto& r : rows) {
    std::string line;
    auto add = [&](const std::string& k, const std::string& v) {
      if (!line.empty()) line += "  ";
      line += k + "=" + v;
    };
    for (const auto& [k, v] : r.inputs) add(k, v);
    for (const auto& [k, v] : r.extras) add(k, v);
    add("value", r.value);
    if (!r.value_im.empty()) add("imag", r.value_im);
    add("err", r.err ? format_err(*r.err) : "-");
    add("method", r.method);
    out << line << "\n";
  }
}

// ---------------------------------------------------------------------------
// argument parsing

BigRational parse_number(const std::string& name, const std::string& text) {
  BigRational q;
  if (!parse_rational(text, q)) throw UsageError("--" + name + ": cannot parse '" + text + "' as a number");
  return q;
}

long parse_integer(const std::string& name, const std::string& text) {
  BigRational q = parse_number(name, text);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw UsageError("--" + name + " must be an integer");
  return q.get_num().get_si();
}

Real to_real(const BigRational& q) { return Real(q); }

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

constexpr std::size_t kMaxRangePoints = 100000;

/// a, a:b, a:b:step, a:b:geometric, a:b:geometric:factor
std::vector<BigRational> parse_range(const std::string& name, const std::string& text, bool integral) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty() || parts.size() > 4) throw UsageError("--" + name + ": malformed range '" + text + "'");
  std::vector<BigRational> pts;
  BigRational a = parse_number(name, parts[0]);
  if (parts.size() == 1) {
    pts.push_back(a);
  } else {
    BigRational b = parse_number(name, parts[1]);
    bool geometric = parts.size() >= 3 && parts[2] == "geometric";
    if (parts.size() == 4 && !geometric) throw UsageError("--" + name + ": malformed range '" + text + "'");
    if (geometric) {
      BigRational f = parts.size() == 4 ? parse_number(name, parts[3]) : BigRational(2);
      if (a <= 0 || f <= 1) throw UsageError("--" + name + ": geometric ranges need start > 0 and factor > 1");
      for (BigRational x = a; x <= b; x *= f) {
        BigRational v = x;
        if (integral) {
          BigRational half_up = x + BigRational(1, 2);
          BigInt r;
          mpz_fdiv_q(r.get_mpz_t(), half_up.get_num_mpz_t(), half_up.get_den_mpz_t());
          v = BigRational(r);
        }
        if (pts.empty() || v != pts.back()) pts.push_back(v);
        if (pts.size() > kMaxRangePoints) throw UsageError("--" + name + ": range has too many points");
      }
    } else {
      BigRational step = parts.size() == 3 ? parse_number(name, parts[2]) : BigRational(1);
      if (step == 0) throw UsageError("--" + name + ": step must be nonzero");
      for (BigRational x = a; step > 0 ? x <= b : x >= b; x += step) {
        pts.push_back(x);
        if (pts.size() > kMaxRangePoints) throw UsageError("--" + name + ": range has too many points");
      }
    }
  }
  if (pts.empty()) throw UsageError("--" + name + ": empty range '" + text + "'");
  if (integral)
    for (const auto& p : pts)
      if (!is_integer(p)) throw UsageError("--" + name + " must take integer values");
  return pts;
}

// ---------------------------------------------------------------------------
// evaluation

struct Point {
  std::optional<BigRational> s, im;
  std::optional<long> n, m, k;
  std::string method = "auto";
};

const std::vector<std::string>& eval_targets() {
  static const std::vector<std::string> t = {"zeta-z",  "z",        "zeta-zn",     "zeta-z-deriv",
                                             "catalan", "bernoulli", "riemann-zeta"};
  return t;
}

template <class T>
const T& need(const std::optional<T>& v, const std::string& name, const std::string& target) {
  if (!v) throw UsageError(target + " requires --" + name);
  return *v;
}

Complex argument(const Point& p, const std::string& target) {
  Real re = to_real(need(p.s, "s", target));
  if (p.im) return Complex(re, to_real(*p.im));
  return Complex(re);
}

void echo_s(Record& r, const Point& p) {
  r.inputs.emplace_back("s", to_string(*p.s));
  if (p.im) r.inputs.emplace_back("im", to_string(*p.im));
}

void require_real(const Point& p, const std::string& target) {
  if (p.im && *p.im != 0) throw UsageError(target + " takes a real --s only");
}

Record evaluate(const std::string& target, const Point& p, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Record r;
  if (target == "zeta-z") {
    Complex s = argument(p, target);
    EvalResult res;
    if (p.method == "auto" || p.method == "closed")
      res = zeta_z_closed(s, ctx);
    else if (p.method == "product")
      res = zeta_z_product(s, ctx);
    else if (p.method == "mellin")
      res = zeta_z_mellin(s, ctx);
    else
      throw UsageError("unknown --method '" + p.method + "' (auto, closed, product, mellin)");
    echo_s(r, p);
    fill_value(r, res, ctx);
  } else if (target == "z") {
    EvalResult res = big_z(argument(p, target), ctx);
    echo_s(r, p);
    fill_value(r, res, ctx);
  } else if (target == "zeta-zn") {
    long n = need(p.n, "n", target);
    const BigRational& s = need(p.s, "s", target);
    DiscreteCircle circle(n);
    bool real = !p.im || *p.im == 0;
    if (real && is_integer(s) && s < 0) {
      r = exact_record(zeta_zn_negative_int(circle, -s.get_num().get_si()));
    } else if (real && s == 0) {
      r = exact_record(BigRational(n - 1));
    } else if (real && is_integer(s) && s <= detail::kClosedPolyCap) {
      r = exact_record(zeta_zn_closed_poly(s.get_num().get_si())(n));
    } else if (real && s.get_den() == 2 && s < 0) {
      // -1/2 - m: odd sine powers through the cotangent formula
      long m = BigRational(-s - BigRational(1, 2)).get_num().get_si();
      fill_value(r, sine_odd_power_sum(circle, m, ctx), ctx);
    } else {
      fill_value(r, zeta_zn_direct(circle, argument(p, target), ctx), ctx);
    }
    r.inputs.insert(r.inputs.begin(), {"n", std::to_string(n)});
    r.inputs.emplace(r.inputs.begin() + 1, "s", to_string(s));
    if (p.im) r.inputs.emplace(r.inputs.begin() + 2, "im", to_string(*p.im));
  } else if (target == "zeta-zn-direct") {
    long n = need(p.n, "n", target);
    need(p.s, "s", target);
    fill_value(r, zeta_zn_direct(DiscreteCircle(n), argument(p, target), ctx), ctx);
    r.inputs.insert(r.inputs.begin(), {"n", std::to_string(n)});
    r.inputs.emplace(r.inputs.begin() + 1, "s", to_string(*p.s));
    if (p.im) r.inputs.emplace(r.inputs.begin() + 2, "im", to_string(*p.im));
  } else if (target == "sine-sum") {
    // sum_k sin^{-s}(k pi / n) = 2^s zeta_{Z/nZ}(s/2), next to the three-term expansion
    require_real(p, target);
    long n = need(p.n, "n", target);
    Real s = to_real(need(p.s, "s", target));
    EvalResult res = zeta_zn_direct(DiscreteCircle(n), s / 2, ctx);
    res.value.re = pow(Real(2), s) * res.value.re;
    res.err *= std::pow(2.0, s.to_double());
    fill_value(r, res, ctx);
    r.inputs = {{"n", std::to_string(n)}, {"s", to_string(*p.s)}};
    try {
      r.extras = {{"expansion", format_real(evaluate_expansion(expansion_terms(Complex(s), ctx), n).re, ctx)}};
    } catch (const PoleError&) {
      r.extras = {{"expansion", "pole"}};
    }
  } else if (target == "zeta-z-deriv") {
    require_real(p, target);
    EvalResult res = zeta_z_deriv(to_real(need(p.s, "s", target)), ctx);
    echo_s(r, p);
    fill_value(r, res, ctx);
  } else if (target == "catalan") {
    long m = need(p.m, "m", target);
    r = exact_record(BigRational(catalan(m)));
    r.inputs.emplace_back("m", std::to_string(m));
  } else if (target == "bernoulli") {
    long k = need(p.k, "k", target);
    if (k < 0) throw DomainError("bernoulli index must be nonnegative");
    r = exact_record(bernoulli(static_cast<unsigned long>(k)));
    r.inputs.emplace_back("k", std::to_string(k));
  } else if (target == "riemann-zeta") {
    const BigRational& s = need(p.s, "s", target);
    bool real = !p.im || *p.im == 0;
    if (real && s == 0) {
      r = exact_record(BigRational(-1, 2));
    } else if (real && is_integer(s) && s < 0) {
      r = exact_record(euler_zeta_negative(-s.get_num().get_si()));
    } else {
      HPComplex z = riemann_zeta_numeric(argument(p, target), ctx);
      EvalResult res;
      res.value = z.value;
      res.err = z.err;
      res.method = s < BigRational(-1, 2) ? Method::FunctionalEquation : Method::EulerMaclaurin;
      fill_value(r, res, ctx);
    }
    echo_s(r, p);
  } else {
    throw UsageError("unknown target '" + target + "'");
  }
  return r;
}

Record pole_record(const std::string& target, const Point& p, const ZetaError& e) {
  Record r;
  if (p.n && target.rfind("zeta-zn", 0) == 0) r.inputs.emplace_back("n", std::to_string(*p.n));
  if (p.s) r.inputs.emplace_back("s", to_string(*p.s));
  if (p.im) r.inputs.emplace_back("im", to_string(*p.im));
  if (p.m) r.inputs.emplace_back("m", std::to_string(*p.m));
  r.value = "pole";
  r.method = e.name();
  return r;
}

// ---------------------------------------------------------------------------

struct Globals {
  long precision_bits = 256;
  double tol = 1e-30;
  long max_terms = 1'000'000;
  std::string format = "plain";
  bool bits_given = false;
};

Format parse_format(const std::string& f) {
  if (f == "plain") return Format::Plain;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw UsageError("unknown --format '" + f + "' (plain, json, csv)");
}

PrecisionContext make_context(const Globals& g) {
  long bits = g.precision_bits;
  if (!g.bits_given) {
    if (const char* env = std::getenv("ZETAKIT_PRECISION_BITS"); env && *env) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (*end != '\0') throw UsageError("ZETAKIT_PRECISION_BITS must be an integer");
      bits = v;
    }
  }
  if (bits < 64) throw UsageError("precision must be at least 64 bits");
  if (bits > 1 << 16) throw UsageError("precision above 65536 bits is not supported");
  if (!(g.tol > 0)) throw UsageError("--tol must be positive");
  if (g.max_terms < 1) throw UsageError("--max-terms must be at least 1");
  return PrecisionContext(bits, g.tol, g.max_terms);
}

int run_verify(const std::string& suite, bool corrupt, const PrecisionContext& ctx, Format fmt, std::ostream& out) {
  if (suite != "all" && std::find(verify_suite_names().begin(), verify_suite_names().end(), suite) ==
                            verify_suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  VerifyOptions opt;
  opt.corrupt_poly = corrupt;
  auto reports = zetakit::run_verify(suite, ctx, opt);
  bool ok = true;
  std::size_t total = 0, passed = 0;
  double worst = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    worst = std::max(worst, r.max_error());
    for (const auto& c : r.checks) {
      ++total;
      passed += c.passed;
    }
  }
  if (fmt == Format::Json) {
    json j;
    j["suite"] = suite;
    j["precision_bits"] = ctx.precision_bits;
    j["tol"] = ctx.target_tol;
    j["passed"] = ok;
    j["max_error"] = worst;
    json arr = json::array();
    for (const auto& r : reports) {
      json s;
      s["suite"] = r.suite;
      s["passed"] = r.passed();
      json checks = json::array();
      for (const auto& c : r.checks) {
        json cj{{"name", c.name}, {"passed", c.passed}, {"max_error", c.max_error}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
      }
      s["checks"] = checks;
      arr.push_back(s);
    }
    j["suites"] = arr;
    out << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "suite,check,passed,max_error\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out << r.suite << "," << csv_escape(c.name) << "," << (c.passed ? "true" : "false") << ","
            << format_err(c.max_error) << "\n";
  } else {
    for (const auto& r : reports)
      for (const auto& c : r.checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << r.suite << ": " << c.name << "  max_err=" << format_err(c.max_error);
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
      }
    out << "verify " << suite << ": " << passed << "/" << total << " checks passed, max error "
        << format_err(worst) << " at " << ctx.precision_bits << " bits\n";
  }
  return ok ? kOk : kVerifyFailed;
}

void run_poly(const std::vector<BigRational>& ms, Format fmt, std::ostream& out) {
  json arr = json::array();
  if (fmt == Format::Csv) out << "m,power,coefficient\n";
  for (const auto& mq : ms) {
    long m = mq.get_num().get_si();
    RationalPolynomial p = zeta_zn_closed_poly(m);
    if (fmt == Format::Plain) {
      out << "P_" << m << "(n) = " << p.to_string() << "\n";
    } else if (fmt == Format::Csv) {
      for (long i = 0; i <= p.degree(); ++i) out << m << "," << i << "," << to_string(p.coeff(i)) << "\n";
    } else {
      json coeffs = json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
      arr.push_back({{"m", m}, {"polynomial", p.to_string()}, {"denominator", p.denominator().get_str()},
                     {"coefficients", coeffs}});
    }
  }
  if (fmt == Format::Json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"High-precision spectral zeta functions of Z and Z/nZ", "zetakit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--precision-bits", g.precision_bits, "Working precision in bits (default 256)")
      ->each([&](const std::string&) { g.bits_given = true; });
  app.add_option("--tol", g.tol, "Target absolute tolerance (default 1e-30)");
  app.add_option("--max-terms", g.max_terms, "Cap on series, product and quadrature terms");
  app.add_option("--format", g.format, "Output format: plain, json, csv");

  std::string target, s_text, im_text, n_text, m_text, k_text, method = "auto";
  auto add_point_options = [&](CLI::App* sub) {
    sub->add_option("--s", s_text, "Argument s");
    sub->add_option("--im", im_text, "Imaginary part of s");
    sub->add_option("--n", n_text, "Circle size n");
    sub->add_option("--m", m_text, "Index m");
    sub->add_option("--k", k_text, "Index k");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one function value")->fallthrough();
  eval->add_option("target", target, "zeta-z, z, zeta-zn, zeta-z-deriv, catalan, bernoulli, riemann-zeta")->required();
  add_point_options(eval);
  eval->add_option("--method", method, "zeta-z route: auto, closed, product, mellin");

  std::string suite = "all";
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Run property suites")->fallthrough();
  verify->add_option("suite", suite, "all, numerics, zeta-z, zeta-zn, spheres, asymptotics");
  verify->add_flag("--corrupt-poly", corrupt, "Test mode: perturb a closed polynomial")->group("");

  auto* sweep = app.add_subcommand("sweep", "Evaluate over a range")->fallthrough();
  sweep->add_option("target", target, "zeta-z, z, zeta-zn, zeta-zn-direct, sine-sum, zeta-z-deriv, riemann-zeta, catalan, volumes")
      ->required();
  add_point_options(sweep);
  sweep->add_option("--method", method, "zeta-z route: auto, closed, product, mellin");

  std::string extract_s = "0";
  long n_min = kExtractDefaultNMin, n_max = kExtractDefaultNMax;
  int points = kExtractDefaultPoints;
  auto* extract = app.add_subcommand("extract", "Recover zeta(s), s <= 0, from sine-sum asymptotics")->fallthrough();
  extract->add_option("--s", extract_s, "Argument s <= 0");
  extract->add_option("--n-min", n_min, "Smallest n in the fit grid");
  extract->add_option("--n-max", n_max, "Largest n in the fit grid");
  extract->add_option("--points", points, "Number of log-spaced grid points");

  std::string vol_n = "0:10", group;
  auto* volumes = app.add_subcommand("volumes", "Sphere volumes by both routes, or the SL/Sp zeta products")
                      ->fallthrough();
  volumes->add_option("--n", vol_n, "Dimension or range");
  volumes->add_option("--group", group, "SL or Sp: print the zeta product instead");

  std::string poly_m = "1:2";
  auto* poly = app.add_subcommand("poly", "Closed polynomials for zeta_{Z/nZ}(m)")->fallthrough();
  poly->add_option("--m", poly_m, "m or range of m (1..8)");

  std::ostringstream buffer;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    }
    const Format fmt = parse_format(g.format);
    const PrecisionContext ctx = make_context(g);
    int code = kOk;

    auto read_point = [&](Point& p) {
      if (!s_text.empty()) p.s = parse_number("s", s_text);
      if (!im_text.empty()) p.im = parse_number("im", im_text);
      if (!n_text.empty()) p.n = parse_integer("n", n_text);
      if (!m_text.empty()) p.m = parse_integer("m", m_text);
      if (!k_text.empty()) p.k = parse_integer("k", k_text);
      p.method = method;
    };

    if (eval->parsed()) {
      if (std::find(eval_targets().begin(), eval_targets().end(), target) == eval_targets().end())
        throw UsageError("unknown eval target '" + target + "'");
      Point p;
      read_point(p);
      write_records({evaluate(target, p, ctx)}, fmt, false, buffer);
    } else if (verify->parsed()) {
      code = run_verify(suite, corrupt, ctx, fmt, buffer);
    } else if (sweep->parsed()) {
      std::vector<Record> rows;
      if (target == "volumes") {
        for (const auto& nq : parse_range("n", n_text.empty() ? vol_n : n_text, true)) {
          long n = nq.get_num().get_si();
          Record r;
          fill_value(r, sphere_volume_gamma(n, ctx), ctx);
          r.inputs.emplace_back("n", std::to_string(n));
          rows.push_back(std::move(r));
        }
      } else if (target == "catalan") {
        for (const auto& mq : parse_range("m", m_text, true)) {
          Point p;
          p.m = mq.get_num().get_si();
          rows.push_back(evaluate(target, p, ctx));
        }
      } else {
        static const std::vector<std::string> swept = {"zeta-z", "z", "zeta-zn", "zeta-zn-direct", "sine-sum", "zeta-z-deriv",
                                                       "riemann-zeta"};
        if (std::find(swept.begin(), swept.end(), target) == swept.end())
          throw UsageError("unknown sweep target '" + target + "'");
        if (s_text.empty()) throw UsageError(target + " sweep requires --s");
        bool needs_n = target.rfind("zeta-zn", 0) == 0 || target == "sine-sum";
        if (needs_n && n_text.empty()) throw UsageError(target + " sweep requires --n");
        std::vector<BigRational> ns = needs_n ? parse_range("n", n_text, true) : std::vector<BigRational>{0};
        std::vector<BigRational> ss = parse_range("s", s_text, false);
        for (const auto& nq : ns)
          for (const auto& sq : ss) {
            Point p;
            p.s = sq;
            if (!im_text.empty()) p.im = parse_number("im", im_text);
            if (needs_n) p.n = nq.get_num().get_si();
            p.method = method;
            try {
              rows.push_back(evaluate(target, p, ctx));
            } catch (const PoleError& e) {
              rows.push_back(pole_record(target, p, e));
            } catch (const NeedsLimitInterpretation& e) {
              rows.push_back(pole_record(target, p, e));
            }
          }
      }
      write_records(rows, fmt, true, buffer);
    } else if (extract->parsed()) {
      BigRational sq = parse_number("s", extract_s);
      PrecisionScope scope(ctx.work_bits());
      ZetaExtraction e = extract_zeta(to_real(sq), n_min, n_max, ctx, points);
      Record r;
      r.inputs = {{"s", to_string(sq)}, {"n_min", std::to_string(n_min)}, {"n_max", std::to_string(n_max)}};
      r.extras = {{"reference", format_real(e.reference, ctx)}, {"abs_error", format_err(detail::to_err(e.abs_error))}};
      r.value = format_real(e.estimate, ctx);
      r.err = detail::to_err(e.abs_error);
      r.method = "asymptotic-fit";
      write_records({r}, fmt, false, buffer);
    } else if (volumes->parsed()) {
      std::vector<Record> rows;
      for (const auto& nq : parse_range("n", vol_n, true)) {
        long n = nq.get_num().get_si();
        Record r;
        if (!group.empty()) {
          Group gr;
          if (group == "SL")
            gr = Group::SL;
          else if (group == "Sp")
            gr = Group::Sp;
          else
            throw UsageError("unknown --group '" + group + "' (SL, Sp)");
          fill_value(r, arithmetic_volume_demo(gr, n, ctx), ctx);
          r.inputs = {{"group", group}, {"n", std::to_string(n)}};
        } else {
          EvalResult a = sphere_volume_gamma(n, ctx);
          EvalResult b = sphere_volume_zproduct(n, ctx);
          fill_value(r, a, ctx);
          r.err = std::max(a.err, b.err) + detail::to_err(abs(a.value.re - b.value.re));
          r.inputs = {{"n", std::to_string(n)}};
          r.extras = {{"zproduct", format_real(b.value.re, ctx)}};
        }
        rows.push_back(std::move(r));
      }
      write_records(rows, fmt, rows.size() > 1, buffer);
    } else if (poly->parsed()) {
      auto ms = parse_range("m", poly_m, true);
      for (const auto& m : ms)
        if (m < 1 || m > detail::kClosedPolyCap)
          throw UsageError("--m must lie in 1.." + std::to_string(detail::kClosedPolyCap));
      run_poly(ms, fmt, buffer);
    }

    out << buffer.str();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << format_err(secs) << " s\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kDomain;
  } catch (const ZetaError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace zetakit::cli
