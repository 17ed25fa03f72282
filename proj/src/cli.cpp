#include "filtint/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "filtint/errors.hpp"
#include "filtint/families.hpp"
#include "filtint/gegenbauer_x.hpp"
#include "filtint/integrals.hpp"
#include "filtint/quadrature.hpp"

namespace filtint {

namespace {

constexpr double kOracleRelTol = 1e-10;
constexpr int kOracleMaxOrder = 20;

struct OutputRecord {
  std::string family;
  int n = 0;
  std::optional<std::string> a;
  std::string exact_coefficient;
  std::string constant_tag;
  std::optional<double> numeric_value;
  std::optional<std::string> verdict;
};

std::string record_tag(ConstantTag tag) {
  switch (tag) {
    case ConstantTag::One: return "ONE";
    case ConstantTag::Pi: return "PI";
    case ConstantTag::SqrtPi: return "SQRT_PI";
    case ConstantTag::Mu0: return "MU0";
  }
  throw InvalidParameter("unknown constant tag");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << "family,n,a,exact_coefficient,constant_tag,numeric_value,verdict\n";
  for (const auto& r : records) {
    out << r.family << ',' << r.n << ',' << r.a.value_or("") << ',' << r.exact_coefficient
        << ',' << r.constant_tag << ',' << (r.numeric_value ? fmt_double(*r.numeric_value) : "")
        << ',' << r.verdict.value_or("") << '\n';
  }
}

nlohmann::ordered_json record_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["n"] = r.n;
  if (r.a) j["a"] = *r.a;
  j["exact_coefficient"] = r.exact_coefficient;
  j["constant_tag"] = r.constant_tag;
  if (r.numeric_value) j["numeric_value"] = *r.numeric_value;
  if (r.verdict) j["verdict"] = *r.verdict;
  return j;
}

void write_json(std::ostream& out, const nlohmann::ordered_json& query,
                const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json j;
  j["query"] = query;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) j["records"].push_back(record_json(r));
  out << j.dump(2) << '\n';
}

/// Accepts "p" or "p/q" with q > 0 and gcd(p, q) = 1, exactly as written.
Rational parse_param(const std::string& text) {
  Integer num, den(1);
  try {
    auto slash = text.find('/');
    num = Integer(text.substr(0, slash));
    if (slash != std::string::npos) den = Integer(text.substr(slash + 1));
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("could not parse rational: " + text);
  }
  if (den <= 0)
    throw InvalidParameter("parameter denominator must be positive: " + text);
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1)
    throw InvalidParameter("parameter must be in lowest terms: " + text);
  return Rational(num, den);
}

Family make_family(const std::string& name, const std::string& a_text) {
  FamilyKind kind = parse_family(name);
  if (kind == FamilyKind::Gegenbauer) {
    if (a_text.empty())
      throw InvalidParameter("gegenbauer requires --a with a > -1/2 and a != 0");
    return Family(kind, parse_param(a_text));
  }
  if (!a_text.empty()) throw InvalidParameter("--a only applies to gegenbauer");
  return Family(kind);
}

OutputRecord make_record(const Family& family, int n, const IntegralValue& v) {
  OutputRecord r;
  r.family = family_name(family.kind());
  r.n = n;
  if (family.has_param()) r.a = family.param().to_string();
  r.exact_coefficient = v.coefficient().to_string();
  r.constant_tag = record_tag(v.tag());
  return r;
}

std::string joined_coefficients(const std::vector<Rational>& cs) {
  if (cs.empty()) return "0/1";
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += cs[i].to_string();
  }
  return s;
}

int rule_size_for(int n) { return std::min(std::max(n + 10, 12), 64); }

// ---- verify machinery ----------------------------------------------------

struct VerifyState {
  std::ostream& out;
  bool ok = true;
  long checks = 0;

  void print(const VerificationReport& rep) {
    checks += static_cast<long>(rep.items.size());
    bool good = rep.all_pass();
    if (good) {
      out << "ok: " << rep.subject << " (" << rep.items.size() << " checks)\n";
      return;
    }
    ok = false;
    for (const auto& it : rep.items)
      if (!it.pass)
        out << "FAIL: " << rep.subject << ": " << it.name << ": expected " << it.expected
            << ", got " << it.actual << '\n';
  }
};

void merge_into(VerificationReport& acc, const VerificationReport& sub,
                const std::string& prefix) {
  for (const auto& it : sub.items)
    acc.items.push_back({prefix + it.name, it.expected, it.actual, it.pass});
}

VerificationReport numeric_oracle_report(const Family& family, int n_max) {
  VerificationReport rep;
  rep.subject = family.to_string() + " numeric oracle";
  for (int n = 0; n <= std::min(n_max, kOracleMaxOrder); ++n) {
    double truth = numeric_value(closed_form(family, n), family);
    double approx = numeric_filter_integral(family, n, rule_size_for(n));
    double rel = std::abs(approx - truth) / std::max(1.0, std::abs(truth));
    rep.items.push_back({"n=" + std::to_string(n) + ": quadrature vs exact value",
                         "relative error <= 1e-10", fmt_double(rel), rel <= kOracleRelTol});
  }
  return rep;
}

VerificationReport xn_routes_report(int n_max) {
  VerificationReport rep;
  rep.subject = "X polynomial four-route agreement";
  for (int n = 0; n <= n_max; ++n) {
    std::string tag = "n=" + std::to_string(n) + ": ";
    Poly closed = xn_closed(n);
    rep.add(tag + "first recurrence vs closed product form", closed.to_string("a"),
            xn_recurrence_first(n).to_string("a"));
    rep.add(tag + "second recurrence vs closed product form", closed.to_string("a"),
            xn_recurrence_second(n).to_string("a"));
    rep.add(tag + "binomial sum vs closed product form", closed.to_string("a"),
            xn_sum(n).to_string("a"));
    std::vector<Rational> rho = xn_coefficients_rho(n);
    rep.add(tag + "Stirling coefficient formula vs closed product form",
            joined_coefficients(closed.coefficients()), joined_coefficients(rho));
    bool positive_integers = true;
    for (std::size_t i = 0; i < rho.size(); ++i)
      if (!rho[i].is_integer() || rho[i].sign() <= 0) positive_integers = false;
    rep.items.push_back({tag + "coefficients are positive integers", "true",
                         positive_integers ? "true" : "false", positive_integers});
  }
  return rep;
}

VerificationReport congruence_report(int q_max) {
  VerificationReport rep;
  rep.subject = "prime-index congruence x^q - x";
  for (std::uint64_t q = 2; q <= static_cast<std::uint64_t>(q_max); ++q) {
    if (!is_prime(q)) continue;
    PrimeModulus mod(q);
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(q) + 1, 0);
    expected[1] = q - 1;
    expected.back() = 1;
    rep.add("q=" + std::to_string(q), PolyModP(expected, mod).to_string("a"),
            xn_mod_prime(static_cast<int>(q), mod).to_string("a"));
  }
  return rep;
}

void verify_plain_family(VerifyState& st, FamilyKind kind, int n_max) {
  Family fam(kind);
  st.print(verify_family(fam, n_max));
  st.print(numeric_oracle_report(fam, n_max));
  if (kind == FamilyKind::Laguerre) {
    VerificationReport rep;
    rep.subject = "laguerre identities";
    for (int n = 1; n <= n_max; ++n)
      merge_into(rep, laguerre_identities(n), "n=" + std::to_string(n) + ": ");
    st.print(rep);
  }
}

void verify_gegenbauer(VerifyState& st, std::ostream& out, int n_max) {
  const std::vector<Rational> params = {Rational(1, 2), Rational(1), Rational(3, 2),
                                        Rational(2), Rational(7, 3)};
  for (const auto& a : params) {
    Family fam(FamilyKind::Gegenbauer, a);
    st.print(verify_family(fam, n_max));
    st.print(numeric_oracle_report(fam, n_max));
  }

  VerificationReport sym;
  sym.subject = "gegenbauer with symbolic parameter";
  for (int n = 0; n <= std::min(n_max, 16); ++n)
    merge_into(sym, verify_gegenbauer_symbolic(n), "n=" + std::to_string(n) + ": ");
  st.print(sym);

  st.print(xn_routes_report(n_max));

  VerificationReport props;
  props.subject = "X polynomial properties";
  for (int n = 1; n <= n_max; ++n)
    merge_into(props, xn_properties(n, n <= 24), "n=" + std::to_string(n) + ": ");
  st.print(props);

  VerificationReport wz;
  wz.subject = "telescoping certificate";
  for (int n = 1; n <= n_max; ++n)
    merge_into(wz, wz_check(n), "n=" + std::to_string(n) + ": ");
  st.print(wz);

  st.print(congruence_report(97));

  for (int n = 1; n <= std::min(n_max, 12); ++n) {
    InterlacingResult res = interlacing_check(n);
    out << "info: interlacing of X_" << n << " and X_" << n + 1 << " roots: "
        << (res.interlaced ? "true" : "false") << " (informational)\n";
  }
}

// ---- subcommands ----------------------------------------------------------

int cmd_gen(std::ostream& out, const std::string& family, int n, const std::string& a) {
  Family fam = make_family(family, a);
  PolyFamily ctx(fam);
  out << joined_coefficients(ctx.generate(n).coefficients()) << '\n';
  return 0;
}

int cmd_integral(std::ostream& out, std::ostream& err, const std::string& family, int n,
                 const std::string& a, const std::string& mode, int points) {
  Family fam = make_family(family, a);
  IntegralValue exact = closed_form(fam, n);
  OutputRecord rec = make_record(fam, n, exact);
  bool mismatch = false;
  if (mode == "numeric") {
    int m = points > 0 ? points : rule_size_for(n);
    double approx = numeric_filter_integral(fam, n, m);
    double truth = numeric_value(exact, fam);
    rec.numeric_value = approx;
    bool good = std::abs(approx - truth) <= kOracleRelTol * std::max(1.0, std::abs(truth));
    rec.verdict = good ? "ok" : "mismatch";
    mismatch = !good;
  }
  write_csv(out, {rec});
  if (mismatch) {
    err << "numeric quadrature disagrees with the exact filter integral for "
        << fam.to_string() << " at n=" << n << '\n';
    return 1;
  }
  return 0;
}

int cmd_table(std::ostream& out, const std::string& family, int n_from, int n_to,
              const std::string& a, const std::string& format) {
  if (n_from > n_to) throw InvalidParameter("--n-from must be <= --n-to");
  Family fam = make_family(family, a);
  std::vector<OutputRecord> records;
  records.reserve(static_cast<std::size_t>(n_to - n_from) + 1);
  for (int n = n_from; n <= n_to; ++n)
    records.push_back(make_record(fam, n, closed_form(fam, n)));
  if (format == "csv") {
    write_csv(out, records);
  } else {
    nlohmann::ordered_json query;
    query["command"] = "table";
    query["family"] = family;
    if (!a.empty()) query["a"] = a;
    query["n_from"] = n_from;
    query["n_to"] = n_to;
    query["format"] = format;
    write_json(out, query, records);
  }
  return 0;
}

int cmd_xn(std::ostream& out, int n, bool coeffs, bool zeros, bool interlace,
           std::uint64_t modq) {
  if (zeros) {
    if (n < 1) throw InvalidParameter("--zeros needs --n >= 1");
    for (const auto& box : isolate_roots(xn_closed(n)))
      out << '(' << box.lo.to_string() << ", " << box.hi.to_string() << "]\n";
    return 0;
  }
  if (interlace) {
    if (n < 1) throw InvalidParameter("--interlace needs --n >= 1");
    InterlacingResult res = interlacing_check(n);
    out << "interlacing of X_" << n << " and X_" << n + 1 << " roots: "
        << (res.interlaced ? "true" : "false") << '\n';
    return 0;
  }
  if (modq != 0) {
    PrimeModulus mod(modq);
    PolyModP reduced = xn_mod_prime(n, mod);
    std::string s;
    for (int i = 0; i <= std::max(reduced.degree(), 0); ++i) {
      if (i) s += ", ";
      s += std::to_string(reduced.coeff(i));
    }
    out << s << '\n';
    return 0;
  }
  (void)coeffs;  // the default view
  out << joined_coefficients(xn_closed(n).coefficients()) << '\n';
  return 0;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& family, int n_max) {
  VerifyState st{out};
  if (family.empty() || family == "legendre") verify_plain_family(st, FamilyKind::Legendre, n_max);
  if (family.empty() || family == "hermite") verify_plain_family(st, FamilyKind::Hermite, n_max);
  if (family.empty() || family == "chebyshev_t")
    verify_plain_family(st, FamilyKind::ChebyshevT, n_max);
  if (family.empty() || family == "chebyshev_u")
    verify_plain_family(st, FamilyKind::ChebyshevU, n_max);
  if (family.empty() || family == "laguerre") verify_plain_family(st, FamilyKind::Laguerre, n_max);
  if (family.empty() || family == "gegenbauer") verify_gegenbauer(st, out, n_max);
  if (!st.ok) {
    err << "verification failed; see FAIL lines above\n";
    return 1;
  }
  out << "all checks passed (" << st.checks << " checks)\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact filter integrals of classical orthogonal polynomial families"};
  app.name("filtint");
  app.require_subcommand(1);

  long seed = 0;  // reserved, accepted and ignored

  std::string g_family, g_a;
  int g_n = 0;
  auto* gen = app.add_subcommand("gen", "Print the exact coefficients of p_n, ascending");
  gen->add_option("--family", g_family, "family name")->required();
  gen->add_option("--n", g_n, "polynomial order")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--a", g_a, "gegenbauer parameter p/q in lowest terms");
  gen->add_option("--seed", seed, "ignored (reserved)");

  std::string i_family, i_a, i_mode = "exact";
  int i_n = 0, i_points = 0;
  auto* integral = app.add_subcommand(
      "integral", "Exact filter integral of order n (closed form; `verify` cross-checks)");
  integral->add_option("--family", i_family, "family name")->required();
  integral->add_option("--n", i_n, "integral order")->required()->check(CLI::NonNegativeNumber);
  integral->add_option("--a", i_a, "gegenbauer parameter p/q in lowest terms");
  integral->add_option("--mode", i_mode, "exact or numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  integral->add_option("--points", i_points, "quadrature rule size (numeric mode)")
      ->check(CLI::Range(1, 64));
  integral->add_option("--seed", seed, "ignored (reserved)");

  std::string t_family, t_a, t_format;
  int t_from = 0, t_to = 0;
  auto* table = app.add_subcommand("table", "One record per n in [n-from, n-to]");
  table->add_option("--family", t_family, "family name")->required();
  table->add_option("--n-from", t_from, "first order")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--n-to", t_to, "last order")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--a", t_a, "gegenbauer parameter p/q in lowest terms");
  table->add_option("--format", t_format, "csv or json")
      ->required()
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--seed", seed, "ignored (reserved)");

  int x_n = 0;
  bool x_coeffs = false, x_zeros = false, x_interlace = false;
  std::uint64_t x_modq = 0;
  auto* xn = app.add_subcommand("xn", "Data about the X polynomials");
  xn->add_option("--n", x_n, "index")->required()->check(CLI::NonNegativeNumber);
  auto* fc = xn->add_flag("--coeffs", x_coeffs, "exact coefficients, ascending (default)");
  auto* fz = xn->add_flag("--zeros", x_zeros, "isolating intervals for the real roots");
  auto* fi = xn->add_flag("--interlace", x_interlace, "root interlacing with the next index");
  auto* fm = xn->add_option("--modq", x_modq, "coefficients reduced mod a prime q");
  fc->excludes(fz)->excludes(fi)->excludes(fm);
  fz->excludes(fi)->excludes(fm);
  fi->excludes(fm);
  xn->add_option("--seed", seed, "ignored (reserved)");

  std::string v_family;
  int v_nmax = 20;
  bool v_all = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  auto* vf = verify->add_option("--family", v_family, "restrict to one family");
  auto* va = verify->add_flag("--all", v_all, "all families (default)");
  vf->excludes(va);
  verify->add_option("--n-max", v_nmax, "largest order checked")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "ignored (reserved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(out, g_family, g_n, g_a);
    if (integral->parsed()) return cmd_integral(out, err, i_family, i_n, i_a, i_mode, i_points);
    if (table->parsed()) return cmd_table(out, t_family, t_from, t_to, t_a, t_format);
    if (xn->parsed()) return cmd_xn(out, x_n, x_coeffs, x_zeros, x_interlace, x_modq);
    if (verify->parsed()) {
      if (!v_family.empty()) parse_family(v_family);  // reject unknown names early
      return cmd_verify(out, err, v_family, v_nmax);
    }
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace filtint
