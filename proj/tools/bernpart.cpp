// bernpart: exact Bernoulli partitions, their asymptotics, and the verifiers
// behind every table the library reproduces.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 internal-consistency error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bernpart/bernpart.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace bernpart;

namespace {

struct GlobalOptions {
  unsigned precision = 60;
  unsigned long max = 200;  // safety cap on m/n
  bool allow_large = false;
  std::string format = "text";
};

struct Range {
  unsigned long lo = 0;
  unsigned long hi = 0;
};

Range parse_range(const std::string& s) {
  auto pos = s.find("..");
  Range r;
  if (pos == std::string::npos) {
    r.lo = r.hi = std::stoul(s);
  } else {
    r.lo = std::stoul(s.substr(0, pos));
    r.hi = std::stoul(s.substr(pos + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + s);
  return r;
}

void enforce_cap(unsigned long value, const GlobalOptions& opt, const std::string& what) {
  if (value > opt.max && !opt.allow_large)
    throw std::invalid_argument(what + " = " + std::to_string(value) + " exceeds --max " +
                                std::to_string(opt.max) + "; pass --allow-large to override");
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["check"] = r.check;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["pass"] = r.pass;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residual"] = r.residual;
  return j;
}

json make_document(const std::string& command, json parameters, json results,
                   const std::vector<VerificationReport>& reports) {
  json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["results"] = std::move(results);
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
  return doc;
}

void print_reports_text(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.check;
    for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
    std::cout << "  residual=" << r.residual << "\n";
  }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------------------
// bernoulli

int cmd_bernoulli(unsigned long max_m, const GlobalOptions& opt) {
  enforce_cap(max_m, opt, "max-m");
  json rows = json::array();
  for (unsigned long m = 1; m <= max_m; ++m)
    rows.push_back({{"m", m}, {"B_2m", to_fraction_string(bernoulli(2 * m))}});
  json doc = make_document("bernoulli", {{"max_m", max_m}, {"format", opt.format}},
                           {{"rows", rows}}, {});
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "m,B_2m\n";
    for (const auto& row : doc["results"]["rows"])
      std::cout << row["m"].get<unsigned long>() << ","
                << csv_quote(row["B_2m"].get<std::string>()) << "\n";
  } else {
    for (const auto& row : doc["results"]["rows"])
      std::cout << row["m"].get<unsigned long>() << "  " << row["B_2m"].get<std::string>() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// partition

int cmd_partition(const Range& range, const GlobalOptions& opt) {
  if (range.lo < 2) throw std::invalid_argument("partition rows start at m = 2");
  enforce_cap(range.hi, opt, "m");
  json rows = json::array();
  for (unsigned long m = range.lo; m <= range.hi; ++m) {
    PartitionRow row = partition_row(m);
    json terms = json::array();
    for (const auto& [n, b] : row.terms) terms.push_back(to_fraction_string(b));
    rows.push_back({{"m", m}, {"terms", terms}, {"sum", to_fraction_string(row.certified_sum)}});
  }
  json doc = make_document(
      "partition",
      {{"m_lo", range.lo}, {"m_hi", range.hi}, {"format", opt.format}}, {{"rows", rows}}, {});
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "m,n,b_m_n,B_2m_abs\n";
    for (const auto& row : doc["results"]["rows"]) {
      unsigned long n = 2;
      for (const auto& t : row["terms"])
        std::cout << row["m"].get<unsigned long>() << "," << n++ << ","
                  << csv_quote(t.get<std::string>()) << ","
                  << csv_quote(row["sum"].get<std::string>()) << "\n";
    }
  } else {
    for (const auto& row : doc["results"]["rows"]) {
      std::cout << "|B_" << 2 * row["m"].get<unsigned long>() << "| = ";
      bool first = true;
      for (const auto& t : row["terms"]) {
        if (!first) std::cout << " + ";
        std::cout << t.get<std::string>();
        first = false;
      }
      std::cout << " = " << row["sum"].get<std::string>() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport sweep_report(const std::string& check, std::map<std::string, std::string> params,
                                bool pass, const std::string& detail) {
  VerificationReport r;
  r.check = check;
  r.params = std::move(params);
  r.pass = pass;
  r.lhs = "";
  r.rhs = "";
  r.residual = pass ? "0" : detail;
  if (!pass && !detail.empty()) r.params["first_failure"] = detail;
  return r;
}

std::vector<VerificationReport> run_check(const std::string& check, unsigned long max_n,
                                          unsigned long max_m, unsigned long big_n,
                                          unsigned long small_n, const std::string& x_str,
                                          unsigned long terms, const GlobalOptions& opt) {
  std::vector<VerificationReport> out;
  if (check == "rid2") {
    bool all = true;
    std::string detail;
    for (unsigned long n = 1; n <= max_n && all; ++n) {
      VerificationReport r = verify_rid2(n);
      if (!r.pass) {
        all = false;
        detail = "n=" + std::to_string(n) + " lhs=" + r.lhs;
      }
    }
    out.push_back(sweep_report("rid2", {{"n", "1.." + std::to_string(max_n)}}, all, detail));
  } else if (check == "partition-sum") {
    bool all = true;
    std::string detail;
    for (unsigned long m = 2; m <= max_m && all; ++m) {
      PartitionRow row = partition_row(m);  // throws on certification failure
      if (row.certified_sum != bernoulli_abs_even(m)) {
        all = false;
        detail = "m=" + std::to_string(m);
      }
    }
    out.push_back(sweep_report("partition-sum", {{"m", "2.." + std::to_string(max_m)}}, all, detail));
  } else if (check == "exact-ratio") {
    bool all = true;
    std::string detail;
    for (unsigned long m = 2; m <= max_m && all; ++m)
      for (unsigned long n = 2; n <= m && all; ++n) {
        VerificationReport r = verify_exact_ratio(m, n);
        if (!r.pass) {
          all = false;
          detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
      }
    out.push_back(sweep_report("exact-ratio",
                               {{"m", "2.." + std::to_string(max_m)}, {"n", "2..m"}}, all, detail));
  } else if (check == "difference-eq") {
    out.push_back(verify_difference_equation(big_n));
  } else if (check == "bessel-poly") {
    out.push_back(verify_bessel_closed_form(big_n));
  } else if (check == "footnote") {
    out.push_back(verify_footnote_form(big_n));
  } else if (check == "sum-unity") {
    out.push_back(sum_to_unity(big_n, opt.precision));
  } else if (check == "sinc-identity") {
    out.push_back(verify_sinc_identity({rational_from_string(x_str), terms, opt.precision}));
  } else if (check == "sinc-limit") {
    out.push_back(verify_sinc_limit(small_n, opt.precision, rational_from_string(x_str)));
  } else if (check == "monotone") {
    // a(n) strictly decreasing in n.
    bool all = true;
    std::string detail;
    {
      BigFloat prev = a_ratio(2, opt.precision);
      for (unsigned long n = 3; n <= max_m && all; ++n) {
        BigFloat cur = a_ratio(n, opt.precision);
        if (!(cur.value() < prev.value())) {
          all = false;
          detail = "a(n) not decreasing at n=" + std::to_string(n);
        }
        prev = cur;
      }
    }
    // |b_m(n)/|B_2m| - a(n)| strictly decreasing in m for small n.
    const unsigned work = opt.precision + guard_digits(opt.precision);
    ScopedPrecision scope(work);
    for (unsigned long n = 2; n <= small_n && all; ++n) {
      MpFloat a = a_ratio(n, opt.precision).value();
      MpFloat prev_gap = -1;
      for (unsigned long m = n; m <= max_m && all; ++m) {
        PartitionRow row = partition_row(m);
        MpFloat gap = abs(MpFloat(Rational(row.terms[n - 2].second / row.certified_sum)) - a);
        if (m > n && !(gap < prev_gap)) {
          all = false;
          detail = "ratio gap not decreasing at n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
        }
        prev_gap = gap;
      }
    }
    out.push_back(sweep_report(
        "monotone", {{"max_m", std::to_string(max_m)}, {"max_n", std::to_string(small_n)}}, all,
        detail));
  } else {
    throw std::invalid_argument("unknown check: " + check);
  }
  return out;
}

int cmd_verify(const std::string& check, unsigned long max_n, unsigned long max_m,
               unsigned long big_n, unsigned long small_n, const std::string& x_str,
               unsigned long terms, const GlobalOptions& opt) {
  std::vector<VerificationReport> reports =
      run_check(check, max_n, max_m, big_n, small_n, x_str, terms, opt);
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  json doc = make_document("verify",
                           {{"check", check}, {"precision", opt.precision}, {"format", opt.format}},
                           {{"all_pass", all}}, reports);
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "check,pass,residual\n";
    for (const auto& r : reports)
      std::cout << r.check << "," << (r.pass ? "true" : "false") << "," << csv_quote(r.residual)
                << "\n";
  } else {
    print_reports_text(reports);
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// asymptotics

int cmd_asymptotics(const Range& range, const GlobalOptions& opt) {
  if (range.lo < 2) throw std::invalid_argument("asymptotic ratios start at n = 2");
  enforce_cap(range.hi, opt, "n");
  PnFamily fam = pn_polynomials(range.hi);
  json rows = json::array();
  for (unsigned long n = range.lo; n <= range.hi; ++n) {
    BigFloat a = a_ratio(n, opt.precision);
    rows.push_back({{"n", n},
                    {"a", a.str()},
                    {"a_decimal", a.fixed()},
                    {"p_n", fam.at(n).str() + " at x=pi^2"}});
  }
  json doc = make_document(
      "asymptotics",
      {{"n_lo", range.lo}, {"n_hi", range.hi}, {"precision", opt.precision}, {"format", opt.format}},
      {{"rows", rows}}, {});
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,a_n,p_n\n";
    for (const auto& row : doc["results"]["rows"])
      std::cout << row["n"].get<unsigned long>() << ","
                << csv_quote(row["a"].get<std::string>()) << ","
                << csv_quote(row["p_n"].get<std::string>()) << "\n";
  } else {
    for (const auto& row : doc["results"]["rows"])
      std::cout << row["n"].get<unsigned long>() << "  " << row["a_decimal"].get<std::string>()
                << "  p_n(x) = " << row["p_n"].get<std::string>() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// approximant

int cmd_approximant(unsigned long m, Range n_range, const GlobalOptions& opt) {
  if (m < 2) throw std::invalid_argument("approximant needs m >= 2");
  enforce_cap(m, opt, "m");
  if (n_range.lo == 0) n_range = {2, m};
  if (n_range.lo < 2 || n_range.hi > m)
    throw std::invalid_argument("approximant needs 2 <= n <= m");
  PartitionRow row = partition_row(m);
  const unsigned work = opt.precision + guard_digits(opt.precision);
  json rows = json::array();
  for (unsigned long n = n_range.lo; n <= n_range.hi; ++n) {
    const Rational& exact = row.terms[n - 2].second;
    BigFloat apx = approximant(m, n, opt.precision);
    ScopedPrecision scope(work);
    MpFloat exact_f(exact);
    MpFloat rel = abs(apx.value() - exact_f) / exact_f;
    rows.push_back({{"m", m},
                    {"n", n},
                    {"exact", to_fraction_string(exact)},
                    {"exact_decimal", detail::sci_string(exact_f, 6)},
                    {"approximant", detail::sci_string(apx.value(), 6)},
                    {"approximant_full", apx.str()},
                    {"relative_error", detail::sci_string(rel, 3)}});
  }
  json doc = make_document(
      "approximant",
      {{"m", m}, {"n_lo", n_range.lo}, {"n_hi", n_range.hi}, {"precision", opt.precision},
       {"format", opt.format}},
      {{"rows", rows}}, {});
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "m,n,exact,exact_decimal,approximant,relative_error\n";
    for (const auto& r : doc["results"]["rows"])
      std::cout << r["m"].get<unsigned long>() << "," << r["n"].get<unsigned long>() << ","
                << csv_quote(r["exact"].get<std::string>()) << ","
                << r["exact_decimal"].get<std::string>() << ","
                << r["approximant"].get<std::string>() << ","
                << r["relative_error"].get<std::string>() << "\n";
  } else {
    std::cout << "m, n  exact  decimal  approximant  rel.error\n";
    for (const auto& r : doc["results"]["rows"])
      std::cout << r["m"].get<unsigned long>() << ", " << r["n"].get<unsigned long>() << "  "
                << r["exact"].get<std::string>() << "  " << r["exact_decimal"].get<std::string>()
                << "  ~ " << r["approximant"].get<std::string>() << "  "
                << r["relative_error"].get<std::string>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli partitions: exact partitions of |B_2m|, their asymptotics, and verifiers"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  if (const char* env = std::getenv("BERNPART_PRECISION")) {
    try {
      opt.precision = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "invalid BERNPART_PRECISION: " << env << "\n";
      return 2;
    }
  }
  app.add_option("--precision", opt.precision, "working precision in significant digits")
      ->capture_default_str();
  app.add_option("--max", opt.max, "safety cap on m/n")->capture_default_str();
  app.add_flag("--allow-large", opt.allow_large, "lift the safety cap");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  unsigned long max_m_opt = 10;
  auto* sub_bernoulli = app.add_subcommand("bernoulli", "table of B_2m as exact fractions");
  sub_bernoulli->fallthrough();
  sub_bernoulli->add_option("--max-m", max_m_opt, "largest m")->required();

  std::string range_str;
  auto* sub_partition = app.add_subcommand("partition", "Bernoulli partitions of |B_2m|");
  sub_partition->fallthrough();
  sub_partition->add_option("range", range_str, "row range, e.g. 2..10 or 6")->required();

  std::string check;
  unsigned long v_max_n = 100, v_max_m = 40, v_big_n = 30, v_small_n = 40, v_terms = 100000;
  std::string v_x = "1/2";
  auto* sub_verify = app.add_subcommand("verify", "run a verifier");
  sub_verify->fallthrough();
  sub_verify
      ->add_option("check", check,
                   "rid2|partition-sum|exact-ratio|difference-eq|bessel-poly|footnote|"
                   "sinc-identity|sinc-limit|sum-unity|monotone")
      ->required();
  sub_verify->add_option("--max-n", v_max_n, "sweep bound on n (rid2)")->capture_default_str();
  sub_verify->add_option("--max-m", v_max_m, "sweep bound on m (partition-sum, exact-ratio, monotone)")
      ->capture_default_str();
  sub_verify->add_option("--N", v_big_n, "bound for polynomial identities / sum-unity")
      ->capture_default_str();
  sub_verify->add_option("--n", v_small_n, "single n (sinc-limit) or column bound (monotone)")
      ->capture_default_str();
  sub_verify->add_option("--x", v_x, "sample point as exact fraction (sinc checks)")
      ->capture_default_str();
  sub_verify->add_option("--terms", v_terms, "truncation length L (sinc-identity)")
      ->capture_default_str();

  std::string asym_range;
  auto* sub_asym = app.add_subcommand("asymptotics", "a(n) = p_n(pi^2) table");
  sub_asym->fallthrough();
  sub_asym->add_option("range", asym_range, "column range, e.g. 2..10 or 4")->required();

  unsigned long apx_m = 10;
  std::string apx_range;
  auto* sub_apx = app.add_subcommand("approximant", "exact b_m(n) vs asymptotic approximant");
  sub_apx->fallthrough();
  sub_apx->add_option("--m", apx_m, "row index")->required();
  sub_apx->add_option("range", apx_range, "column range (default 2..m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    check_precision(opt.precision);
    if (sub_bernoulli->parsed()) {
      if (max_m_opt < 1) throw std::invalid_argument("max-m must be >= 1");
      return cmd_bernoulli(max_m_opt, opt);
    }
    if (sub_partition->parsed()) return cmd_partition(parse_range(range_str), opt);
    if (sub_verify->parsed()) {
      // sinc-limit default differs: x* = 4 unless overridden.
      std::string x = v_x;
      if (check == "sinc-limit" && sub_verify->count("--x") == 0) x = "4";
      if (check == "sinc-limit" && sub_verify->count("--n") == 0) v_small_n = 40;
      if (check == "monotone" && sub_verify->count("--n") == 0) v_small_n = 6;
      if (check == "sum-unity" && sub_verify->count("--N") == 0) v_big_n = 18;
      return cmd_verify(check, v_max_n, v_max_m, v_big_n, v_small_n, x, v_terms, opt);
    }
    if (sub_asym->parsed()) return cmd_asymptotics(parse_range(asym_range), opt);
    if (sub_apx->parsed())
      return cmd_approximant(apx_m, apx_range.empty() ? Range{} : parse_range(apx_range), opt);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
