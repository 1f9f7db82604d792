#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "charpoly/counting.hpp"
#include "charpoly/error.hpp"
#include "charpoly/expansions.hpp"
#include "charpoly/io.hpp"
#include "charpoly/lattice.hpp"
#include "charpoly/weyl.hpp"

namespace charpoly::cli {

namespace {

using nlohmann::json;

struct ArrangementOptions {
  std::string named;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t h = 0;
  std::string file;
};

struct Options {
  ArrangementOptions arr;
  bool json_out = false;
  bool basis = false;
  bool verbose = false;
  std::string check_against;
  std::string which;
  std::vector<std::uint64_t> s_values;
  std::vector<std::uint64_t> primes;
  std::string type;
  std::optional<std::uint64_t> t;
  std::uint64_t t_max = 0;
  std::uint64_t max_points = kDefaultPointLimit;
};

void add_arrangement_options(CLI::App* sub, ArrangementOptions& o) {
  sub->add_option("--named", o.named, "Named arrangement")
      ->check(CLI::IsMember({"A", "B", "D", "Ank", "Dnk", "Bnkh"}));
  sub->add_option("--n", o.n, "Ambient dimension");
  sub->add_option("--k", o.k, "Block size for Ank/Dnk/Bnkh");
  sub->add_option("--h", o.h, "Zero-block size for Bnkh");
  sub->add_option("--file", o.file, "Arrangement JSON file");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::bad_params, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::bad_params, path + ": " + e.what());
  }
}

Arrangement load_arrangement(const ArrangementOptions& o) {
  if (!o.file.empty() && !o.named.empty())
    throw Error(ErrorKind::bad_params, "give either --named or --file, not both");
  if (!o.file.empty()) return arrangement_from_json(read_json_file(o.file));
  if (o.named.empty()) throw Error(ErrorKind::bad_params, "an arrangement is required (--named or --file)");
  return named_arrangement(o.named, o.n, o.k, o.h);
}

std::string chi_label(std::uint64_t t) { return "χ(" + std::to_string(t) + ")"; }

json basis_json(const IntPolynomial& chi) {
  json out = json::object();
  for (auto [name, basis] : {std::pair{"falling", FactorialBasis::falling},
                             std::pair{"shifted_double_falling", FactorialBasis::shifted_double_falling}}) {
    json coeffs = json::array();
    for (const auto& c : to_basis(chi, basis)) coeffs.push_back(c.get_str());
    out[name] = coeffs;
  }
  return out;
}

std::string join(const json& arr) {
  std::string s = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].get<std::string>();
  return s + "]";
}

int finish_report(const VerificationReport& report, const Options& o, std::ostream& out, std::ostream& err,
                  const std::string& summary = {}) {
  if (o.json_out) {
    out << report_to_json(report).dump(2) << '\n';
  } else if (!summary.empty()) {
    if (o.verbose)
      for (const auto& c : report.checks)
        out << c.instance << ": " << c.lhs << " vs " << c.rhs << (c.ok ? ", OK" : ", FAIL") << '\n';
    out << summary << (report.ok() ? ", OK" : ", FAIL") << '\n';
  }
  if (const Check* bad = report.first_failure()) {
    err << "counterexample: " << bad->instance << ": " << bad->lhs << " != " << bad->rhs << '\n';
    return kCounterexample;
  }
  return kOk;
}

int cmd_charpoly(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement a = load_arrangement(o.arr);
  const IntPolynomial chi = char_poly(a);
  if (!o.check_against.empty()) {
    const IntPolynomial expected = poly_from_json(read_json_file(o.check_against));
    if (expected == chi) {
      out << "match: " << to_string(chi) << '\n';
      return kOk;
    }
    out << "mismatch: computed " << to_string(chi) << ", expected " << to_string(expected) << '\n';
    return kCounterexample;
  }
  if (o.json_out) {
    json j = poly_to_json(chi);
    j["basis"] = basis_json(chi);
    j["arrangement"] = a.name();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << to_string(chi) << '\n';
  if (o.basis) {
    const json b = basis_json(chi);
    out << "falling: " << join(b["falling"]) << '\n';
    out << "shifted_double_falling: " << join(b["shifted_double_falling"]) << '\n';
  }
  (void)err;
  return kOk;
}

int cmd_poset(const Options& o, std::ostream& out) {
  out << poset_to_json(build_poset(load_arrangement(o.arr))).dump(2) << '\n';
  return kOk;
}

int verify_cube(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement a = load_arrangement(o.arr);
  if (!embedded_in_B(a)) throw Error(ErrorKind::not_embedded, a.name() + " is not embedded in B_n");
  const IntPolynomial chi = char_poly(a);
  const std::vector<std::uint64_t> grid = o.s_values.empty() ? std::vector<std::uint64_t>{0, 1, 2, 3} : o.s_values;
  VerificationReport report;
  for (auto s : grid) {
    const CubeSpec spec{s};
    const Integer lhs = chi(Integer(static_cast<unsigned long>(spec.t())));
    const Integer rhs = count_cube(a, spec, o.max_points);
    report.add(a.name() + " s=" + std::to_string(s), lhs, rhs);
    if (!o.json_out)
      out << chi_label(spec.t()) << "=" << lhs.get_str() << ", count=" << rhs.get_str()
          << (lhs == rhs ? ", OK" : ", FAIL") << '\n';
  }
  return finish_report(report, o, out, err);
}

int verify_ffield(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement a = load_arrangement(o.arr);
  const IntPolynomial chi = char_poly(a);
  const std::vector<std::uint64_t> primes = o.primes.empty() ? std::vector<std::uint64_t>{5, 7, 11, 13} : o.primes;
  VerificationReport report;
  for (auto p : primes) {
    const Integer lhs = chi(Integer(static_cast<unsigned long>(p)));
    const Integer rhs = count_ffield(a, p, o.max_points);
    report.add(a.name() + " p=" + std::to_string(p), lhs, rhs);
    if (!o.json_out)
      out << chi_label(p) << "=" << lhs.get_str() << ", count=" << rhs.get_str() << (lhs == rhs ? ", OK" : ", FAIL")
          << '\n';
  }
  return finish_report(report, o, out, err);
}

int verify_weyl(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.type.empty()) throw Error(ErrorKind::bad_params, "verify weyl needs --type");
  const RootSystem r = root_system(o.type, o.arr.n);
  const std::uint64_t t_max = o.t_max ? o.t_max : 600;
  const VerificationReport report = weyl_checks(r, t_max);
  std::size_t admissible = 0;
  for (std::uint64_t t = 1; t <= t_max; ++t) admissible += r.coprime_to_coeffs(t) ? 1 : 0;
  return finish_report(report, o, out, err,
                       r.label() + ": " + std::to_string(admissible) + " admissible t <= " + std::to_string(t_max) +
                           " (period " + std::to_string(r.quasi_period()) + ")");
}

int verify_coincidence(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t t_max = o.t_max ? o.t_max : 100;
  std::vector<std::size_t> ranks;
  if (o.arr.n)
    ranks.push_back(o.arr.n);
  else
    for (std::size_t n = 2; n <= 6; ++n) ranks.push_back(n);
  VerificationReport report;
  for (auto n : ranks)
    for (std::uint64_t t = 2; t <= t_max; t += 2) {
      const auto [lhs, rhs] = coincidence_sides(n, t);
      report.add("n=" + std::to_string(n) + " t=" + std::to_string(t), lhs, rhs);
    }
  return finish_report(report, o, out, err,
                       "D_n coincidence: " + std::to_string(report.checks.size()) + " (n, even t) pairs");
}

std::vector<std::pair<unsigned, unsigned>> keq_grid(const Options& o) {
  std::vector<std::pair<unsigned, unsigned>> grid;
  if (o.arr.n) {
    const auto n = static_cast<unsigned>(o.arr.n);
    if (o.arr.k)
      grid.emplace_back(n, static_cast<unsigned>(o.arr.k));
    else
      for (unsigned k = 2; k <= n; ++k) grid.emplace_back(n, k);
  } else {
    for (unsigned n = 2; n <= 7; ++n)
      for (unsigned k = 2; k <= n; ++k) grid.emplace_back(n, k);
  }
  return grid;
}

int verify_seq(const Options& o, std::ostream& out, std::ostream& err) {
  VerificationReport report;
  for (auto [n, k] : keq_grid(o)) {
    const IntPolynomial lhs = keq_charpoly_expansion(n, k);
    const IntPolynomial rhs = char_poly(build_k_equal(n, k));
    report.add("n=" + std::to_string(n) + " k=" + std::to_string(k), to_string(lhs), to_string(rhs), lhs == rhs);
  }
  return finish_report(report, o, out, err, "k-equal expansion: " + std::to_string(report.checks.size()) + " (n, k) pairs");
}

int verify_div(const Options& o, std::ostream& out, std::ostream& err) {
  VerificationReport report;
  for (auto [n, k] : keq_grid(o)) {
    const IntPolynomial chi = char_poly(build_k_equal(n, k));
    const std::size_t j = (n + (k - 1) - 1) / (k - 1);
    const IntPolynomial d = falling_factorial(j);
    report.add("n=" + std::to_string(n) + " k=" + std::to_string(k), to_string(chi), to_string(d),
               check_divisibility(chi, d));
  }
  return finish_report(report, o, out, err,
                       "k-equal divisibility: " + std::to_string(report.checks.size()) + " (n, k) pairs");
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.which == "cube") return verify_cube(o, out, err);
  if (o.which == "ffield") return verify_ffield(o, out, err);
  if (o.which == "weyl") return verify_weyl(o, out, err);
  if (o.which == "coincidence") return verify_coincidence(o, out, err);
  if (o.which == "seq") return verify_seq(o, out, err);
  return verify_div(o, out, err);
}

int cmd_ehrhart(const Options& o, std::ostream& out) {
  if (o.type.empty()) throw Error(ErrorKind::bad_params, "ehrhart needs --type");
  const RootSystem r = root_system(o.type, o.arr.n);
  const QuasiPolynomial psi = ehrhart_psi(r);
  if (o.t) {
    const Rational v = psi(Integer(static_cast<unsigned long>(*o.t)));
    if (o.json_out)
      out << json{{"type", r.label()}, {"t", *o.t}, {"psi", v.get_str()}}.dump(2) << '\n';
    else
      out << v.get_str() << '\n';
    return kOk;
  }
  if (o.json_out) {
    json parts = json::array();
    for (const auto& p : psi.parts()) {
      json coeffs = json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
      parts.push_back(coeffs);
    }
    out << json{{"type", r.label()}, {"period", psi.period()}, {"degree", psi.degree()}, {"parts", parts}}.dump(2)
        << '\n';
    return kOk;
  }
  out << r.label() << ": period m=" << psi.period() << ", degree " << psi.degree() << '\n';
  for (std::size_t i = 0; i < psi.period(); ++i) out << "  r=" << i << ": " << to_string(psi.part(i)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic polynomials of arrangements and Ehrhart quasi-polynomials of Weyl alcoves", "arrchi"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an arrangement");
  add_arrangement_options(charpoly, o.arr);
  charpoly->add_flag("--basis", o.basis, "Also print both factorial-basis expansions");
  charpoly->add_flag("--json", o.json_out, "JSON output");
  charpoly->add_option("--check-against", o.check_against, "Compare with a JSON polynomial from --json output");

  auto* poset = app.add_subcommand("poset", "Intersection poset with Mobius values, as JSON");
  add_arrangement_options(poset, o.arr);

  auto* verify = app.add_subcommand("verify", "Check one identity over a parameter grid");
  verify->add_option("which", o.which, "cube | ffield | weyl | coincidence | seq | div")
      ->required()
      ->check(CLI::IsMember({"cube", "ffield", "weyl", "coincidence", "seq", "div"}));
  add_arrangement_options(verify, o.arr);
  verify->add_option("--s", o.s_values, "Cube half-sides (default 0 1 2 3)");
  verify->add_option("--p", o.primes, "Primes (default 5 7 11 13)");
  verify->add_option("--type", o.type, "Weyl type: A B C D E6 E7 E8 F4 G2");
  verify->add_option("--tmax", o.t_max, "Largest t checked");
  verify->add_option("--max-points", o.max_points, "Enumeration guardrail");
  verify->add_flag("--json", o.json_out, "JSON report");
  verify->add_flag("--verbose", o.verbose, "List every check");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of the fundamental alcove");
  ehrhart->add_option("--type", o.type, "Weyl type")->required();
  ehrhart->add_option("--n", o.arr.n, "Rank for A B C D");
  ehrhart->add_option("--t", o.t, "Evaluate at t");
  ehrhart->add_flag("--json", o.json_out, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (charpoly->parsed()) return cmd_charpoly(o, out, err);
    if (poset->parsed()) return cmd_poset(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_ehrhart(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::scale:
        return kGuardrail;
      case ErrorKind::verification_failure:
        return kCounterexample;
      default:
        return kUsage;
    }
  }
}

}  // namespace charpoly::cli
