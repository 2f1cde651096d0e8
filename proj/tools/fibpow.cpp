// fibpow: factor polynomials over F_q, print sequence members and tables, and run
// theorem sweeps.
//
// Exit codes: 0 ok / pass, 1 theorem mismatch, 2 usage, parse or hypothesis error.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibpow/fibpow.hpp"

namespace {

using namespace fibpow;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct FieldArgs {
  std::uint64_t p = 0;
  unsigned e = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "field characteristic (prime)")->required();
  cmd->add_option("--e", args.e, "extension degree")->default_val(1)->check(CLI::Range(1u, 32u));
}

std::string read_text(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

/// A degree <= 1 monomial given as polynomial text, e.g. `2*T` or `4`.
Monomial parse_monomial(const FieldPtr& field, const std::string& text, const char* name) {
  const Polynomial m = parse_polynomial(field, text);
  std::size_t nonzero = 0;
  for (Element c : m.coeffs()) nonzero += c.v != 0 ? 1 : 0;
  if (nonzero != 1 || m.degree() > 1) {
    throw Error(ErrorKind::InvalidParams, std::string(name) + " must be a nonzero monomial of degree 0 or 1");
  }
  return {m.lc(), static_cast<unsigned>(m.degree())};
}

std::optional<HoradamParams> parse_params(const FieldPtr& field, const std::string& f, const std::string& g) {
  if (f.empty() && g.empty()) return std::nullopt;
  if (f.empty() || g.empty()) throw Error(ErrorKind::Usage, "--f and --g must be given together");
  return HoradamParams(parse_monomial(field, f, "f"), parse_monomial(field, g, "g"));
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::uint64_t x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out.empty() ? "(none)" : out;
}

int run_factor(const FieldArgs& fa, const std::string& text, std::uint64_t seed, bool json) {
  const FieldPtr field = make_field(fa.p, fa.e);
  const Factorization fac = factor(parse_polynomial(field, read_text(text)), seed);
  std::cout << (json ? to_json(fac).dump() : render(fac)) << "\n";
  return kExitOk;
}

struct SeqArgs {
  FieldArgs field;
  std::string family;
  std::string f, g, kind = "W";
  std::optional<std::uint64_t> n, n_max;
};

int run_seq(const SeqArgs& a) {
  const FieldPtr field = make_field(a.field.p, a.field.e);
  if (!a.n && !a.n_max) throw Error(ErrorKind::Usage, "seq needs --n or --nmax");
  const auto params = parse_params(field, a.f, a.g);
  if (params.has_value() == !a.family.empty()) throw Error(ErrorKind::Usage, "give either --family or --f/--g");
  std::optional<FamilySequence> fam;
  std::optional<HoradamSequence> custom;
  if (params) {
    if (a.kind != "W" && a.kind != "w") throw Error(ErrorKind::Usage, "--kind must be W or w");
    custom.emplace(*params, a.kind == "W" ? SequenceKind::W : SequenceKind::w);
  } else {
    fam.emplace(parse_family(a.family), field);
  }
  auto member = [&](std::uint64_t n) { return fam ? fam->at(n) : custom->at(n); };
  if (a.n) {
    std::cout << render(member(*a.n)) << "\n";
  } else {
    for (std::uint64_t n = 0; n <= *a.n_max; ++n) std::cout << n << ": " << render(member(n)) << "\n";
  }
  return kExitOk;
}

struct TableArgs {
  FieldArgs field;
  std::string family;
  std::uint64_t n_max = 20;
  std::string format = "md";
  std::uint64_t seed = 0;
};

int run_table(const TableArgs& a) {
  const TableRequest req{parse_family(a.family), make_field(a.field.p, a.field.e), a.n_max,
                         parse_table_format(a.format), a.seed};
  std::cout << render_table(req);
  return kExitOk;
}

struct VerifyArgs {
  FieldArgs field;
  std::string theorem;
  std::optional<std::uint64_t> j;
  std::uint64_t n_min = 1, n_max = 100;
  std::uint64_t degree_cap = kDefaultDegreeCap;
  std::string f, g;
  bool json = false;
  bool exploratory = false;
  bool grid = false;
};

std::string summary(const VerificationReport& r) {
  const TheoremCase& c = r.theorem_case;
  std::ostringstream out;
  out << theorem_name(c.theorem) << " over " << field_label(*c.field);
  if (c.j) out << ", j = " << *c.j;
  if (theorem_shape(c.theorem).subject == TheoremShape::Subject::Horadam) {
    out << ", f = " << render(c.params.f()) << ", g = " << render(c.params.g());
  }
  out << ", n in [" << c.n_min << ", " << c.n_max << "]: " << status_name(r.status) << " (" << r.rows.size()
      << " rows, " << r.mismatches.size() << " mismatches";
  if (!r.skipped.empty()) out << ", skipped " << join(r.skipped);
  out << ")\n  positives: " << join(r.positives());
  for (const ReportRow& m : r.mismatches) {
    out << "\n  mismatch at n = " << m.n << ": predicted " << m.predicted << ", computed " << m.computed;
  }
  return out.str();
}

int run_verify(const VerifyArgs& a) {
  const FieldPtr field = make_field(a.field.p, a.field.e);
  const TheoremId id = parse_theorem(a.theorem);
  std::vector<TheoremCase> cases;
  if (a.grid) {
    if (theorem_shape(id).subject != TheoremShape::Subject::Horadam) throw Error(ErrorKind::Usage, "--grid applies to W/w theorems");
    for (const HoradamParams& prm : w_param_grid(field)) cases.push_back(make_case(id, field, a.j, a.n_min, a.n_max, prm));
  } else {
    cases.push_back(make_case(id, field, a.j, a.n_min, a.n_max, parse_params(field, a.f, a.g)));
  }
  for (TheoremCase& c : cases) {
    c.degree_cap = a.degree_cap;
    c.exploratory = a.exploratory;
    validate(c);
  }
  ProfileCache cache;
  Json docs = Json::array();
  bool failed = false;
  for (const TheoremCase& c : cases) {
    const VerificationReport report = verify(c, cache);
    failed = failed || report.status == ReportStatus::Fail;
    if (a.json) {
      docs.push_back(to_json(report));
    } else {
      std::cout << summary(report) << "\n";
    }
  }
  if (a.json) std::cout << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
  return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor and classify Fibonacci-type polynomial sequences over finite fields"};
  app.require_subcommand(1);

  FieldArgs factor_field;
  std::string factor_text;
  std::uint64_t factor_seed = 0;
  bool factor_json = false;
  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial (`-` reads stdin)");
  add_field_options(factor_cmd, factor_field);
  factor_cmd->add_option("poly", factor_text, "polynomial, e.g. T^4+T^2+2")->required();
  factor_cmd->add_option("--seed", factor_seed, "random seed for splitting")->default_val(0);
  factor_cmd->add_flag("--json", factor_json, "emit JSON");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "print sequence members");
  add_field_options(seq_cmd, seq.field);
  seq_cmd->add_option("--family", seq.family, "fibonacci, lucas, chebyshev_u, chebyshev_t, jacobsthal");
  seq_cmd->add_option("--f", seq.f, "custom f, a monomial such as 2*T");
  seq_cmd->add_option("--g", seq.g, "custom g, a monomial such as 4");
  seq_cmd->add_option("--kind", seq.kind, "W or w for custom parameters")->default_val("W");
  seq_cmd->add_option("--n", seq.n, "single index");
  seq_cmd->add_option("--nmax", seq.n_max, "print indices 0..nmax");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "factorization table of a named family");
  add_field_options(table_cmd, table.field);
  table_cmd->add_option("--family", table.family, "sequence family")->required();
  table_cmd->add_option("--nmax", table.n_max, "last index")->default_val(20);
  table_cmd->add_option("--format", table.format, "md, latex or json")->default_val("md");
  table_cmd->add_option("--seed", table.seed, "random seed for splitting")->default_val(0);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem's characterization over a range of n");
  add_field_options(verify_cmd, ver.field);
  verify_cmd->add_option("--theorem", ver.theorem, "theorem id, e.g. fib-jpow")->required();
  verify_cmd->add_option("--j", ver.j, "power exponent j");
  verify_cmd->add_option("--nmin", ver.n_min, "first n")->default_val(1);
  verify_cmd->add_option("--nmax", ver.n_max, "last n")->default_val(100);
  verify_cmd->add_option("--degree-cap", ver.degree_cap, "skip members above this degree")->default_val(kDefaultDegreeCap);
  verify_cmd->add_option("--f", ver.f, "W/w theorems: f, a monomial such as 2*T");
  verify_cmd->add_option("--g", ver.g, "W/w theorems: g, a monomial such as 4");
  verify_cmd->add_flag("--grid", ver.grid, "W/w theorems: sweep the standard parameter grid");
  verify_cmd->add_flag("--exploratory", ver.exploratory, "allow params outside the hypotheses; report only");
  verify_cmd->add_flag("--json", ver.json, "emit the full JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*factor_cmd) return run_factor(factor_field, factor_text, factor_seed, factor_json);
    if (*seq_cmd) return run_seq(seq);
    if (*table_cmd) return run_table(table);
    if (*verify_cmd) return run_verify(ver);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
