#pragma once

// Factorization tables of named sequences: markdown, LaTeX, and the JSON row format
// used by the golden files.

#include <cstdint>
#include <string>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/factor.hpp"
#include "fibpow/horadam.hpp"
#include "fibpow/json.hpp"
#include "fibpow/poly_io.hpp"

namespace fibpow {

enum class TableFormat { Markdown, Latex, Json };

inline TableFormat parse_table_format(std::string_view s) {
  if (s == "md" || s == "markdown") return TableFormat::Markdown;
  if (s == "latex" || s == "tex") return TableFormat::Latex;
  if (s == "json") return TableFormat::Json;
  throw Error(ErrorKind::Usage, "unknown format '" + std::string(s) + "' (md, latex, json)");
}

struct TableRequest {
  Family family;
  FieldPtr field;
  std::uint64_t n_max;
  TableFormat format = TableFormat::Markdown;
  std::uint64_t seed = 0;
};

struct TableRow {
  std::uint64_t n;
  Factorization factorization;
};

inline std::vector<TableRow> table_rows(const TableRequest& req) {
  if (req.n_max < 1) throw Error(ErrorKind::Usage, "nmax must be >= 1");
  FamilySequence seq(req.family, req.field);
  std::vector<TableRow> rows;
  rows.reserve(req.n_max);
  for (std::uint64_t n = 1; n <= req.n_max; ++n) rows.push_back({n, factor(seq.at(n), req.seed)});
  return rows;
}

inline std::string field_label(const Field& F) {
  return F.is_prime_field() ? "F_" + std::to_string(F.characteristic()) : "F_" + std::to_string(F.order());
}

/// LaTeX: `T^{2} + 2 T + 1`.
inline std::string render_latex(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.f();
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Element c = f.raw(i);
    if (c.v == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c != F.one()) out += render(F, c);
    if (i == 0) continue;
    if (c != F.one()) out += " ";
    out += "T";
    if (i > 1) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

inline std::string render_latex(const Factorization& fac) {
  std::string out;
  if (!fac.unit.is_one() || fac.factors.empty()) out = render(fac.unit);
  for (const FactorPower& fp : fac.factors) {
    const bool single_term = fp.base.degree() == 1 && fp.base.raw(0).v == 0;
    const std::string base = render_latex(fp.base);
    out += single_term ? base : "(" + base + ")";
    if (fp.multiplicity != 1) out += "^{" + std::to_string(fp.multiplicity) + "}";
  }
  return out;
}

inline Json table_json(const TableRequest& req, const std::vector<TableRow>& rows) {
  Json doc;
  doc["family"] = std::string(family_name(req.family));
  doc["p"] = req.field->characteristic();
  doc["e"] = req.field->degree();
  Json out_rows = Json::array();
  for (const TableRow& r : rows) {
    out_rows.push_back(Json{{"n", r.n}, {"unit", render(r.factorization.unit)}, {"factors", factors_json(r.factorization)}});
  }
  doc["rows"] = std::move(out_rows);
  return doc;
}

inline std::string render_table(const TableRequest& req) {
  const std::vector<TableRow> rows = table_rows(req);
  const std::string label = std::string(family_name(req.family)) + " over " + field_label(*req.field);
  std::string out;
  switch (req.format) {
    case TableFormat::Json: return table_json(req, rows).dump(2) + "\n";
    case TableFormat::Markdown:
      out = "| n | " + label + " |\n|---|---|\n";
      for (const TableRow& r : rows) out += "| " + std::to_string(r.n) + " | " + render(r.factorization) + " |\n";
      return out;
    case TableFormat::Latex:
      out = "% " + label + "\n\\begin{tabular}{c|l}\n$n$ & factorization \\\\\n\\hline\n";
      for (const TableRow& r : rows) out += std::to_string(r.n) + " & $" + render_latex(r.factorization) + "$ \\\\\n";
      return out + "\\end{tabular}\n";
  }
  return out;
}

}  // namespace fibpow
