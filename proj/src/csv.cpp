#include "polyanalytic/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace polyanalytic {

namespace {

void finish(std::ostream& out) {
  out.flush();
  if (!out) throw std::runtime_error("failed to write CSV output");
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit_csv(const NormResult& result, std::ostream& out) {
  out << "full_norm,seminorm,point_term\n";
  out << format_double(result.full_norm) << ',' << format_double(result.seminorm) << ','
      << format_double(result.point_term) << '\n';
  finish(out);
}

void emit_csv(const ConvergenceReport& report, std::ostream& out) {
  auto rows = report.rows;
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  out << "r,err_seminorm,err_fullnorm\n";
  for (const auto& row : rows)
    out << format_double(row.r) << ',' << format_double(row.err_seminorm) << ',' << format_double(row.err_fullnorm)
        << '\n';
  finish(out);
}

void emit_csv(const LimsupReport& report, std::ostream& out) {
  auto rows = report.rows;
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  out << "r,lhs_dz,lhs_dzbar,rhs_dz,rhs_dzbar\n";
  for (const auto& row : rows)
    out << format_double(row.r) << ',' << format_double(row.lhs_dz) << ',' << format_double(row.lhs_dzbar) << ','
        << format_double(report.rhs_dz) << ',' << format_double(report.rhs_dzbar) << '\n';
  finish(out);
}

void emit_csv(const ApproxReport& report, std::ostream& out) {
  auto rows = report.rows;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.r < b.r || (a.r == b.r && a.m < b.m); });
  out << "r,m,error\n";
  for (const auto& row : rows) out << format_double(row.r) << ',' << row.m << ',' << format_double(row.error) << '\n';
  finish(out);
}

void emit_csv(const SuiteSummary& summary, std::ostream& out) {
  out << "cell,domain,space,p,weight,function,norm_f,err_first,err_last,rel_err_last,min_k,C,quadrature_converged,"
         "verdict\n";
  for (const auto& cell : summary.cells) {
    const auto& spec = cell.input.spec;
    const auto& rep = cell.report;
    const double first = rep.rows.empty() ? 0 : rep.rows.front().err_fullnorm;
    const double last = rep.rows.empty() ? 0 : rep.rows.back().err_fullnorm;
    const double rel = rep.norm_f > 0 ? last / rep.norm_f : 0;
    out << csv_field(cell.id) << ',' << to_string(spec.domain) << ',' << to_string(spec.kind) << ','
        << format_double(spec.p) << ',' << csv_field(describe(spec.weight)) << ',' << csv_field(cell.input.function_name)
        << ',' << format_double(rep.norm_f) << ',' << format_double(first) << ',' << format_double(last) << ','
        << format_double(rel) << ',';
    if (cell.condition)
      out << cell.condition->k << ',' << format_double(cell.condition->C);
    else
      out << ",";
    out << ',' << bool_str(rep.quadrature_converged) << ',' << to_string(rep.verdict) << '\n';
  }
  finish(out);
}

void emit_csv(const ConditionCheck& check, std::ostream& out) {
  const auto& w = check.witness;
  out << "k,C,r0,grid_size,argmax_re,argmax_im,argmax_r,status\n";
  out << w.k << ',' << format_double(w.C) << ',' << format_double(w.r0) << ',' << w.grid_size << ','
      << format_double(w.argmax_z.real()) << ',' << format_double(w.argmax_z.imag()) << ','
      << format_double(w.argmax_r) << ',' << (check.satisfied ? "satisfied" : "diverged") << '\n';
  finish(out);
}

}  // namespace polyanalytic
