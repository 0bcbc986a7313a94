#include <c2/errors.hpp>
#include <c2/report.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace c2 {

namespace {

using nlohmann::ordered_json;

struct MatrixView {
  std::string_view name;
  std::string_view title;
  std::vector<std::string> row_labels;
  std::array<std::string, 2> column_labels;
  std::vector<std::array<Count, 2>> counts;
};

template <std::size_t Rows>
MatrixView view(std::string_view name, std::string_view title, const CountMatrix<Rows>& m,
                std::vector<std::string> rows, std::array<std::string, 2> cols) {
  return {name, title, std::move(rows), std::move(cols),
          std::vector<std::array<Count, 2>>(m.counts.begin(), m.counts.end())};
}

std::vector<MatrixView> matrices(const TransitionEstimate& t) {
  return {
      view("object", "P[s_n | s_{n-1}]", t.object, {"s[n-1]=0", "s[n-1]=1"},
           {"s[n]=0", "s[n]=1"}),
      view("fundament", "P[u_n | s_{n-1}]", t.fundament, {"s[n-1]=0", "s[n-1]=1"},
           {"u[n]=0", "u[n]=1"}),
      view("joint", "P[s_n | s_{n-1}, u_n]", t.joint,
           {"s[n-1]=0,u[n]=0", "s[n-1]=0,u[n]=1", "s[n-1]=1,u[n]=0", "s[n-1]=1,u[n]=1"},
           {"s[n]=0", "s[n]=1"}),
  };
}

std::string decimal(double v) { return fmt::format("{:.6f}", v); }

struct Cell {
  Count count;
  Count total;
  std::string rational() const { return fmt::format("{}/{}", count, total); }
  double probability() const { return static_cast<double>(count) / static_cast<double>(total); }
};

Cell cell(const MatrixView& m, std::size_t r, std::size_t c) {
  return {m.counts[r][c], m.counts[r][0] + m.counts[r][1]};
}

std::string_view yes_no(bool b) { return b ? "yes" : "no"; }

std::string independence_text(const RandomnessReport& r) {
  if (!r.independence)
    return "no variation (not tested)";
  const auto& t = *r.independence;
  return fmt::format("chi2={:.6f} dof={} critical={:.3f} -> {}", t.statistic,
                     t.degrees_of_freedom, t.critical_value,
                     t.rejected ? "independence rejected" : "independence not rejected");
}

void plain_matrices(std::string& out, const TransitionEstimate& t) {
  for (const auto& m : matrices(t)) {
    out += fmt::format("{} matrix {}:\n", m.name, m.title);
    for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
      out += fmt::format("  {:<16}", m.row_labels[r]);
      for (std::size_t c = 0; c < 2; ++c) {
        const Cell x = cell(m, r, c);
        if (x.total == 0)
          out += fmt::format("  {}: no samples", m.column_labels[c]);
        else
          out += fmt::format("  {}: {} ({})", m.column_labels[c], x.rational(),
                             decimal(x.probability()));
      }
      out += '\n';
    }
  }
}

void plain_analysis(std::string& out, const Analysis& a) {
  out += fmt::format("length: {}\n", a.length);
  out += fmt::format("samples: {}\n", a.transitions.sample_count);
  plain_matrices(out, a.transitions);
  out += fmt::format("joint_deterministic: {}\n", yes_no(a.transitions.joint_is_deterministic()));
  out += fmt::format("independence: {}\n", independence_text(a.sequence));
  out += fmt::format("marginal_P0_sequence: {}\n", decimal(a.sequence.marginal_frequency));
  out += fmt::format("marginal_P0_program: {}\n", decimal(a.program_stats.marginal_frequency));
  out += fmt::format("lz76_sequence: {}\n", decimal(a.sequence.lz76_complexity));
  out += fmt::format("lz76_program: {}\n", decimal(a.program_stats.lz76_complexity));
}

constexpr std::string_view proxy_note =
    "note: lz76 values are a Lempel-Ziv proxy for incompressibility, not Kolmogorov complexity\n";

void csv_cells(std::string& out, const TransitionEstimate& t) {
  for (const auto& m : matrices(t))
    for (std::size_t r = 0; r < m.row_labels.size(); ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        const Cell x = cell(m, r, c);
        out += fmt::format("{},{},{},{},{},", schema_version, m.name, m.row_labels[r],
                           m.column_labels[c], x.count);
        if (x.total == 0)
          out += ",no samples\n";
        else
          out += fmt::format("{},{}\n", x.rational(), decimal(x.probability()));
      }
}

void csv_stat(std::string& out, std::string_view name, std::string_view value) {
  out += fmt::format("{},stat,{},,,,{}\n", schema_version, name, value);
}

void csv_analysis_stats(std::string& out, const Analysis& a) {
  csv_stat(out, "joint_deterministic", yes_no(a.transitions.joint_is_deterministic()));
  if (a.sequence.independence) {
    csv_stat(out, "chi2", decimal(a.sequence.independence->statistic));
    csv_stat(out, "chi2_rejected", yes_no(a.sequence.independence->rejected));
  } else {
    csv_stat(out, "chi2", "no variation");
  }
  csv_stat(out, "marginal_P0_sequence", decimal(a.sequence.marginal_frequency));
  csv_stat(out, "marginal_P0_program", decimal(a.program_stats.marginal_frequency));
  csv_stat(out, "lz76_sequence", decimal(a.sequence.lz76_complexity));
  csv_stat(out, "lz76_program", decimal(a.program_stats.lz76_complexity));
}

constexpr std::string_view csv_header =
    "schema_version,matrix,row,column,count,rational,probability\n";

void json_cells(std::string& out, const TransitionEstimate& t) {
  for (const auto& m : matrices(t))
    for (std::size_t r = 0; r < m.row_labels.size(); ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        const Cell x = cell(m, r, c);
        ordered_json j;
        j["schema_version"] = schema_version;
        j["record"] = "cell";
        j["matrix"] = m.name;
        j["row"] = m.row_labels[r];
        j["column"] = m.column_labels[c];
        j["count"] = x.count;
        if (x.total == 0) {
          j["rational"] = nullptr;
          j["probability"] = nullptr;
        } else {
          j["rational"] = x.rational();
          j["probability"] = x.probability();
        }
        out += j.dump() + "\n";
      }
}

ordered_json json_summary(const Analysis& a) {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["record"] = "summary";
  j["length"] = a.length;
  j["samples"] = a.transitions.sample_count;
  j["joint_deterministic"] = a.transitions.joint_is_deterministic();
  if (a.sequence.independence) {
    j["chi2"] = a.sequence.independence->statistic;
    j["chi2_dof"] = a.sequence.independence->degrees_of_freedom;
    j["chi2_critical"] = a.sequence.independence->critical_value;
    j["chi2_rejected"] = a.sequence.independence->rejected;
  } else {
    j["chi2"] = nullptr;
  }
  j["marginal_P0_sequence"] = a.sequence.marginal_frequency;
  j["marginal_P0_program"] = a.program_stats.marginal_frequency;
  j["lz76_sequence"] = a.sequence.lz76_complexity;
  j["lz76_program"] = a.program_stats.lz76_complexity;
  return j;
}

} // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "plain")
    return OutputFormat::plain;
  if (name == "csv")
    return OutputFormat::csv;
  if (name == "json-lines")
    return OutputFormat::json_lines;
  throw parse_error("unknown format '" + std::string(name) + "'");
}

std::string render(const Analysis& a, OutputFormat format) {
  std::string out;
  switch (format) {
  case OutputFormat::plain:
    plain_analysis(out, a);
    out += proxy_note;
    break;
  case OutputFormat::csv:
    out += csv_header;
    csv_cells(out, a.transitions);
    csv_analysis_stats(out, a);
    break;
  case OutputFormat::json_lines:
    json_cells(out, a.transitions);
    out += json_summary(a).dump() + "\n";
    break;
  }
  return out;
}

std::string render(const ChaosReport& r, OutputFormat format) {
  const auto fn = boolean_table(r.rule);
  const std::string digest = fmt::format("fnv1a64:{:016x}", r.certificate_digest);
  std::string out;
  switch (format) {
  case OutputFormat::plain:
    out += "chaos demonstration\n";
    out += fmt::format("p0: {}\nseed: {}\n", decimal(r.p0), r.seed);
    out += fmt::format("rule: {} ({} bits, {})\n", r.rule.bits(), r.rule.bits().size(), fn.label());
    out += fmt::format("certificate_digest: {}\n", digest);
    out += fmt::format("degenerate: {}\n", yes_no(r.degenerate));
    plain_analysis(out, r.analysis);
    out += fmt::format("lz76_zero_control: {}\n", decimal(r.lz76_zero_control));
    out += proxy_note;
    break;
  case OutputFormat::csv:
    out += csv_header;
    csv_stat(out, "p0", decimal(r.p0));
    csv_stat(out, "seed", std::to_string(r.seed));
    csv_stat(out, "length", std::to_string(r.analysis.length));
    csv_stat(out, "rule", r.rule.bits());
    csv_stat(out, "certificate_digest", digest);
    csv_stat(out, "degenerate", yes_no(r.degenerate));
    csv_cells(out, r.analysis.transitions);
    csv_analysis_stats(out, r.analysis);
    csv_stat(out, "lz76_zero_control", decimal(r.lz76_zero_control));
    break;
  case OutputFormat::json_lines: {
    ordered_json head;
    head["schema_version"] = schema_version;
    head["record"] = "run";
    head["p0"] = r.p0;
    head["seed"] = r.seed;
    head["length"] = r.analysis.length;
    head["rule"] = r.rule.bits();
    head["rule_function"] = fn.label();
    head["certificate_digest"] = digest;
    head["degenerate"] = r.degenerate;
    out += head.dump() + "\n";
    json_cells(out, r.analysis.transitions);
    auto summary = json_summary(r.analysis);
    summary["lz76_zero_control"] = r.lz76_zero_control;
    out += summary.dump() + "\n";
    break;
  }
  }
  return out;
}

std::string frequency_series(const BitStream& s, std::size_t length, std::size_t points) {
  if (points == 0)
    throw invalid_argument("series needs at least one point");
  const BitString bits = s.materialize(length);
  std::string out = "# n P[s=0]\n";
  Count zeros = 0;
  std::size_t next = 1;
  for (std::size_t n = 1; n <= length; ++n) {
    zeros += bits[n - 1] == Bit::zero;
    if (n == length || n >= next) {
      out += fmt::format("{} {}\n", n, decimal(static_cast<double>(zeros) / static_cast<double>(n)));
      next = n + std::max<std::size_t>(1, length / points);
    }
  }
  return out;
}

} // namespace c2
