#include "dps/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dps {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string classification_name(CellVerdict v) {
  switch (v) {
    case CellVerdict::Blank: return "inconclusive";
    case CellVerdict::Irr: return "irr";
    case CellVerdict::Red: return "red";
    case CellVerdict::RedStar: return "red_star";
  }
  return "inconclusive";
}

// Evidence strings are stored as "tag: details"; anything without that
// shape (e.g. "inconclusive") carries no machine tag.
ordered_json evidence_json(const std::string& text) {
  ordered_json list = ordered_json::array();
  const auto sep = text.find(": ");
  if (sep != std::string::npos) {
    ordered_json entry;
    entry["method"] = text.substr(0, sep);
    entry["details"] = text.substr(sep + 2);
    list.push_back(std::move(entry));
  }
  return list;
}

std::string latex_rational(const Rat& v) {
  if (v.denominator() == 1) return "$" + render_rational(v) + "$";
  std::string sign = v < Rat(0) ? "-" : "";
  const long long num = std::llabs(v.numerator());
  return "$" + sign + "\\frac{" + std::to_string(num) + "}{" +
         std::to_string(v.denominator()) + "}$";
}

std::string latex_cell(CellVerdict v) {
  switch (v) {
    case CellVerdict::Blank: return "";
    case CellVerdict::Irr: return "irr.";
    case CellVerdict::Red: return "red.";
    case CellVerdict::RedStar: return "red.$^*$";
  }
  return "";
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

std::string table_text(const ReducibilityTable& table) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"k\\s"};
  for (const Rat& s : table.columns) head.push_back(render_rational(s));
  grid.push_back(std::move(head));
  for (std::size_t row = 0; row < table.chi_orders.size(); ++row) {
    std::vector<std::string> line{std::to_string(table.chi_orders[row])};
    for (CellVerdict v : table.cells[row])
      line.push_back(cell_verdict_label(v));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c)
      widths[c] = std::max(widths[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << line[c] << std::string(widths[c] - line[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string table_csv(const ReducibilityTable& table) {
  std::ostringstream out;
  out << "k\\s";
  for (const Rat& s : table.columns) out << "," << render_rational(s);
  out << "\n";
  for (std::size_t row = 0; row < table.chi_orders.size(); ++row) {
    out << table.chi_orders[row];
    for (CellVerdict v : table.cells[row])
      out << "," << csv_escape(cell_verdict_label(v));
    out << "\n";
  }
  return out.str();
}

std::string table_json(const RootDatum& datum, const ReducibilityTable& table) {
  ordered_json doc;
  doc["version"] = kSchemaVersion;
  doc["group"] = datum.id.str();
  doc["node"] = table.node + 1;
  ordered_json cols = ordered_json::array();
  for (const Rat& s : table.columns) cols.push_back(render_rational(s));
  doc["s_values"] = std::move(cols);
  ordered_json rows = ordered_json::array();
  for (std::size_t row = 0; row < table.chi_orders.size(); ++row) {
    ordered_json r;
    r["chi_order"] = table.chi_orders[row];
    ordered_json cells = ordered_json::array();
    for (CellVerdict v : table.cells[row])
      cells.push_back(v == CellVerdict::Blank ? "" : classification_name(v));
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string table_latex(const RootDatum& datum,
                        const ReducibilityTable& table) {
  std::ostringstream out;
  out << "\\begin{longtable}{|c|";
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << "c|";
  out << "}\n\\caption{$P_{" << table.node + 1 << "}$-reducibility points for $"
      << datum.id.str() << "$}\\\\\n\\hline\n\\diagbox{$k$}{$s$}";
  for (const Rat& s : table.columns) out << " & " << latex_rational(s);
  out << " \\\\\n\\hline\n\\endhead\n";
  for (std::size_t row = 0; row < table.chi_orders.size(); ++row) {
    out << "$" << table.chi_orders[row] << "$";
    for (CellVerdict v : table.cells[row]) out << " & " << latex_cell(v);
    out << " \\\\\n\\hline\n";
  }
  out << "\\end{longtable}\n";
  return out.str();
}

std::string analysis_text(const CaseAnalysis& a) {
  std::ostringstream out;
  out << "case " << render_descriptor(a.desc) << "\n";
  out << "  classification    " << classification_name(a.verdict) << "\n";
  out << "  evidence          " << a.verdict_evidence << "\n";
  out << "  socle             " << socle_bound_label(a.socle) << "\n";
  if (!a.socle_evidence.empty())
    out << "  socle evidence    " << a.socle_evidence << "\n";
  out << "  regular           " << (a.regular ? "yes" : "no") << "\n";
  out << "  initial exponent  " << render_character(a.lambda0) << "\n";
  out << "  terminal exponent " << render_character(a.lambda1) << "\n";
  out << "  anti-dominant     " << render_character(a.lambda_ad) << "\n";
  out << "  mass              " << a.mass << "\n";
  out << "  mult(initial)     " << a.mult0 << "\n";
  out << "  mult(terminal)    " << a.mult1 << "\n";
  return out.str();
}

ordered_json analysis_json_doc(const RootDatum& datum, const CaseAnalysis& a) {
  ordered_json doc;
  doc["version"] = kSchemaVersion;
  doc["group"] = datum.id.str();
  doc["descriptor"] = render_descriptor(a.desc);
  doc["classification"] = classification_name(a.verdict);
  doc["socle"] = socle_bound_label(a.socle);
  ordered_json evidence = evidence_json(a.verdict_evidence);
  for (auto& entry : evidence_json(a.socle_evidence))
    if (a.socle_evidence != a.verdict_evidence)
      evidence.push_back(std::move(entry));
  doc["evidence"] = std::move(evidence);
  doc["regular"] = a.regular;
  doc["initial_exponent"] = render_character(a.lambda0);
  doc["terminal_exponent"] = render_character(a.lambda1);
  doc["antidominant_exponent"] = render_character(a.lambda_ad);
  doc["mass"] = a.mass;
  doc["mult_initial"] = a.mult0;
  doc["mult_terminal"] = a.mult1;
  doc["branching_proved_irreducible"] = a.branching_proved_irreducible;
  return doc;
}

std::string analysis_csv(const CaseAnalysis& a) {
  std::ostringstream out;
  out << "descriptor,classification,socle,regular,mass,mult_initial,"
         "mult_terminal,evidence\n";
  out << csv_escape(render_descriptor(a.desc)) << ","
      << classification_name(a.verdict) << "," << socle_bound_label(a.socle)
      << "," << (a.regular ? "yes" : "no") << "," << a.mass << "," << a.mult0
      << "," << a.mult1 << "," << csv_escape(a.verdict_evidence) << "\n";
  return out.str();
}

std::string analysis_latex(const CaseAnalysis& a) {
  std::ostringstream out;
  out << "\\begin{tabular}{|l|l|}\n\\hline\n";
  out << "case & " << render_descriptor(a.desc) << " \\\\\n\\hline\n";
  out << "classification & " << latex_cell(a.verdict) << " \\\\\n\\hline\n";
  out << "socle & " << socle_bound_label(a.socle) << " \\\\\n\\hline\n";
  out << "mass & $" << a.mass << "$ \\\\\n\\hline\n";
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown format: " + name);
}

std::string render_table(const RootDatum& datum, const ReducibilityTable& table,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return table_text(table);
    case OutputFormat::Json: return table_json(datum, table);
    case OutputFormat::Csv: return table_csv(table);
    case OutputFormat::Latex: return table_latex(datum, table);
  }
  return "";
}

std::string render_analysis(const RootDatum& datum, const CaseAnalysis& a,
                            OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return analysis_text(a);
    case OutputFormat::Json: return analysis_json_doc(datum, a).dump(2) + "\n";
    case OutputFormat::Csv: return analysis_csv(a);
    case OutputFormat::Latex: return analysis_latex(a);
  }
  return "";
}

} // namespace dps
