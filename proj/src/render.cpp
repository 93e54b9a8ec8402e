#include "limitstab/render.hpp"

#include <sstream>

namespace limitstab {

std::string walls_tsv(const WallSet& walls) {
  std::string out;
  for (const auto& w : walls.walls) out += "wall\t" + format_rational(w) + "\n";
  return out;
}

namespace {

std::string bound(const std::optional<Rational>& q, const char* inf) {
  return q ? format_rational(*q) : std::string(inf);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Affine map of [k_lo, k_hi] onto [x0, x1] pixels; the only place exact
// values become approximate, and only for drawing.
double to_pixel(const Rational& k, const Rational& lo, const Rational& hi, double x0, double x1) {
  const Rational t = (k - lo) / (hi - lo);
  return x0 + (x1 - x0) * t.convert_to<double>();
}

}  // namespace

std::string table_tsv(const ChamberTable& table, bool collapse) {
  std::string out = "k_lo\tk_hi\tL\n";
  for (const auto& e : collapse ? table.collapsed() : table.entries) {
    out += bound(e.chamber.lo, "-inf") + "\t" + bound(e.chamber.hi, "inf") + "\t" + format_rational(e.value) + "\n";
  }
  return out;
}

std::string format_datum(const WallDatum& d) {
  return to_string(d.beta1) + "," + std::to_string(d.n1) + " | " + to_string(d.beta2) + "," + std::to_string(d.n2);
}

std::string report_text(const WallReport& report) {
  std::ostringstream out;
  out << "wall k0 = " << format_rational(report.k0) << "\n";
  out << "  L- = " << format_rational(report.l_minus) << "\n";
  out << "  L+ = " << format_rational(report.l_plus) << "\n";
  out << "  total = " << format_rational(report.total) << "\n";
  if (report.terms.empty()) out << "  (no admissible data)\n";
  for (const auto& t : report.terms) {
    const char* type = t.datum.sub_admissible ? (t.datum.quotient_admissible ? "sub+quotient" : "sub") : "quotient";
    out << "  datum " << format_datum(t.datum) << "  type=" << type
        << "  N=" << (t.n_value ? format_rational(*t.n_value) : std::string("missing"))
        << "  coeff=" << format_rational(t.coefficient)
        << "  L0=" << (t.l_at_wall ? format_rational(*t.l_at_wall) : std::string("-"))
        << " (" << to_string(t.side) << ")"
        << "  contribution=" << format_rational(t.contribution) << (t.ambiguous ? "  [ambiguous]" : "") << "\n";
  }
  for (const auto& w : report.warnings) out << "  warning: " << w << "\n";
  return out.str();
}

std::string table_text(const ChamberTable& table) {
  std::ostringstream out;
  out << "L_{" << table.n << "," << to_string(table.beta) << "}(k) on [" << format_rational(table.k_lo) << ", "
      << format_rational(table.k_hi) << "]\n";
  out << format_rational(table.k_lo);
  for (const auto& e : table.entries) {
    out << " --(" << format_rational(e.value) << ")-- ";
    out << (e.chamber.hi && *e.chamber.hi != table.k_hi ? "|" + format_rational(*e.chamber.hi) + "|"
                                                        : format_rational(table.k_hi));
  }
  out << "\n";
  for (const auto& r : table.reports) {
    out << "  " << format_rational(r.k0) << ": " << format_rational(r.l_minus) << " -> "
        << format_rational(r.l_plus) << (r.total == 0 ? "  (no jump)" : "") << "\n";
  }
  return out.str();
}

std::string table_svg(const ChamberTable& table) {
  constexpr double x0 = 40, x1 = 960, axis_y = 110;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"200\" viewBox=\"0 0 1000 200\">\n";
  out << "  <title>" << xml_escape("L_{" + std::to_string(table.n) + "," + to_string(table.beta) + "}(k)")
      << "</title>\n";
  out << "  <rect width=\"1000\" height=\"200\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << x0 << "\" y1=\"" << axis_y << "\" x2=\"" << x1 << "\" y2=\"" << axis_y
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << x0 << "\" y=\"" << axis_y + 40 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << xml_escape(format_rational(table.k_lo)) << "</text>\n";
  out << "  <text x=\"" << x1 << "\" y=\"" << axis_y + 40 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << xml_escape(format_rational(table.k_hi)) << "</text>\n";
  for (const auto& r : table.reports) {
    const double x = to_pixel(r.k0, table.k_lo, table.k_hi, x0, x1);
    const char* colour = r.total == 0 ? "#bbbbbb" : "#c0392b";
    out << "  <line x1=\"" << x << "\" y1=\"" << axis_y - 60 << "\" x2=\"" << x << "\" y2=\"" << axis_y + 20
        << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << axis_y + 40 << "\" font-size=\"12\" text-anchor=\"middle\">"
        << xml_escape(format_rational(r.k0)) << "</text>\n";
  }
  for (const auto& e : table.entries) {
    const Rational lo = e.chamber.lo.value_or(table.k_lo);
    const Rational hi = e.chamber.hi.value_or(table.k_hi);
    const double x = (to_pixel(lo, table.k_lo, table.k_hi, x0, x1) + to_pixel(hi, table.k_lo, table.k_hi, x0, x1)) / 2;
    out << "  <text x=\"" << x << "\" y=\"" << axis_y - 15 << "\" font-size=\"14\" text-anchor=\"middle\">"
        << xml_escape(format_rational(e.value)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace limitstab
