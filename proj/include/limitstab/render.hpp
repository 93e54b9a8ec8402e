#pragma once

#include "limitstab/crossing.hpp"

#include <string>

namespace limitstab {

/// "wall<TAB>p/q" per wall, ascending.
std::string walls_tsv(const WallSet& walls);

/// Header "k_lo<TAB>k_hi<TAB>L", then one row per chamber. With
/// `collapse`, adjacent chambers of equal value share a row.
std::string table_tsv(const ChamberTable& table, bool collapse = false);

/// "(a,b),n1 | (c,d),n2"
std::string format_datum(const WallDatum& d);

/// Structured text: the wall, L-, L+, and one line per datum.
std::string report_text(const WallReport& report);

/// Number line with walls marked and chamber values listed underneath.
std::string table_text(const ChamberTable& table);

/// Standalone SVG, 1000x200 viewport, walls as labeled vertical lines.
std::string table_svg(const ChamberTable& table);

}  // namespace limitstab
