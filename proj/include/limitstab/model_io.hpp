#pragma once

#include "limitstab/geometry.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace limitstab {

enum class OutputFormat { Tsv, Text, Svg };

std::string_view to_string(OutputFormat format);
/// "tsv", "text" or "svg". Throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

/// Rigid (-1,-1)-curve tables cover 1 <= |n| <= this bound.
inline constexpr std::int64_t kRigidCurveWindow = 12;

/// Single rigid curve C of degree d.
ThreefoldData conifold_single(const Rational& d);
/// Two disjoint rigid curves of degrees d1 > d2 > 0, with the extra
/// classes of [C1] + [C2].
ThreefoldData conifold_pair(const Rational& d1, const Rational& d2);
/// A rigid curve of degree d together with the class 2[C].
ThreefoldData conifold_double(const Rational& d);

/// Expands a preset string. Accepted spellings:
///   conifold_double:1   conifold_pair:3,2   conifold_pair(3,2)
///   conifold_double d=1 conifold_pair d1=3 d2=2
/// Throws ModelError for unknown names or bad parameters.
ThreefoldData preset_data(std::string_view preset);

/// Parses "(a,b,...)", "a,b,..." or a bare integer for rank-1 models.
CurveClass parse_curve_class(std::string_view text);

struct ModelConfig {
  std::optional<std::string> preset;  // the preset string as written, if any
  ThreefoldData data;
  OutputFormat format = OutputFormat::Tsv;
};

/// Parses the sectioned key-value config format. Errors are ModelError
/// with a "line N:" prefix.
ModelConfig parse_config(std::string_view text);
ModelConfig load_config(const std::filesystem::path& path);
NumericalThreefold load_model(const std::filesystem::path& path);

/// Explicit-table config text; parse_config(serialize_model(d)).data == d.
std::string serialize_model(const ThreefoldData& data, OutputFormat format = OutputFormat::Tsv);

}  // namespace limitstab
