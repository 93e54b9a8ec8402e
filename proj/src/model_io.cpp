#include "limitstab/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace limitstab {

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Tsv: return "tsv";
    case OutputFormat::Text: return "text";
    case OutputFormat::Svg: return "svg";
  }
  return "tsv";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "text") return OutputFormat::Text;
  if (text == "svg") return OutputFormat::Svg;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected tsv, text or svg)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

CurveClass unit(std::size_t rank, std::size_t i, std::int64_t mult = 1) {
  CurveClass c = CurveClass::zero(rank);
  std::vector<std::int64_t> v = c.coeffs();
  v[i] = mult;
  return CurveClass(std::move(v));
}

// N_{n,[C]} = 1 and P_{n,[C]} = (-1)^(n-1) n, P_{-n,[C]} = 0 on the window.
void add_rigid_curve(ThreefoldData& d, const CurveClass& c) {
  for (std::int64_t n = 1; n <= kRigidCurveWindow; ++n) {
    d.n_table[{n, c}] = 1;
    d.n_table[{-n, c}] = 1;
    d.p_seed[{n, c}] = Rational(n % 2 == 0 ? -n : n);
    d.p_seed[{-n, c}] = 0;
  }
  d.p_seed[{0, c}] = 0;
}

void require_positive(const Rational& d, const char* what) {
  if (d <= 0) throw ModelError(std::string(what) + " must be positive, got " + format_rational(d));
}

}  // namespace

ThreefoldData conifold_single(const Rational& d) {
  require_positive(d, "conifold_single: d");
  ThreefoldData data;
  data.name = "conifold_single(" + format_rational(d) + ")";
  data.basis = {{"C", d}};
  const CurveClass c({1});
  data.m_table[c] = 1;
  add_rigid_curve(data, c);
  return data;
}

ThreefoldData conifold_double(const Rational& d) {
  require_positive(d, "conifold_double: d");
  ThreefoldData data;
  data.name = "conifold_double(" + format_rational(d) + ")";
  data.basis = {{"C", d}};
  const CurveClass c({1});
  const CurveClass c2({2});
  data.m_table[c] = 1;
  add_rigid_curve(data, c);
  for (std::int64_t s : {1, -1}) {
    data.n_table[{3 * s, c2}] = 0;
    data.n_table[{4 * s, c2}] = Rational(-1, 4);
  }
  data.p_seed[{3, c2}] = -2;
  data.p_seed[{4, c2}] = 4;
  data.p_seed[{-3, c2}] = 0;
  data.p_seed[{-4, c2}] = 0;
  return data;
}

ThreefoldData conifold_pair(const Rational& d1, const Rational& d2) {
  require_positive(d2, "conifold_pair: d2");
  if (!(d1 > d2)) {
    throw ModelError("conifold_pair requires d1 > d2 > 0, got d1=" + format_rational(d1) +
                     ", d2=" + format_rational(d2));
  }
  ThreefoldData data;
  data.name = "conifold_pair(" + format_rational(d1) + "," + format_rational(d2) + ")";
  data.basis = {{"C1", d1}, {"C2", d2}};
  const CurveClass c1 = unit(2, 0);
  const CurveClass c2 = unit(2, 1);
  const CurveClass both = c1 + c2;
  data.m_table[c1] = 1;
  data.m_table[c2] = 1;
  data.m_table[both] = 1;
  add_rigid_curve(data, c1);
  add_rigid_curve(data, c2);
  for (std::int64_t n : {1, 2}) {
    data.n_table[{n, both}] = 1;
    data.n_table[{-n, both}] = 1;
    data.p_seed[{-n, both}] = 0;
  }
  data.p_seed[{1, both}] = 1;
  data.p_seed[{2, both}] = -1;
  return data;
}

ThreefoldData preset_data(std::string_view preset) {
  const std::string_view original = preset;
  preset = trim(preset);
  std::size_t cut = 0;
  while (cut < preset.size() && (std::isalnum(static_cast<unsigned char>(preset[cut])) || preset[cut] == '_')) ++cut;
  const std::string name(preset.substr(0, cut));
  std::string rest(preset.substr(cut));
  for (char& ch : rest) {
    if (ch == ':' || ch == '(' || ch == ')' || ch == ',') ch = ' ';
  }

  std::vector<std::string> positional;
  std::map<std::string, std::string> named;
  std::istringstream in(rest);
  for (std::string tok; in >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      positional.push_back(tok);
    } else {
      named[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }

  auto arg = [&](const std::vector<std::string>& keys, std::size_t pos) -> Rational {
    for (const auto& key : keys) {
      auto it = named.find(key);
      if (it != named.end()) {
        Rational v = parse_rational(it->second);
        named.erase(it);
        return v;
      }
    }
    if (pos < positional.size()) return parse_rational(positional[pos]);
    throw ModelError("preset '" + std::string(original) + "': missing parameter " + keys.front());
  };

  try {
    ThreefoldData out;
    std::size_t expected = 0;
    if (name == "conifold_single") {
      out = conifold_single(arg({"d"}, 0));
      expected = 1;
    } else if (name == "conifold_double") {
      out = conifold_double(arg({"d"}, 0));
      expected = 1;
    } else if (name == "conifold_pair") {
      const Rational d1 = arg({"d1"}, 0);
      const Rational d2 = arg({"d2"}, 1);
      out = conifold_pair(d1, d2);
      expected = 2;
    } else {
      throw ModelError("unknown preset '" + name + "' (expected conifold_single, conifold_pair or conifold_double)");
    }
    if (!named.empty()) throw ModelError("preset '" + std::string(original) + "': unknown parameter " + named.begin()->first);
    if (positional.size() > expected) throw ModelError("preset '" + std::string(original) + "': too many parameters");
    return out;
  } catch (const std::invalid_argument& e) {
    throw ModelError("preset '" + std::string(original) + "': " + e.what());
  }
}

CurveClass parse_curve_class(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in class '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (trim(s).empty()) throw std::invalid_argument("empty curve class");
  std::vector<std::int64_t> coeffs;
  for (auto part : split(s, ',')) coeffs.push_back(parse_int(part));
  return CurveClass(std::move(coeffs));
}

namespace {

enum class Section { None, Model, Basis, MTable, NTable, PSeed, Output };

Section section_of(std::string_view name) {
  if (name == "model") return Section::Model;
  if (name == "basis") return Section::Basis;
  if (name == "m_table") return Section::MTable;
  if (name == "n_table") return Section::NTable;
  if (name == "p_seed") return Section::PSeed;
  if (name == "output") return Section::Output;
  throw std::invalid_argument("unknown section [" + std::string(name) + "]");
}

// "n (a,b)" -> key
ChargeKey parse_charge_key(std::string_view text) {
  text = trim(text);
  const auto sp = text.find_first_of(" \t(");
  if (sp == std::string_view::npos) throw std::invalid_argument("expected 'n (class)', got '" + std::string(text) + "'");
  return ChargeKey{parse_int(text.substr(0, sp)), parse_curve_class(text.substr(sp))};
}

}  // namespace

ModelConfig parse_config(std::string_view text) {
  ModelConfig cfg;
  Section section = Section::None;
  bool explicit_tables = false;
  bool saw_omega = false, saw_c2 = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    try {
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw std::invalid_argument("unterminated section header");
        section = section_of(trim(line.substr(1, line.size() - 2)));
        if (section != Section::Model && section != Section::Output) explicit_tables = true;
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("expected 'key = value'");
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) throw std::invalid_argument("empty key or value");

      switch (section) {
        case Section::None:
          throw std::invalid_argument("entry outside of any section");
        case Section::Model:
          if (key == "name") {
            cfg.data.name = std::string(value);
          } else if (key == "omega_cubed") {
            cfg.data.omega_cubed = parse_rational(value);
            saw_omega = true;
          } else if (key == "c2_omega") {
            cfg.data.c2_omega = parse_rational(value);
            saw_c2 = true;
          } else if (key == "preset") {
            cfg.preset = std::string(value);
          } else {
            throw std::invalid_argument("unknown [model] key '" + std::string(key) + "'");
          }
          break;
        case Section::Basis:
          for (const auto& b : cfg.data.basis) {
            if (b.name == key) throw std::invalid_argument("duplicate basis curve '" + std::string(key) + "'");
          }
          cfg.data.basis.push_back({std::string(key), parse_rational(value)});
          break;
        case Section::MTable:
          if (!cfg.data.m_table.emplace(parse_curve_class(key), parse_rational(value)).second) {
            throw std::invalid_argument("duplicate m_table entry " + std::string(key));
          }
          break;
        case Section::NTable:
          if (!cfg.data.n_table.emplace(parse_charge_key(key), parse_rational(value)).second) {
            throw std::invalid_argument("duplicate n_table entry " + std::string(key));
          }
          break;
        case Section::PSeed:
          if (!cfg.data.p_seed.emplace(parse_charge_key(key), parse_rational(value)).second) {
            throw std::invalid_argument("duplicate p_seed entry " + std::string(key));
          }
          break;
        case Section::Output:
          if (key != "format") throw std::invalid_argument("unknown [output] key '" + std::string(key) + "'");
          cfg.format = parse_output_format(value);
          break;
      }
    } catch (const std::exception& e) {
      throw ModelError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (cfg.preset) {
    if (explicit_tables || saw_omega || saw_c2) {
      throw ModelError("preset and explicit model blocks are mutually exclusive");
    }
    const std::string name = cfg.data.name;
    cfg.data = preset_data(*cfg.preset);
    if (!name.empty()) cfg.data.name = name;
  }
  NumericalThreefold validate(cfg.data);
  return cfg;
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

NumericalThreefold load_model(const std::filesystem::path& path) {
  return NumericalThreefold(load_config(path).data);
}

std::string serialize_model(const ThreefoldData& data, OutputFormat format) {
  std::ostringstream out;
  out << "[model]\n";
  if (!data.name.empty()) out << "name = " << data.name << "\n";
  out << "omega_cubed = " << format_rational(data.omega_cubed) << "\n";
  out << "c2_omega = " << format_rational(data.c2_omega) << "\n";
  out << "\n[basis]\n";
  for (const auto& b : data.basis) out << b.name << " = " << format_rational(b.degree) << "\n";
  out << "\n[m_table]\n";
  for (const auto& [beta, v] : data.m_table) out << to_string(beta) << " = " << format_rational(v) << "\n";
  out << "\n[n_table]\n";
  for (const auto& [key, v] : data.n_table) {
    out << key.n << " " << to_string(key.beta) << " = " << format_rational(v) << "\n";
  }
  out << "\n[p_seed]\n";
  for (const auto& [key, v] : data.p_seed) {
    out << key.n << " " << to_string(key.beta) << " = " << format_rational(v) << "\n";
  }
  out << "\n[output]\nformat = " << to_string(format) << "\n";
  return out.str();
}

}  // namespace limitstab
