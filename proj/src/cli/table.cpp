#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "johnson/cli.hpp"
#include "johnson/spectral.hpp"
#include "johnson/terwilliger.hpp"

namespace johnson::cli {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("table row width mismatch");
  rows_.push_back(std::move(row));
}

namespace {

std::string csv_field(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string quoted = "\"";
    for (char ch : *s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  if (const auto* i = std::get_if<Index>(&c)) return std::to_string(*i);
  return format_double(std::get<double>(c));
}

nlohmann::ordered_json json_field(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<Index>(&c)) return *i;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return nullptr;
  // Round-trip through the CSV text so both formats carry the same digits.
  return std::stod(format_double(v));
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << columns_[c];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
    os << '\n';
  }
}

nlohmann::ordered_json Table::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = json_field(row[c]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

HalfInt parse_half_int(const std::string& text) {
  if (text.size() > 2 && text.ends_with("/2")) {
    const std::string numerator = text.substr(0, text.size() - 2);
    std::size_t used = 0;
    int twice = 0;
    try {
      twice = std::stoi(numerator, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != numerator.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return HalfInt::from_twice(twice);
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  const double twice = 2.0 * v;
  if (std::abs(twice - std::round(twice)) > 1e-9) {
    throw std::invalid_argument("not an integer or half-integer: '" + text + "'");
  }
  return HalfInt::from_twice(static_cast<int>(std::lround(twice)));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty list element in '" + text + "'");
    parts.push_back(item.substr(b, e - b + 1));
  }
  if (parts.empty()) throw std::invalid_argument("empty list");
  return parts;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots));
    const int hi = parse_int(part.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("not a number: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<HalfInt> parse_half_int_list(const std::string& text) {
  std::vector<HalfInt> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_half_int(part));
  return out;
}

std::string join_half_ints(const std::vector<HalfInt>& js) {
  std::string s;
  for (std::size_t i = 0; i < js.size(); ++i) s += (i ? ";" : "") + to_string(js[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

HoppingProfile resolve_hopping(const HoppingOptions& opt, const GraphSpec& spec) {
  if (opt.exp_hopping && !opt.alpha.empty()) {
    throw std::invalid_argument("--alpha and --exp-hopping are exclusive");
  }
  if (opt.exp_hopping) return HoppingProfile::exponential(*opt.exp_hopping, spec);
  if (opt.alpha.empty()) return HoppingProfile::nearest_neighbour(spec);
  auto alphas = parse_double_list(opt.alpha);
  if (static_cast<int>(alphas.size()) > spec.k() + 1) {
    throw std::invalid_argument("--alpha has more than k+1 coefficients");
  }
  alphas.resize(static_cast<std::size_t>(spec.k() + 1), 0.0);
  return HoppingProfile::make(std::move(alphas), spec);
}

int levels_for_fraction(double f, bool weighted, const GraphSpec& spec) {
  if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("fill fraction must lie in (0, 1]");
  const int count = spec.k() + 1;
  if (!weighted) return std::clamp(static_cast<int>(std::lround(f * count)), 1, count);
  const auto target = f * static_cast<double>(spec.vertex_count());
  Index filled = 0;
  const auto levels = spec.levels();
  for (int l = 0; l < count; ++l) {
    filled += level_degeneracy(levels[static_cast<std::size_t>(l)], spec);
    if (static_cast<double>(filled) >= target) return l + 1;
  }
  return count;
}

FillingSpec resolve_filling(const FillingOptions& opt, const EnergyTable& table,
                            const GraphSpec& spec) {
  const int chosen = !opt.se.empty() + opt.levels.has_value() + opt.fraction.has_value();
  if (chosen > 1) throw std::invalid_argument("--se, --fill-levels and --fill-fraction are exclusive");
  if (opt.weighted && !opt.fraction) throw std::invalid_argument("--fill-weighted needs --fill-fraction");
  if (!opt.se.empty()) return FillingSpec(parse_half_int_list(opt.se), spec);
  if (opt.levels) return FillingSpec::lowest(*opt.levels, spec);
  if (opt.fraction) return FillingSpec::lowest(levels_for_fraction(*opt.fraction, opt.weighted, spec), spec);
  return fill_ground_state(table, spec, 1e-12, opt.include_zero);
}

}  // namespace johnson::cli
