#pragma once

// Barcode rendering (ASCII, SVG 1.1) and interval interchange (JSON, CSV).
//
// Zero-length intervals are kept in the data and in JSON but never drawn.
// Every renderer is byte-deterministic for equal input.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "homnet/persistence.hpp"
#include "json.hpp"

namespace homnet {

namespace detail {

inline std::vector<Interval> drawable(const Barcode& b) {
  std::vector<Interval> out;
  for (const auto& iv : b.intervals)
    if (!iv.zero_length()) out.push_back(iv);
  std::sort(out.begin(), out.end(), interval_less);
  return out;
}

}  // namespace detail

struct AsciiLayout {
  std::size_t cell = 1;    // columns per level
  std::size_t gutter = 2;  // leading spaces on every interval row

  std::size_t column_of(Level l) const { return gutter + static_cast<std::size_t>(l) * cell; }
};

inline AsciiLayout ascii_layout(const Barcode& b, std::size_t width) {
  if (width == 0) throw std::invalid_argument("barcode width must be positive");
  if (width < b.level_count)
    throw std::invalid_argument("width " + std::to_string(width) + " is smaller than the level count " +
                                std::to_string(b.level_count));
  return {b.level_count ? width / b.level_count : 1, 2};
}

// Header line, then per dimension a `Hk` lane label followed by one row per
// interval: `[` at birth, `-` through the last level before death, `>` in
// the final column for intervals that never die.
inline std::string render_ascii(const Barcode& b, std::size_t width) {
  const auto layout = ascii_layout(b, width);
  const auto shown = detail::drawable(b);
  std::ostringstream out;
  out << "barcode: " << b.level_count << " levels, " << shown.size() << " intervals\n";
  const std::size_t span = layout.cell * b.level_count;
  std::optional<std::size_t> lane;
  for (const auto& iv : shown) {
    if (lane != iv.dim) {
      lane = iv.dim;
      out << 'H' << iv.dim << '\n';
    }
    std::string row(layout.gutter + span, ' ');
    const std::size_t begin = layout.column_of(iv.birth);
    const std::size_t end =
        iv.death ? std::min(layout.column_of(*iv.death), layout.gutter + span) : layout.gutter + span;
    for (std::size_t c = begin; c < end; ++c) row[c] = '-';
    row[begin] = '[';
    if (!iv.death) row[end - 1] = '>';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  return out.str();
}

struct SvgOptions {
  std::optional<Level> cursor;
  int level_width = 40;
  int row_height = 12;
  int lane_gap = 18;
  int margin_left = 48;
  int margin_top = 20;
};

// Horizontal coordinate of the dashed cursor for level l: the middle of the
// level's slot, so a bar [birth, death) crosses it iff birth <= l < death.
inline int svg_cursor_x(const SvgOptions& o, Level l) {
  return o.margin_left + static_cast<int>(l) * o.level_width + o.level_width / 2;
}

inline std::string render_svg(const Barcode& b, const SvgOptions& o = {}) {
  const auto shown = detail::drawable(b);
  std::size_t lanes = 0;
  for (std::size_t i = 0; i < shown.size(); ++i)
    if (i == 0 || shown[i].dim != shown[i - 1].dim) ++lanes;
  const int axis_end = o.margin_left + static_cast<int>(b.level_count) * o.level_width;
  const int plot_height = static_cast<int>(shown.size()) * o.row_height + static_cast<int>(lanes) * o.lane_gap;
  const int axis_y = o.margin_top + plot_height + 4;
  const int width = axis_end + 24;
  const int height = axis_y + 24;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
      << "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"black\"/></marker></defs>\n";
  out << "<line class=\"axis\" x1=\"" << o.margin_left << "\" y1=\"" << axis_y << "\" x2=\"" << axis_end
      << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
  for (Level l = 0; l < b.level_count; ++l)
    out << "<text class=\"tick\" x=\"" << o.margin_left + static_cast<int>(l) * o.level_width << "\" y=\""
        << axis_y + 14 << "\" font-size=\"10\">" << l << "</text>\n";

  int y = o.margin_top;
  std::optional<std::size_t> lane;
  for (const auto& iv : shown) {
    if (lane != iv.dim) {
      lane = iv.dim;
      y += o.lane_gap;
      out << "<text class=\"lane\" x=\"4\" y=\"" << y - 4 << "\" font-size=\"11\">H" << iv.dim << "</text>\n";
    }
    const int x1 = o.margin_left + static_cast<int>(iv.birth) * o.level_width;
    const int x2 = iv.death ? o.margin_left + static_cast<int>(*iv.death) * o.level_width : axis_end;
    out << "<line class=\"bar\" data-dim=\"" << iv.dim << "\" x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2
        << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"3\""
        << (iv.death ? "" : " marker-end=\"url(#arrow)\"") << "/>\n";
    y += o.row_height;
  }
  if (o.cursor) {
    if (*o.cursor >= b.level_count)
      throw std::out_of_range("cursor level " + std::to_string(*o.cursor) + " outside the barcode");
    const int x = svg_cursor_x(o, *o.cursor);
    out << "<line class=\"cursor\" x1=\"" << x << "\" y1=\"" << o.margin_top << "\" x2=\"" << x << "\" y2=\""
        << axis_y << "\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kBarcodeFormat = "homnet-barcode/1";

inline nlohmann::json to_json(const Barcode& b) {
  nlohmann::json doc;
  doc["format"] = kBarcodeFormat;
  doc["level_count"] = b.level_count;
  doc["dim_count"] = b.dim_count;
  doc["level_semantics"] = b.level_semantics;
  doc["provenance"] = nlohmann::json::object();
  for (const auto& [k, v] : b.provenance) doc["provenance"][k] = v;
  auto& arr = doc["intervals"] = nlohmann::json::array();
  for (const auto& iv : b.intervals) {
    nlohmann::json j;
    j["dim"] = iv.dim;
    j["birth"] = iv.birth;
    j["death"] = iv.death ? nlohmann::json(*iv.death) : nlohmann::json(nullptr);
    j["positions"] = {iv.birth_position,
                      iv.death_position ? nlohmann::json(*iv.death_position) : nlohmann::json(nullptr)};
    j["zero_length"] = iv.zero_length();
    arr.push_back(std::move(j));
  }
  return doc;
}

inline std::string export_json(const Barcode& b) { return to_json(b).dump(1) + "\n"; }

inline Barcode import_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw SchemaError("barcode schema violation: " + what);
  };
  require(doc.is_object(), "document must be an object");
  require(doc.contains("intervals") && doc["intervals"].is_array(), "'intervals' must be an array");
  auto count_field = [&](const char* name) -> std::size_t {
    if (!doc.contains(name)) return 0;
    require(doc[name].is_number_unsigned(), std::string("'") + name + "' must be a non-negative integer");
    return doc[name].get<std::size_t>();
  };

  Barcode b;
  b.level_count = count_field("level_count");
  b.dim_count = count_field("dim_count");
  if (doc.contains("level_semantics")) {
    require(doc["level_semantics"].is_string(), "'level_semantics' must be a string");
    b.level_semantics = doc["level_semantics"].get<std::string>();
  }
  if (doc.contains("provenance")) {
    require(doc["provenance"].is_object(), "'provenance' must be an object");
    for (const auto& [k, v] : doc["provenance"].items()) {
      require(v.is_string(), "provenance values must be strings");
      b.provenance[k] = v.get<std::string>();
    }
  }
  std::size_t max_dim_plus_one = 0;
  for (const auto& j : doc["intervals"]) {
    require(j.is_object(), "interval must be an object");
    require(j.contains("dim") && j["dim"].is_number_unsigned(), "interval 'dim' must be a non-negative integer");
    require(j.contains("birth") && j["birth"].is_number_unsigned(), "interval 'birth' must be a non-negative integer");
    require(j.contains("death") && (j["death"].is_null() || j["death"].is_number_unsigned()),
            "interval 'death' must be a non-negative integer or null");
    Interval iv;
    iv.dim = j["dim"].get<std::size_t>();
    iv.birth = j["birth"].get<Level>();
    if (!j["death"].is_null()) {
      iv.death = j["death"].get<Level>();
      require(*iv.death >= iv.birth, "death precedes birth");
    }
    if (j.contains("positions")) {
      const auto& p = j["positions"];
      require(p.is_array() && p.size() == 2 && p[0].is_number_unsigned() &&
                  (p[1].is_null() || p[1].is_number_unsigned()),
              "'positions' must be [birth, death|null]");
      iv.birth_position = p[0].get<Position>();
      if (!p[1].is_null()) iv.death_position = p[1].get<Position>();
      require(iv.death_position.has_value() == iv.death.has_value(), "positions and death disagree on infinity");
    }
    max_dim_plus_one = std::max(max_dim_plus_one, iv.dim + 1);
    b.intervals.push_back(iv);
  }
  if (!doc.contains("dim_count")) b.dim_count = max_dim_plus_one;
  std::sort(b.intervals.begin(), b.intervals.end(), interval_less);
  return b;
}

// CSV alternative: `dim,birth,death,birth_position,death_position`, with
// `inf` for intervals that never die.
inline std::string export_csv(const Barcode& b) {
  std::ostringstream out;
  out << "dim,birth,death,birth_position,death_position\n";
  for (const auto& iv : b.intervals) {
    out << iv.dim << ',' << iv.birth << ',';
    if (iv.death) out << *iv.death; else out << "inf";
    out << ',' << iv.birth_position << ',';
    if (iv.death_position) out << *iv.death_position; else out << "inf";
    out << '\n';
  }
  return out.str();
}

}  // namespace homnet
