#pragma once

// Instance files (JSON) and SVG pictures of packings.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"

namespace cofl {

using AnyInstance = std::variant<Instance, CircularInstance>;

// Raised for malformed or invalid instance files. line/column are 1-based
// and zero when the problem is not tied to a text position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

using nlohmann::json;

inline void text_position(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  byte = std::min(byte, text.size());
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

inline void allow_only(const json& obj, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (std::string_view k : keys) known = known || it.key() == k;
    if (!known) throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  }
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

inline Point point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected [x, y]");
  return {number(v[0], where), number(v[1], where)};
}

inline int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

inline std::vector<Point> point_list(const json& v) {
  if (!v.is_array()) throw ParseError("points: expected a list of [x, y]");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(point(v[i], "points[" + std::to_string(i) + "]"));
  return out;
}

inline json point_json(const Point& pt) { return json::array({pt.x, pt.y}); }

}  // namespace detail

// Parses an instance document. Demand points are sorted on load; the result
// is validated.
inline AnyInstance parse_instance(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0, column = 0;
    detail::text_position(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
  }
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  const json& kind = detail::require(doc, "kind", "instance");
  if (!kind.is_string()) throw ParseError("kind: expected \"segment\" or \"circle\"");
  const std::string kind_name = kind.get<std::string>();
  try {
    if (kind_name == "segment") {
      detail::allow_only(doc, {"kind", "metric", "segment", "k", "points"}, "instance");
      Instance inst;
      if (auto it = doc.find("metric"); it != doc.end()) {
        const std::string m = it->is_string() ? it->get<std::string>() : "";
        if (m == "l2") inst.metric = Metric::kEuclidean;
        else if (m == "linf") inst.metric = Metric::kRectilinear;
        else throw ParseError("metric: expected \"l2\" or \"linf\"");
      }
      const json& seg = detail::require(doc, "segment", "instance");
      detail::allow_only(seg, {"p", "q"}, "segment");
      inst.p = detail::point(detail::require(seg, "p", "segment"), "segment.p");
      inst.q = detail::point(detail::require(seg, "q", "segment"), "segment.q");
      inst.k = detail::integer(detail::require(doc, "k", "instance"), "k");
      if (auto it = doc.find("points"); it != doc.end()) inst.points = detail::point_list(*it);
      sort_points(inst.points);
      validate(inst);
      return inst;
    }
    if (kind_name == "circle") {
      detail::allow_only(doc, {"kind", "metric", "circle", "k", "points"}, "instance");
      if (auto it = doc.find("metric"); it != doc.end() && *it != "l2")
        throw ParseError("metric: circular instances support only \"l2\"");
      CircularInstance inst;
      const json& circle = detail::require(doc, "circle", "instance");
      detail::allow_only(circle, {"center", "r"}, "circle");
      inst.center = detail::point(detail::require(circle, "center", "circle"), "circle.center");
      inst.r_c = detail::number(detail::require(circle, "r", "circle"), "circle.r");
      inst.k = detail::integer(detail::require(doc, "k", "instance"), "k");
      if (auto it = doc.find("points"); it != doc.end()) inst.points = detail::point_list(*it);
      validate(inst);
      return inst;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  throw ParseError("kind: expected \"segment\" or \"circle\", got \"" + kind_name + "\"");
}

// One field per line and one point per line, so fixtures diff cleanly.
// Numbers use the shortest representation that reads back exactly.
inline std::string to_json(const AnyInstance& any) {
  using detail::json;
  auto num = [](double v) { return json(v).dump(); };
  auto pt = [&](const Point& p) { return "[" + num(p.x) + ", " + num(p.y) + "]"; };
  std::ostringstream os;
  const std::vector<Point>* points = nullptr;
  if (const auto* inst = std::get_if<Instance>(&any)) {
    os << "{\n  \"kind\": \"segment\",\n  \"metric\": \"" << to_string(inst->metric) << "\",\n"
       << "  \"segment\": {\"p\": " << pt(inst->p) << ", \"q\": " << pt(inst->q) << "},\n"
       << "  \"k\": " << inst->k << ",\n";
    points = &inst->points;
  } else {
    const auto& c = std::get<CircularInstance>(any);
    os << "{\n  \"kind\": \"circle\",\n  \"metric\": \"l2\",\n"
       << "  \"circle\": {\"center\": " << pt(c.center) << ", \"r\": " << num(c.r_c) << "},\n"
       << "  \"k\": " << c.k << ",\n";
    points = &c.points;
  }
  os << "  \"points\": [";
  for (std::size_t i = 0; i < points->size(); ++i) os << (i ? ",\n    " : "\n    ") << pt((*points)[i]);
  os << (points->empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Viewport {
  double min_x, min_y, max_x, max_y;

  void include(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

}  // namespace detail

// SVG 1.1 drawing of the instance and a packing: facilities as circles
// (squares for linf), demand points as crosses. The y axis points up.
inline std::string render_svg(const AnyInstance& any, const Packing& pk) {
  using detail::fmt;
  const double r = pk.radius;
  std::vector<Point> centers;
  const std::vector<Point>* points = nullptr;
  bool squares = false;
  detail::Viewport vp{1e300, 1e300, -1e300, -1e300};
  std::ostringstream body;
  if (const auto* inst = std::get_if<Instance>(&any)) {
    squares = inst->metric == Metric::kRectilinear;
    for (double c : pk.centers) centers.push_back({c, inst->line_y()});
    points = &inst->points;
    vp.include(inst->p.x, inst->p.y);
    vp.include(inst->q.x, inst->q.y);
    body << "  <line x1=\"" << fmt(inst->p.x) << "\" y1=\"" << fmt(inst->p.y) << "\" x2=\"" << fmt(inst->q.x)
         << "\" y2=\"" << fmt(inst->q.y) << "\" stroke=\"black\" stroke-width=\"%W\"/>\n";
  } else {
    const auto& c = std::get<CircularInstance>(any);
    for (double a : pk.centers) centers.push_back(c.at(a));
    points = &c.points;
    vp.include(c.center.x - c.r_c, c.center.y - c.r_c);
    vp.include(c.center.x + c.r_c, c.center.y + c.r_c);
    body << "  <circle cx=\"" << fmt(c.center.x) << "\" cy=\"" << fmt(c.center.y) << "\" r=\"" << fmt(c.r_c)
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"%W\"/>\n";
  }
  for (const Point& c : centers) {
    vp.include(c.x - r, c.y - r);
    vp.include(c.x + r, c.y + r);
  }
  for (const Point& pt : *points) vp.include(pt.x, pt.y);
  const double span = std::max({vp.max_x - vp.min_x, vp.max_y - vp.min_y, 1e-6});
  const double pad = 0.05 * span;
  const double stroke = span / 400.0;
  const double arm = span / 100.0;

  for (const Point& c : centers) {
    if (squares) {
      body << "  <rect x=\"" << fmt(c.x - r) << "\" y=\"" << fmt(c.y - r) << "\" width=\"" << fmt(2 * r)
           << "\" height=\"" << fmt(2 * r) << "\" fill=\"steelblue\" fill-opacity=\"0.3\" stroke=\"steelblue\" stroke-width=\"%W\"/>\n";
    } else {
      body << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(r)
           << "\" fill=\"steelblue\" fill-opacity=\"0.3\" stroke=\"steelblue\" stroke-width=\"%W\"/>\n";
    }
  }
  for (const Point& pt : *points) {
    body << "  <path d=\"M" << fmt(pt.x - arm) << ' ' << fmt(pt.y - arm) << " L" << fmt(pt.x + arm) << ' '
         << fmt(pt.y + arm) << " M" << fmt(pt.x - arm) << ' ' << fmt(pt.y + arm) << " L" << fmt(pt.x + arm) << ' '
         << fmt(pt.y - arm) << "\" stroke=\"firebrick\" stroke-width=\"%W\"/>\n";
  }

  std::string shapes = body.str();
  const std::string w = fmt(stroke);
  for (std::size_t pos = shapes.find("%W"); pos != std::string::npos; pos = shapes.find("%W", pos + w.size()))
    shapes.replace(pos, 2, w);

  const double x0 = vp.min_x - pad, y0 = vp.min_y - pad;
  const double width = vp.max_x - vp.min_x + 2 * pad, height = vp.max_y - vp.min_y + 2 * pad;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
     << fmt(800.0 * height / width) << "\" viewBox=\"" << fmt(x0) << ' ' << fmt(-(y0 + height)) << ' ' << fmt(width)
     << ' ' << fmt(height) << "\">\n"
     << " <g transform=\"scale(1,-1)\">\n"
     << shapes << " </g>\n</svg>\n";
  return os.str();
}

}  // namespace cofl
