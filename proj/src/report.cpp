#include "quadcrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace quadcrit {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void dump(const Json& v, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump(e, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

Json exact_json(const Vec2<Surd>& p) { return {{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }
Json exact_json(const ExactPoint& p) { return {{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }
Json point_json(const Point& p) { return {{"x", p.x}, {"y", p.y}}; }

Json conic_payload_json(const ConicClass& cls) {
  return std::visit(
      [](const auto& p) -> Json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, std::monostate>) {
          return Json::object();
        } else if constexpr (std::is_same_v<P, PointPayload>) {
          return {{"center", exact_json(p.center)}};
        } else if constexpr (std::is_same_v<P, EllipsePayload>) {
          return {{"center", exact_json(p.center)},
                  {"semi_axes", {p.semi_u, p.semi_v}},
                  {"angle", p.angle},
                  {"level", to_string(p.level)}};
        } else if constexpr (std::is_same_v<P, HyperbolaPayload>) {
          return {{"center", exact_json(p.center)},
                  {"transverse", p.transverse},
                  {"conjugate", p.conjugate},
                  {"angle", p.angle},
                  {"level", to_string(p.level)}};
        } else if constexpr (std::is_same_v<P, ParabolaPayload>) {
          return {{"vertex", exact_json(p.vertex)},
                  {"axis", exact_json(p.opening)},
                  {"focal_length", p.focal_length}};
        } else {
          Json lines = Json::array();
          for (const auto& l : p.lines) {
            lines.push_back({{"normal", exact_json(l.normal)},
                             {"offset", to_string(l.offset)},
                             {"unit_normal", point_json(l.unit_normal())},
                             {"unit_offset", l.unit_offset()}});
          }
          Json out = {{"lines", lines}};
          if (p.center) out["center"] = exact_json(*p.center);
          return out;
        }
      },
      cls.payload);
}

Json component_json(const J1Component& c) {
  Json out;
  out["kind"] = j1_kind_name(c.kind);
  if (c.source_branch) out["source_branch"] = *c.source_branch;
  Json payload = Json::object();
  switch (c.kind) {
    case J1Kind::PointImage:
      payload["point"] = point_json(c.point);
      break;
    case J1Kind::LineImage:
    case J1Kind::RayImage:
      payload[c.kind == J1Kind::RayImage ? "vertex" : "point"] = point_json(c.point);
      payload["direction"] = point_json(c.direction);
      break;
    case J1Kind::ParabolaImage:
      payload["vertex"] = point_json(c.point);
      payload["axis"] = point_json(c.direction);
      payload["focal_length"] = c.focal_length;
      break;
    default:
      payload["anchor"] = point_json(c.point);
      break;
  }
  if (c.exact_point) payload["exact_point"] = exact_json(*c.exact_point);
  if (c.exact_direction) payload["exact_direction"] = exact_json(*c.exact_direction);
  if (c.curve) {
    payload["parametrization"] = {{"p0", exact_json(c.curve->p0)},
                                  {"p1", exact_json(c.curve->p1)},
                                  {"p2", exact_json(c.curve->p2)}};
  }
  out["payload"] = payload;
  Json cusps = Json::array();
  for (const auto& k : c.cusps) {
    cusps.push_back({{"t", k.t},
                     {"x", k.location.x},
                     {"y", k.location.y},
                     {"gamma", k.nondegeneracy},
                     {"tangent", point_json(k.tangent_direction)}});
  }
  out["cusps"] = cusps;
  return out;
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  return out;
}

Json classify_json(const QuadMap& map, const CriticalReport& r) {
  Json out;
  Json input = Json::array();
  for (const auto& s : coefficient_strings(map)) input.push_back(s);
  out["input"] = input;

  const auto& c = r.j0.conic;
  out["conic"] = {{"A", to_string(c.A)},       {"B", to_string(c.B)},
                  {"C", to_string(c.C)},       {"D", to_string(c.D)},
                  {"E", to_string(c.E)},       {"F", to_string(c.F)},
                  {"disc", to_string(c.disc)}, {"delta", to_string(c.delta)}};

  Json table = Json::object();
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (!is_zero(r.table(i, j))) {
        table["X" + std::to_string(i) + std::to_string(j)] = to_string(r.table(i, j));
      }
    }
  }
  out["cross_table"] = table;

  Json branches = Json::array();
  for (const auto& b : r.j0_branches) {
    branches.push_back({{"shape", branch_shape_name(b.shape)},
                        {"label", b.label},
                        {"t_min", b.t_min},
                        {"t_max", b.t_max}});
  }
  out["j0"] = {{"class", conic_kind_name(r.j0.kind)},
               {"payload", conic_payload_json(r.j0)},
               {"branches", branches}};

  Json components = Json::array();
  for (const auto& comp : r.j1) components.push_back(component_json(comp));
  Json invariants = Json::object();
  if (r.phi) invariants["phi"] = *r.phi;
  if (r.T) invariants["T"] = *r.T;
  if (r.x13_sign) invariants["x13_sign"] = *r.x13_sign;
  if (r.x03_x24) invariants["x03_x24"] = to_string(*r.x03_x24);
  if (r.normalized) invariants["normalization_multiplier"] = r.normalized->multiplier;
  if (!r.generic_cusp_parameters.empty()) {
    invariants["generic_cusp_parameters"] = r.generic_cusp_parameters;
  }
  out["j1"] = {{"case", r.case_number},
               {"label", r.case_label()},
               {"components", components},
               {"invariants", invariants}};
  out["warnings"] = r.warnings;
  return out;
}

Json preimage_json(const Point& target, const PreimageResult& result) {
  Json out;
  out["target"] = point_json(target);
  if (result.infinite) {
    out["count"] = "infinite";
  } else {
    out["count"] = result.count;
  }
  out["exact"] = result.exact;
  out["tangential"] = result.has_tangential;
  Json points = Json::array();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    Json p = point_json(result.points[i]);
    p["tangential"] = i < result.tangential.size() && result.tangential[i];
    points.push_back(p);
  }
  out["points"] = points;
  return out;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

Json error_json(const Error& error) { return error_json(error_kind_name(error.kind()), error.what()); }

// --- samples -----------------------------------------------------------------------

std::vector<SampleRow> sample_j0(const CriticalReport& report, int n, const SampleWindow& window) {
  std::vector<SampleRow> rows;
  if (report.j0.kind == ConicKind::SinglePoint) {
    const ExactPoint c = std::get<PointPayload>(report.j0.payload).center;
    rows.push_back({0, 0, to_double(c)});
    return rows;
  }
  if (!report.j0.is_curve() || report.j0_branches.empty()) {
    throw Error(ErrorKind::PreconditionViolated,
                std::string("J0 has nothing to sample: ") + conic_kind_name(report.j0.kind));
  }
  for (std::size_t b = 0; b < report.j0_branches.size(); ++b) {
    for (const auto& s : sample_branch(report.j0_branches[b], n, window.lo, window.hi)) {
      rows.push_back({static_cast<int>(b), s.t, s.p});
    }
  }
  return rows;
}

std::vector<SampleRow> sample_j1(const QuadMap& map, const CriticalReport& report, int n,
                                 const SampleWindow& window) {
  if (report.j1.empty()) throw Error(ErrorKind::PreconditionViolated, "J1 is empty");
  const RealQuadMap fmap = to_double(map);
  std::vector<SampleRow> rows;
  for (std::size_t i = 0; i < report.j1.size(); ++i) {
    for (const auto& s : sample_component(report, fmap, report.j1[i], n, window.lo, window.hi)) {
      rows.push_back({static_cast<int>(i), s.t, s.p});
    }
  }
  return rows;
}

std::vector<SampleRow> sample_disk_image(const QuadMap& map, double r, double x0, int n) {
  const RealQuadMap fmap = to_double(map);
  std::vector<SampleRow> rows;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    rows.push_back({0, t, eval(fmap, Point{x0 + r * std::cos(t), r * std::sin(t)})});
  }
  return rows;
}

void write_samples_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << "branch,t,x,y\n";
  for (const auto& r : rows) {
    out << r.branch << ',' << format_double(r.t) << ',' << format_double(r.p.x) << ','
        << format_double(r.p.y) << '\n';
  }
}

void write_regions_csv(std::ostream& out, const RegionCensus& census) {
  out << "i,j,x,y,count\n";
  for (int i = 0; i < census.n; ++i) {
    for (int j = 0; j < census.n; ++j) {
      const Point c = census.center(i, j);
      out << i << ',' << j << ',' << format_double(c.x) << ',' << format_double(c.y) << ','
          << census.at(i, j) << '\n';
    }
  }
}

// --- SVG ---------------------------------------------------------------------------

namespace {

class SvgWriter {
 public:
  explicit SvgWriter(const RenderOptions& o) : box_(o.box) {
    span_ = std::max(box_.hi.x - box_.lo.x, box_.hi.y - box_.lo.y);
    stroke_ = span_ / 300;
    const double w = box_.hi.x - box_.lo.x, h = box_.hi.y - box_.lo.y;
    const int height_px = static_cast<int>(std::lround(o.width_px * h / w));
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width_px
         << "\" height=\"" << height_px << "\" viewBox=\"" << num(box_.lo.x) << ' '
         << num(-box_.hi.y) << ' ' << num(w) << ' ' << num(h) << "\">\n"
         << "<rect x=\"" << num(box_.lo.x) << "\" y=\"" << num(-box_.hi.y) << "\" width=\""
         << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n"
         << "<g transform=\"scale(1,-1)\">\n";
  }

  void axes() {
    line({box_.lo.x, 0}, {box_.hi.x, 0});
    line({0, box_.lo.y}, {0, box_.hi.y});
  }

  // Polyline split at non-finite or far-away samples.
  void polyline(const std::vector<Point>& pts, const char* color, bool closed) {
    std::vector<Point> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
             << num(stroke_) << "\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          out_ << (i ? " " : "") << num(run[i].x) << ',' << num(run[i].y);
        }
        out_ << "\"/>\n";
      }
      run.clear();
    };
    const double far = 1e3 * span_;
    for (const auto& p : pts) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || std::abs(p.x) > far ||
          std::abs(p.y) > far) {
        flush();
        continue;
      }
      run.push_back(p);
    }
    if (closed && !run.empty() && pts.size() == run.size()) run.push_back(run.front());
    flush();
  }

  void dot(const Point& p, const char* color, double scale = 1) {
    out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
         << num(scale * span_ / 120) << "\" fill=\"" << color << "\"/>\n";
  }

  std::string finish() {
    out_ << "</g>\n</svg>\n";
    return out_.str();
  }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
  }

  void line(const Point& a, const Point& b) {
    out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
         << "\" y2=\"" << num(b.y) << "\" stroke=\"#bbbbbb\" stroke-width=\"" << num(stroke_ / 2)
         << "\"/>\n";
  }

  Box box_;
  double span_ = 1;
  double stroke_ = 0.01;
  std::ostringstream out_;
};

std::vector<Point> points_of(const std::vector<SampleRow>& rows, int branch) {
  std::vector<Point> out;
  for (const auto& r : rows) {
    if (r.branch == branch) out.push_back(r.p);
  }
  return out;
}

}  // namespace

std::string render_svg(const QuadMap& map, const CriticalReport& report,
                       const RenderOptions& options) {
  SvgWriter svg(options);
  svg.axes();
  const SampleWindow window{options.box.lo, options.box.hi};
  const int n = std::max(options.samples, 512);

  if (options.show_disk) {
    svg.polyline(points_of(sample_disk_image(map, options.disk_radius, options.disk_x0, n), 0),
                 "green", true);
  }
  if (options.show_j0) {
    if (report.j0.kind == ConicKind::SinglePoint) {
      svg.dot(sample_j0(report, n, window).front().p, "blue");
    } else if (report.j0.is_curve()) {
      const auto rows = sample_j0(report, n, window);
      for (std::size_t b = 0; b < report.j0_branches.size(); ++b) {
        svg.polyline(points_of(rows, static_cast<int>(b)), "blue",
                     report.j0_branches[b].shape == BranchShape::Ellipse);
      }
    }
  }
  if (options.show_j1 && !report.j1.empty()) {
    const auto rows = sample_j1(map, report, n, window);
    for (std::size_t i = 0; i < report.j1.size(); ++i) {
      const J1Component& c = report.j1[i];
      if (c.kind == J1Kind::PointImage) {
        svg.dot(c.point, "red", 1.5);
        continue;
      }
      const bool closed = c.source_branch &&
                          report.j0_branches[static_cast<std::size_t>(*c.source_branch)].shape ==
                              BranchShape::Ellipse;
      svg.polyline(points_of(rows, static_cast<int>(i)), "red", closed);
      for (const auto& k : c.cusps) svg.dot(k.location, "red");
    }
  }
  return svg.finish();
}

}  // namespace quadcrit
