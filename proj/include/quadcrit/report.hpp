#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadcrit/image.hpp"
#include "quadcrit/preimage.hpp"

namespace quadcrit {

using Json = nlohmann::ordered_json;

/// Serializes with floats at 17 significant digits. indent < 0 gives a
/// single line.
std::string dump_json(const Json& value, int indent = 2);

Json classify_json(const QuadMap& map, const CriticalReport& report);
Json preimage_json(const Point& target, const PreimageResult& result);
Json error_json(const Error& error);
Json error_json(const std::string& kind, const std::string& message);

/// Row of a sample CSV.
struct SampleRow {
  int branch = 0;
  double t = 0;
  Point p;
};

enum class SampleTarget { J0, J1, DiskImage };

/// Window used for clipping unbounded pieces.
struct SampleWindow {
  Point lo{-4, -4};
  Point hi{4, 4};
};

/// Samples of J0 branches (n per branch; a single point for SinglePoint).
/// Throws Error(PreconditionViolated) when J0 is empty or the whole plane.
std::vector<SampleRow> sample_j0(const CriticalReport& report, int n, const SampleWindow& window);
/// Samples of J1 components (n per component; one row for a point image).
/// Throws Error(PreconditionViolated) when J1 is empty.
std::vector<SampleRow> sample_j1(const QuadMap& map, const CriticalReport& report, int n,
                                 const SampleWindow& window);
/// Image of the circle of radius r centered at (x0, 0), t in [0, 2 pi).
std::vector<SampleRow> sample_disk_image(const QuadMap& map, double r, double x0, int n);

/// CSV `branch,t,x,y` with LF line endings and 17 significant digits.
void write_samples_csv(std::ostream& out, const std::vector<SampleRow>& rows);
/// CSV `i,j,x,y,count`, row-major.
void write_regions_csv(std::ostream& out, const RegionCensus& census);

struct RenderOptions {
  Box box{{-4, -4}, {4, 4}};
  bool show_j0 = false;
  bool show_j1 = true;
  bool show_disk = true;
  double disk_radius = 1;
  double disk_x0 = 0;
  int samples = 1024;  // per branch
  int width_px = 600;
};

/// Standalone SVG 1.1: J1 red, disk image green, J0 blue, cusps as filled
/// circles.
std::string render_svg(const QuadMap& map, const CriticalReport& report,
                       const RenderOptions& options);

/// "%.17g"
std::string format_double(double value);

}  // namespace quadcrit
