// quadcrit: critical sets and critical images of planar quadratic maps.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quadcrit/examples.hpp"
#include "quadcrit/preimage.hpp"
#include "quadcrit/report.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kAffine = 3, kEmpty = 4, kIo = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MapSource {
  std::string map;
  std::string example;

  void add(CLI::App* cmd) {
    cmd->add_option("--map", map, "12 coefficients a0..a5,b0..b5");
    cmd->add_option("--example", example, "built-in example id (1, 2, ..., 9c)");
  }

  QuadMap get() const {
    if (!example.empty()) {
      try {
        return reference_example(example).map();
      } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
      }
    }
    if (map.empty()) throw ParseError("one of --map or --example is required");
    return parse_quad_map(map);
  }

  const ReferenceExample* reference() const {
    return example.empty() ? nullptr : &reference_example(example);
  }
};

std::vector<Scalar> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.size() != expected) {
    throw ParseError(std::string(what) + " needs " + std::to_string(expected) +
                     " comma-separated numbers");
  }
  return out;
}

Box parse_bbox(const std::string& text) {
  const auto v = parse_list(text, 4, "--bbox");
  Box box{{to_double(v[0]), to_double(v[2])}, {to_double(v[1]), to_double(v[3])}};
  if (!(box.lo.x < box.hi.x) || !(box.lo.y < box.hi.y)) {
    throw ParseError("--bbox must be xmin,xmax,ymin,ymax with xmin<xmax and ymin<ymax");
  }
  return box;
}

// Writes to `path`, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

int fail(int code, const Json& error) {
  std::cerr << dump_json(error, -1) << '\n';
  return code;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::AffineMapNotSupported: return kAffine;
    default: return kVerifyFailed;
  }
}

Json examples_json(bool& all_match) {
  Json list = Json::array();
  all_match = true;
  for (const auto& e : reference_examples()) {
    const CriticalReport r = classify_critical(e.map());
    Json kinds = Json::array();
    for (auto k : e.j1) kinds.push_back(j1_kind_name(k));
    const auto c = jacobian_conic(e.map()).coefficients();
    bool conic_ok = true;
    for (std::size_t i = 0; i < 6; ++i) conic_ok = conic_ok && to_string(c[i]) == e.conic[i];
    const bool match = conic_ok && r.j0.kind == e.j0 && r.case_label() == e.case_label &&
                       j1_kinds(r) == e.j1;
    all_match = all_match && match;
    list.push_back({{"id", e.id},
                    {"map", e.formula},
                    {"coefficients", e.coefficients},
                    {"conic", e.conic},
                    {"j0", conic_kind_name(e.j0)},
                    {"case", e.case_label},
                    {"j1", kinds},
                    {"disk", {{"r", e.disk_radius}, {"x0", e.disk_x0}}},
                    {"reproduced", match}});
  }
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical sets and critical images of planar quadratic maps"};
  app.require_subcommand(0, 1);
  bool list_examples = false;
  app.add_flag("--examples", list_examples, "print the built-in example maps and exit");

  // classify
  auto* classify = app.add_subcommand("classify", "JSON report of J0 and J1");
  MapSource classify_map;
  classify_map.add(classify);
  std::string batch_file;
  bool compact = false;
  classify->add_option("--batch", batch_file, "file with one map per line; one JSON object per line");
  classify->add_flag("--compact", compact, "single-line JSON");

  // sample
  auto* sample = app.add_subcommand("sample", "CSV samples of J0, J1 or a disk image");
  MapSource sample_map;
  sample_map.add(sample);
  std::string which = "j1", sample_out = "-", sample_bbox = "-4,4,-4,4";
  int sample_n = 360;
  std::optional<double> disk_r, disk_x0;
  sample->add_option("--which", which, "j0, j1 or disk-image")
      ->check(CLI::IsMember({"j0", "j1", "disk-image"}));
  sample->add_option("--n", sample_n, "samples per branch")->check(CLI::PositiveNumber);
  sample->add_option("--out", sample_out, "output file, - for stdout");
  sample->add_option("--r", disk_r, "disk radius (default: example value or 1)");
  sample->add_option("--x0", disk_x0, "disk center x (default: example value or 0)");
  sample->add_option("--bbox", sample_bbox, "clip window xmin,xmax,ymin,ymax for unbounded pieces");

  // preimages
  auto* pre = app.add_subcommand("preimages", "solutions of F(p) = (u, v)");
  MapSource pre_map;
  pre_map.add(pre);
  std::string point_text;
  pre->add_option("--point", point_text, "target u,v")->required();

  // regions
  auto* regions = app.add_subcommand("regions", "CSV census of preimage counts");
  MapSource regions_map;
  regions_map.add(regions);
  std::string regions_bbox = "-4,4,-4,4", regions_out = "-";
  int grid = 64;
  regions->add_option("--bbox", regions_bbox, "xmin,xmax,ymin,ymax");
  regions->add_option("--grid", grid, "cells per side (>= 2)");
  regions->add_option("--out", regions_out, "output file, - for stdout");

  // render
  auto* render = app.add_subcommand("render", "SVG figure");
  MapSource render_map;
  render_map.add(render);
  std::string render_bbox = "-4,4,-4,4", render_out, show = "j1,disk";
  int render_samples = 1024;
  std::optional<double> render_r, render_x0;
  render->add_option("--bbox", render_bbox, "xmin,xmax,ymin,ymax");
  render->add_option("--out", render_out, "SVG file")->required();
  render->add_option("--show", show, "comma list of j0, j1, disk");
  render->add_option("--r", render_r, "disk radius");
  render->add_option("--x0", render_x0, "disk center x");
  render->add_option("--samples", render_samples, "samples per branch (at least 512 are used)");

  // verify
  auto* verify = app.add_subcommand("verify", "property checks; exit 1 on failure");
  MapSource verify_source;
  verify_source.add(verify);
  long random_n = 0;
  std::uint64_t seed = 42;
  verify->add_option("--random", random_n, "number of seeded random maps");
  verify->add_option("--seed", seed, "random seed (QUADCRIT_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kParse, error_json("Parse", e.what()));
  }

  try {
    if (list_examples) {
      bool all_match = false;
      const Json list = examples_json(all_match);
      std::cout << dump_json(list) << '\n';
      return all_match ? kOk : kVerifyFailed;
    }

    if (*classify) {
      if (!batch_file.empty()) {
        std::ifstream in(batch_file);
        if (!in) throw IoError("cannot read " + batch_file);
        int code = kOk;
        std::string line;
        while (std::getline(in, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
          try {
            const QuadMap map = parse_quad_map(line);
            std::cout << dump_json(classify_json(map, classify_critical(map)), -1) << '\n';
          } catch (const Error& e) {
            std::cout << dump_json(error_json(e), -1) << '\n';
            if (code == kOk) code = exit_code_for(e);
          }
        }
        return code;
      }
      const QuadMap map = classify_map.get();
      std::cout << dump_json(classify_json(map, classify_critical(map)), compact ? -1 : 2) << '\n';
      return kOk;
    }

    if (*sample) {
      const QuadMap map = sample_map.get();
      const Box box = parse_bbox(sample_bbox);
      const CriticalReport report = classify_critical(map);
      std::vector<SampleRow> rows;
      try {
        if (which == "j0") {
          rows = sample_j0(report, sample_n, {box.lo, box.hi});
        } else if (which == "j1") {
          rows = sample_j1(map, report, sample_n, {box.lo, box.hi});
        } else {
          const ReferenceExample* ref = sample_map.reference();
          const double r = disk_r.value_or(ref ? ref->disk_radius : 1.0);
          const double x0 = disk_x0.value_or(ref ? ref->disk_x0 : 0.0);
          rows = sample_disk_image(map, r, x0, sample_n);
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PreconditionViolated) {
          return fail(kEmpty, error_json("EmptyTarget", e.what()));
        }
        throw;
      }
      std::ostringstream csv;
      write_samples_csv(csv, rows);
      emit(sample_out, csv.str());
      return kOk;
    }

    if (*pre) {
      const QuadMap map = pre_map.get();
      const auto v = parse_list(point_text, 2, "--point");
      const PreimageResult result = preimages(map, ExactPoint{v[0], v[1]});
      std::cout << dump_json(preimage_json(Point{to_double(v[0]), to_double(v[1])}, result)) << '\n';
      return kOk;
    }

    if (*regions) {
      const QuadMap map = regions_map.get();
      const Box box = parse_bbox(regions_bbox);
      if (grid < 2) throw ParseError("--grid must be at least 2");
      std::ostringstream csv;
      write_regions_csv(csv, region_census(map, box, grid));
      emit(regions_out, csv.str());
      return kOk;
    }

    if (*render) {
      const QuadMap map = render_map.get();
      RenderOptions opts;
      opts.box = parse_bbox(render_bbox);
      opts.show_j0 = opts.show_j1 = opts.show_disk = false;
      std::stringstream ss(show);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item == "j0") {
          opts.show_j0 = true;
        } else if (item == "j1") {
          opts.show_j1 = true;
        } else if (item == "disk") {
          opts.show_disk = true;
        } else {
          throw ParseError("--show accepts j0, j1, disk");
        }
      }
      const ReferenceExample* ref = render_map.reference();
      opts.disk_radius = render_r.value_or(ref ? ref->disk_radius : 1.0);
      opts.disk_x0 = render_x0.value_or(ref ? ref->disk_x0 : 0.0);
      opts.samples = render_samples;
      emit(render_out, render_svg(map, classify_critical(map), opts));
      return kOk;
    }

    if (*verify) {
      VerifyOptions opts;
      opts.random = random_n;
      opts.seed = seed;
      if (const char* env = std::getenv("QUADCRIT_SEED")) {
        try {
          opts.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw ParseError("QUADCRIT_SEED must be an unsigned integer");
        }
      }
#ifdef QUADCRIT_FAULT_NEGATE_X13
      opts.negate_x13 = true;
#endif
      Json out;
      if (!verify_source.map.empty() || !verify_source.example.empty()) {
        const QuadMap map = verify_source.get();
        Json residuals = Json::array();
        const VerifySummary s = verify_map(map, opts, &residuals);
        out = s.to_json();
        out.erase("seed");
        out.erase("random");
        out["map"] = Json(coefficient_strings(map));
        out["identities"] = residuals;
        std::cout << dump_json(out) << '\n';
        return s.ok() ? kOk : kVerifyFailed;
      }
      if (random_n <= 0) throw ParseError("verify needs --map, --example or --random n");
      const VerifySummary s = verify_random(opts);
      std::cout << dump_json(s.to_json()) << '\n';
      return s.ok() ? kOk : kVerifyFailed;
    }

    std::cout << app.help();
    return kOk;
  } catch (const IoError& e) {
    return fail(kIo, error_json("IoError", e.what()));
  } catch (const Error& e) {
    return fail(exit_code_for(e), error_json(e));
  } catch (const std::exception& e) {
    return fail(kVerifyFailed, error_json("Internal", e.what()));
  }
}
