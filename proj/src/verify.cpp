#include "quadcrit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadcrit/examples.hpp"

namespace quadcrit {

Scalar random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  Scalar out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

QuadMap random_map(Rng& rng) {
  for (;;) {
    std::array<Scalar, 12> c;
    for (auto& v : c) v = random_rational(rng);
    try {
      return make_quad_map(c);
    } catch (const AffineMapNotSupported&) {
    }
  }
}

ExactAffine random_affine(Rng& rng) {
  for (;;) {
    ExactAffine a;
    for (auto& row : a.linear.m) {
      for (auto& v : row) v = random_rational(rng, 5, 3);
    }
    a.translation = {random_rational(rng, 5, 3), random_rational(rng, 5, 3)};
    if (!is_zero(a.det())) return a;
  }
}

QuadMap conjugate_exact(const ExactAffine& k, const QuadMap& map, const ExactAffine& h) {
  return conjugate(k, map, h.inverse());
}

std::optional<std::string> conformance_violation(const CriticalReport& r) {
  std::vector<J1Kind> kinds;
  for (const auto& c : r.j1) kinds.push_back(c.kind);
  std::sort(kinds.begin(), kinds.end());
  auto count = [&](J1Kind k) { return std::count(kinds.begin(), kinds.end(), k); };
  auto cusps_of = [&](J1Kind k) {
    for (const auto& c : r.j1) {
      if (c.kind == k) return c.cusps.size();
    }
    return std::size_t{0};
  };
  const std::size_t n = kinds.size();
  std::string why;
  switch (r.case_number) {
    case 1:
      if (n != 0) why = "case 1 must have empty J1";
      break;
    case 2:
      if (n != 1 || count(J1Kind::PointImage) != 1) why = "case 2 must map to a point";
      break;
    case 3:
      if (n != 1 || count(J1Kind::CuspedCurve) != 1 || cusps_of(J1Kind::CuspedCurve) != 3) {
        why = "case 3 must give one cusped curve with 3 cusps";
      }
      break;
    case 4:
      if (n != 2 || count(J1Kind::CuspedCurve) != 1 || count(J1Kind::SmoothArc) != 1 ||
          cusps_of(J1Kind::CuspedCurve) != 1) {
        why = "case 4 must give one smooth arc and one curve with 1 cusp";
      }
      break;
    case 5:
      if (n != 2 || count(J1Kind::RayImage) < 1 ||
          count(J1Kind::RayImage) + count(J1Kind::ParabolaImage) != 2) {
        why = "case 5 must give a ray plus a ray or parabola";
      }
      break;
    case 6:
      if (n != 1 || count(J1Kind::CuspedCurve) != 1 || cusps_of(J1Kind::CuspedCurve) != 1) {
        why = "case 6 must give one curve with 1 cusp";
      }
      break;
    case 7:
      if (r.sub_case == 'a' &&
          (n != 2 || count(J1Kind::LineImage) != 1 || count(J1Kind::PointImage) != 1)) {
        why = "case 7a must give a line and a point";
      } else if (r.sub_case == 'b' && (n != 1 || count(J1Kind::PointImage) != 1)) {
        why = "case 7b must give a point";
      } else if (r.sub_case != 'a' && r.sub_case != 'b') {
        why = "case 7 without sub-case";
      }
      break;
    case 8:
      if (n != 1 || count(J1Kind::RayImage) != 0 ||
          count(J1Kind::PointImage) + count(J1Kind::LineImage) + count(J1Kind::ParabolaImage) != 1) {
        why = "case 8 must give one point, line or parabola";
      }
      break;
    case 9:
      if (n != 1 ||
          count(J1Kind::LineImage) + count(J1Kind::RayImage) + count(J1Kind::ParabolaImage) != 1) {
        why = "case 9 must give one line, ray or parabola";
      }
      break;
    default:
      why = "unknown case";
  }
  if (why.empty()) return std::nullopt;
  return why;
}

double cusp_parameter_gap(const CriticalReport& r) {
  std::vector<double> closed;
  for (const auto& c : r.j1) {
    for (const auto& k : c.cusps) closed.push_back(k.t);
  }
  const auto& generic = r.generic_cusp_parameters;
  if (closed.size() != generic.size()) return std::numeric_limits<double>::infinity();
  const bool periodic = r.case_number == 3;
  double worst = 0;
  for (double t : closed) {
    double best = std::numeric_limits<double>::infinity();
    for (double g : generic) {
      double gap = std::abs(t - g);
      if (periodic) gap = std::min(gap, 2 * std::numbers::pi - gap);
      best = std::min(best, gap);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

std::optional<std::string> cusp_disagreement(const CriticalReport& r) {
  std::size_t closed = 0;
  for (const auto& c : r.j1) closed += c.cusps.size();
  if (closed != r.generic_cusp_parameters.size()) {
    return "closed form found " + std::to_string(closed) + " cusps, generic finder " +
           std::to_string(r.generic_cusp_parameters.size());
  }
  const double gap = cusp_parameter_gap(r);
  if (gap > 1e-8) return "cusp parameters differ by " + format_double(gap);
  return std::nullopt;
}

bool VerifySummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

Json VerifySummary::to_json() const {
  Json out;
  out["seed"] = seed;
  out["random"] = random;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["failed"] = c.failed;
    j["failures"] = c.failures;
    list.push_back(j);
  }
  out["checks"] = list;
  out["ok"] = ok();
  return out;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

Json coefficients_json(const QuadMap& map) {
  Json out = Json::array();
  for (const auto& s : coefficient_strings(map)) out.push_back(s);
  return out;
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {
    for (const char* name : {"identities", "conformance", "cusp_agreement", "realizability"}) {
      tallies_.push_back({name, 0, 0, {}});
    }
  }

  // Identity check; fills `residuals` with every residual when requested.
  void identities(const QuadMap& map, Json* residuals) {
    if (!options_.negate_x13 && residuals == nullptr) {
      const std::size_t bad = count_identity_failures(map);
      record(0, map, bad == 0, bad == 0 ? "" : std::to_string(bad) + " nonzero residuals");
      return;
    }
    CrossTable<Scalar> table = cross_table(map);
    if (options_.negate_x13) {
      table.X[1][3] = -table.X[1][3];
      table.X[3][1] = -table.X[3][1];
    }
    std::vector<std::string> failing;
    for (const auto& r : verify_identities(map, table)) {
      if (residuals) residuals->push_back({{"name", r.name()}, {"residual", to_string(r.residual)}});
      if (!is_zero(r.residual)) failing.push_back(r.name());
    }
    std::string detail;
    if (!failing.empty()) {
      detail = "identity " + failing.front() + " nonzero (" + std::to_string(failing.size()) +
               " failing identities)";
    }
    record(0, map, failing.empty(), detail);
  }

  void classification(const QuadMap& map) {
    const ConicKind kind = classify_conic(jacobian_conic(map)).kind;
    const bool imaginary =
        kind == ConicKind::ImaginaryEllipse || kind == ConicKind::ImaginaryParallelLines;
    record(3, map, !imaginary, imaginary ? std::string("Jacobian classified as ") + conic_kind_name(kind) : "");

    CriticalReport report;
    try {
      report = classify_critical(map);
    } catch (const std::exception& e) {
      record(1, map, false, std::string("classification threw: ") + e.what());
      return;
    }
    const auto why = conformance_violation(report);
    record(1, map, !why, why.value_or(""));
    if (report.case_number == 3 || report.case_number == 4 || report.case_number == 6) {
      const auto diff = cusp_disagreement(report);
      record(2, map, !diff, diff.value_or(""));
    }
  }

  // Fixed conics that must classify as the imaginary tags.
  void imaginary_conics() {
    const ConicSection<Scalar> ellipse(1, 0, 1, 0, 0, 1);
    const ConicSection<Scalar> parallel(1, 0, 0, 0, 0, 1);
    auto& t = tallies_[3];
    const bool ok = classify_conic(ellipse).kind == ConicKind::ImaginaryEllipse &&
                    classify_conic(parallel).kind == ConicKind::ImaginaryParallelLines;
    ok ? ++t.passed : ++t.failed;
    if (!ok) t.failures.push_back({{"detail", "x^2+y^2+1 or x^2+1 not classified as imaginary"}});
  }

  VerifySummary summary(long random) const {
    VerifySummary s;
    s.seed = options_.seed;
    s.random = random;
    s.checks = tallies_;
    return s;
  }

 private:
  void record(std::size_t check, const QuadMap& map, bool ok, const std::string& detail) {
    auto& t = tallies_[check];
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (t.failures.size() < kMaxRecordedFailures) {
      t.failures.push_back({{"map", coefficients_json(map)}, {"detail", detail}});
    }
  }

  VerifyOptions options_;
  std::vector<CheckTally> tallies_;
};

}  // namespace

VerifySummary verify_random(const VerifyOptions& options) {
  Suite suite(options);
  Rng rng(options.seed);
  const auto& examples = reference_examples();
  suite.imaginary_conics();
  for (long i = 0; i < options.random; ++i) {
    const QuadMap map = random_map(rng);
    suite.identities(map, nullptr);
    suite.classification(map);
    // Random conjugate of a reference map covers the nongeneric cases.
    const auto& e = examples[static_cast<std::size_t>(i) % examples.size()];
    const QuadMap conj = conjugate_exact(random_affine(rng), e.map(), random_affine(rng));
    suite.classification(conj);
  }
  return suite.summary(options.random);
}

VerifySummary verify_map(const QuadMap& map, const VerifyOptions& options, Json* residuals) {
  Suite suite(options);
  suite.imaginary_conics();
  suite.identities(map, residuals);
  suite.classification(map);
  return suite.summary(0);
}

}  // namespace quadcrit
