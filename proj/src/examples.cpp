#include "quadcrit/examples.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadcrit {

namespace {

std::vector<J1Kind> sorted(std::vector<J1Kind> kinds) {
  std::sort(kinds.begin(), kinds.end());
  return kinds;
}

}  // namespace

const std::vector<ReferenceExample>& reference_examples() {
  using K = J1Kind;
  using C = ConicKind;
  static const std::vector<ReferenceExample> examples = {
      {"1", "(1 - 1.4 x^2 + y, 0.3 x)", "-1.4,0,0,0,1,1,0,0,0,0.3,0,0",
       {"0", "0", "0", "0", "0", "-3/10"}, C::Empty, "1", {}, 2.5, 0},
      {"2", "(x^2 - y^2, xy)", "1,0,-1,0,0,0,0,1,0,0,0,0",
       {"2", "0", "2", "0", "0", "0"}, C::SinglePoint, "2", {K::PointImage}, 2, 0.1},
      {"3", "(x^2 - y^2 + 2x, 2xy - 2y)", "1,0,-1,2,0,0,0,2,0,0,-2,0",
       {"4", "0", "4", "0", "0", "-4"}, C::RealEllipse, "3", {K::CuspedCurve}, 3.5, 0},
      {"4", "(x^2 + y^2 + 2x, 2xy - 2y)", "1,0,1,2,0,0,0,2,0,0,-2,0",
       {"4", "0", "-4", "0", "0", "-4"}, C::Hyperbola, "4",
       sorted({K::SmoothArc, K::CuspedCurve}), 3.1, 0},
      {"5a", "(x^2 + y, y^2)", "1,0,0,0,1,0,0,0,1,0,0,0",
       {"0", "4", "0", "0", "0", "0"}, C::IntersectingLines, "5a",
       sorted({K::RayImage, K::ParabolaImage}), 3.1, 0.2},
      {"5b", "(x^2, y^2)", "1,0,0,0,0,0,0,0,1,0,0,0",
       {"0", "4", "0", "0", "0", "0"}, C::IntersectingLines, "5b",
       {K::RayImage, K::RayImage}, 3.1, 0.2},
      {"6", "(x^2/2 + y, xy)", "1/2,0,0,0,1,0,0,1,0,0,0,0",
       {"1", "0", "0", "0", "-1", "0"}, C::Parabola, "6", {K::CuspedCurve}, 2.5, 0},
      {"7a", "(x^2/2 + x, xy - y)", "1/2,0,0,1,0,0,0,1,0,0,-1,0",
       {"1", "0", "0", "0", "0", "-1"}, C::DistinctParallelLines, "7a",
       sorted({K::LineImage, K::PointImage}), 3.5, 0},
      {"7b", "(x^2/2, xy)", "1/2,0,0,0,0,0,0,1,0,0,0,0",
       {"1", "0", "0", "0", "0", "0"}, C::CoincidentLines, "7b", {K::PointImage}, 3, 0.1},
      {"8a", "(x, xy)", "0,0,0,1,0,0,0,1,0,0,0,0",
       {"0", "0", "0", "1", "0", "0"}, C::SingleLine, "8a", {K::PointImage}, 3, 0},
      {"8b", "(x^2, y)", "1,0,0,0,0,0,0,0,0,0,1,0",
       {"0", "0", "0", "2", "0", "0"}, C::SingleLine, "8b", {K::LineImage}, 3, 0.1},
      {"8c", "(x^2 + y^2, y)", "1,0,1,0,0,0,0,0,0,0,1,0",
       {"0", "0", "0", "2", "0", "0"}, C::SingleLine, "8c", {K::ParabolaImage}, 3, 0.1},
      {"9a", "(x^2 - y^2, 0)", "1,0,-1,0,0,0,0,0,0,0,0,0",
       {"0", "0", "0", "0", "0", "0"}, C::WholePlane, "9a", {K::LineImage}, 1, 0},
      {"9b", "(x^2, 0)", "1,0,0,0,0,0,0,0,0,0,0,0",
       {"0", "0", "0", "0", "0", "0"}, C::WholePlane, "9b", {K::RayImage}, 1, 0},
      {"9c", "(x^2, x)", "1,0,0,0,0,0,0,0,0,1,0,0",
       {"0", "0", "0", "0", "0", "0"}, C::WholePlane, "9c", {K::ParabolaImage}, 1, 0},
  };
  return examples;
}

const ReferenceExample& reference_example(const std::string& id) {
  for (const auto& e : reference_examples()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("unknown example id: " + id);
}

std::vector<J1Kind> j1_kinds(const CriticalReport& report) {
  std::vector<J1Kind> kinds;
  for (const auto& c : report.j1) kinds.push_back(c.kind);
  return sorted(kinds);
}

}  // namespace quadcrit
