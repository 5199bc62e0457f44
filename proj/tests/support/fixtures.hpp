#pragma once

// In-code copies of the fixture algebras, independent of the JSON loader.

#include <optional>
#include <vector>

#include "colorlie/color_lie.hpp"

namespace fixtures {

using namespace colorlie;

inline Bicharacter trivial_bichar() { return Bicharacter::trivial(GradingGroup{0, {}}); }

// x, y with zero bracket, trivially graded.
inline ColorLieAlgebra abelian2() {
  GradingGroup g{0, {}};
  return ColorLieAlgebra({"x", "y"}, {g.identity(), g.identity()}, trivial_bichar(), {});
}

// [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline ColorLieAlgebra sl2() {
  GradingGroup g{0, {}};
  std::vector<BracketEntry> br;
  br.push_back({0, 1, {{2, Scalar(1)}}});
  br.push_back({2, 0, {{0, Scalar(2)}}});
  br.push_back({2, 1, {{1, Scalar(-2)}}});
  return ColorLieAlgebra({"e", "f", "h"}, {g.identity(), g.identity(), g.identity()},
                         trivial_bichar(), std::move(br));
}

// Heisenberg: [x,y] = z.
inline ColorLieAlgebra h3() {
  GradingGroup g{0, {}};
  std::vector<BracketEntry> br;
  br.push_back({0, 1, {{2, Scalar(1)}}});
  return ColorLieAlgebra({"x", "y", "z"}, {g.identity(), g.identity(), g.identity()},
                         trivial_bichar(), std::move(br));
}

// Super line: theta odd, z even central, [theta,theta] = z.
inline ColorLieAlgebra super_line() {
  GradingGroup g{0, {2}};
  std::vector<std::vector<std::optional<Scalar>>> t(1, std::vector<std::optional<Scalar>>(1));
  t[0][0] = Scalar(-1);
  Bicharacter bc(g, 2, std::move(t));
  std::vector<BracketEntry> br;
  br.push_back({0, 0, {{1, Scalar(1)}}});
  return ColorLieAlgebra({"theta", "z"}, {g.element({1}), g.element({0})}, std::move(bc),
                         std::move(br));
}

// Z2 x Z2 color algebra: degrees (1,0), (0,1), (1,1),
// eps((a1,a2),(b1,b2)) = (-1)^(a1 b2 - a2 b1), [x,y]=z, [y,z]=x, [z,x]=y.
inline ColorLieAlgebra color_z2z2() {
  GradingGroup g{0, {2, 2}};
  std::vector<std::vector<std::optional<Scalar>>> t(2, std::vector<std::optional<Scalar>>(2));
  t[0][1] = Scalar(-1);
  t[1][0] = Scalar(-1);
  Bicharacter bc(g, 2, std::move(t));
  std::vector<BracketEntry> br;
  br.push_back({0, 1, {{2, Scalar(1)}}});
  br.push_back({1, 2, {{0, Scalar(1)}}});
  br.push_back({2, 0, {{1, Scalar(1)}}});
  return ColorLieAlgebra({"x", "y", "z"}, {g.element({1, 0}), g.element({0, 1}), g.element({1, 1})},
                         std::move(bc), std::move(br));
}

// Color-abelian quantum plane: Z^2 grading, eps(gx,gy) = zeta_4, zero bracket.
// Exercises bicharacter values that are not +-1.
inline ColorLieAlgebra quantum_plane() {
  GradingGroup g{2, {}};
  std::vector<std::vector<std::optional<Scalar>>> t(2, std::vector<std::optional<Scalar>>(2));
  t[0][1] = Scalar::zeta(4);
  Bicharacter bc(g, 4, std::move(t));
  return ColorLieAlgebra({"x", "y"}, {g.element({1, 0}), g.element({0, 1})}, std::move(bc), {});
}

// Z3 x Z3 color Heisenberg: eps(a,b) = zeta_3^(a1 b2 - a2 b1), [x,y] = z
// with z central of degree (1,1). Brackets sit at a bicharacter value that
// is not a square root of unity, which pins sign conventions tightly.
inline ColorLieAlgebra color_heisenberg_z3() {
  GradingGroup g{0, {3, 3}};
  std::vector<std::vector<std::optional<Scalar>>> t(2, std::vector<std::optional<Scalar>>(2));
  t[0][1] = Scalar::zeta(3);
  Bicharacter bc(g, 3, std::move(t));
  std::vector<BracketEntry> br;
  br.push_back({0, 1, {{2, Scalar(1)}}});
  return ColorLieAlgebra({"x", "y", "z"}, {g.element({1, 0}), g.element({0, 1}), g.element({1, 1})},
                         std::move(bc), std::move(br));
}

inline std::vector<ColorLieAlgebra> all_shipped() {
  std::vector<ColorLieAlgebra> v;
  v.push_back(abelian2());
  v.push_back(sl2());
  v.push_back(h3());
  v.push_back(super_line());
  v.push_back(color_z2z2());
  return v;
}

}  // namespace fixtures
