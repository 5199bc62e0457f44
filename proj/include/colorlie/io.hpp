#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/cochain.hpp"
#include "colorlie/color_lie.hpp"

namespace colorlie {

/// Parsed algebra definition file: the algebra plus the optional
/// deformation and cocycle payloads.
struct AlgebraDefinition {
  std::string name;
  ColorLieAlgebra algebra;
  std::vector<std::pair<int, Cochain>> deformation;  // (order, adjoint 2-cochain)
  std::optional<Cochain> cocycle;                    // trivial-coefficient 2-cochain
};

/// Parses the JSON text of a definition file. Throws Error with position
/// information on malformed input, ValidationError on structural defects.
AlgebraDefinition parse_definition(const std::string& json_text);

AlgebraDefinition load_definition(const std::string& path);

/// Canonical JSON rendering; parse(render(d)) reproduces d.
std::string render_definition(const AlgebraDefinition& def);

}  // namespace colorlie
