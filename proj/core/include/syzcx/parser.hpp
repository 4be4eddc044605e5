#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syzcx/algebra.hpp"

namespace syzcx {

struct ModuleTerm {
  enum class Kind { simple, projective, path };
  Kind kind = Kind::simple;
  long multiplicity = 1;
  int vertex = 0;  // simple / projective
  Path path;       // path module M(p)
  int line = 0;
};

struct ModuleDef {
  std::string name;
  std::vector<ModuleTerm> terms;
  int line = 0;
};

/// Parsed but unvalidated algebra file.
struct AlgebraSpec {
  std::string name;
  Quiver quiver;
  std::vector<Path> relations;
  std::vector<int> relation_lines;
  std::vector<ModuleDef> modules;

  const ModuleDef* find_module(const std::string& name) const;
};

/// Parses the line-oriented algebra format. Declarations may appear in any
/// order. Errors: syntax_error, duplicate_identifier, unknown_reference,
/// non_composable (all ErrorKind::parse, messages carry line[:column]).
AlgebraSpec parse_algebra(std::string_view text);

/// Checks admissibility and builds the algebra.
MonomialAlgebra validate_admissible(const AlgebraSpec& spec);

/// Reads a dotted arrow literal against a quiver.
Path parse_path_literal(const Quiver& q, const std::string& literal);

}  // namespace syzcx
