#pragma once

// Matroid specification documents: a small JSON input format covering the
// supported construction routes, plus the canonical bases-kind emitter.
// All element and vertex labels in files are 1-based.

#include <string>
#include <utility>
#include <vector>

#include "matro/matroid.hpp"
#include "matro/rational.hpp"

namespace matro {

enum class SpecKind { Bases, NonBases, Circuits, Graph, Vectors, Uniform };

const char* spec_kind_name(SpecKind kind);

struct MatroidSpec {
  std::string name;
  SpecKind kind = SpecKind::Bases;
  bool dualize = false;

  int n = 0;                                // bases, nonbases, circuits
  int r = 0;                                // bases, nonbases, uniform
  std::vector<std::vector<int>> subsets;    // bases / nonbases / circuits
  int vertices = 0;                         // graph
  std::vector<std::pair<int, int>> edges;   // graph
  std::vector<std::vector<Rat>> matrix;     // vectors: rows; columns are elements
};

// Parse a spec document; malformed JSON or a schema violation raises
// ParseError (with line/column for syntax errors).
MatroidSpec parse_spec_json(const std::string& text);

// Same, reading from a file; the path is included in error messages.
MatroidSpec parse_spec_file(const std::string& path);

// Build the matroid a spec describes (including the optional dualization).
Matroid build_matroid(const MatroidSpec& spec);

// Serialize a matroid as a bases-kind spec document, the canonical
// interchange form: re-reading it reproduces the matroid exactly.
std::string emit_bases_spec(const Matroid& m, const std::string& name);

}  // namespace matro
