#include "matro/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "matro/errors.hpp"

namespace matro {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void bad_spec(const std::string& message) {
  fail(Errc::ParseError, "spec: " + message);
}

int require_int(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) bad_spec(std::string("missing required field \"") + key + "\"");
  if (!it->is_number_integer()) {
    bad_spec(std::string("field \"") + key + "\" must be an integer");
  }
  return it->get<int>();
}

std::vector<std::vector<int>> require_int_lists(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) bad_spec(std::string("missing required field \"") + key + "\"");
  if (!it->is_array()) bad_spec(std::string("field \"") + key + "\" must be an array");
  std::vector<std::vector<int>> out;
  out.reserve(it->size());
  for (const Json& entry : *it) {
    if (!entry.is_array()) {
      bad_spec(std::string("entries of \"") + key + "\" must be arrays of integers");
    }
    std::vector<int> row;
    row.reserve(entry.size());
    for (const Json& v : entry) {
      if (!v.is_number_integer()) {
        bad_spec(std::string("entries of \"") + key + "\" must be arrays of integers");
      }
      row.push_back(v.get<int>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Rat entry_to_rational(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    bad_spec("matrix entries must be integers or \"p/q\" strings, not floats");
  }
  bad_spec("matrix entries must be integers or \"p/q\" strings");
}

void check_fields(const Json& doc, std::initializer_list<const char*> allowed) {
  std::unordered_set<std::string> ok;
  for (const char* key : allowed) ok.insert(key);
  ok.insert("name");
  ok.insert("kind");
  ok.insert("dualize");
  for (const auto& item : doc.items()) {
    if (!ok.count(item.key())) {
      bad_spec("unknown field \"" + item.key() + "\"");
    }
  }
}

}  // namespace

const char* spec_kind_name(SpecKind kind) {
  switch (kind) {
    case SpecKind::Bases: return "bases";
    case SpecKind::NonBases: return "nonbases";
    case SpecKind::Circuits: return "circuits";
    case SpecKind::Graph: return "graph";
    case SpecKind::Vectors: return "vectors";
    case SpecKind::Uniform: return "uniform";
  }
  return "unknown";
}

MatroidSpec parse_spec_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    // nlohmann reports "parse error at line L, column C: ..." in what().
    fail(Errc::ParseError, err.what());
  }
  if (!doc.is_object()) bad_spec("top-level value must be an object");

  MatroidSpec spec;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) bad_spec("field \"name\" must be a string");
    spec.name = it->get<std::string>();
  }
  if (const auto it = doc.find("dualize"); it != doc.end()) {
    if (!it->is_boolean()) bad_spec("field \"dualize\" must be a boolean");
    spec.dualize = it->get<bool>();
  }

  const auto kind_it = doc.find("kind");
  if (kind_it == doc.end()) bad_spec("missing required field \"kind\"");
  if (!kind_it->is_string()) bad_spec("field \"kind\" must be a string");
  const std::string kind = kind_it->get<std::string>();

  if (kind == "bases") {
    spec.kind = SpecKind::Bases;
    check_fields(doc, {"n", "r", "bases"});
    spec.n = require_int(doc, "n");
    spec.r = require_int(doc, "r");
    spec.subsets = require_int_lists(doc, "bases");
  } else if (kind == "nonbases") {
    spec.kind = SpecKind::NonBases;
    check_fields(doc, {"n", "r", "nonbases"});
    spec.n = require_int(doc, "n");
    spec.r = require_int(doc, "r");
    spec.subsets = require_int_lists(doc, "nonbases");
  } else if (kind == "circuits") {
    spec.kind = SpecKind::Circuits;
    check_fields(doc, {"n", "circuits"});
    spec.n = require_int(doc, "n");
    spec.subsets = require_int_lists(doc, "circuits");
  } else if (kind == "graph") {
    spec.kind = SpecKind::Graph;
    check_fields(doc, {"vertices", "edges"});
    spec.vertices = require_int(doc, "vertices");
    for (const std::vector<int>& e : require_int_lists(doc, "edges")) {
      if (e.size() != 2) bad_spec("each edge must be a pair [a, b] of vertices");
      spec.edges.emplace_back(e[0], e[1]);
    }
  } else if (kind == "vectors") {
    spec.kind = SpecKind::Vectors;
    check_fields(doc, {"matrix"});
    const auto it = doc.find("matrix");
    if (it == doc.end()) bad_spec("missing required field \"matrix\"");
    if (!it->is_array()) bad_spec("field \"matrix\" must be an array of rows");
    for (const Json& row : *it) {
      if (!row.is_array()) bad_spec("matrix rows must be arrays");
      std::vector<Rat> entries;
      entries.reserve(row.size());
      for (const Json& v : row) entries.push_back(entry_to_rational(v));
      spec.matrix.push_back(std::move(entries));
    }
  } else if (kind == "uniform") {
    spec.kind = SpecKind::Uniform;
    check_fields(doc, {"n", "r"});
    spec.n = require_int(doc, "n");
    spec.r = require_int(doc, "r");
  } else {
    bad_spec("unknown kind \"" + kind +
             "\" (expected bases, nonbases, circuits, graph, vectors or uniform)");
  }
  return spec;
}

MatroidSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open spec file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_spec_json(buffer.str());
  } catch (const MatroidError& err) {
    fail(err.code(), path + ": " + err.what());
  }
}

Matroid build_matroid(const MatroidSpec& spec) {
  Matroid m = [&] {
    switch (spec.kind) {
      case SpecKind::Bases:
        return Matroid::from_bases(spec.n, spec.r, spec.subsets);
      case SpecKind::NonBases:
        return Matroid::from_nonbases(spec.n, spec.r, spec.subsets);
      case SpecKind::Circuits:
        return Matroid::from_circuits(spec.n, spec.subsets);
      case SpecKind::Graph:
        return Matroid::from_graph(spec.vertices, spec.edges);
      case SpecKind::Vectors:
        return Matroid::from_vectors(spec.matrix);
      case SpecKind::Uniform:
        return Matroid::uniform(spec.r, spec.n);
    }
    fail(Errc::ParseError, "spec: unknown kind");
  }();
  return spec.dualize ? dual(m) : m;
}

std::string emit_bases_spec(const Matroid& m, const std::string& name) {
  // One basis per line keeps the documents short and diff-friendly.
  std::string out = "{\n";
  if (!name.empty()) out += "  \"name\": " + OrderedJson(name).dump() + ",\n";
  out += "  \"kind\": \"bases\",\n";
  out += "  \"n\": " + std::to_string(m.ground_size()) + ",\n";
  out += "  \"r\": " + std::to_string(m.rank()) + ",\n";
  out += "  \"bases\": [\n";
  const std::vector<Mask>& bases = m.bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out += "    [";
    std::vector<int> labels = mask_labels(bases[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(labels[j]);
    }
    out += i + 1 < bases.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace matro
