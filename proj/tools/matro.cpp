// matro: command line access to matroid polytopes, Bergman complexes and
// nested set complexes.
//
// Output contract: stdout carries only the result (human-readable tables by
// default, a JSON document with --json) and is byte-identical across runs
// and thread counts; timing goes to stderr.  Exit codes: 0 success, 2
// validation error, 3 parse error, 4 precondition violation.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matro/bergman.hpp"
#include "matro/flats.hpp"
#include "matro/matroid.hpp"
#include "matro/rational.hpp"
#include "matro/spec_io.hpp"
#include "matro/subsets.hpp"

namespace {

using namespace matro;
using OrderedJson = nlohmann::ordered_json;

// ---- rendering helpers ------------------------------------------------------

std::string partition_str(const SetPartition& p) {
  std::string out;
  for (Mask b : p.blocks) {
    if (!out.empty()) out += " ";
    out += format_set(b);
  }
  return out;
}

OrderedJson set_json(Mask m) { return OrderedJson(mask_labels(m)); }

OrderedJson partition_json(const SetPartition& p) {
  OrderedJson arr = OrderedJson::array();
  for (Mask b : p.blocks) arr.push_back(set_json(b));
  return arr;
}

// Display key for a flat: (rank, 1-based labels); flats are always listed
// by rank first, then lexicographically by their element lists.
using FlatKey = std::pair<int, std::vector<int>>;

FlatKey flat_key(const FlatsLattice& lattice, int id) {
  return {lattice[id].rank, mask_labels(lattice[id].mask)};
}

std::vector<int> display_order(const FlatsLattice& lattice, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return flat_key(lattice, a) < flat_key(lattice, b);
  });
  return ids;
}

std::vector<FlatKey> nested_key(const FlatsLattice& lattice, const NestedSet& s) {
  std::vector<FlatKey> keys;
  keys.reserve(s.flats.size());
  for (int id : display_order(lattice, s.flats)) keys.push_back(flat_key(lattice, id));
  return keys;
}

std::string nested_str(const FlatsLattice& lattice, const NestedSet& s) {
  std::string out;
  for (int id : display_order(lattice, s.flats)) {
    if (!out.empty()) out += ", ";
    out += format_set(lattice[id].mask);
  }
  return out;
}

OrderedJson nested_json(const FlatsLattice& lattice, const NestedSet& s) {
  OrderedJson arr = OrderedJson::array();
  for (int id : display_order(lattice, s.flats)) arr.push_back(set_json(lattice[id].mask));
  return arr;
}

// Sort a facet list for display by the label form of its entries.
template <typename T, typename KeyFn>
void sort_by_key(std::vector<T>& items, KeyFn key) {
  std::stable_sort(items.begin(), items.end(),
                   [&](const T& a, const T& b) { return key(a) < key(b); });
}

std::vector<std::vector<int>> partition_key(const SetPartition& p) {
  std::vector<std::vector<int>> key;
  key.reserve(p.blocks.size());
  for (Mask b : p.blocks) key.push_back(mask_labels(b));
  return key;
}

// ---- matroid summary ---------------------------------------------------------

struct Summary {
  std::string name;
  int n = 0;
  int r = 0;
  long long bases = 0;
  bool connected = false;
  Mask loop_set = 0;
};

Summary summarize(const MatroidSpec& spec, const Matroid& m) {
  return {spec.name,
          m.ground_size(),
          m.rank(),
          static_cast<long long>(m.bases().size()),
          is_connected(m),
          loops(m)};
}

std::string summary_line(const Summary& s) {
  std::string out;
  if (!s.name.empty()) out += "name=" + s.name + " ";
  out += "n=" + std::to_string(s.n) + " r=" + std::to_string(s.r) +
         " bases=" + std::to_string(s.bases) +
         " connected=" + (s.connected ? "yes" : "no") + " loops=" + format_set(s.loop_set);
  return out;
}

OrderedJson summary_json(const Summary& s) {
  return OrderedJson{{"name", s.name},          {"n", s.n},
                     {"rank", s.r},             {"bases", s.bases},
                     {"connected", s.connected}, {"loops", set_json(s.loop_set)}};
}

void print_doc(const OrderedJson& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- preconditions with a component report -----------------------------------

void require_connected_input(const Matroid& m) {
  if (is_connected(m)) return;
  std::string msg = "the matroid is disconnected; components:";
  for (Mask b : connected_components(m).blocks) msg += " " + format_set(b);
  fail(Errc::NotConnected, msg);
}

void require_complex_input(const Matroid& m) {
  if (has_loops(m)) {
    fail(Errc::HasLoops,
         "the matroid has loops " + format_set(loops(m)) + "; remove them first");
  }
  require_connected_input(m);
}

// ---- loaded input -------------------------------------------------------------

struct Input {
  MatroidSpec spec;
  Matroid matroid = Matroid::uniform(1, 1);
  Summary summary;
};

Input load(const std::string& path) {
  Input in;
  in.spec = parse_spec_file(path);
  in.matroid = build_matroid(in.spec);
  in.summary = summarize(in.spec, in.matroid);
  return in;
}

// ---- commands -----------------------------------------------------------------

int cmd_info(const std::string& path, bool json_mode, bool emit_bases) {
  Input in = load(path);
  if (emit_bases) {
    std::cout << emit_bases_spec(in.matroid, in.spec.name);
    return 0;
  }
  FlatsLattice lattice = FlatsLattice::build(in.matroid);
  std::vector<long long> counts = lattice.rank_counts();
  if (json_mode) {
    OrderedJson doc{{"command", "info"},
                    {"matroid", summary_json(in.summary)},
                    {"result", OrderedJson{{"flats_per_rank", counts}}}};
    print_doc(doc);
  } else {
    const Summary& s = in.summary;
    std::cout << "name:           " << (s.name.empty() ? "-" : s.name) << "\n";
    std::cout << "elements:       " << s.n << "\n";
    std::cout << "rank:           " << s.r << "\n";
    std::cout << "bases:          " << s.bases << "\n";
    std::cout << "connected:      " << (s.connected ? "yes" : "no") << "\n";
    std::cout << "loops:          " << format_set(s.loop_set) << "\n";
    std::cout << "flats per rank:";
    for (long long c : counts) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

int cmd_bergman(const std::string& path, bool json_mode, const std::string& mode,
                int threads) {
  Input in = load(path);
  require_complex_input(in.matroid);

  if (mode == "facets") {
    std::vector<SetPartition> facets = bergman_facets(in.matroid, threads);
    sort_by_key(facets, partition_key);
    if (json_mode) {
      OrderedJson arr = OrderedJson::array();
      for (const SetPartition& p : facets) arr.push_back(partition_json(p));
      print_doc(OrderedJson{{"command", "bergman"},
                            {"mode", "facets"},
                            {"matroid", summary_json(in.summary)},
                            {"result", OrderedJson{{"count", facets.size()},
                                                   {"facets", arr}}}});
    } else {
      std::cout << "command: bergman facets\n";
      std::cout << "matroid: " << summary_line(in.summary) << "\n";
      std::cout << "facets:  " << facets.size() << "\n";
      for (const SetPartition& p : facets) std::cout << partition_str(p) << "\n";
    }
    return 0;
  }

  FlatsLattice lattice = FlatsLattice::build(in.matroid);
  BuildingSet gmin = connected_flats(in.matroid, lattice);

  if (mode == "fvector") {
    FVector fv = bergman_f_vector(in.matroid, lattice, gmin, threads);
    long long chi = euler_characteristic(fv);
    if (json_mode) {
      print_doc(OrderedJson{{"command", "bergman"},
                            {"mode", "fvector"},
                            {"matroid", summary_json(in.summary)},
                            {"result", OrderedJson{{"f", fv.f}, {"euler", chi}}}});
    } else {
      std::cout << "command: bergman fvector\n";
      std::cout << "matroid: " << summary_line(in.summary) << "\n";
      std::cout << "f-vector: (";
      for (std::size_t i = 0; i < fv.f.size(); ++i)
        std::cout << (i ? ", " : "") << fv.f[i];
      std::cout << ")\n";
      std::cout << "reduced euler characteristic: " << chi << "\n";
    }
    return 0;
  }

  // mode == "faces"
  std::vector<BergmanFace> faces = bergman_faces(in.matroid, lattice, gmin, threads);
  if (json_mode) {
    OrderedJson arr = OrderedJson::array();
    for (const BergmanFace& f : faces) {
      arr.push_back(OrderedJson{
          {"dim", f.dim},
          {"bases", f.face_matroid.bases().size()},
          {"components", partition_json(
                             SetPartition::of(connected_components(f.face_matroid).blocks))}});
    }
    print_doc(OrderedJson{{"command", "bergman"},
                          {"mode", "faces"},
                          {"matroid", summary_json(in.summary)},
                          {"result", OrderedJson{{"count", faces.size()},
                                                 {"faces", arr}}}});
  } else {
    std::cout << "command: bergman faces\n";
    std::cout << "matroid: " << summary_line(in.summary) << "\n";
    std::cout << "faces:   " << faces.size() << "\n";
    for (const BergmanFace& f : faces) {
      SetPartition comp = SetPartition::of(connected_components(f.face_matroid).blocks);
      std::cout << "dim " << f.dim << ": " << partition_str(comp)
                << " (bases=" << f.face_matroid.bases().size() << ")\n";
    }
  }
  return 0;
}

int cmd_nested(const std::string& path, bool json_mode, const std::string& building,
               const std::string& mode, int threads) {
  Input in = load(path);
  require_complex_input(in.matroid);
  FlatsLattice lattice = FlatsLattice::build(in.matroid);
  BuildingSet bset = building == "min" ? connected_flats(in.matroid, lattice)
                                       : full_building_set(lattice);

  if (mode == "facets" || mode == "fvector") {
    std::vector<NestedSet> facets = nested_facets(in.matroid, lattice, bset, threads);
    if (mode == "facets") {
      sort_by_key(facets, [&](const NestedSet& s) { return nested_key(lattice, s); });
      if (json_mode) {
        OrderedJson arr = OrderedJson::array();
        for (const NestedSet& s : facets) arr.push_back(nested_json(lattice, s));
        print_doc(OrderedJson{{"command", "nested"},
                              {"building", building},
                              {"mode", "facets"},
                              {"matroid", summary_json(in.summary)},
                              {"result", OrderedJson{{"count", facets.size()},
                                                     {"facets", arr}}}});
      } else {
        std::cout << "command:  nested facets building=" << building << "\n";
        std::cout << "matroid:  " << summary_line(in.summary) << "\n";
        std::cout << "facets:   " << facets.size() << "\n";
        for (const NestedSet& s : facets) std::cout << nested_str(lattice, s) << "\n";
      }
    } else {
      FVector fv = nested_f_vector(lattice.lattice_rank(), facets);
      long long chi = euler_characteristic(fv);
      if (json_mode) {
        print_doc(OrderedJson{{"command", "nested"},
                              {"building", building},
                              {"mode", "fvector"},
                              {"matroid", summary_json(in.summary)},
                              {"result", OrderedJson{{"f", fv.f}, {"euler", chi}}}});
      } else {
        std::cout << "command:  nested fvector building=" << building << "\n";
        std::cout << "matroid:  " << summary_line(in.summary) << "\n";
        std::cout << "f-vector: (";
        for (std::size_t i = 0; i < fv.f.size(); ++i)
          std::cout << (i ? ", " : "") << fv.f[i];
        std::cout << ")\n";
        std::cout << "reduced euler characteristic: " << chi << "\n";
      }
    }
    return 0;
  }

  // mode == "triangulation": per Bergman facet, its nested subdivision.
  std::vector<SetPartition> cells = bergman_facets(in.matroid, threads);
  BuildingSet gmin = connected_flats(in.matroid, lattice);

  struct Cell {
    SetPartition partition;
    bool subdivided = false;
    std::vector<NestedSet> simplices;
  };
  std::vector<Cell> rows;
  rows.reserve(cells.size());

  if (building == "min") {
    for (const SetPartition& omega : cells) {
      FacetSplit split = facet_triangulation(in.matroid, lattice, gmin, omega, cells);
      rows.push_back({omega, split.subdivided, std::move(split.simplices)});
    }
  } else {
    std::map<SetPartition, std::vector<NestedSet>> groups;
    for (const NestedSet& s : nested_facets_max(lattice))
      groups[nested_partition(lattice, s)].push_back(s);
    for (const SetPartition& omega : cells) {
      auto it = groups.find(omega);
      if (it == groups.end())
        throw std::logic_error("maximal nested complex misses a Bergman facet");
      rows.push_back({omega, it->second.size() > 1, it->second});
      groups.erase(it);
    }
    if (!groups.empty())
      throw std::logic_error("maximal nested facet outside every Bergman facet");
  }

  long long subdivided = 0;
  for (Cell& c : rows) {
    std::sort(c.simplices.begin(), c.simplices.end());
    if (c.subdivided) ++subdivided;
  }
  sort_by_key(rows, [](const Cell& c) { return partition_key(c.partition); });

  if (json_mode) {
    OrderedJson arr = OrderedJson::array();
    for (const Cell& c : rows) {
      OrderedJson simplices = OrderedJson::array();
      for (const NestedSet& s : c.simplices) simplices.push_back(nested_json(lattice, s));
      arr.push_back(OrderedJson{{"partition", partition_json(c.partition)},
                                {"subdivided", c.subdivided},
                                {"simplices", simplices}});
    }
    print_doc(OrderedJson{{"command", "nested"},
                          {"building", building},
                          {"mode", "triangulation"},
                          {"matroid", summary_json(in.summary)},
                          {"result", OrderedJson{{"count", rows.size()},
                                                 {"subdivided", subdivided},
                                                 {"facets", arr}}}});
  } else {
    std::cout << "command: nested triangulation building=" << building << "\n";
    std::cout << "matroid: " << summary_line(in.summary) << "\n";
    std::cout << "bergman facets: " << rows.size() << " (" << subdivided
              << " subdivided)\n";
    for (const Cell& c : rows) {
      if (!c.subdivided) {
        std::cout << partition_str(c.partition) << ": not subdivided\n";
      } else {
        std::cout << partition_str(c.partition) << ": subdivided into "
                  << c.simplices.size() << " simplices\n";
        for (const NestedSet& s : c.simplices)
          std::cout << "  " << nested_str(lattice, s) << "\n";
      }
    }
  }
  return 0;
}

int cmd_check(const std::string& path, bool json_mode) {
  Input in = load(path);
  require_complex_input(in.matroid);
  FlatsLattice lattice = FlatsLattice::build(in.matroid);
  BuildingSet gmin = connected_flats(in.matroid, lattice);
  EqualityResult res = equality_criterion(in.matroid, lattice, gmin);
  if (json_mode) {
    OrderedJson result{{"equal", res.equal}};
    if (!res.equal) {
      result["witness"] = OrderedJson{{"low", set_json(res.witness_low)},
                                      {"high", set_json(res.witness_high)}};
    }
    print_doc(OrderedJson{{"command", "check"},
                          {"matroid", summary_json(in.summary)},
                          {"result", result}});
  } else {
    std::cout << "command: check\n";
    std::cout << "matroid: " << summary_line(in.summary) << "\n";
    std::cout << "verdict: " << (res.equal ? "EQUAL" : "NOT-EQUAL") << "\n";
    if (!res.equal) {
      std::cout << "witness: F=" << format_set(res.witness_low)
                << " G=" << format_set(res.witness_high)
                << " (the minor between F and G is disconnected)\n";
    }
  }
  return 0;
}

int cmd_member(const std::string& path, bool json_mode, const std::string& wtext) {
  Input in = load(path);
  WeightVector w = parse_weights(wtext);
  if (static_cast<int>(w.size()) != in.matroid.ground_size()) {
    fail(Errc::LengthMismatch,
         "weight vector has " + std::to_string(w.size()) + " entries, expected " +
             std::to_string(in.matroid.ground_size()));
  }
  bool member = bergman_membership(in.matroid, w);
  Matroid mw = max_weight_matroid(in.matroid, w);
  SetPartition comp = SetPartition::of(connected_components(mw).blocks);
  Mask mw_loops = loops(mw);

  std::string wecho;
  for (std::size_t i = 0; i < w.size(); ++i)
    wecho += (i ? "," : "") + format_rational(w[i]);

  if (json_mode) {
    print_doc(OrderedJson{
        {"command", "member"},
        {"w", wecho},
        {"matroid", summary_json(in.summary)},
        {"result",
         OrderedJson{{"member", member},
                     {"max_weight_matroid",
                      OrderedJson{{"bases", mw.bases().size()},
                                  {"loops", set_json(mw_loops)},
                                  {"components", partition_json(comp)}}}}}});
  } else {
    std::cout << "command: member w=" << wecho << "\n";
    std::cout << "matroid: " << summary_line(in.summary) << "\n";
    std::cout << "verdict: " << (member ? "IN" : "OUT") << "\n";
    std::cout << "M_w: bases=" << mw.bases().size() << " loops=" << format_set(mw_loops)
              << " components: " << partition_str(comp) << "\n";
  }
  return 0;
}

int cmd_polytope(const std::string& path, bool json_mode) {
  Input in = load(path);
  require_connected_input(in.matroid);
  FlatsLattice lattice = FlatsLattice::build(in.matroid);
  PolytopeFacets pf = polytope_facets(in.matroid, lattice);

  // flacets by (rank, elements)
  std::vector<std::pair<int, int>> rows = pf.flacet_rhs;  // (flat id, rhs)
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return flat_key(lattice, a.first) < flat_key(lattice, b.first);
  });

  if (json_mode) {
    OrderedJson flacet_arr = OrderedJson::array();
    for (const auto& [id, rhs] : rows) {
      flacet_arr.push_back(
          OrderedJson{{"elements", set_json(lattice[id].mask)}, {"rhs", rhs}});
    }
    OrderedJson nonneg = OrderedJson::array();
    for (int e : pf.nonnegative) nonneg.push_back(e + 1);
    print_doc(OrderedJson{{"command", "polytope"},
                          {"matroid", summary_json(in.summary)},
                          {"result", OrderedJson{{"dimension", pf.dimension},
                                                 {"equation_rhs", in.matroid.rank()},
                                                 {"flacets", flacet_arr},
                                                 {"nonnegative", nonneg}}}});
  } else {
    std::cout << "command: polytope\n";
    std::cout << "matroid: " << summary_line(in.summary) << "\n";
    std::cout << "dimension: " << pf.dimension << "\n";
    std::cout << "equation: x" << format_set(in.matroid.ground_mask()) << " = "
              << in.matroid.rank() << "\n";
    std::cout << "flacet inequalities: " << rows.size() << "\n";
    for (const auto& [id, rhs] : rows)
      std::cout << "  x" << format_set(lattice[id].mask) << " <= " << rhs << "\n";
    std::cout << "nonnegativity facets: " << pf.nonnegative.size() << "\n";
    for (int e : pf.nonnegative) std::cout << "  x(" << e + 1 << ") >= 0\n";
  }
  return 0;
}

int emit_error(bool json_mode, const MatroidError& err) {
  const char* kind = "precondition";
  int code = 4;
  switch (err.kind()) {
    case ErrorKind::Parse:
      kind = "parse";
      code = 3;
      break;
    case ErrorKind::Validation:
      kind = "validation";
      code = 2;
      break;
    case ErrorKind::Precondition:
      break;
  }
  if (json_mode) {
    print_doc(OrderedJson{{"error", OrderedJson{{"code", err.code_name()},
                                                {"kind", kind},
                                                {"message", err.what()}}}});
  }
  std::cerr << "error: " << err.code_name() << ": " << err.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid polytopes, Bergman complexes and nested set complexes"};
  app.require_subcommand(1);

  std::string path;
  bool json_mode = false;
  int threads = 0;
  std::string bergman_mode = "facets";
  std::string nested_mode = "facets";
  std::string building = "min";
  std::string wtext;
  bool emit_bases = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", path, "matroid spec file (JSON)")->required();
    sub->add_flag("--json", json_mode, "emit a JSON document instead of text");
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads,
                    "worker threads for the per-basis sweeps (default: all cores)");
  };

  CLI::App* c_info =
      app.add_subcommand("info", "ground set, rank, bases, connectivity, flats");
  add_common(c_info);
  c_info->add_flag("--emit-bases", emit_bases,
                   "print the matroid as a bases-kind spec document");

  CLI::App* c_bergman =
      app.add_subcommand("bergman", "facets, faces or f-vector of the Bergman complex");
  add_common(c_bergman);
  c_bergman->add_option("--mode", bergman_mode, "facets|faces|fvector")
      ->check(CLI::IsMember({"facets", "faces", "fvector"}))
      ->capture_default_str();
  add_threads(c_bergman);

  CLI::App* c_nested = app.add_subcommand(
      "nested", "facets or f-vector of a nested set complex, or the triangulation "
                "of the Bergman facets");
  add_common(c_nested);
  c_nested->add_option("--building", building, "min|max")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  c_nested->add_option("--mode", nested_mode, "facets|fvector|triangulation")
      ->check(CLI::IsMember({"facets", "fvector", "triangulation"}))
      ->capture_default_str();
  add_threads(c_nested);

  CLI::App* c_check = app.add_subcommand(
      "check", "does the minimal nested set complex equal the Bergman complex?");
  add_common(c_check);

  CLI::App* c_member =
      app.add_subcommand("member", "is a weight vector in the Bergman fan?");
  add_common(c_member);
  c_member->add_option("--w", wtext, "comma-separated rational weights, one per element")
      ->required();

  CLI::App* c_polytope =
      app.add_subcommand("polytope", "facet description of the matroid polytope");
  add_common(c_polytope);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (c_info->parsed()) {
      rc = cmd_info(path, json_mode, emit_bases);
    } else if (c_bergman->parsed()) {
      rc = cmd_bergman(path, json_mode, bergman_mode, threads);
    } else if (c_nested->parsed()) {
      rc = cmd_nested(path, json_mode, building, nested_mode, threads);
    } else if (c_check->parsed()) {
      rc = cmd_check(path, json_mode);
    } else if (c_member->parsed()) {
      rc = cmd_member(path, json_mode, wtext);
    } else if (c_polytope->parsed()) {
      rc = cmd_polytope(path, json_mode);
    }
  } catch (const MatroidError& err) {
    rc = emit_error(json_mode, err);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    rc = 1;
  }
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cerr << "timing: " << elapsed << " ms\n";
  return rc;
}
