#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slfq/chains.hpp"
#include "slfq/classify.hpp"
#include "slfq/dot.hpp"
#include "slfq/inventory.hpp"
#include "slfq/json_io.hpp"
#include "slfq/knit.hpp"
#include "slfq/oracle.hpp"
#include "slfq/status.hpp"
#include "slfq/walk.hpp"

using namespace slfq;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Parses and fully validates; every command except `validate` requires a
// clean presentation.
QuiverPresentation load_quiver(const std::string& path) {
  QuiverPresentation qp = quiver_from_json_text(slurp(path));
  ValidationReport vr = validate_presentation(qp);
  if (!vr.well_formed()) throw std::runtime_error(path + ": " + vr.structural.front());
  if (!vr.valid()) throw std::runtime_error(path + ": " + vr.violations.front());
  return qp;
}

StableRep load_rep(const QuiverPresentation& qp, const std::string& path) {
  return rep_from_json_text(qp, slurp(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path) {
  QuiverPresentation qp = quiver_from_json_text(slurp(path));
  ValidationReport vr = validate_presentation(qp);
  ordered_json j;
  j["well_formed"] = vr.well_formed();
  j["valid"] = vr.valid();
  j["structural"] = vr.structural;
  j["violations"] = vr.violations;
  emit(j);
  return vr.valid() ? kOk : kInputError;
}

int cmd_classify(const std::string& path) {
  ClassificationReport r = classify_quiver(load_quiver(path));
  ordered_json j;
  j["star"] = r.is_star;
  j["dynkin"] = dynkin_name(r.dynkin);
  j["sourced"] = r.has_infinite_sourced_paths;
  j["sinked"] = r.has_infinite_sinked_paths;
  emit(j);
  return kOk;
}

int cmd_inventory(const std::string& path) {
  std::cout << inventory_to_json_text(component_inventory(load_quiver(path)));
  return kOk;
}

const char* state_name(KnitState s) {
  switch (s) {
    case KnitState::Present:
      return "present";
    case KnitState::Absent:
      return "absent";
    default:
      return "unresolved";
  }
}

ordered_json knit_json(const KnittedComponent& k, const char* side, int radius) {
  ordered_json j;
  j["side"] = side;
  j["depth"] = k.depth;
  j["radius"] = radius;
  ordered_json cells = ordered_json::array();
  for (const KnitVertex& kv : k.vertices) {
    ordered_json c;
    c["slice"] = kv.slice;
    c["vertex"] = kv.vertex;
    c["state"] = state_name(kv.state);
    if (kv.state == KnitState::Present) c["dims"] = kv.dims;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  ordered_json arrows = ordered_json::array();
  for (const KnitArrow& ka : k.arrows) {
    ordered_json a;
    a["from"] = ka.from;
    a["to"] = ka.to;
    a["via"] = ka.via;
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

int cmd_knit(const std::string& path, int depth, int radius, bool preinjective) {
  QuiverPresentation qp = load_quiver(path);
  KnittedComponent k = preinjective ? knit_preinjective(qp, depth, radius)
                                    : knit_preprojective(qp, depth, radius);
  emit(knit_json(k, preinjective ? "preinjective" : "preprojective", radius));
  return kOk;
}

int cmd_rep(const std::string& path, const std::string& make, const std::string& at,
            const std::vector<std::string>& vertices, int front, int back) {
  QuiverPresentation qp = load_quiver(path);
  StableRep m;
  if (make == "walk") {
    WalkSpec spec;
    if (front >= 0) spec.extend_front = front;
    if (back >= 0) spec.extend_back = back;
    spec.vertices = vertices;
    m = walk_rep(qp, make_walk(qp, spec));
  } else {
    if (at.empty()) throw std::runtime_error("--make " + make + " requires --at");
    if (make == "proj")
      m = projective_at(qp, at);
    else if (make == "inj")
      m = injective_at(qp, at);
    else
      m = simple_at(qp, at);
  }
  std::cout << rep_to_json_text(m);
  return kOk;
}

int cmd_hom(const std::string& qpath, const std::string& mpath, const std::string& npath) {
  QuiverPresentation qp = load_quiver(qpath);
  StableRep m = load_rep(qp, mpath);
  StableRep n = load_rep(qp, npath);
  ordered_json j;
  j["dim"] = hom_dim(m, n);
  emit(j);
  return kOk;
}

int cmd_status(const std::string& qpath, const std::string& mpath) {
  QuiverPresentation qp = load_quiver(qpath);
  StableRep m = load_rep(qp, mpath);
  StatusFlags f = presentation_status(m);
  ordered_json j;
  j["fg"] = f.fg;
  j["fcg"] = f.fcg;
  j["fp"] = f.fp;
  j["fcp"] = f.fcp;
  j["in_rrep"] = is_in_rrep(m);
  emit(j);
  return kOk;
}

// Path quiver on vertices "1".."n"; edge k points right unless bit k-1 of
// mask is set.
QuiverPresentation path_quiver(int n, unsigned mask) {
  QuiverPresentation qp;
  for (int v = 1; v <= n; ++v) qp.core.vertices.push_back(std::to_string(v));
  for (int k = 1; k < n; ++k) {
    std::string a = std::to_string(k);
    std::string b = std::to_string(k + 1);
    if (mask & (1u << (k - 1)))
      qp.core.arrows.push_back({"a" + std::to_string(k), b, a});
    else
      qp.core.arrows.push_back({"a" + std::to_string(k), a, b});
  }
  return qp;
}

void merge_checks(std::vector<CheckResult>& agg, const std::vector<CheckResult>& part,
                  const std::string& tag) {
  for (const CheckResult& c : part) {
    CheckResult* slot = nullptr;
    for (CheckResult& a : agg)
      if (a.name == c.name) {
        slot = &a;
        break;
      }
    if (!slot) {
      agg.push_back({c.name, 0, {}});
      slot = &agg.back();
    }
    slot->instances += c.instances;
    for (const std::string& v : c.violations)
      slot->violations.push_back(tag.empty() ? v : tag + ": " + v);
  }
}

int emit_report(const std::vector<CheckResult>& checks) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  ordered_json flat = ordered_json::array();
  for (const CheckResult& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["instances"] = c.instances;
    e["violations"] = c.violations;
    arr.push_back(std::move(e));
    for (const std::string& v : c.violations) flat.push_back(v);
  }
  j["checks"] = std::move(arr);
  j["violations"] = std::move(flat);
  emit(j);
  return flat.empty() ? kOk : kViolation;
}

// Runs the structure-theorem suite over every orientation of the path on
// n vertices. Doubles per extra vertex; n = 5 is instant, n = 12 is a
// long lunch.
int cmd_verify_oracle(int n) {
  std::vector<CheckResult> agg;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<CheckResult> part =
        verify_structure_theorems(build_catalog(path_quiver(n, mask)));
    merge_checks(agg, part, n > 1 ? "orientation " + std::to_string(mask) : "");
  }
  return emit_report(agg);
}

struct NamedFixture {
  std::string name;
  QuiverPresentation qp;
};

// In-code copies of the shipped fixture files (the files are kept in sync
// by the test suite); verification must not depend on a working directory.
std::vector<NamedFixture> named_fixtures() {
  std::vector<NamedFixture> out;
  {
    QuiverPresentation qp;
    qp.core.vertices = {"c"};
    qp.tails.push_back({"c", TailWord("", "O")});
    out.push_back({"ray", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"c"};
    qp.tails.push_back({"c", TailWord("", "I")});
    out.push_back({"coray", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"0"};
    qp.tails.push_back({"0", TailWord("", "IO")});
    out.push_back({"zigzag", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"0"};
    qp.tails.push_back({"0", TailWord("", "IO")});
    qp.tails.push_back({"0", TailWord("", "O")});
    out.push_back({"example2", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"c0", "c1", "u"};
    qp.core.arrows = {{"a0", "c0", "c1"}, {"a1", "u", "c1"}};
    qp.tails.push_back({"c1", TailWord("", "O")});
    out.push_back({"dinf", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"g0", "g1", "g2"};
    qp.core.arrows = {{"e0", "g0", "g1"}, {"e1", "g1", "g2"}};
    qp.tails.push_back({"g0", TailWord("", "I")});
    qp.tails.push_back({"g1", TailWord("", "I")});
    qp.tails.push_back({"g2", TailWord("", "I")});
    qp.tails.push_back({"g2", TailWord("", "O")});
    qp.tails.push_back({"g0", TailWord("", "O")});
    out.push_back({"figure1_star", qp});
  }
  {
    QuiverPresentation qp;
    qp.core.vertices = {"s1", "s2", "s3", "u1", "u2", "u3"};
    qp.core.arrows = {{"c1", "s1", "s2"}, {"c2", "s2", "s3"},
                      {"b1", "u1", "s1"}, {"b2", "u2", "s2"}, {"b3", "u3", "s3"}};
    qp.tails.push_back({"s3", TailWord("", "OI")});
    out.push_back({"comb", qp});
  }
  return out;
}

struct FixtureExpect {
  bool star, sourced, sinked;
  Dynkin dynkin;
  bool ppfull, pifull;
  WingCount wings;
  WingConstraints wc;
  bool linear;
};

int cmd_verify_fixtures() {
  std::vector<NamedFixture> fixtures = named_fixtures();
  std::vector<std::pair<std::string, FixtureExpect>> table = {
      {"ray", {true, true, false, Dynkin::AInf, false, true, WingCount::Zero,
               {false, true, false}, false}},
      {"coray", {true, false, true, Dynkin::AInf, true, false, WingCount::Zero,
                 {true, false, false}, false}},
      {"zigzag", {false, false, false, Dynkin::AInf, true, true, WingCount::Zero,
                  {false, false, false}, true}},
      {"example2", {false, true, false, Dynkin::AInfInf, false, true, WingCount::Two,
                    {false, true, false}, true}},
      {"dinf", {true, true, false, Dynkin::DInf, false, true, WingCount::One,
                {false, true, false}, false}},
      {"figure1_star", {true, true, true, Dynkin::NotInfiniteDynkin, false, false,
                        WingCount::Omega, {true, true, true}, false}},
      {"comb", {false, false, false, Dynkin::NotInfiniteDynkin, true, true,
                WingCount::Omega, {false, false, false}, true}},
  };

  CheckResult classification{"fixture_classification", 0, {}};
  CheckResult inventory{"fixture_inventory", 0, {}};
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& [name, qp] = fixtures[i];
    const FixtureExpect& e = table[i].second;
    ClassificationReport r = classify_quiver(qp);
    ++classification.instances;
    if (r.is_star != e.star || r.dynkin != e.dynkin ||
        r.has_infinite_sourced_paths != e.sourced ||
        r.has_infinite_sinked_paths != e.sinked)
      classification.violations.push_back(name + ": classification tuple mismatch");
    ComponentInventory inv = component_inventory(qp);
    ++inventory.instances;
    if (inv.preprojective_full != e.ppfull || inv.preinjective_full != e.pifull ||
        inv.quasi_wings != e.wings || !(inv.wing_constraints == e.wc) ||
        inv.linear_components != e.linear)
      inventory.violations.push_back(name + ": inventory mismatch");
  }

  // Honesty of the mesh beside a window boundary: the outward ray leaves
  // every later slice unresolved, the inward ray resolves a staircase.
  CheckResult knit{"fixture_knit_honesty", 0, {}};
  {
    KnittedComponent k = knit_preprojective(fixtures[0].qp, 2, 6);
    for (int n = 1; n <= 2; ++n)
      for (int v = 0; v < k.window.vertex_count(); ++v) {
        ++knit.instances;
        int c = k.cell(n, k.window.vertex(v).name);
        if (k.vertices[static_cast<std::size_t>(c)].state != KnitState::Unresolved)
          knit.violations.push_back("ray: resolved cell beyond slice 0");
      }
    k = knit_preprojective(fixtures[1].qp, 3, 6);
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 6; ++d) {
        ++knit.instances;
        int c = k.cell(n, d == 0 ? "c" : tail_vertex_name(0, d));
        KnitState s = k.vertices[static_cast<std::size_t>(c)].state;
        KnitState want = d > 6 - n ? KnitState::Unresolved : KnitState::Present;
        if (s != want)
          knit.violations.push_back("coray: staircase mismatch at slice " +
                                    std::to_string(n) + " depth " + std::to_string(d));
      }
  }

  // One neighbor step in each worked example chain.
  CheckResult chains{"fixture_chains", 0, {}};
  {
    const QuiverPresentation& zz = fixtures[2].qp;
    StableRep m0 = walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {"0"}, 0}));
    StableRep m1 =
        walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {tail_vertex_name(0, 1)}, 0}));
    StableRep m2 =
        walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {tail_vertex_name(0, 2)}, 0}));
    Chain c = chain_explore(zz, m0, 1);
    ++chains.instances;
    if (c.modules.size() != 3 || c.seed_index != 1 ||
        !is_isomorphic(c.modules[0], m2) || !is_isomorphic(c.modules[2], m1))
      chains.violations.push_back("zigzag: one-step chain mismatch");

    const QuiverPresentation& e2 = fixtures[3].qp;
    StableRep minf = walk_rep(e2, make_walk(e2, WalkSpec{1, {"0"}, 0}));
    StableRep e2m2 =
        walk_rep(e2, make_walk(e2, WalkSpec{std::nullopt, {tail_vertex_name(0, 2)}, 0}));
    Chain c2 = chain_explore(e2, minf, 1);
    ++chains.instances;
    if (c2.right_stop != ChainStop::NoNeighbor || c2.modules.size() != 2 ||
        !is_isomorphic(c2.modules[0], e2m2))
      chains.violations.push_back("example2: chain does not stop at the full module");
  }

  return emit_report({classification, inventory, knit, chains});
}

FiniteQuiver window_as_finite(const Window& w) {
  FiniteQuiver fq;
  for (int v = 0; v < w.vertex_count(); ++v) fq.vertices.push_back(w.vertex(v).name);
  for (int a = 0; a < w.arrow_count(); ++a)
    fq.arrows.push_back({w.arrow(a).id, w.vertex(w.arrow(a).from).name,
                         w.vertex(w.arrow(a).to).name});
  return fq;
}

int cmd_export_dot(const std::string& path, int radius, bool knit, int depth,
                   bool preinjective) {
  QuiverPresentation qp = load_quiver(path);
  if (knit) {
    KnittedComponent k = preinjective ? knit_preinjective(qp, depth, radius)
                                      : knit_preprojective(qp, depth, radius);
    std::cout << to_dot(k);
    return kOk;
  }
  std::vector<int> depths(qp.tails.size(), radius);
  std::cout << to_dot(window_as_finite(materialize_window(qp, depths)));
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"strongly locally finite quiver toolkit"};
  app.require_subcommand(1);

  std::string qpath, mpath, npath, make, at;
  std::vector<std::string> verts;
  int depth = 0, radius = 3, front = -1, back = -1, oracle_n = 0;
  bool preinjective = false, knit_flag = false;

  CLI::App* c_validate = app.add_subcommand("validate", "check a quiver file");
  c_validate->add_option("quiver", qpath, "quiver JSON file")->required();

  CLI::App* c_classify = app.add_subcommand("classify", "star and Dynkin classification");
  c_classify->add_option("quiver", qpath)->required();

  CLI::App* c_inventory =
      app.add_subcommand("inventory", "Auslander-Reiten component inventory");
  c_inventory->add_option("quiver", qpath)->required();

  CLI::App* c_knit = app.add_subcommand("knit", "grow a translation-mesh component");
  c_knit->add_option("quiver", qpath)->required();
  c_knit->add_option("--depth", depth, "last slice to fill")->required();
  c_knit->add_option("--radius", radius, "window depth per tail")->required();
  c_knit->add_flag("--preinjective", preinjective, "grow from the injectives");

  CLI::App* c_rep = app.add_subcommand("rep", "build a representation file");
  c_rep->add_option("quiver", qpath)->required();
  c_rep->add_option("--make", make, "proj, inj, simple, or walk")
      ->required()
      ->check(CLI::IsMember({"proj", "inj", "simple", "walk"}));
  c_rep->add_option("--at", at, "base vertex for proj/inj/simple");
  c_rep->add_option("--vertices", verts, "walk vertices in order")->delimiter(',');
  c_rep->add_option("--front", front, "tail index the walk enters from");
  c_rep->add_option("--back", back, "tail index the walk leaves along");

  CLI::App* c_hom = app.add_subcommand("hom", "dimension of the morphism space");
  c_hom->add_option("quiver", qpath)->required();
  c_hom->add_option("M", mpath, "source representation file")->required();
  c_hom->add_option("N", npath, "target representation file")->required();

  CLI::App* c_status = app.add_subcommand("status", "presentation flags of a representation");
  c_status->add_option("quiver", qpath)->required();
  c_status->add_option("M", mpath)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run a falsification suite");
  c_verify->require_subcommand(1);
  CLI::App* c_voracle =
      c_verify->add_subcommand("oracle", "structure theorems over path quivers");
  c_voracle->add_option("--n", oracle_n, "path length")->required()->check(CLI::Range(1, 12));
  CLI::App* c_vfixtures =
      c_verify->add_subcommand("fixtures", "classification, inventory, knit, chains");

  CLI::App* c_export = app.add_subcommand("export", "render to an exchange format");
  c_export->require_subcommand(1);
  CLI::App* c_edot = c_export->add_subcommand("dot", "graphviz drawing");
  c_edot->add_option("quiver", qpath)->required();
  c_edot->add_option("--radius", radius, "window depth per tail");
  c_edot->add_flag("--knit", knit_flag, "draw the knitted component");
  c_edot->add_option("--depth", depth, "knit slices (with --knit)");
  c_edot->add_flag("--preinjective", preinjective, "injective-side knit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*c_validate) return cmd_validate(qpath);
    if (*c_classify) return cmd_classify(qpath);
    if (*c_inventory) return cmd_inventory(qpath);
    if (*c_knit) return cmd_knit(qpath, depth, radius, preinjective);
    if (*c_rep) return cmd_rep(qpath, make, at, verts, front, back);
    if (*c_hom) return cmd_hom(qpath, mpath, npath);
    if (*c_status) return cmd_status(qpath, mpath);
    if (*c_verify) {
      if (*c_voracle) return cmd_verify_oracle(oracle_n);
      if (*c_vfixtures) return cmd_verify_fixtures();
    }
    if (*c_export && *c_edot) {
      if (knit_flag && !c_edot->count("--depth"))
        throw std::runtime_error("--knit requires --depth");
      return cmd_export_dot(qpath, radius, knit_flag, depth, preinjective);
    }
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
