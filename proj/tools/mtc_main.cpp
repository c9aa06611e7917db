// Command-line interface: validate | fusion | currents | algebra |
// cohomology | nimrep-check | nimrep-reconstruct | extend | characters | e6.
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtc/e6_data.hpp"
#include "mtc/errors.hpp"
#include "mtc/frobenius.hpp"
#include "mtc/json_io.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/nimrep.hpp"
#include "mtc/simple_current.hpp"

using namespace mtc;

namespace {

struct DatumSource {
  std::string path;
  int level = 0;
  bool force = false;

  ModularDatum resolve(bool validate_file = true) const {
    if (level > 0 && !path.empty())
      throw InputError("give either a datum file or --level, not both");
    if (level > 0) return su2_level(level);
    if (path.empty()) throw InputError("need a datum file or --level k");
    return load_modular_datum(path, force || !validate_file);
  }
};

void emit(const Json& machine, const std::string& human, bool as_json) {
  if (as_json)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

int exit_code(const ValidationReport& rep) { return rep.passed() ? 0 : 1; }

std::vector<int> parse_subset(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  for (const char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

NimRep resolve_nimrep(const std::string& ring_path, const std::string& nim_path,
                      int level, const std::string& graph_path) {
  if (!graph_path.empty()) {
    if (level <= 0) throw InputError("--graph needs --level k");
    const Json j = load_json_file(graph_path);
    const Json& adj = j.contains("adjacency") ? j.at("adjacency") : j;
    const int b = static_cast<int>(adj.size());
    IMatrix a(b, b);
    for (int i = 0; i < b; ++i) {
      if (static_cast<int>(adj[i].size()) != b)
        throw ShapeMismatch("adjacency is not square");
      for (int k = 0; k < b; ++k) a.at(i, k) = adj[i][k].get<std::int64_t>();
    }
    return from_su2_graph(a, level);
  }
  if (ring_path.empty() || nim_path.empty())
    throw InputError("need ring.json and nimrep.json, or --level with --graph");
  NimRep nim;
  nim.ring = fusion_ring_from_json(load_json_file(ring_path));
  Json nj = load_json_file(nim_path);
  nj["ring"] = to_json(nim.ring);  // ring given explicitly wins
  return nimrep_from_json(
      nj, std::filesystem::path(nim_path).parent_path().string());
}

int run_validate(const DatumSource& src, bool as_json) {
  const ModularDatum md = src.resolve(/*validate_file=*/false);
  const auto rep = validate(md);
  emit(to_json(rep), rep.to_text(), as_json);
  return exit_code(rep);
}

int run_fusion(const DatumSource& src, bool as_json, const std::string& out) {
  const ModularDatum md = src.resolve();
  double dev = 0.0;
  const FusionRing ring = verlinde_fusion(md, &dev);
  const auto rep = check_ring_axioms(ring);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << to_json(ring).dump(2) << "\n";
  }
  Json machine{{"n", ring.n},
               {"unit", ring.unit},
               {"max_integrality_deviation", dev},
               {"axioms", to_json(rep)},
               {"ring", to_json(ring)}};
  std::string human = "fusion ring on " + std::to_string(ring.n) +
                      " labels (integrality deviation " + std::to_string(dev) +
                      ")\n" + rep.to_text();
  emit(machine, human, as_json);
  return exit_code(rep);
}

int run_currents(const DatumSource& src, bool as_json) {
  const ModularDatum md = src.resolve();
  const auto currents = simple_currents(md);
  Json list = Json::array();
  std::string human = "simple currents:\n";
  for (int j : currents) {
    const int order = current_order(md, j);
    list.push_back(Json{{"label", j},
                        {"name", md.labels[j]},
                        {"order", order},
                        {"theta", to_json(md.theta[j])}});
    human += "  " + md.labels[j] + "  (label " + std::to_string(j) +
             ", order " + std::to_string(order) + ", theta " +
             std::to_string(md.theta[j].num) + "/" +
             std::to_string(md.theta[j].den) + ")\n";
  }
  emit(Json{{"currents", list}}, human, as_json);
  return 0;
}

int run_algebra(const std::string& path, bool as_json) {
  const AlgebraPresentation ap = algebra_from_json(load_json_file(path));
  ValidationReport all;
  Json derived = Json::object();

  const auto merge = [&all](const char* prefix, const AxiomReport& rep) {
    for (const auto& c : rep.report.checks)
      all.add(std::string(prefix) + ": " + c.name, c.passed, c.deviation,
              c.detail);
  };
  merge("algebra", check_algebra(ap));
  merge("coalgebra", check_coalgebra(ap));
  merge("frobenius", check_frobenius(ap));
  try {
    const auto special = check_special(ap);
    merge("special", special);
    derived["beta_A"] = to_json(special.scalar("beta_A"));
    derived["beta_I"] = to_json(special.scalar("beta_I"));
    try {
      derived["nu_A"] = fs_indicator(ap);
    } catch (const NotUnimodular&) {
      derived["nu_A"] = nullptr;
    }
  } catch (const NotScalar& e) {
    all.add("special: m . Delta scalar", false, 0.0, e.what());
  }
  derived["beta"] = to_json(beta_scalar(ap));
  // haploidity needs a grading; the graded unit is taken to be label 0
  const auto haploid = is_haploid(ap, 0);
  derived["haploid"] = haploid ? Json(*haploid) : Json(nullptr);
  if (ap.swap_xi) {
    merge("swap", check_swap_commutative(ap));
    try {
      merge("bialgebra", check_bialgebra_identity(ap));
    } catch (const NotScalar& e) {
      all.add("bialgebra identity", false, 0.0, e.what());
    }
  }

  Json machine = to_json(all);
  machine["derived"] = derived;
  emit(machine, all.to_text(), as_json);
  return exit_code(all);
}

int run_cohomology(const std::string& path, bool as_json) {
  const AbelianGroup g = abelian_group_from_json(load_json_file(path));
  const auto classes = cohomology_classes(g);
  Json machine{{"orders", g.orders},
               {"class_count", classes.size()},
               {"classes", Json::array()}};
  for (const auto& psi : classes) machine["classes"].push_back(to_json(psi));
  std::string human = "H^2(G, C^x) has " + std::to_string(classes.size()) +
                      " classes for |G| = " + std::to_string(g.size()) + "\n";
  emit(machine, human, as_json);
  return 0;
}

int run_nimrep_check(const NimRep& nim, bool as_json) {
  const auto rep = verify(nim);
  emit(to_json(rep), rep.to_text(), as_json);
  return exit_code(rep);
}

int run_nimrep_reconstruct(const NimRep& nim, int level, bool as_json) {
  const auto rep = verify(nim);
  if (!rep.passed()) {
    emit(to_json(rep), rep.to_text(), as_json);
    return 1;
  }
  const auto algebra = reconstruct_algebra(nim);
  const auto m0 = physical_m0(nim);
  Json machine{{"algebra", algebra},
               {"physical_m0", m0 ? Json(*m0) : Json(nullptr)}};
  std::string human = "algebra multiplicities:";
  for (auto m : algebra) human += " " + std::to_string(m);
  human += m0 ? "\nphysical m0: boundary " + std::to_string(*m0) +
                    " (" + nim.boundaries[*m0] + ", lowest index on ties)\n"
              : "\nphysical m0: none (unphysical NIM-rep)\n";
  if (m0) {
    const auto br = branching(nim, *m0);
    Json jbr = Json::object();
    for (int b = 0; b < nim.num_boundaries(); ++b) {
      jbr[nim.boundaries[b]] = br[b];
      human += "  " + nim.boundaries[b] + " <-";
      for (int x = 0; x < nim.ring.n; ++x)
        for (int r = 0; r < br[b][x]; ++r) human += " " + std::to_string(x);
      human += "\n";
    }
    machine["branching"] = jbr;
    if (level > 0) {
      const auto dims = boundary_dims(nim, su2_level(level));
      machine["boundary_dims"] = dims;
      human += "boundary entropies:";
      for (double d : dims) human += " " + std::to_string(d);
      human += "\n";
    }
  }
  emit(machine, human, as_json);
  return m0 ? 0 : 1;
}

int run_extend(const DatumSource& src, const std::string& subset_csv,
               bool as_json) {
  const ModularDatum md = src.resolve();
  const auto c = candidate(md, parse_subset(subset_csv));

  Json machine{{"candidate", Json{{"subset", c.subset}}}};
  const auto adm = twist_admissible(c);
  Json twist = Json::object();
  for (const auto& e : adm.entries)
    twist[std::to_string(e.label)] =
        Json{{"order", e.order},
             {"theta", to_json(e.twist)},
             {"theta_power", to_json(e.twist_power)},
             {"pass", e.passed}};
  machine["twist"] = twist;
  machine["monodromy_neutral"] = monodromy_neutral(c);
  machine["local"] = local_sector(c);

  std::string human = "subset:";
  for (int j : c.subset) human += " " + std::to_string(j);
  human += adm.passed ? "\ntwist admissible: yes\n" : "\ntwist admissible: NO\n";

  int code = adm.passed ? 0 : 1;
  try {
    const auto ext = extend(c);
    Json orbits = Json::array();
    for (const auto& orbit : ext.orbits) orbits.push_back(orbit);
    machine["extension"] = Json{{"orbits", orbits},
                                {"datum", to_json(ext.extended)}};
    human += "extension: " + std::to_string(ext.extended.size()) +
             " labels, validates\n";
  } catch (const CheckError& e) {
    machine["extension"] = Json{{"error", e.what()}};
    human += std::string("extension: ") + e.what() + "\n";
    code = 1;
  }
  emit(machine, human, as_json);
  return code;
}

int run_characters(const DatumSource& src, bool as_json) {
  const ModularDatum md = src.resolve();
  const auto chars = e6_character_set(md);
  const auto rep = e6_closure_check(md);
  Json jc = Json::object();
  std::string human;
  for (const auto& [name, v] : chars) {
    jc[name] = v;
    human += name + ":";
    for (double x : v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " % .6f", x);
      human += buf;
    }
    human += "\n";
  }
  human += rep.to_text();
  Json machine{{"characters", jc}, {"closure", to_json(rep)}};
  emit(machine, human, as_json);
  return exit_code(rep);
}

int run_e6(bool as_json) {
  const auto rep = e6::run_all_checks();
  emit(to_json(rep), rep.to_text(), as_json);
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular-data toolkit: fusion rings, algebra-object checks, "
               "NIM-reps and simple-current extensions"};
  app.require_subcommand(1);

  double tau = tolerance();
  bool as_json = false;
  app.add_option("--tolerance", tau, "comparison tolerance (default 1e-9)");
  app.add_flag("--json", as_json, "machine-readable report");

  DatumSource src;
  std::string out_path, subset_csv, graph_path, ring_path, nim_path,
      algebra_path, group_path;

  auto* validate_cmd = app.add_subcommand("validate", "check modular-datum axioms");
  validate_cmd->add_option("file", src.path, "datum JSON");
  validate_cmd->add_option("--level", src.level, "use built-in su(2) level k");

  auto* fusion_cmd = app.add_subcommand("fusion", "Verlinde fusion ring");
  fusion_cmd->add_option("file", src.path, "datum JSON");
  fusion_cmd->add_option("--level", src.level, "su(2) level k");
  fusion_cmd->add_flag("--force", src.force, "skip datum validation on load");
  fusion_cmd->add_option("--out", out_path, "write the ring JSON here");

  auto* currents_cmd = app.add_subcommand("currents", "simple currents");
  currents_cmd->add_option("file", src.path, "datum JSON");
  currents_cmd->add_option("--level", src.level, "su(2) level k");
  currents_cmd->add_flag("--force", src.force, "skip datum validation on load");

  auto* algebra_cmd =
      app.add_subcommand("algebra", "axiom ledger for a presentation");
  algebra_cmd->add_option("file", algebra_path, "presentation JSON")
      ->required();

  auto* coh_cmd = app.add_subcommand("cohomology", "H^2(G, C^x) classes");
  coh_cmd->add_option("file", group_path, "group JSON {\"orders\": [...]}")
      ->required();

  auto* check_cmd = app.add_subcommand("nimrep-check", "verify a NIM-rep");
  check_cmd->add_option("ring", ring_path, "fusion ring JSON");
  check_cmd->add_option("nimrep", nim_path, "NIM-rep JSON");
  check_cmd->add_option("--level", src.level, "su(2) level k");
  check_cmd->add_option("--graph", graph_path, "adjacency JSON");

  auto* rec_cmd =
      app.add_subcommand("nimrep-reconstruct", "algebra object from a NIM-rep");
  rec_cmd->add_option("ring", ring_path, "fusion ring JSON");
  rec_cmd->add_option("nimrep", nim_path, "NIM-rep JSON");
  rec_cmd->add_option("--level", src.level, "su(2) level k");
  rec_cmd->add_option("--graph", graph_path, "adjacency JSON");

  auto* extend_cmd =
      app.add_subcommand("extend", "simple-current extension report");
  extend_cmd->add_option("file", src.path, "datum JSON");
  extend_cmd->add_option("--level", src.level, "su(2) level k");
  extend_cmd->add_flag("--force", src.force, "skip datum validation on load");
  extend_cmd->add_option("--subset", subset_csv, "current labels a,b,c")
      ->required();

  auto* chars_cmd =
      app.add_subcommand("characters", "level-10 character vectors + closure");
  chars_cmd->add_option("file", src.path, "datum JSON");
  chars_cmd->add_option("--level", src.level, "su(2) level k");
  chars_cmd->add_flag("--force", src.force, "skip datum validation on load");

  auto* e6_cmd = app.add_subcommand("e6", "full level-10 golden verification");

  // --tolerance and --json may appear after the verb
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    set_tolerance(tau);
    if (validate_cmd->parsed()) return run_validate(src, as_json);
    if (fusion_cmd->parsed()) return run_fusion(src, as_json, out_path);
    if (currents_cmd->parsed()) return run_currents(src, as_json);
    if (algebra_cmd->parsed()) return run_algebra(algebra_path, as_json);
    if (coh_cmd->parsed()) return run_cohomology(group_path, as_json);
    if (check_cmd->parsed())
      return run_nimrep_check(
          resolve_nimrep(ring_path, nim_path, src.level, graph_path), as_json);
    if (rec_cmd->parsed())
      return run_nimrep_reconstruct(
          resolve_nimrep(ring_path, nim_path, src.level, graph_path),
          src.level, as_json);
    if (extend_cmd->parsed()) return run_extend(src, subset_csv, as_json);
    if (chars_cmd->parsed()) return run_characters(src, as_json);
    if (e6_cmd->parsed()) return run_e6(as_json);
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
