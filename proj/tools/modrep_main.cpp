// Command-line driver: parse representation, group, and mass files, run the
// analyses, and reproduce the pinned results as pass/fail reports.
//
// Exit codes: 0 all pass, 1 verification mismatch, 2 usage or parse error.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modrep/catalog.hpp"
#include "modrep/io.hpp"
#include "modrep/mass.hpp"
#include "modrep/meataxe.hpp"
#include "modrep/repro.hpp"

#ifndef MODREP_DATA_DIR
#define MODREP_DATA_DIR "data"
#endif

namespace {

using namespace modrep;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string zs2_pretty(const ZS2& z) {
  if (z.b == 0) return z.a.get_str();
  std::string root = z.b == 1 ? "s" : z.b == -1 ? "-s" : z.b.get_str() + "s";
  if (z.a == 0) return root;
  return z.a.get_str() + (z.b > 0 ? "+" : "") + root;
}

void header(const std::string& name, uint64_t seed) {
  std::cout << "# " << name << " report\n\nseed " << seed << "\n\n";
}

std::string module_line(const Representation& m) {
  return "module: dim " + std::to_string(m.dim) + " over " + m.ring.name();
}

// Positive-coefficient terms (positive = true) or negated negative ones,
// rendered like "e + mu + tau + 3 p".
std::string side_desc(const MassIdentity& id, bool positive) {
  std::string out;
  for (const auto& t : id.terms) {
    if ((t.coeff > 0) != positive) continue;
    mpq_class a = abs(t.coeff);
    if (!out.empty()) out += " + ";
    if (a != 1) {
      out += a.get_num().get_str();
      if (a.get_den() != 1) out += "/" + a.get_den().get_str();
      out += " ";
    }
    out += t.particle;
  }
  return out;
}

std::string resolve_identity_path(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return arg;
  if (arg.find('/') == std::string::npos && arg.find(".json") == std::string::npos)
    return std::string(MODREP_DATA_DIR) + "/identities/" + arg + ".json";
  return arg;
}

int cmd_repro(const std::string& target, const std::string& format, uint64_t seed) {
  std::vector<std::string> ids;
  if (target == "all")
    ids = repro_target_ids();
  else
    ids.push_back(target);
  ReproReport report = run_repro(ids, seed, MODREP_DATA_DIR);
  std::cout << (format == "json" ? render_repro_json(report) : render_repro_md(report));
  return report.all_pass() ? 0 : 1;
}

int cmd_chop(const std::string& repfile, const std::string& catdir, uint64_t seed) {
  Representation m = read_rep_file(repfile);
  RepCatalog cat = read_catalog_dir(catdir);
  ChopResult c = chop(m, cat, seed);
  header("chop", seed);
  std::cout << module_line(m) << "\n";
  std::cout << "catalog: " << cat.size() << " entries from " << catdir << "\n";
  std::cout << "composition factors: " << c.to_string() << "\n";
  return 0;
}

int cmd_lattice(const std::string& repfile) {
  Representation m = read_rep_file(repfile);
  SubmoduleLattice lat = submodule_lattice(m);
  size_t indec = 0;
  for (bool b : lat.indecomposable)
    if (b) ++indec;
  size_t pairs = complementary_indecomposable_pairs(lat);
  header("lattice", 0);
  std::cout << module_line(m) << "\n";
  std::cout << lat.nodes.size() << " submodules, " << indec << " indecomposable, " << pairs
            << " complementary indecomposable pairs\n";
  std::map<size_t, size_t> by_dim;
  for (const auto& n : lat.nodes) ++by_dim[n.dim()];
  std::cout << "dimensions:";
  for (const auto& [d, count] : by_dim) std::cout << " " << d << " x" << count;
  std::cout << "\n";
  std::cout << "covering edges: " << lat.edges.size() << "\n";
  return 0;
}

int cmd_brauer(const std::string& repfile, const std::string& groupfile) {
  auto g = read_group_file(groupfile);
  Representation m0 = read_rep_file(repfile);
  if (m0.gen_names != g->gen_names)
    throw std::runtime_error("generator names of " + repfile + " do not match " + groupfile);
  Representation m = make_rep(m0.gen_names, m0.gens, g);
  unsigned p = m.ring.char_p();
  if (p == 0)
    throw std::runtime_error("Brauer characters need a representation over a finite field");
  Ring ext = brauer_splitting_field(*g, p);
  BrauerCharacter bc = brauer_character(m, *g, ext);
  header("brauer", 0);
  std::cout << module_line(m) << "\n";
  std::cout << "group: " << g->order() << " elements, " << g->classes.size() << " classes, "
            << bc.class_indices.size() << " " << p << "-regular\n";
  std::cout << "lifting field: " << ext.name() << " (s = sqrt(-2))\n";
  std::cout << "class:";
  for (const auto& lab : bc.class_labels) std::cout << " " << lab;
  std::cout << "\nvalue:";
  for (const auto& v : bc.values) std::cout << " " << zs2_pretty(v);
  std::cout << "\n";
  return 0;
}

int cmd_loewy(const std::string& repfile, uint64_t seed) {
  Representation m0 = read_rep_file(repfile);
  Representation m = attach_enumerated_group(m0);
  auto cat = builtin_catalog_for(m);
  if (!cat)
    throw std::runtime_error(
        "no built-in irreducible catalog for this group and coefficient ring; "
        "supported: Sym(3) mod 2 and mod 3, Sym(4) mod 3, GL(2,3) mod 3");
  LoewySeries ls = loewy_series(m, *cat, seed);
  header("loewy", seed);
  std::cout << module_line(m) << "\n";
  std::cout << "group: " << m.group->order() << " elements\n";
  for (size_t i = 0; i < ls.layers.size(); ++i) {
    std::cout << "layer " << i << (i == 0 ? " (socle):" : ":");
    for (const auto& lab : ls.layers[i]) std::cout << " " << lab;
    std::cout << "\n";
  }
  std::cout << "socle series: " << ls.rendering << "\n";
  return 0;
}

int cmd_mass_check(const std::string& idarg, const std::string& datafile) {
  MassIdentity id = read_identity_file(resolve_identity_path(idarg));
  MassTable table = read_mass_file(datafile);
  IdentityReport r = check_identity(id, table);
  header("mass check", 0);
  std::cout << "identity: " << r.identity << "\n";
  std::cout << side_desc(id, true) << " = " << decimal_string(r.lhs_mev, 7) << " MeV\n";
  std::cout << side_desc(id, false) << " = " << decimal_string(r.rhs_mev, 7) << " MeV\n";
  std::cout << "discrepancy: " << decimal_string(r.discrepancy_mev, 7) << " MeV = "
            << num(r.discrepancy_ppm) << " ppm of the right-hand side\n";
  std::cout << "combined sigma: " << num(r.combined_sigma_mev) << " MeV = "
            << num(r.combined_sigma_ppm) << " ppm\n";
  std::cout << "z = " << num(r.z_score) << "\n";
  return 0;
}

int cmd_mass_quarks(const std::string& datafile, bool alt) {
  MassTable table = read_mass_file(datafile);
  QuarkSolution s = solve_quark_system(table, alt);
  header("mass quarks", 0);
  if (s.alt_fourth) std::cout << "using the alternative fourth equation\n";
  std::cout << "solved:";
  for (const auto& d : s.quarks) std::cout << " " << d.name << " = " << decimal_string(d.value_mev, 4);
  std::cout << "\n";
  std::cout << "residuals: " << (s.residuals_zero ? "exactly zero" : "NONZERO") << "\n";
  for (const auto& row : s.rows) {
    std::cout << row.lhs_desc << " = " << num(row.lhs_value.get_d()) << " (+- "
              << num(row.lhs_sigma) << ") vs " << row.rhs_desc << " = "
              << num(row.rhs_value.get_d()) << " (+- " << num(row.rhs_sigma) << ")"
              << (row.dubious ? " [dubious]" : "") << "\n";
  }
  return s.residuals_zero ? 0 : 1;
}

int cmd_emit_catalog(const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto manifest = catalog_manifest();
  for (const auto& [stem, rep] : manifest) write_rep_file(dir + "/" + stem + ".json", rep);
  std::cout << "wrote " << manifest.size() << " representation files to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for modular representations and mass identities"};
  app.require_subcommand(1);
  int code = 0;

  std::vector<std::string> target_choices = repro_target_ids();
  target_choices.insert(target_choices.begin(), "all");
  std::string repro_target, repro_format = "md";
  uint64_t repro_seed = 0;
  auto* repro = app.add_subcommand("repro", "recompute pinned results as a pass/fail report");
  repro->add_option("target", repro_target, "target id or 'all'")
      ->required()
      ->check(CLI::IsMember(target_choices));
  repro->add_option("--format", repro_format, "md or json")
      ->check(CLI::IsMember({"md", "json"}));
  repro->add_option("--seed", repro_seed, "seed for randomized searches");
  repro->callback([&] { code = cmd_repro(repro_target, repro_format, repro_seed); });

  std::string chop_rep, chop_cat;
  uint64_t chop_seed = 0;
  auto* chopc = app.add_subcommand("chop", "composition factors against a catalog");
  chopc->add_option("repfile", chop_rep, "representation file")->required();
  chopc->add_option("--catalog", chop_cat, "directory of catalog representation files")
      ->required();
  chopc->add_option("--seed", chop_seed, "seed for randomized searches");
  chopc->callback([&] { code = cmd_chop(chop_rep, chop_cat, chop_seed); });

  std::string lattice_rep;
  auto* latticec = app.add_subcommand("lattice", "full submodule lattice");
  latticec->add_option("repfile", lattice_rep, "representation file")->required();
  latticec->callback([&] { code = cmd_lattice(lattice_rep); });

  std::string brauer_rep, brauer_group;
  auto* brauerc = app.add_subcommand("brauer", "Brauer character of a modular representation");
  brauerc->add_option("repfile", brauer_rep, "representation file")->required();
  brauerc->add_option("--group", brauer_group, "group file sharing the generator names")
      ->required();
  brauerc->callback([&] { code = cmd_brauer(brauer_rep, brauer_group); });

  std::string loewy_rep;
  uint64_t loewy_seed = 0;
  auto* loewyc = app.add_subcommand("loewy", "socle series against the built-in catalog");
  loewyc->add_option("repfile", loewy_rep, "representation file")->required();
  loewyc->add_option("--seed", loewy_seed, "seed for randomized searches");
  loewyc->callback([&] { code = cmd_loewy(loewy_rep, loewy_seed); });

  auto* mass = app.add_subcommand("mass", "mass identities and the quark system");
  mass->require_subcommand(1);
  std::string check_id, check_data = std::string(MODREP_DATA_DIR) + "/masses.json";
  auto* checkc = mass->add_subcommand("check", "evaluate one identity");
  checkc->add_option("identity", check_id, "identity file, or a name under the data directory")
      ->required();
  checkc->add_option("--data", check_data, "mass table file");
  checkc->callback([&] { code = cmd_mass_check(check_id, check_data); });

  std::string quarks_data = std::string(MODREP_DATA_DIR) + "/masses.json";
  bool quarks_alt = false;
  auto* quarksc = mass->add_subcommand("quarks", "solve the six-equation quark system");
  quarksc->add_option("--data", quarks_data, "mass table file");
  quarksc->add_flag("--alt", quarks_alt, "use the alternative fourth equation");
  quarksc->callback([&] { code = cmd_mass_quarks(quarks_data, quarks_alt); });

  std::string emit_dir;
  auto* emitc = app.add_subcommand("emit-catalog", "write the built-in representations as files");
  emitc->add_option("dir", emit_dir, "output directory")->required();
  emitc->callback([&] { code = cmd_emit_catalog(emit_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const modrep::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
