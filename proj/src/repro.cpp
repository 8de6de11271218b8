#include "modrep/repro.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "modrep/catalog.hpp"
#include "modrep/io.hpp"
#include "modrep/mass.hpp"
#include "modrep/matrix.hpp"
#include "modrep/meataxe.hpp"

namespace modrep {
namespace {

struct TargetRun {
  ReproResult res;
  bool ok = true;

  explicit TargetRun(std::string id) { res.id = std::move(id); }

  void check(bool cond, const std::string& line) {
    res.details.push_back((cond ? "ok: " : "MISMATCH: ") + line);
    ok = ok && cond;
  }
  void note(const std::string& line) { res.details.push_back(line); }

  ReproResult finish() {
    res.status = ok ? "pass" : "fail";
    return std::move(res);
  }
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

long trace_long(const Matrix& m) { return std::get<mpz_class>(trace(m).v).get_si(); }

std::string zs2_text(const ZS2& z) {
  if (z.b == 0) return z.a.get_str();
  std::string root = z.b == 1 ? "s" : z.b == -1 ? "-s" : z.b.get_str() + "s";
  if (z.a == 0) return root;
  return z.a.get_str() + (z.b > 0 ? "+" : "") + root;
}

const Representation& integral_rep(const std::string& label) {
  for (const auto& e : sym3_integral_reps())
    if (e.label == label) return e.rep;
  throw std::logic_error("missing integral representation " + label);
}

// Direct-sum decomposition of the mod-p reduction, rendered as the socle
// series of each summand sorted by (dimension, text) and joined with " + ".
std::string reduction_rendering(const Representation& m, unsigned p, const RepCatalog& cat,
                                uint64_t seed) {
  Representation red = reduce_mod(m, p);
  std::vector<std::pair<size_t, std::string>> parts;
  for (const auto& s : indecomposable_summands(red, seed))
    parts.emplace_back(s.rep.dim, loewy_series(s.rep, cat, seed).rendering);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [dim, text] : parts) {
    if (!out.empty()) out += " + ";
    out += text;
  }
  return out;
}

// Ordinary character of an integral Sym(3) representation, decomposed into
// the three real irreducibles and rendered like "1+ + 1- + 2".
std::string ordinary_sym3_character(const Representation& m) {
  const FiniteGroup& g = *m.group;
  auto imgs = element_images(m, g);
  long chi1 = 0, chid = 0, chiw = 0;
  for (const auto& cls : g.classes) {
    size_t rep_idx = cls[0];
    long t = trace_long(imgs[rep_idx]);
    size_t ord = g.element_orders[rep_idx];
    if (ord == 1)
      chi1 = t;
    else if (ord == 2)
      chid = t;
    else
      chiw = t;
  }
  long m1p = (chi1 + 3 * chid + 2 * chiw) / 6;
  long m1m = (chi1 - 3 * chid + 2 * chiw) / 6;
  long m2 = (2 * chi1 - 2 * chiw) / 6;
  std::string out;
  auto append = [&](const char* label, long count) {
    for (long i = 0; i < count; ++i) {
      if (!out.empty()) out += " + ";
      out += label;
    }
  };
  append("1+", m1p);
  append("1-", m1m);
  append("2", m2);
  return out;
}

Representation regular_with_group(const std::shared_ptr<const FiniteGroup>& g, const Ring& ring) {
  Representation reg = regular_module(*g, ring);
  return make_rep(reg.gen_names, reg.gens, g);
}

void run_checks(TargetRun& t, const std::vector<Check>& checks) {
  for (const auto& c : checks) t.check(c.holds, c.statement + (c.note.empty() ? "" : " (" + c.note + ")"));
}

ReproResult target_toy(uint64_t seed) {
  TargetRun t("toy");
  auto g = group_sym2();
  Ring f2 = gfp(2);
  Representation reg = regular_with_group(g, f2);

  Matrix n = mat_add(Matrix::identity(f2, 2), reg.gen("d"));
  t.check(is_zero_matrix(mat_mul(n, n)), "1+d squares to zero in F2[S2]");

  IdealCensus c = ideal_census(*g, f2);
  t.check(c.ideals.size() == 1, "F2[S2] has a unique proper nonzero ideal");
  Matrix v(f2, 1, 2);
  v.set_int(0, 0, 1);
  v.set_int(0, 1, 1);
  t.check(c.ideals.size() == 1 && c.ideals[0].dim() == 1 && c.ideals[0] == row_space(v),
          "the ideal is the line spanned by 1+d");
  t.check(!c.principal.empty() && c.principal[0], "the ideal is principal");

  SubmoduleLattice lat = submodule_lattice(reg);
  t.check(lat.nodes.size() == 3, "the regular module has exactly 3 submodules");
  t.check(lat.nodes.size() == 3 && lat.indecomposable[2],
          "the regular module is indecomposable (the ideal has no complement)");

  RepCatalog triv{{"1", make_rep(g->gen_names, {Matrix::identity(f2, 1)}, g)}};
  LoewySeries ls = loewy_series(reg, triv, seed);
  t.check(ls.rendering == "1.1", "socle series of the regular module: " + ls.rendering);
  return t.finish();
}

ReproResult target_sym3_mod2(uint64_t seed) {
  TargetRun t("sym3-mod2");
  auto g = group_sym3();
  Ring f2 = gfp(2);
  Representation reg = regular_with_group(g, f2);

  Matrix w = reg.gen("w");
  Matrix e = mat_add(w, mat_mul(w, w));
  t.check(mat_mul(e, e) == e, "e = w + w^2 is idempotent in F2[S3]");
  t.check(mat_mul(e, reg.gen("d")) == mat_mul(reg.gen("d"), e), "e is central");
  t.check(rank(e) == 4, "the ideal e.F2[S3] has dimension 4 (a full 2x2 matrix algebra)");
  t.check(rank(mat_add(Matrix::identity(f2, 6), e)) == 2,
          "the complementary ideal (1+e).F2[S3] has dimension 2");

  ChopResult ch = chop(reg, sym3_mod2_irreducibles(), seed);
  t.check(ch.to_string() == "1 x2, 2 x2",
          "composition factors of the regular module: " + ch.to_string());

  auto sums = indecomposable_summands(reduce_mod(integral_rep("3_p"), 2), seed);
  t.check(sums.size() == 2, "the 3-point permutation module splits mod 2 as 1 + 2");
  return t.finish();
}

ReproResult target_sym3_mod3(uint64_t seed) {
  TargetRun t("sym3-mod3");
  auto g = group_sym3();
  const RepCatalog& cat = sym3_mod3_irreducibles();

  Representation p3 = reduce_mod(integral_rep("3_p"), 3);
  Representation m3 = reduce_mod(integral_rep("3_m"), 3);
  LoewySeries lp = loewy_series(p3, cat, seed), lm = loewy_series(m3, cat, seed);
  t.check(lp.rendering == "1+.1-.1+", "socle series of the permutation module mod 3: " + lp.rendering);
  t.check(lm.rendering == "1-.1+.1-", "socle series of the monomial module mod 3: " + lm.rendering);
  t.check(is_projective(p3, *g) && is_projective(m3, *g),
          "both are projective: they are the two PIMs P(1+), P(1-)");

  Representation prod = tensor(reduce_mod(integral_rep("2_s"), 3), reduce_mod(integral_rep("2_q"), 3));
  ChopResult ch = chop(prod, cat, seed);
  t.check(ch.to_string() == "1+ x2, 1- x2",
          "composition factors of (2_s mod 3) x (2_q mod 3): " + ch.to_string());
  auto sums = indecomposable_summands(prod, seed);
  std::sort(sums.begin(), sums.end(),
            [](const Summand& a, const Summand& b) { return a.rep.dim < b.rep.dim; });
  t.check(sums.size() == 2 && sums[0].rep.dim == 1 && sums[1].rep.dim == 3,
          "the tensor product splits as a line plus a 3-dimensional module");
  bool trivial_line = sums.size() == 2 && sums[0].rep.gens[0] == Matrix::identity(gfp(3), 1) &&
                      sums[0].rep.gens[1] == Matrix::identity(gfp(3), 1);
  t.check(trivial_line, "the line is the trivial module 1+");
  if (sums.size() == 2 && sums[1].rep.dim == 3) {
    LoewySeries l3 = loewy_series(sums[1].rep, cat, seed);
    t.check(l3.rendering == "1-.1+.1-" && is_projective(sums[1].rep, *g),
            "the 3-dimensional summand is the projective cover P(1-), socle series " + l3.rendering);
  }
  return t.finish();
}

ReproResult target_sym3_integral(uint64_t seed) {
  TargetRun t("sym3-integral");
  struct Row {
    const char* label;
    const char* real;
    const char* mod2;
    const char* mod3;
  };
  const std::vector<Row> table = {
      {"1+", "1+", "1", "1+"},
      {"1-", "1-", "1", "1-"},
      {"2_i", "1+ + 1-", "1.1", "1+ + 1-"},
      {"2_s", "2", "2", "1+.1-"},
      {"2_q", "2", "2", "1-.1+"},
      {"3_p", "1+ + 2", "1 + 2", "1+.1-.1+"},
      {"3_m", "1- + 2", "1 + 2", "1-.1+.1-"},
      {"4_s", "1+ + 1- + 2", "1.1 + 2", "1- + 1+.1-.1+"},
      {"4_q", "1+ + 1- + 2", "1.1 + 2", "1+ + 1-.1+.1-"},
      {"6", "1+ + 1- + 2 + 2", "1.1 + 2 + 2", "1+.1-.1+ + 1-.1+.1-"},
  };
  t.check(sym3_integral_reps().size() == 10, "10 integral indecomposables catalogued");
  for (const auto& row : table) {
    const Representation& rep = integral_rep(row.label);
    std::string real = ordinary_sym3_character(rep);
    std::string mod2 = reduction_rendering(rep, 2, sym3_mod2_irreducibles(), seed);
    std::string mod3 = reduction_rendering(rep, 3, sym3_mod3_irreducibles(), seed);
    t.check(real == row.real && mod2 == row.mod2 && mod3 == row.mod3,
            std::string(row.label) + ": real " + real + " | mod 2 " + mod2 + " | mod 3 " + mod3);
  }
  return t.finish();
}

ReproResult target_sym4_mod3(uint64_t seed) {
  TargetRun t("sym4-mod3");
  auto g = group_sym4();
  t.check(g->order() == 24 && g->classes.size() == 5, "S4 has 24 elements in 5 classes");

  CharacterTable ct = sym4_character_table();
  const std::vector<std::vector<long>> expect = {{1, 1, 1, 1, 1},
                                                 {1, -1, 1, 1, -1},
                                                 {2, 0, 2, -1, 0},
                                                 {3, 1, -1, 0, -1},
                                                 {3, -1, -1, 0, 1}};
  t.check(ct.class_sizes == std::vector<size_t>({1, 6, 3, 8, 6}) && ct.values == expect,
          "ordinary character table reproduced (5 rows)");

  const RepCatalog& irr = sym4_mod3_irreducibles();
  std::vector<std::string> labels;
  for (const auto& e : irr) labels.push_back(e.label);
  t.check(labels == std::vector<std::string>({"1+", "1-", "3+", "3-"}),
          "mod-3 irreducibles: 1+, 1-, 3+, 3-");
  bool all_irred = true;
  for (const auto& e : irr) all_irred = all_irred && is_irreducible(e.rep, seed).irreducible;
  t.check(all_irred, "each catalogue entry is irreducible");
  bool proj3 = true;
  for (const auto& e : irr)
    if (e.rep.dim == 3) proj3 = proj3 && is_projective(e.rep, *g);
  t.check(proj3, "3+ and 3- are projective (defect zero)");

  // The 2-dimensional ordinary representation pulled back from S3 = S4/V4.
  Ring f3 = gfp(3);
  Representation two = make_rep(
      {"x", "w", "d"},
      {Matrix::identity(f3, 2), mat_from_int(f3, {{0, 1}, {-1, -1}}), mat_from_int(f3, {{1, 1}, {0, -1}})},
      g);
  ChopResult ch = chop(two, irr, seed);
  t.check(ch.to_string() == "1+ x1, 1- x1", "the 2-dimensional module mod 3 chops as " + ch.to_string());
  LoewySeries ls = loewy_series(two, irr, seed);
  t.check(ls.rendering == "1+.1-", "its socle series is " + ls.rendering);

  BlockDecomposition bd = block_decomposition(*g, 3, irr);
  std::vector<std::vector<std::string>> members = {{"1+", "1-"}, {"3+"}, {"3-"}};
  t.check(bd.members == members, "three 3-blocks: {1+, 1-}, {3+}, {3-}");
  t.check(bd.summand_dims == std::vector<size_t>({6, 9, 9}),
          "block algebra dimensions 6 + 9 + 9 = 24");
  return t.finish();
}

ReproResult target_v4_ideals(uint64_t) {
  TargetRun t("v4-ideals");
  auto g = group_v4();
  IdealCensus c = ideal_census(*g, gfp(2));
  std::map<size_t, size_t> by_dim;
  for (const auto& ideal : c.ideals) ++by_dim[ideal.dim()];
  t.check(c.ideals.size() == 5, "F2[V4] has 5 proper nonzero ideals");
  t.check(by_dim == std::map<size_t, size_t>({{1, 1}, {2, 3}, {3, 1}}),
          "one of dimension 1, three of dimension 2, one of dimension 3");
  size_t principal = 0;
  bool radical_principal = false;
  for (size_t i = 0; i < c.ideals.size(); ++i) {
    if (c.principal[i]) ++principal;
    if (c.ideals[i].dim() == 3) radical_principal = c.principal[i];
  }
  t.check(principal == 4 && !radical_principal,
          "all are principal except the 3-dimensional radical");
  return t.finish();
}

ReproResult target_gl23_brauer(uint64_t) {
  TargetRun t("gl23-brauer");
  auto g = group_gl23();
  t.check(g->order() == 48 && g->classes.size() == 8, "GL(2,3) has 48 elements in 8 classes");
  t.check(p_regular_classes(*g, 3).size() == 6, "6 classes are 3-regular");

  BrauerTable bt = gl23_brauer_table();
  auto zs = [](long a, long b = 0) { return ZS2{a, b}; };
  const std::vector<std::vector<ZS2>> expect = {
      {zs(1), zs(1), zs(1), zs(1), zs(1), zs(1)},
      {zs(1), zs(1), zs(1), zs(-1), zs(-1), zs(-1)},
      {zs(2), zs(-2), zs(0), zs(0), zs(0, 1), zs(0, -1)},
      {zs(2), zs(-2), zs(0), zs(0), zs(0, -1), zs(0, 1)},
      {zs(3), zs(3), zs(-1), zs(1), zs(-1), zs(-1)},
      {zs(3), zs(3), zs(-1), zs(-1), zs(1), zs(1)}};
  t.check(bt.row_labels == std::vector<std::string>({"1+", "1-", "2+", "2-", "3+", "3-"}),
          "rows 1+, 1-, 2+, 2-, 3+, 3-");
  t.check(bt.rep_orders == std::vector<size_t>({1, 2, 4, 2, 8, 8}),
          "column representatives have orders 1, 2, 4, 2, 8, 8");
  t.check(bt.values == expect, "all 36 Brauer character values match (s = sqrt(-2))");
  for (size_t r = 0; r < bt.row_labels.size(); ++r) {
    std::string line = bt.row_labels[r] + ":";
    for (const auto& v : bt.values[r]) line += " " + zs2_text(v);
    t.note("  " + line);
  }
  return t.finish();
}

ReproResult target_gl23_blocks(uint64_t seed) {
  TargetRun t("gl23-blocks");
  auto g = group_gl23();
  BlockDecomposition bd = block_decomposition(*g, 3, gl23_mod3_irreducibles());
  std::vector<std::vector<std::string>> members = {{"1+", "1-"}, {"2+", "2-"}, {"3+"}, {"3-"}};
  t.check(bd.members == members, "four 3-blocks: {1+, 1-}, {2+, 2-}, {3+}, {3-}");
  t.check(bd.summand_dims == std::vector<size_t>({6, 24, 9, 9}),
          "block algebra dimensions 6 + 24 + 9 + 9 = 48");

  const std::map<std::string, std::string> towers = {{"P(1+)", "1+.1-.1+"},
                                                     {"P(1-)", "1-.1+.1-"},
                                                     {"P(2+)", "2+.2-.2+"},
                                                     {"P(2-)", "2-.2+.2-"}};
  for (const auto& e : greenring_catalog()) {
    auto it = towers.find(e.label);
    if (it == towers.end()) continue;
    LoewySeries ls = loewy_series(e.rep, gl23_mod3_irreducibles(), seed);
    t.check(ls.rendering == it->second && ls.layers.size() == 3,
            e.label + " is a tower of height 3: " + ls.rendering);
  }
  return t.finish();
}

ReproResult target_spacetime_mod3(uint64_t seed) {
  TargetRun t("spacetime-mod3");
  const Representation& st = spacetime_rep();
  const NamedSubspace& abcd = named_subspace("ABCD");
  bool same = true;
  for (size_t k = 0; k < st.gens.size(); ++k) same = same && abcd.action[k] == st.gens[k];
  t.check(same, "the action on the A,B,C,D basis is the 4-dimensional integral representation");

  Representation st3 = reduce_mod(st, 3);
  ChopResult ch = chop(st3, gl23_mod3_irreducibles(), seed);
  t.check(ch.to_string() == "2+ x1, 2- x1", "mod 3 composition factors: " + ch.to_string());
  LoewySeries ls = loewy_series(st3, gl23_mod3_irreducibles(), seed);
  t.check(ls.rendering == "2+.2-", "socle series mod 3: " + ls.rendering);

  SubmoduleLattice lat = submodule_lattice(st3);
  t.check(lat.nodes.size() == 3, "exactly one proper nonzero submodule mod 3");
  if (lat.nodes.size() == 3) {
    Representation socle = sub_representation(st3, lat.nodes[1]);
    bool is2p = false;
    for (const auto& e : gl23_mod3_irreducibles())
      if (e.label == "2+") is2p = module_isomorphism(socle, e.rep, seed).has_value();
    t.check(is2p, "that submodule is isomorphic to 2+");
  }

  run_checks(t, spacetime_square_decomposition());
  return t.finish();
}

ReproResult target_twelve_dim(uint64_t) {
  TargetRun t("twelve-dim");
  const Representation& r = twelve_dim_rep();
  t.check(r.dim == 12 && r.ring == integers(), "12-dimensional integral representation");
  t.check(r.group && r.group->order() == 48, "it represents the 48-element group");

  for (const char* tag : {"ABCD", "PQRS", "HIJK"}) {
    const NamedSubspace& s = named_subspace(tag);
    bool inv = true;
    for (size_t k = 0; k < r.gens.size(); ++k)
      inv = inv && mat_mul(s.basis, r.gens[k]) == mat_mul(s.action[k], s.basis);
    t.check(inv, std::string(tag) + " spans an invariant 4-dimensional sublattice");
  }

  Matrix minus2 = scalar_mul(from_int(integers(), -2), Matrix::identity(integers(), 12));
  const char* names[] = {"(j-k)d", "(k-i)wd", "(i-j)w^2d"};
  ComplexStructure all[] = {ComplexStructure::JKd, ComplexStructure::KIwd, ComplexStructure::IJw2d};
  for (size_t i = 0; i < 3; ++i) {
    const Matrix& m = sqrt_minus2_matrix(all[i]);
    t.check(mat_mul(m, m) == minus2, std::string(names[i]) + " squares to -2");
  }
  const Matrix& m0 = sqrt_minus2_matrix();
  t.check(mat_mul(m0, r.gen("i")) == mat_mul(r.gen("i"), m0) &&
              mat_mul(m0, r.gen("d")) == mat_mul(r.gen("d"), m0) &&
              !(mat_mul(m0, r.gen("w")) == mat_mul(r.gen("w"), m0)),
          "(j-k)d commutes with i and d but not with w");

  const Matrix& cs = sqrt_minus2_class_sum();
  bool csum = true;
  for (const char* n : {"H", "I", "J", "K"}) {
    const Matrix& v = named_vector(n);
    csum = csum && mat_mul(v, cs) == scalar_mul(from_int(integers(), 3), mat_mul(v, m0)) &&
           mat_mul(mat_mul(v, cs), cs) == scalar_mul(from_int(integers(), -18), v);
  }
  t.check(csum, "the class sum acts as 3.sqrt(-2) on H, I, J, K (square -18)");
  Matrix jk = sqrt_minus2_on("HIJK");
  t.check(mat_mul(jk, jk) == scalar_mul(from_int(integers(), -2), Matrix::identity(integers(), 4)),
          "sqrt(-2) restricted to the H,I,J,K basis squares to -2");

  for (const char* tag : {"PR", "HI"}) {
    auto mats = dirac_complex_matrices(tag);
    t.check(mats.size() == 7, std::string("7 complex 2x2 operator matrices on the ") + tag + " plane");
    for (const auto& [name, m] : mats) {
      auto e = [&](size_t a, size_t b) { return zs2_text(std::get<ZS2>(m.at(a, b).v)); };
      t.note("  " + std::string(tag) + " " + name + ": [[" + e(0, 0) + ", " + e(0, 1) + "], [" +
             e(1, 0) + ", " + e(1, 1) + "]]");
    }
    auto find = [&](const char* name) {
      for (const auto& [n, m] : mats)
        if (n == name) return m;
      throw std::logic_error("missing operator");
    };
    Matrix proj = find("1-id");
    ZS2 det = std::get<ZS2>(proj.at(0, 0).v) * std::get<ZS2>(proj.at(1, 1).v) -
              std::get<ZS2>(proj.at(0, 1).v) * std::get<ZS2>(proj.at(1, 0).v);
    t.check(det == ZS2{0, 0}, std::string("1-id is singular on the ") + tag + " plane (rank 1)");
  }

  run_checks(t, eigenvector_matching());
  run_checks(t, generation_vectors());
  return t.finish();
}

ReproResult target_congruences(uint64_t) {
  TargetRun t("congruences");
  auto checks = verify_congruences();
  t.check(checks.size() == 12, "12 congruences verified");
  run_checks(t, checks);
  return t.finish();
}

ReproResult target_pims(uint64_t) {
  TargetRun t("pims");
  run_checks(t, verify_pim_generators());
  return t.finish();
}

ReproResult target_lattice(uint64_t) {
  TargetRun t("lattice");
  const SubmoduleLattice& lat = twelve_dim_mod3_lattice();
  size_t indec = 0;
  for (bool b : lat.indecomposable)
    if (b) ++indec;
  size_t pairs = complementary_indecomposable_pairs(lat);
  std::ostringstream line;
  line << lat.nodes.size() << " submodules, " << indec << " indecomposable, " << pairs
       << " PIM-pair decompositions";
  t.note(line.str());
  t.check(lat.nodes.size() == 28 && indec == 14 && pairs == 9,
          "lattice counts match 28 / 14 / 9");
  return t.finish();
}

ReproResult target_greenring(uint64_t seed) {
  TargetRun t("greenring");
  auto g = group_gl23();
  const RepCatalog& irr = gl23_mod3_irreducibles();
  auto entry = [&](const char* label) -> const Representation& {
    for (const auto& e : greenring_catalog())
      if (e.label == label) return e.rep;
    throw std::logic_error("missing catalogue entry");
  };

  Representation prod = tensor(entry("2+"), entry("2-"));
  ChopResult ch = chop(prod, irr, seed);
  t.check(ch.to_string() == "1+ x1, 3- x1", "2+ (x) 2- chops as " + ch.to_string());
  auto sums = indecomposable_summands(prod, seed);
  std::sort(sums.begin(), sums.end(),
            [](const Summand& a, const Summand& b) { return a.rep.dim < b.rep.dim; });
  bool split = sums.size() == 2 && sums[0].rep.dim == 1 && sums[1].rep.dim == 3 &&
               module_isomorphism(sums[0].rep, entry("1+"), seed).has_value() &&
               module_isomorphism(sums[1].rep, entry("3-"), seed).has_value();
  t.check(split, "2+ (x) 2- = 1+ (+) 3-");

  size_t pairs = 0;
  bool all_projective = true;
  for (const auto& e : greenring_catalog())
    for (const char* pim : {"P(1+)", "P(1-)", "P(2+)", "P(2-)"}) {
      ++pairs;
      all_projective = all_projective && is_projective(tensor(e.rep, entry(pim)), *g);
    }
  std::ostringstream line;
  line << "tensoring with a PIM stays projective (" << pairs << " products checked)";
  t.check(all_projective, line.str());
  return t.finish();
}

MassTable load_table(const std::string& data_dir) {
  return read_mass_file(data_dir + "/masses.json");
}

MassIdentity load_identity(const std::string& data_dir, const std::string& name) {
  return read_identity_file(data_dir + "/identities/" + name + ".json");
}

ReproResult target_mass_emutau(uint64_t, const std::string& data_dir) {
  TargetRun t("mass-emutau");
  MassTable table = load_table(data_dir);
  MassIdentity id = load_identity(data_dir, "emutau");
  IdentityReport r = check_identity(id, table);
  t.note("e + mu + tau + 3p = " + decimal_string(r.lhs_mev, 7) + " MeV, 5n = " +
         decimal_string(r.rhs_mev, 7) + " MeV");
  t.note("discrepancy " + decimal_string(r.discrepancy_mev, 7) + " MeV = " + num(r.discrepancy_ppm) +
         " ppm of 5n, combined sigma " + num(r.combined_sigma_ppm) + " ppm, z = " + num(r.z_score));
  t.check(std::abs(r.discrepancy_ppm) <= 10.0, "discrepancy within 10 ppm");
  t.check(std::abs(r.combined_sigma_ppm - 26.0) <= 0.2 * 26.0, "combined sigma close to 26 ppm");

  MassDatum tau = predict_from_identity(id, table, "tau");
  t.note("tau predicted from the identity: " + decimal_string(tau.value_mev, 7) + " +- " +
         num(tau.sigma_mev.get_d()) + " MeV");
  t.check(abs(tau.value_mev - parse_decimal("1776.84145")) < parse_decimal("0.001"),
          "tau prediction matches 1776.84145 to a milli-eV scale");
  t.check(std::abs(tau.sigma_mev.get_d() - 3.4e-5) < 1e-5, "propagated sigma near 0.00003 MeV");
  return t.finish();
}

ReproResult target_mass_quarks(uint64_t, const std::string& data_dir) {
  TargetRun t("mass-quarks");
  MassTable table = load_table(data_dir);
  QuarkSolution s = solve_quark_system(table);
  t.check(s.det != 0, "coefficient matrix is invertible: unique solution");
  t.check(s.residuals_zero, "exact residuals are zero");
  std::string solved = "solved:";
  for (const auto& d : s.quarks)
    solved += " " + d.name + " = " + decimal_string(d.value_mev, 4);
  t.note(solved);

  struct Gate {
    double lhs, lhs_tol, rhs, rhs_tol;
  };
  const std::vector<Gate> gates = {{2.8, 0.7, 4.8, 0.5},     {106, 1, 105, 5},
                                   {1777, 1, 1750, 35},      {1275, 25, 1271, 5},
                                   {4690, 30, 4698, 1},      {175450, 510, 175844, 30}};
  for (size_t i = 0; i < s.rows.size(); ++i) {
    const QuarkRow& row = s.rows[i];
    double lhs = row.lhs_value.get_d(), rhs = row.rhs_value.get_d();
    std::ostringstream line;
    line << row.lhs_desc << " = " << num(lhs) << " (+- " << num(row.lhs_sigma) << ") vs "
         << row.rhs_desc << " = " << num(rhs) << " (+- " << num(row.rhs_sigma) << ")"
         << (row.dubious ? " [dubious]" : "");
    t.check(std::abs(lhs - gates[i].lhs) <= gates[i].lhs_tol &&
                std::abs(rhs - gates[i].rhs) <= gates[i].rhs_tol,
            line.str());
  }
  return t.finish();
}

ReproResult target_mass_ratios(uint64_t, const std::string& data_dir) {
  TargetRun t("mass-ratios");
  MassTable table = load_table(data_dir);
  auto rows = ratio_coincidence_table(table);
  t.check(rows.size() == 6, "six ratio rows");
  struct Pin {
    const char* name;
    double formula;
    double tol;
  };
  const std::vector<Pin> pins = {{"n/p", 1.0013689, 1e-7},   {"e/p", 5.44543e-4, 1e-9},
                                 {"pi+/pi0", 1.03386, 1e-5}, {"K+/K0", 0.99197, 1e-5},
                                 {"W/Z0", 0.87815, 1e-5},    {"K0/eta", 0.9137, 1e-4}};
  for (size_t i = 0; i < rows.size() && i < pins.size(); ++i) {
    std::ostringstream line;
    line << rows[i].name << ": measured " << num(rows[i].measured) << ", " << rows[i].formula
         << " = " << num(rows[i].formula_value) << " (deviation "
         << num(rows[i].relative_deviation) << ")";
    t.check(rows[i].name == pins[i].name &&
                std::abs(rows[i].formula_value - pins[i].formula) <= pins[i].tol,
            line.str());
  }
  return t.finish();
}

ReproResult target_mass_ganomaly(uint64_t, const std::string& data_dir) {
  TargetRun t("mass-ganomaly");
  MassTable table = load_table(data_dir);
  GAnomalyWalkthrough w = g_anomaly_walkthrough(table);
  t.note("iron vs lead: effective atomic number " + num(w.z_eff) + ", " + num(w.copies) +
         " copies of m(n)-m(e)-m(p), mass shift " + num(w.shift_amu) + " amu");
  GAnomalyReport fe = g_anomaly_ppm(table, 2.148, 2.527);
  GAnomalyReport dia = g_anomaly_ppm(table, 2.00, 2.50);
  t.check(std::abs(fe.ppm - 58.0) <= 2.0, "iron vs lead: " + num(fe.ppm) + " ppm (within 58 +- 2)");
  t.check(std::abs(dia.ppm - 76.0) <= 2.0,
          "diamond vs platinum: " + num(dia.ppm) + " ppm (within 76 +- 2)");
  t.check(g_anomaly_ppm(table, 2.3, 2.3).ppm == 0.0, "equal weight ratios give 0 ppm");
  return t.finish();
}

ReproResult target_mass_bosons(uint64_t, const std::string& data_dir) {
  TargetRun t("mass-bosons");
  run_checks(t, boson_vectors());

  MassTable table = load_table(data_dir);
  MassIdentity id = load_identity(data_dir, "boson");
  MassDatum pred = predict_from_identity(id, table, "H0");
  const MassDatum& meas = table.at("H0");
  double sp = pred.sigma_mev.get_d(), se = meas.sigma_mev.get_d();
  double z = (meas.value_mev.get_d() - pred.value_mev.get_d()) / std::sqrt(sp * sp + se * se);
  t.note("H0 predicted from 2H0 + 2n = Z0 + 2W: " + decimal_string(pred.value_mev, 4) + " +- " +
         num(sp) + " MeV; measured " + decimal_string(meas.value_mev, 4) + " +- " + num(se) + " MeV");
  t.check(std::abs(z) <= 2.0, "prediction consistent with experiment (z = " + num(z) + ")");
  t.check(sp < se, "the prediction is tighter than the measurement");
  return t.finish();
}

ReproResult target_coleman_glashow(uint64_t, const std::string& data_dir) {
  TargetRun t("coleman-glashow");
  MassTable table = load_table(data_dir);
  MassIdentity id = load_identity(data_dir, "coleman_glashow");
  IdentityReport r = check_identity(id, table);
  t.note("p + Sigma- + Xi0 = " + decimal_string(r.lhs_mev, 4) + " MeV, n + Sigma+ + Xi- = " +
         decimal_string(r.rhs_mev, 4) + " MeV");
  t.note("discrepancy " + decimal_string(r.discrepancy_mev, 7) + " MeV = " + num(r.discrepancy_ppm) +
         " ppm, combined sigma " + num(r.combined_sigma_mev) + " MeV");
  t.check(std::abs(r.z_score) <= 1.0, "identity holds within errors (z = " + num(r.z_score) + ")");
  return t.finish();
}

}  // namespace

bool ReproReport::all_pass() const {
  for (const auto& r : results)
    if (r.status != "pass") return false;
  return true;
}

const std::vector<std::string>& repro_target_ids() {
  static const std::vector<std::string> ids = {
      "toy",           "sym3-mod2",   "sym3-mod3",    "sym3-integral", "sym4-mod3",
      "v4-ideals",     "gl23-brauer", "gl23-blocks",  "spacetime-mod3", "twelve-dim",
      "congruences",   "pims",        "lattice",      "greenring",     "mass-emutau",
      "mass-quarks",   "mass-ratios", "mass-ganomaly", "mass-bosons",  "coleman-glashow"};
  return ids;
}

ReproResult run_repro_target(const std::string& id, uint64_t seed, const std::string& data_dir) {
  if (id == "toy") return target_toy(seed);
  if (id == "sym3-mod2") return target_sym3_mod2(seed);
  if (id == "sym3-mod3") return target_sym3_mod3(seed);
  if (id == "sym3-integral") return target_sym3_integral(seed);
  if (id == "sym4-mod3") return target_sym4_mod3(seed);
  if (id == "v4-ideals") return target_v4_ideals(seed);
  if (id == "gl23-brauer") return target_gl23_brauer(seed);
  if (id == "gl23-blocks") return target_gl23_blocks(seed);
  if (id == "spacetime-mod3") return target_spacetime_mod3(seed);
  if (id == "twelve-dim") return target_twelve_dim(seed);
  if (id == "congruences") return target_congruences(seed);
  if (id == "pims") return target_pims(seed);
  if (id == "lattice") return target_lattice(seed);
  if (id == "greenring") return target_greenring(seed);
  if (id == "mass-emutau") return target_mass_emutau(seed, data_dir);
  if (id == "mass-quarks") return target_mass_quarks(seed, data_dir);
  if (id == "mass-ratios") return target_mass_ratios(seed, data_dir);
  if (id == "mass-ganomaly") return target_mass_ganomaly(seed, data_dir);
  if (id == "mass-bosons") return target_mass_bosons(seed, data_dir);
  if (id == "coleman-glashow") return target_coleman_glashow(seed, data_dir);
  throw std::invalid_argument("unknown repro target: " + id);
}

ReproReport run_repro(const std::vector<std::string>& ids, uint64_t seed,
                      const std::string& data_dir) {
  ReproReport report;
  report.seed = seed;
  for (const auto& id : ids) report.results.push_back(run_repro_target(id, seed, data_dir));
  return report;
}

std::string render_repro_md(const ReproReport& report) {
  std::ostringstream os;
  os << "# repro report\n\n";
  os << "seed " << report.seed << ", " << report.results.size() << " target"
     << (report.results.size() == 1 ? "" : "s") << "\n";
  for (const auto& r : report.results) {
    os << "\n## " << r.id << ": " << r.status << "\n";
    for (const auto& d : r.details) os << d << "\n";
  }
  size_t passed = 0;
  for (const auto& r : report.results)
    if (r.status == "pass") ++passed;
  os << "\n" << passed << "/" << report.results.size() << " targets pass\n";
  return os.str();
}

std::string render_repro_json(const ReproReport& report) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["targets"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json jr;
    jr["id"] = r.id;
    jr["status"] = r.status;
    jr["details"] = r.details;
    j["targets"].push_back(jr);
  }
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

Representation attach_enumerated_group(const Representation& rep) {
  auto g = std::make_shared<const FiniteGroup>(enumerate_group(rep.gen_names, rep.gens));
  return make_rep(rep.gen_names, rep.gens, g);
}

std::optional<RepCatalog> builtin_catalog_for(const Representation& rep) {
  if (!rep.group) return std::nullopt;
  const FiniteGroup& g = *rep.group;
  std::vector<std::string> names = g.gen_names;
  std::sort(names.begin(), names.end());

  const RepCatalog* builtin = nullptr;
  auto match = [&](const std::shared_ptr<const FiniteGroup>& known, const RepCatalog& cat) {
    if (g.order() != known->order()) return;
    std::vector<std::string> kn = known->gen_names;
    std::sort(kn.begin(), kn.end());
    if (kn != names || cat.empty() || cat.front().rep.ring != rep.ring) return;
    builtin = &cat;
  };
  match(group_sym3(), sym3_mod2_irreducibles());
  match(group_sym3(), sym3_mod3_irreducibles());
  match(group_sym4(), sym4_mod3_irreducibles());
  match(group_gl23(), gl23_mod3_irreducibles());
  if (!builtin) return std::nullopt;

  RepCatalog rebuilt;
  try {
    for (const auto& e : *builtin) {
      std::vector<Matrix> gens;
      for (const auto& name : g.gen_names) gens.push_back(e.rep.gen(name));
      rebuilt.push_back({e.label, make_rep(g.gen_names, std::move(gens), rep.group)});
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return rebuilt;
}

Ring brauer_splitting_field(const FiniteGroup& g, unsigned p) {
  std::vector<size_t> regs = p_regular_classes(g, p);
  size_t need = 1;
  for (size_t ci : regs) need = std::lcm(need, g.element_orders[g.classes[ci][0]]);
  if ((p - 1) % need == 0) return gfp(p);
  if (p == 2 && 3 % need == 0) return gf4();
  if (p == 3 && 8 % need == 0) return gf9();
  throw std::invalid_argument(
      "no built-in splitting field: p-regular element orders must divide p-1, or p^2-1 for p in "
      "{2, 3}");
}

}  // namespace modrep
