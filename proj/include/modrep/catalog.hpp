// The built-in catalog: the five named groups, their named representations
// over GF(2), GF(3), and Z, the 12-dimensional signed-permutation module with
// its named vectors, subspaces, and sqrt(-2) structures, and the verification
// reports built from them.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "modrep/meataxe.hpp"
#include "modrep/rep.hpp"

namespace modrep {

// Named groups, built once and shared. Sym(2), Sym(3), Sym(4), and V4 are
// enumerated from faithful integral matrix generators; GL(2,3) from the
// generators i, w, d over GF(3).
std::shared_ptr<const FiniteGroup> group_sym2();  // d = (12)
std::shared_ptr<const FiniteGroup> group_sym3();  // w = (123), d = (23)
std::shared_ptr<const FiniteGroup> group_sym4();  // x, w, d acting on 3-space
std::shared_ptr<const FiniteGroup> group_v4();    // x = (12)(34), y = (13)(24)
std::shared_ptr<const FiniteGroup> group_gl23();

// Irreducible catalogs; labels appear in reports and structure strings.
const RepCatalog& gl23_mod3_irreducibles();  // 1+, 1-, 2+, 2-, 3+, 3-
const RepCatalog& sym3_mod2_irreducibles();  // 1, 2
const RepCatalog& sym3_mod3_irreducibles();  // 1+, 1-
const RepCatalog& sym4_mod3_irreducibles();  // 1+, 1-, 3+, 3-

// The ten integral Sym(3) representations:
// 1+, 1-, 2_i, 2_s, 2_q, 3_p, 3_m, 4_s, 4_q, 6.
const RepCatalog& sym3_integral_reps();

// Integral GL(2,3) representations: the 4-dim action on (W,X,Y,Z) and the
// 12-dim signed-permutation action on (t,x,y,z) x (0,+,-).
const Representation& spacetime_rep();
const Representation& twelve_dim_rep();
Representation twelve_dim_mod3();

// The Green-ring identification set over GF(3): the six irreducibles, the
// four two-layer towers 1+.1-, 1-.1+, 2+.2-, 2-.2+, and the four PIMs
// P(1+), P(1-), P(2+), P(2-).
const RepCatalog& greenring_catalog();

// Submodule lattice of twelve_dim_mod3; computed once and cached.
const SubmoduleLattice& twelve_dim_mod3_lattice();

// Named integral vectors in the 12-space: A..D, P..S, H..K, E, F, T, U.
const Matrix& named_vector(const std::string& name);
const std::vector<std::string>& named_vector_names();

struct NamedSubspace {
  std::string tag;                    // ABCD | PQRS | HIJK
  std::vector<std::string> names;     // basis vector names in order
  Matrix basis;                       // 4x12 over Z, rows = named vectors
  std::vector<std::string> gen_names; // i, w, d
  std::vector<Matrix> action;         // 4x4 integral action on this basis
};
const NamedSubspace& named_subspace(const std::string& tag);

// The three interchangeable complex structures; JKd is the default used by
// the congruence and Dirac reports.
enum class ComplexStructure { JKd, KIwd, IJw2d };

// 12x12 integral matrix of the chosen element; squares to -2 and commutes
// with i and d (not with w).
const Matrix& sqrt_minus2_matrix(ComplexStructure cs = ComplexStructure::JKd);

// Its 4x4 restriction to a named subspace.
Matrix sqrt_minus2_on(const std::string& tag, ComplexStructure cs = ComplexStructure::JKd);

// (j-k)d + (k-i)wd + (i-j)w^2d; acts as 3*sqrt(-2) on HIJK.
const Matrix& sqrt_minus2_class_sum();

struct Check {
  std::string statement;
  bool holds = false;
  std::string note;
};

// The twelve congruences between the HIJK vectors and the ABCD/PQRS vectors:
// four mod 3, four scaled by 1+-sqrt(-2) mod 3, four mod (1-+sqrt(-2)).
std::vector<Check> verify_congruences();

// 2x2 matrices over Z[sqrt(-2)] for i, j, k, w, d, id, 1-id on the complex
// basis (P,R) or (H,I).
std::vector<std::pair<std::string, Matrix>> dirac_complex_matrices(const std::string& tag);

// Eigenvector correspondences of id between the PQRS and HIJK blocks.
std::vector<Check> eigenvector_matching();

// e, mu, tau, p, n as PQRS combinations; the sum rule and the jw cycle.
std::vector<Check> generation_vectors();

// Z0, W+, W-, H0, n as 6-vectors and their sum identity.
std::vector<Check> boson_vectors();

// spin{A..F} and spin{P..U} mod 3 are the two 6-dim projective
// indecomposables, unique in the lattice over their 4-dim seeds.
std::vector<Check> verify_pim_generators();

// Symmetric and exterior square characters of the 4-dim integral action,
// decomposed into characters that factor through Sym(4).
std::vector<Check> spacetime_square_decomposition();

struct BrauerTable {
  std::vector<std::string> row_labels;  // 1+, 1-, 2+, 2-, 3+, 3-
  std::vector<std::string> col_labels;  // 1, -1, i, d, jd, -jd
  std::vector<size_t> rep_orders;       // element orders 1, 2, 4, 2, 8, 8
  std::vector<std::vector<ZS2>> values;
};
// Brauer characters of the six GL(2,3) irreducibles mod 3, columns in the
// fixed order above.
BrauerTable gl23_brauer_table();

struct CharacterTable {
  std::vector<std::string> class_labels;
  std::vector<size_t> class_sizes;
  std::vector<std::string> row_labels;
  std::vector<std::vector<long>> values;
};
// Ordinary character table of Sym(4) on classes 1, (12), (12)(34), (123),
// (1234), computed from the integral representations.
CharacterTable sym4_character_table();

// Every representation the catalog exports to files, with file-stem labels.
std::vector<std::pair<std::string, Representation>> catalog_manifest();

}  // namespace modrep
