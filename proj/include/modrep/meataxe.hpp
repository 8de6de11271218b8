// Module-structure analysis over finite fields: irreducibility, composition
// factors, submodule lattices, Loewy (socle) series, projectivity,
// indecomposable summands, two-sided ideals, and block decompositions.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrep/rep.hpp"

namespace modrep {

struct LabeledRep {
  std::string label;
  Representation rep;
};
using RepCatalog = std::vector<LabeledRep>;

struct IrreducibilityResult {
  bool irreducible = false;
  // A proper nonzero invariant subspace when reducible.
  std::optional<Subspace> witness;
};

// Exact verdict; the seed affects only which words are tried first and which
// witness is returned. Certification follows the kernel-vector criterion:
// spin every line of the kernel of a singular algebra word (shifted by an
// eigenvalue) and every line of the transposed kernel in the transposed
// module; a proper spin on the transposed side yields a witness through the
// perpendicular subspace.
IrreducibilityResult is_irreducible(const Representation& m, uint64_t seed = 0);

// Action restricted to an invariant subspace, in the subspace's basis.
Representation sub_representation(const Representation& m, const Subspace& w);
// Action on the quotient by an invariant subspace, in the coordinates of the
// non-pivot columns of w's reduced basis.
Representation quotient_representation(const Representation& m, const Subspace& w);

struct ChopResult {
  // Sorted by (factor dimension, label).
  std::vector<std::string> labels;
  std::vector<size_t> multiplicities;
  size_t total_dim = 0;

  std::string to_string() const;  // e.g. "1+ x2, 2- x1"
};

// Composition factors with multiplicity, labeled by isomorphism against the
// catalog. Throws when a factor matches no catalog entry.
ChopResult chop(const Representation& m, const RepCatalog& catalog, uint64_t seed = 0);

// Explicit intertwiner P with rho_a(g) P = P rho_b(g) for all generators, or
// nullopt when the modules are not isomorphic. Decides via the standard-basis
// method seeded from the kernel of a common word; requires a kernel vector
// that generates (always true for irreducibles and PIMs).
std::optional<Matrix> module_isomorphism(const Representation& a, const Representation& b,
                                         uint64_t seed = 0);

struct SubmoduleLattice {
  std::vector<Subspace> nodes;  // canonical, sorted by (dim, basis)
  std::vector<std::pair<size_t, size_t>> edges;  // covering pairs (lower, upper)
  std::vector<bool> indecomposable;
  std::vector<bool> projective;  // all false when no group is attached
};

// Every invariant subspace: spin of each 1-dimensional subspace, closed under
// sums. Guarded by q^dim <= 2^24.
SubmoduleLattice submodule_lattice(const Representation& m);

// Unordered pairs (U, V) of nonzero indecomposable nodes with U + V the full
// space and U meet V = 0.
size_t complementary_indecomposable_pairs(const SubmoduleLattice& lat);

struct LoewySeries {
  // layers[0] is the socle; labels within a layer sorted by (dim, label).
  std::vector<std::vector<std::string>> layers;
  // Dotted bottom-to-top rendering, e.g. "1+.1-.1+"; layers with several
  // factors render as parenthesized sums.
  std::string rendering;
};

// Socle series computed from the Jacobson radical of the group algebra (the
// kernel of its map onto the direct sum of endomorphism rings of the catalog
// irreducibles, which must be a complete irredundant list for m's group).
LoewySeries loewy_series(const Representation& m, const RepCatalog& catalog, uint64_t seed = 0);

// Freeness of the restriction to a Sylow p-subgroup, tested exactly via the
// rank of the subgroup-sum element (Higman's criterion).
bool is_projective(const Representation& m, const FiniteGroup& g);

// Element indices of a Sylow p-subgroup, found by greedy closure.
std::vector<size_t> sylow_subgroup(const FiniteGroup& g, unsigned p);

struct Summand {
  Subspace space;  // in the input module's coordinates
  Representation rep;
};

// Complete direct-sum decomposition into indecomposables via eigenspace
// splitting and idempotent search in the endomorphism algebra; deterministic.
std::vector<Summand> indecomposable_summands(const Representation& m, uint64_t seed = 0);

// Basis of the algebra of matrices commuting with every generator.
std::vector<Matrix> end_basis(const Representation& m);

struct IdealCensus {
  std::vector<Subspace> ideals;  // proper nonzero two-sided ideals, sorted
  std::vector<bool> principal;   // generated by a single element
};

// Subspaces invariant under both given actions (left and right multiplication
// for a group algebra); exhaustive below the same size guard as the lattice.
std::vector<Subspace> two_sided_invariant_subspaces(const std::vector<Matrix>& left_gens,
                                                    const std::vector<Matrix>& right_gens);

// All proper nonzero two-sided ideals of the group algebra over the field.
IdealCensus ideal_census(const FiniteGroup& g, const Ring& field);

struct BlockDecomposition {
  // Primitive central idempotents as class-sum coefficient vectors, indexed
  // like g.classes.
  std::vector<std::vector<uint8_t>> idempotents;
  std::vector<std::vector<std::string>> members;  // catalog labels per block
  std::vector<size_t> summand_dims;               // dimension of each block algebra
};

// Central primitive idempotents of the group algebra over GF(p) and the
// partition of the catalog irreducibles they induce. Blocks are sorted by
// their least member under (dim, label).
BlockDecomposition block_decomposition(const FiniteGroup& g, unsigned p, const RepCatalog& irreducibles);

}  // namespace modrep
