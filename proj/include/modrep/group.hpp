// Finite matrix groups from generators: enumeration, conjugacy classes,
// p-regular classes, signed permutations.
#pragma once

#include <string>
#include <vector>

#include "modrep/matrix.hpp"

namespace modrep {

// A permutation with signs: basis vector e_j maps to sign_j * e_{index_j}.
// Indices are 0-based.
struct SignedPermutation {
  size_t degree = 0;
  std::vector<size_t> index;
  std::vector<int> sign;  // each +1 or -1
};

// Validates bijectivity and sign values; throws std::invalid_argument.
SignedPermutation make_signed_perm(size_t degree, std::vector<size_t> index, std::vector<int> sign);

// Composition "a then b" so that to_matrix(compose(a,b)) == to_matrix(a) * to_matrix(b)
// under the row-vector convention.
SignedPermutation sp_compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation sp_inverse(const SignedPermutation& a);

// Monomial matrix with row j carrying sign_j at column index_j.
Matrix sp_to_matrix(const SignedPermutation& sp, const Ring& ring);

// Indices j fixed with sign +1.
std::vector<size_t> signed_perm_fixed_points(const SignedPermutation& sp);

struct FiniteGroup {
  Ring ring;
  size_t dim = 0;
  std::vector<std::string> gen_names;
  std::vector<Matrix> gens;
  // Breadth-first closure from the identity; elements[0] is the identity.
  std::vector<Matrix> elements;
  // elements[i] == elements[provenance[i].first] * gens[provenance[i].second]
  // for i > 0; lets any homomorphic image be replayed from generator images.
  std::vector<std::pair<size_t, size_t>> provenance;
  // mul[i][j] = index of elements[i]*elements[j]; inv[i] = index of inverse.
  std::vector<std::vector<size_t>> mul;
  std::vector<size_t> inv;
  // Conjugacy classes as element index sets; each class lists its minimal
  // index first and classes are ordered by that representative.
  std::vector<std::vector<size_t>> classes;
  std::vector<size_t> element_orders;

  size_t order() const { return elements.size(); }
};

// Breadth-first enumeration; deterministic element order for fixed generator
// order. Throws if a generator has no finite order within the cap or the
// closure exceeds the cap.
FiniteGroup enumerate_group(const std::vector<std::string>& names, const std::vector<Matrix>& gens,
                            size_t cap = 10000);

// Index of m in g.elements; throws std::invalid_argument if absent.
size_t element_index(const FiniteGroup& g, const Matrix& m);

// Multiplicative order of a square matrix; throws if no power up to cap is
// the identity.
size_t matrix_order(const Matrix& m, size_t cap = 10000);

const std::vector<std::vector<size_t>>& conjugacy_classes(const FiniteGroup& g);

// Indices into g.classes whose element order is coprime to p.
std::vector<size_t> p_regular_classes(const FiniteGroup& g, unsigned p);

}  // namespace modrep
