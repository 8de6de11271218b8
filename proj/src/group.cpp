#include "modrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modrep {

SignedPermutation make_signed_perm(size_t degree, std::vector<size_t> index, std::vector<int> sign) {
  if (index.size() != degree || sign.size() != degree)
    throw std::invalid_argument("signed permutation: wrong number of images");
  std::vector<bool> hit(degree, false);
  for (size_t j = 0; j < degree; ++j) {
    if (index[j] >= degree) throw std::invalid_argument("signed permutation: index out of range");
    if (hit[index[j]]) throw std::invalid_argument("signed permutation: not a bijection");
    hit[index[j]] = true;
    if (sign[j] != 1 && sign[j] != -1) throw std::invalid_argument("signed permutation: sign must be +-1");
  }
  return {degree, std::move(index), std::move(sign)};
}

SignedPermutation sp_compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.degree != b.degree) throw std::invalid_argument("sp_compose: degree mismatch");
  SignedPermutation c;
  c.degree = a.degree;
  c.index.resize(a.degree);
  c.sign.resize(a.degree);
  for (size_t j = 0; j < a.degree; ++j) {
    c.index[j] = b.index[a.index[j]];
    c.sign[j] = a.sign[j] * b.sign[a.index[j]];
  }
  return c;
}

SignedPermutation sp_inverse(const SignedPermutation& a) {
  SignedPermutation c;
  c.degree = a.degree;
  c.index.resize(a.degree);
  c.sign.resize(a.degree);
  for (size_t j = 0; j < a.degree; ++j) {
    c.index[a.index[j]] = j;
    c.sign[a.index[j]] = a.sign[j];
  }
  return c;
}

Matrix sp_to_matrix(const SignedPermutation& sp, const Ring& ring) {
  Matrix m(ring, sp.degree, sp.degree);
  for (size_t j = 0; j < sp.degree; ++j) m.set_int(j, sp.index[j], sp.sign[j]);
  return m;
}

std::vector<size_t> signed_perm_fixed_points(const SignedPermutation& sp) {
  std::vector<size_t> out;
  for (size_t j = 0; j < sp.degree; ++j)
    if (sp.index[j] == j && sp.sign[j] == 1) out.push_back(j);
  return out;
}

size_t matrix_order(const Matrix& m, size_t cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_order: square matrix required");
  Matrix id = Matrix::identity(m.ring(), m.rows());
  Matrix acc = m;
  for (size_t k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = mat_mul(acc, m);
  }
  throw std::invalid_argument("matrix_order: no finite order within cap");
}

namespace {

size_t find_element(const std::vector<Matrix>& elements, const Matrix& m) {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return i;
  return elements.size();
}

}  // namespace

FiniteGroup enumerate_group(const std::vector<std::string>& names, const std::vector<Matrix>& gens,
                            size_t cap) {
  if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
  if (names.size() != gens.size()) throw std::invalid_argument("enumerate_group: name count mismatch");
  size_t dim = gens[0].rows();
  for (const auto& g : gens) {
    if (g.ring() != gens[0].ring() || g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("enumerate_group: generators must be square over one ring");
    matrix_order(g, cap);  // rejects non-invertible (no finite order) generators
  }
  FiniteGroup g;
  g.ring = gens[0].ring();
  g.dim = dim;
  g.gen_names = names;
  g.gens = gens;
  g.elements.push_back(Matrix::identity(g.ring, dim));
  g.provenance.push_back({SIZE_MAX, SIZE_MAX});
  for (size_t head = 0; head < g.elements.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Matrix next = mat_mul(g.elements[head], gens[gi]);
      if (find_element(g.elements, next) == g.elements.size()) {
        if (g.elements.size() >= cap) throw std::invalid_argument("enumerate_group: cap exceeded");
        g.elements.push_back(std::move(next));
        g.provenance.push_back({head, gi});
      }
    }
  }

  size_t n = g.order();
  g.mul.assign(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t k = find_element(g.elements, mat_mul(g.elements[i], g.elements[j]));
      if (k == n) throw std::logic_error("enumerate_group: closure violated");
      g.mul[i][j] = k;
    }
  g.inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (g.mul[i][j] == 0) g.inv[i] = j;

  g.element_orders.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    size_t k = 1, acc = i;
    while (acc != 0) {
      acc = g.mul[acc][i];
      ++k;
    }
    g.element_orders[i] = k;
  }

  std::vector<bool> assigned(n, false);
  for (size_t e = 0; e < n; ++e) {
    if (assigned[e]) continue;
    std::vector<size_t> cls;
    for (size_t x = 0; x < n; ++x) {
      size_t conj = g.mul[g.mul[g.inv[x]][e]][x];
      if (!assigned[conj]) {
        assigned[conj] = true;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes.push_back(std::move(cls));
  }
  return g;
}

size_t element_index(const FiniteGroup& g, const Matrix& m) {
  size_t i = find_element(g.elements, m);
  if (i == g.elements.size()) throw std::invalid_argument("element_index: matrix not in group");
  return i;
}

const std::vector<std::vector<size_t>>& conjugacy_classes(const FiniteGroup& g) { return g.classes; }

std::vector<size_t> p_regular_classes(const FiniteGroup& g, unsigned p) {
  std::vector<size_t> out;
  for (size_t c = 0; c < g.classes.size(); ++c)
    if (g.element_orders[g.classes[c][0]] % p != 0) out.push_back(c);
  return out;
}

}  // namespace modrep
