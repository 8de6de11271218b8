#include "modrep/poly.hpp"

#include <stdexcept>

#include "ops_detail.hpp"

namespace modrep {

using detail::dispatch_field;
using detail::vec;

namespace {

// Charpoly of an upper Hessenberg matrix by expanding det(xI - H) along the
// last column of each leading principal submatrix:
//   p_m = (x - H[m-1][m-1]) p_{m-1}
//         - sum_{k=1..m-1} H[m-1-k][m-1] * (prod_{j=1..k} H[m-j][m-j-1]) * p_{m-1-k}
template <class Ops>
std::vector<typename Ops::T> hessenberg_charpoly(Ops ops, std::vector<typename Ops::T> h, size_t n) {
  using T = typename Ops::T;
  auto at = [&](size_t i, size_t j) -> T& { return h[i * n + j]; };
  // Similarity reduction to upper Hessenberg with pivoting; exact over a field.
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = n;
    for (size_t i = j + 1; i < n; ++i)
      if (ops.nz(at(i, j))) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(at(j + 1, c), at(piv, c));
      for (size_t r = 0; r < n; ++r) std::swap(at(r, j + 1), at(r, piv));
    }
    T pinv = ops.inv(at(j + 1, j));
    for (size_t i = j + 2; i < n; ++i) {
      if (!ops.nz(at(i, j))) continue;
      T f = ops.mul(pinv, at(i, j));
      for (size_t c = 0; c < n; ++c) at(i, c) = ops.sub(at(i, c), ops.mul(f, at(j + 1, c)));
      for (size_t r = 0; r < n; ++r) at(r, j + 1) = ops.add(at(r, j + 1), ops.mul(f, at(r, i)));
    }
  }
  // p[m] holds the charpoly of the leading m-by-m block, degree order.
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {ops.one()};
  for (size_t m = 1; m <= n; ++m) {
    std::vector<T> cur(m + 1, ops.zero());
    const auto& prev = p[m - 1];
    for (size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = ops.add(cur[d + 1], prev[d]);
      cur[d] = ops.sub(cur[d], ops.mul(at(m - 1, m - 1), prev[d]));
    }
    T subprod = ops.one();
    for (size_t k = 1; k < m; ++k) {
      subprod = ops.mul(subprod, at(m - k, m - k - 1));
      if (!ops.nz(subprod)) break;
      T f = ops.mul(at(m - 1 - k, m - 1), subprod);
      if (!ops.nz(f)) continue;
      const auto& q = p[m - 1 - k];
      for (size_t d = 0; d < q.size(); ++d) cur[d] = ops.sub(cur[d], ops.mul(f, q[d]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace

std::vector<Scalar> charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: square matrix required");
  return dispatch_field(m.ring(), "charpoly", [&](auto ops) -> std::vector<Scalar> {
    auto coeffs = hessenberg_charpoly(ops, vec(ops, m), m.rows());
    std::vector<Scalar> out;
    out.reserve(coeffs.size());
    for (auto& c : coeffs) out.push_back({m.ring(), std::move(c)});
    return out;
  });
}

Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
  if (coeffs.empty()) return ring_zero(x.ring);
  Scalar acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
  return acc;
}

std::vector<Scalar> eigenvalues_ff(const Matrix& m, const Ring& ext) {
  if (!m.ring().is_finite_field() || !ext.is_finite_field())
    throw std::invalid_argument("eigenvalues_ff: finite fields only");
  Matrix over_ext = m.ring() == ext ? m : embed_matrix(m, ext);
  auto cp = charpoly(over_ext);
  const FFTables& t = *ext.ff;
  std::vector<uint8_t> f(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) f[i] = std::get<uint8_t>(cp[i].v);
  std::vector<Scalar> roots;
  for (unsigned cu = 0; cu < t.q; ++cu) {
    auto c = static_cast<uint8_t>(cu);
    for (;;) {
      if (f.size() < 2) break;
      uint8_t rem = 0;  // Horner: f(c)
      for (size_t i = f.size(); i-- > 0;) rem = ff_add(t, ff_mul(t, rem, c), f[i]);
      if (rem != 0) break;
      // Synthetic division by (x - c): q[d-1] = f[d], q[i] = f[i+1] + c q[i+1].
      std::vector<uint8_t> q(f.size() - 1);
      q.back() = f.back();
      for (size_t i = q.size() - 1; i-- > 0;) q[i] = ff_add(t, f[i + 1], ff_mul(t, c, q[i + 1]));
      f = std::move(q);
      roots.push_back(ff_scalar(ext, c));
    }
  }
  if (f.size() > 1)
    throw std::runtime_error("eigenvalues_ff: characteristic polynomial does not split over " + ext.name());
  return roots;
}

}  // namespace modrep
