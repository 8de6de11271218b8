#include "modrep/matrix.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "ops_detail.hpp"

namespace modrep {

using detail::dispatch;
using detail::dispatch_field;
using detail::require_same_ring;
using detail::vec;

Matrix::Matrix(Ring ring, size_t rows, size_t cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  dispatch(ring_, [&](auto ops) {
    data_ = std::vector<typename decltype(ops)::T>(rows * cols, ops.zero());
  });
}

Matrix Matrix::identity(const Ring& ring, size_t n) {
  Matrix m(ring, n, n);
  dispatch(ring, [&](auto ops) {
    auto& d = vec(ops, m);
    for (size_t i = 0; i < n; ++i) d[i * n + i] = ops.one();
  });
  return m;
}

Scalar Matrix::at(size_t r, size_t c) const {
  return dispatch(ring_, [&](auto ops) -> Scalar {
    return {ring_, vec(ops, *this)[r * cols_ + c]};
  });
}

void Matrix::set(size_t r, size_t c, const Scalar& x) {
  if (x.ring != ring_) throw std::invalid_argument("Matrix::set: ring mismatch");
  dispatch(ring_, [&](auto ops) {
    vec(ops, *this)[r * cols_ + c] = std::get<typename decltype(ops)::T>(x.v);
  });
}

void Matrix::set_int(size_t r, size_t c, long n) { set(r, c, from_int(ring_, n)); }

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix mat_from_int(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(ring, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("mat_from_int: ragged rows");
    for (size_t j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

namespace {

template <class Fn>
Matrix zip(const Matrix& a, const Matrix& b, const char* what, Fn fn) {
  require_same_ring(a, b, what);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  Matrix out(a.ring(), a.rows(), a.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    const auto& db = vec(ops, b);
    auto& dc = vec(ops, out);
    for (size_t i = 0; i < da.size(); ++i) dc[i] = fn(ops, da[i], db[i]);
  });
  return out;
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
  return zip(a, b, "mat_add", [](auto ops, const auto& x, const auto& y) { return ops.add(x, y); });
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  return zip(a, b, "mat_sub", [](auto ops, const auto& x, const auto& y) { return ops.sub(x, y); });
}

Matrix mat_neg(const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    auto& d = vec(ops, out);
    for (size_t i = 0; i < da.size(); ++i) d[i] = ops.neg(da[i]);
  });
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix out(a.ring(), a.rows(), b.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    const auto& db = vec(ops, b);
    auto& d = vec(ops, out);
    size_t n = a.cols(), m = b.cols();
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t k = 0; k < n; ++k) {
        const auto& x = da[i * n + k];
        if (!ops.nz(x)) continue;
        for (size_t j = 0; j < m; ++j)
          d[i * m + j] = ops.add(d[i * m + j], ops.mul(x, db[k * m + j]));
      }
  });
  return out;
}

Matrix mat_pow(const Matrix& a, unsigned long e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: square matrix required");
  Matrix acc = Matrix::identity(a.ring(), a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return acc;
}

Matrix scalar_mul(const Scalar& c, const Matrix& a) {
  if (c.ring != a.ring()) throw std::invalid_argument("scalar_mul: ring mismatch");
  Matrix out(a.ring(), a.rows(), a.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    auto& d = vec(ops, out);
    const auto& x = std::get<typename decltype(ops)::T>(c.v);
    for (size_t i = 0; i < da.size(); ++i) d[i] = ops.mul(x, da[i]);
  });
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.ring(), a.cols(), a.rows());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    auto& d = vec(ops, out);
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) d[j * a.rows() + i] = da[i * a.cols() + j];
  });
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b, "kron");
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    const auto& db = vec(ops, b);
    auto& d = vec(ops, out);
    size_t oc = out.cols();
    for (size_t i1 = 0; i1 < a.rows(); ++i1)
      for (size_t j1 = 0; j1 < a.cols(); ++j1) {
        const auto& x = da[i1 * a.cols() + j1];
        for (size_t i2 = 0; i2 < b.rows(); ++i2)
          for (size_t j2 = 0; j2 < b.cols(); ++j2)
            d[(i1 * b.rows() + i2) * oc + (j1 * b.cols() + j2)] = ops.mul(x, db[i2 * b.cols() + j2]);
      }
  });
  return out;
}

Matrix direct_sum_mat(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b, "direct_sum_mat");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    const auto& db = vec(ops, b);
    auto& d = vec(ops, out);
    size_t oc = out.cols();
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) d[i * oc + j] = da[i * a.cols() + j];
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) d[(a.rows() + i) * oc + (a.cols() + j)] = db[i * b.cols() + j];
  });
  return out;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b, "stack_rows");
  if (a.cols() != b.cols()) throw std::invalid_argument("stack_rows: column mismatch");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
  dispatch(a.ring(), [&](auto ops) {
    const auto& da = vec(ops, a);
    const auto& db = vec(ops, b);
    auto& d = vec(ops, out);
    std::copy(da.begin(), da.end(), d.begin());
    std::copy(db.begin(), db.end(), d.begin() + da.size());
  });
  return out;
}

Scalar trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace: square matrix required");
  Scalar s = ring_zero(a.ring());
  for (size_t i = 0; i < a.rows(); ++i) s = add(s, a.at(i, i));
  return s;
}

bool is_zero_matrix(const Matrix& a) {
  return dispatch(a.ring(), [&](auto ops) {
    const auto& d = vec(ops, a);
    for (const auto& x : d)
      if (ops.nz(x)) return false;
    return true;
  });
}

Matrix reduce_mod(const Matrix& m, const Ring& gf) {
  if (m.ring().kind != RingKind::Int) throw std::invalid_argument("reduce_mod: integral matrix required");
  if (!gf.is_finite_field() || gf.ff->k != 1)
    throw std::invalid_argument("reduce_mod: target must be a prime field");
  Matrix out(gf, m.rows(), m.cols());
  const auto& src = std::get<std::vector<mpz_class>>(m.data());
  auto& dst = out.ff();
  mpz_class p = gf.ff->p;
  for (size_t i = 0; i < src.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), src[i].get_mpz_t(), p.get_mpz_t());
    dst[i] = static_cast<uint8_t>(r.get_ui());
  }
  return out;
}

Matrix to_rationals(const Matrix& m) {
  if (m.ring().kind != RingKind::Int) throw std::invalid_argument("to_rationals: integral matrix required");
  Matrix out(rationals(), m.rows(), m.cols());
  const auto& src = std::get<std::vector<mpz_class>>(m.data());
  auto& dst = std::get<std::vector<mpq_class>>(out.data());
  for (size_t i = 0; i < src.size(); ++i) dst[i] = mpq_class(src[i]);
  return out;
}

Matrix to_zs2(const Matrix& m) {
  if (m.ring().kind != RingKind::Int) throw std::invalid_argument("to_zs2: integral matrix required");
  Matrix out(zsqrtm2(), m.rows(), m.cols());
  const auto& src = std::get<std::vector<mpz_class>>(m.data());
  auto& dst = std::get<std::vector<ZS2>>(out.data());
  for (size_t i = 0; i < src.size(); ++i) dst[i] = ZS2(src[i], 0);
  return out;
}

Matrix embed_matrix(const Matrix& m, const Ring& ext) {
  if (!m.ring().is_finite_field() || !ext.is_finite_field())
    throw std::invalid_argument("embed_matrix: finite fields only");
  if (m.ring().char_p() != ext.char_p()) throw std::invalid_argument("embed_matrix: characteristic mismatch");
  Matrix out(ext, m.rows(), m.cols());
  const auto& src = m.ff();
  auto& dst = out.ff();
  unsigned p = m.ring().char_p();
  for (size_t i = 0; i < src.size(); ++i) {
    if (src[i] >= p) throw std::invalid_argument("embed_matrix: entry outside the prime field");
    dst[i] = src[i];
  }
  return out;
}

std::pair<Matrix, size_t> rref(const Matrix& m) {
  return dispatch_field(m.ring(), "rref", [&](auto ops) -> std::pair<Matrix, size_t> {
    Matrix out = m;
    auto& d = vec(ops, out);
    size_t rows = m.rows(), cols = m.cols(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
      size_t piv = rows;
      for (size_t i = r; i < rows; ++i)
        if (ops.nz(d[i * cols + c])) {
          piv = i;
          break;
        }
      if (piv == rows) continue;
      if (piv != r)
        for (size_t j = 0; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
      auto pinv = ops.inv(d[r * cols + c]);
      for (size_t j = c; j < cols; ++j) d[r * cols + j] = ops.mul(pinv, d[r * cols + j]);
      for (size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        auto f = d[i * cols + c];
        if (!ops.nz(f)) continue;
        for (size_t j = c; j < cols; ++j)
          d[i * cols + j] = ops.sub(d[i * cols + j], ops.mul(f, d[r * cols + j]));
      }
      ++r;
    }
    return {out, r};
  });
}

size_t rank(const Matrix& m) { return rref(m).second; }

Scalar mat_det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: square matrix required");
  return dispatch_field(m.ring(), "mat_det", [&](auto ops) -> Scalar {
    Matrix a = m;
    auto& d = vec(ops, a);
    size_t n = m.rows();
    auto det = ops.one();
    bool zero = false;
    for (size_t c = 0; c < n && !zero; ++c) {
      size_t piv = n;
      for (size_t i = c; i < n; ++i)
        if (ops.nz(d[i * n + c])) {
          piv = i;
          break;
        }
      if (piv == n) {
        zero = true;
        break;
      }
      if (piv != c) {
        for (size_t j = 0; j < n; ++j) std::swap(d[piv * n + j], d[c * n + j]);
        det = ops.neg(det);
      }
      det = ops.mul(det, d[c * n + c]);
      auto pinv = ops.inv(d[c * n + c]);
      for (size_t i = c + 1; i < n; ++i) {
        auto f = ops.mul(pinv, d[i * n + c]);
        if (!ops.nz(f)) continue;
        for (size_t j = c; j < n; ++j) d[i * n + j] = ops.sub(d[i * n + j], ops.mul(f, d[c * n + j]));
      }
    }
    return {m.ring(), zero ? ops.zero() : det};
  });
}

Matrix mat_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: square matrix required");
  size_t n = m.rows();
  Matrix wide(m.ring(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) wide.set(i, j, m.at(i, j));
    wide.set(i, n + i, ring_one(m.ring()));
  }
  auto [red, rk] = rref(wide);
  if (rk != n) throw std::invalid_argument("mat_inverse: singular matrix");
  Matrix inv(m.ring(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.set(i, j, red.at(i, n + j));
  return inv;
}

Matrix mat_inverse_int(const Matrix& m) {
  if (m.ring().kind != RingKind::Int) throw std::invalid_argument("mat_inverse_int: integral matrix required");
  Matrix q = mat_inverse(to_rationals(m));
  Matrix out(integers(), q.rows(), q.cols());
  const auto& src = std::get<std::vector<mpq_class>>(q.data());
  auto& dst = std::get<std::vector<mpz_class>>(out.data());
  for (size_t i = 0; i < src.size(); ++i) {
    if (src[i].get_den() != 1) throw std::invalid_argument("mat_inverse_int: inverse is not integral");
    dst[i] = src[i].get_num();
  }
  return out;
}

Matrix solve_exact(const Matrix& a, const Matrix& b) {
  if (a.ring().kind != RingKind::Rat) throw std::invalid_argument("solve_exact: rational matrix required");
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_exact: square matrix required");
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
  require_same_ring(a, b, "solve_exact");
  size_t n = a.rows(), m = b.cols();
  Matrix wide(a.ring(), n, n + m);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) wide.set(i, j, a.at(i, j));
    for (size_t j = 0; j < m; ++j) wide.set(i, n + j, b.at(i, j));
  }
  auto [red, rk] = rref(wide);
  if (rk != n) throw std::invalid_argument("solve_exact: singular matrix");
  Matrix x(a.ring(), n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) x.set(i, j, red.at(i, n + j));
  return x;
}

bool Subspace::operator==(const Subspace& o) const {
  return ring == o.ring && ambient == o.ambient && basis == o.basis;
}

Subspace row_space(const Matrix& rows) {
  auto [red, rk] = rref(rows);
  Matrix basis(rows.ring(), rk, rows.cols());
  for (size_t i = 0; i < rk; ++i)
    for (size_t j = 0; j < rows.cols(); ++j) basis.set(i, j, red.at(i, j));
  return {rows.ring(), rows.cols(), basis};
}

Subspace zero_subspace(const Ring& ring, size_t ambient) {
  return {ring, ambient, Matrix(ring, 0, ambient)};
}

Subspace full_subspace(const Ring& ring, size_t ambient) {
  return {ring, ambient, Matrix::identity(ring, ambient)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ring != b.ring || a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: mismatch");
  return row_space(stack_rows(a.basis, b.basis));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ring != b.ring || a.ambient != b.ambient)
    throw std::invalid_argument("subspace_intersect: mismatch");
  size_t n = a.ambient, ka = a.dim(), kb = b.dim();
  // Zassenhaus: reduce [[A A],[B 0]]; rows with zero left half span A cap B
  // on the right half.
  Matrix big(a.ring, ka + kb, 2 * n);
  for (size_t i = 0; i < ka; ++i)
    for (size_t j = 0; j < n; ++j) {
      big.set(i, j, a.basis.at(i, j));
      big.set(i, n + j, a.basis.at(i, j));
    }
  for (size_t i = 0; i < kb; ++i)
    for (size_t j = 0; j < n; ++j) big.set(ka + i, j, b.basis.at(i, j));
  auto [red, rk] = rref(big);
  std::vector<size_t> inter_rows;
  for (size_t i = 0; i < rk; ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j) left_zero = is_zero(red.at(i, j));
    if (left_zero) inter_rows.push_back(i);
  }
  Matrix rows(a.ring, inter_rows.size(), n);
  for (size_t i = 0; i < inter_rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) rows.set(i, j, red.at(inter_rows[i], n + j));
  return row_space(rows);
}

Matrix reduce_rows_mod(const Matrix& rows, const Subspace& w) {
  if (rows.ring() != w.ring || rows.cols() != w.ambient)
    throw std::invalid_argument("reduce_rows_mod: mismatch");
  return dispatch_field(rows.ring(), "reduce_rows_mod", [&](auto ops) -> Matrix {
    Matrix out = rows;
    auto& d = vec(ops, out);
    const auto& bd = vec(ops, w.basis);
    size_t n = w.ambient;
    // Pivot column of each RREF basis row is its first nonzero entry.
    for (size_t bi = 0; bi < w.dim(); ++bi) {
      size_t pc = 0;
      while (pc < n && !ops.nz(bd[bi * n + pc])) ++pc;
      for (size_t i = 0; i < rows.rows(); ++i) {
        auto f = d[i * n + pc];
        if (!ops.nz(f)) continue;
        for (size_t j = pc; j < n; ++j)
          d[i * n + j] = ops.sub(d[i * n + j], ops.mul(f, bd[bi * n + j]));
      }
    }
    return out;
  });
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.dim() > b.dim()) return false;
  return is_zero_matrix(reduce_rows_mod(a.basis, b));
}

bool subspace_contains(const Subspace& s, const Matrix& row) {
  return is_zero_matrix(reduce_rows_mod(row, s));
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return dispatch_field(a.ring, "subspace_less", [&](auto ops) {
    const auto& da = vec(ops, a.basis);
    const auto& db = vec(ops, b.basis);
    for (size_t i = 0; i < da.size() && i < db.size(); ++i) {
      if (da[i] == db[i]) continue;
      return da[i] < db[i];
    }
    return false;
  });
}

Subspace null_space(const Matrix& m) {
  auto [red, rk] = rref(m);
  size_t n = m.cols();
  std::vector<size_t> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (size_t i = 0; i < rk; ++i) {
    size_t c = 0;
    while (c < n && is_zero(red.at(i, c))) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Matrix rows(m.ring(), n - rk, n);
  size_t out = 0;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    rows.set(out, f, ring_one(m.ring()));
    for (size_t i = 0; i < rk; ++i) rows.set(out, pivot_col[i], neg(red.at(i, f)));
    ++out;
  }
  return row_space(rows);
}

Matrix coords_in_rows(const Matrix& rows, const Matrix& basis) {
  require_same_ring(rows, basis, "coords_in_rows");
  if (rows.cols() != basis.cols()) throw std::invalid_argument("coords_in_rows: ambient mismatch");
  return dispatch_field(rows.ring(), "coords_in_rows", [&](auto ops) -> Matrix {
    size_t k = basis.rows(), n = basis.cols();
    // Eliminate on a copy of the basis while mirroring row operations on an
    // identity block, so each target row can be rewritten in basis coords.
    Matrix b = basis;
    Matrix t = Matrix::identity(rows.ring(), k);
    auto& bd = vec(ops, b);
    auto& td = vec(ops, t);
    std::vector<size_t> pivots;  // column of the pivot of eliminated row i
    size_t r = 0;
    for (size_t c = 0; c < n && r < k; ++c) {
      size_t piv = k;
      for (size_t i = r; i < k; ++i)
        if (ops.nz(bd[i * n + c])) {
          piv = i;
          break;
        }
      if (piv == k) continue;
      if (piv != r) {
        for (size_t j = 0; j < n; ++j) std::swap(bd[piv * n + j], bd[r * n + j]);
        for (size_t j = 0; j < k; ++j) std::swap(td[piv * k + j], td[r * k + j]);
      }
      auto pinv = ops.inv(bd[r * n + c]);
      for (size_t j = 0; j < n; ++j) bd[r * n + j] = ops.mul(pinv, bd[r * n + j]);
      for (size_t j = 0; j < k; ++j) td[r * k + j] = ops.mul(pinv, td[r * k + j]);
      for (size_t i = 0; i < k; ++i) {
        if (i == r) continue;
        auto f = bd[i * n + c];
        if (!ops.nz(f)) continue;
        for (size_t j = 0; j < n; ++j) bd[i * n + j] = ops.sub(bd[i * n + j], ops.mul(f, bd[r * n + j]));
        for (size_t j = 0; j < k; ++j) td[i * k + j] = ops.sub(td[i * k + j], ops.mul(f, td[r * k + j]));
      }
      pivots.push_back(c);
      ++r;
    }
    if (r != k) throw std::invalid_argument("coords_in_rows: basis rows are dependent");
    const auto& rd = vec(ops, rows);
    Matrix coords(rows.ring(), rows.rows(), k);
    auto& cd = vec(ops, coords);
    for (size_t i = 0; i < rows.rows(); ++i) {
      std::vector<typename decltype(ops)::T> v(rd.begin() + i * n, rd.begin() + (i + 1) * n);
      std::vector<typename decltype(ops)::T> co(k, ops.zero());
      for (size_t rr = 0; rr < k; ++rr) {
        auto f = v[pivots[rr]];
        if (!ops.nz(f)) continue;
        for (size_t j = 0; j < n; ++j) v[j] = ops.sub(v[j], ops.mul(f, bd[rr * n + j]));
        for (size_t j = 0; j < k; ++j) co[j] = ops.add(co[j], ops.mul(f, td[rr * k + j]));
      }
      for (size_t j = 0; j < n; ++j)
        if (ops.nz(v[j])) throw std::invalid_argument("coords_in_rows: row outside the span");
      for (size_t j = 0; j < k; ++j) cd[i * k + j] = co[j];
    }
    return coords;
  });
}

Subspace spin(const Subspace& seed, const std::vector<Matrix>& gens) {
  size_t n = seed.ambient;
  for (const auto& g : gens) {
    if (g.ring() != seed.ring) throw std::invalid_argument("spin: ring mismatch");
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("spin: dimension mismatch");
  }
  return dispatch_field(seed.ring, "spin", [&](auto ops) -> Subspace {
    using T = typename decltype(ops)::T;
    std::vector<std::vector<T>> ech;  // forward-eliminated rows, pivot 1
    std::vector<size_t> piv;          // pivot column per row, increasing
    auto reduce = [&](std::vector<T>& v) {
      for (size_t i = 0; i < ech.size(); ++i) {
        auto f = v[piv[i]];
        if (!ops.nz(f)) continue;
        for (size_t j = piv[i]; j < n; ++j) v[j] = ops.sub(v[j], ops.mul(f, ech[i][j]));
      }
    };
    std::deque<std::vector<T>> queue;
    auto insert = [&](std::vector<T> v) {
      reduce(v);
      size_t c = 0;
      while (c < n && !ops.nz(v[c])) ++c;
      if (c == n) return;
      auto pinv = ops.inv(v[c]);
      for (size_t j = c; j < n; ++j) v[j] = ops.mul(pinv, v[j]);
      size_t pos = 0;
      while (pos < piv.size() && piv[pos] < c) ++pos;
      ech.insert(ech.begin() + pos, v);
      piv.insert(piv.begin() + pos, c);
      queue.push_back(std::move(v));
    };
    const auto& sd = vec(ops, seed.basis);
    for (size_t i = 0; i < seed.dim(); ++i)
      insert(std::vector<T>(sd.begin() + i * n, sd.begin() + (i + 1) * n));
    while (!queue.empty()) {
      auto v = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        const auto& gd = vec(ops, g);
        std::vector<T> w(n, ops.zero());
        for (size_t c = 0; c < n; ++c) {
          if (!ops.nz(v[c])) continue;
          for (size_t j = 0; j < n; ++j) w[j] = ops.add(w[j], ops.mul(v[c], gd[c * n + j]));
        }
        insert(std::move(w));
      }
      if (ech.size() == n) break;
    }
    Matrix rows(seed.ring, ech.size(), n);
    auto& rd = vec(ops, rows);
    for (size_t i = 0; i < ech.size(); ++i)
      for (size_t j = 0; j < n; ++j) rd[i * n + j] = ech[i][j];
    return row_space(rows);
  });
}

}  // namespace modrep
