#include "modrep/meataxe.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "modrep/poly.hpp"

namespace modrep {
namespace {

const FFTables& tables(const Ring& r) {
  if (!r.is_finite_field()) throw std::invalid_argument("module analysis requires a finite field");
  return *r.ff;
}

bool pow_within(unsigned q, size_t n, size_t cap) {
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) {
    if (total > cap / q) return false;
    total *= q;
  }
  return total <= cap;
}

// v * m for an encoded row vector of length m.rows().
std::vector<uint8_t> row_times(const FFTables& t, const std::vector<uint8_t>& v, const Matrix& m) {
  size_t nr = m.rows(), nc = m.cols();
  const auto& d = m.ff();
  std::vector<uint8_t> out(nc, 0);
  for (size_t i = 0; i < nr; ++i) {
    uint8_t x = v[i];
    if (x == 0) continue;
    const uint8_t* row = d.data() + i * nc;
    for (size_t j = 0; j < nc; ++j)
      if (row[j]) out[j] = ff_add(t, out[j], ff_mul(t, x, row[j]));
  }
  return out;
}

Subspace spin_vector(const Ring& r, const std::vector<uint8_t>& v, const std::vector<Matrix>& gens) {
  Matrix row(r, 1, v.size());
  row.ff() = v;
  return spin(row_space(row), gens);
}

// Representatives of the 1-dimensional subspaces spanned by combinations of
// the rows of basis: first nonzero coefficient 1, remaining coefficients
// running through all encodings. f returns false to stop early.
template <typename F>
void for_each_line(const FFTables& t, const Matrix& basis, F&& f) {
  size_t k = basis.rows(), n = basis.cols();
  const auto& b = basis.ff();
  for (size_t lead = 0; lead < k; ++lead) {
    std::vector<uint8_t> c(k, 0);
    c[lead] = 1;
    for (;;) {
      std::vector<uint8_t> v(n, 0);
      for (size_t i = lead; i < k; ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
          if (b[i * n + j]) v[j] = ff_add(t, v[j], ff_mul(t, c[i], b[i * n + j]));
      }
      if (!f(v)) return;
      size_t bumped = k;
      for (size_t i = k; i-- > lead + 1;) {
        if (uint8_t(c[i] + 1) < t.q) {
          c[i] = uint8_t(c[i] + 1);
          bumped = i;
          break;
        }
        c[i] = 0;
      }
      if (bumped == k) break;
    }
  }
}

size_t line_count_capped(unsigned q, size_t nu, size_t cap) {
  size_t lines = 0, pw = 1;
  for (size_t i = 0; i < nu; ++i) {
    lines += pw;
    if (lines > cap) return cap + 1;
    pw *= q;
  }
  return lines;
}

// Roots of a polynomial (degree order, encoded coefficients) in the base
// field, with multiplicities, plus the root-free cofactor.
struct FFRoots {
  std::vector<std::pair<uint8_t, size_t>> roots;
  std::vector<uint8_t> cofactor;
};

FFRoots ff_roots(const Ring& r, const std::vector<Scalar>& poly) {
  const FFTables& t = tables(r);
  std::vector<uint8_t> f;
  f.reserve(poly.size());
  for (const auto& c : poly) f.push_back(std::get<uint8_t>(c.v));
  FFRoots out;
  for (unsigned c = 0; c < t.q; ++c) {
    size_t mult = 0;
    while (f.size() > 1) {
      uint8_t acc = 0;
      for (size_t i = f.size(); i-- > 0;) acc = ff_add(t, ff_mul(t, acc, uint8_t(c)), f[i]);
      if (acc != 0) break;
      std::vector<uint8_t> quo(f.size() - 1);
      quo[f.size() - 2] = f[f.size() - 1];
      for (size_t i = f.size() - 2; i-- > 0;)
        quo[i] = ff_add(t, f[i + 1], ff_mul(t, uint8_t(c), quo[i + 1]));
      f = std::move(quo);
      ++mult;
    }
    if (mult) out.roots.push_back({uint8_t(c), mult});
  }
  out.cofactor = f;
  return out;
}

Matrix shift_by(const Matrix& m, uint8_t c) {
  return mat_sub(m, scalar_mul(ff_scalar(m.ring(), c), Matrix::identity(m.ring(), m.rows())));
}

Matrix random_word(std::mt19937_64& rng, std::vector<Matrix>& pool) {
  int kind = int(rng() % 3);
  size_t i = rng() % pool.size(), j = rng() % pool.size();
  Matrix w = kind == 0   ? mat_mul(pool[i], pool[j])
             : kind == 1 ? mat_add(pool[i], pool[j])
                         : mat_sub(pool[i], pool[j]);
  if (pool.size() < 64) pool.push_back(w);
  return w;
}

// Incremental row echelon over a finite field, for independence tests.
struct Echelon {
  const FFTables& t;
  size_t n;
  std::vector<std::vector<uint8_t>> rows;
  std::vector<size_t> pivots;

  Echelon(const FFTables& t_, size_t n_) : t(t_), n(n_) {}

  // True when v is independent of the rows so far (v is then inserted).
  bool add(std::vector<uint8_t> v) {
    for (size_t k = 0; k < rows.size(); ++k) {
      uint8_t c = v[pivots[k]];
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (rows[k][j]) v[j] = ff_sub(t, v[j], ff_mul(t, c, rows[k][j]));
    }
    size_t p = n;
    for (size_t j = 0; j < n; ++j)
      if (v[j]) {
        p = j;
        break;
      }
    if (p == n) return false;
    uint8_t iv = ff_inv(t, v[p]);
    if (iv != 1)
      for (size_t j = p; j < n; ++j)
        if (v[j]) v[j] = ff_mul(t, iv, v[j]);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

IrreducibilityResult is_irreducible(const Representation& m, uint64_t seed) {
  const Ring& r = m.ring;
  const FFTables& t = tables(r);
  size_t n = m.dim;
  if (n == 0) throw std::invalid_argument("is_irreducible: empty module");
  if (n == 1) return {true, std::nullopt};

  std::vector<Matrix> tgens;
  tgens.reserve(m.gens.size());
  for (const auto& g : m.gens) tgens.push_back(transpose(g));

  std::mt19937_64 rng(seed);
  std::vector<Matrix> pool = m.gens;
  const size_t kWordCap = 200, kCertifyLines = 1000, kProbeLines = 16;

  for (size_t it = 0; it < kWordCap; ++it) {
    Matrix theta = it < m.gens.size() ? m.gens[it] : random_word(rng, pool);
    auto roots = ff_roots(r, charpoly(theta));
    for (auto [c, mult] : roots.roots) {
      (void)mult;
      Matrix bm = shift_by(theta, c);
      Subspace nul = null_space(transpose(bm));  // {v : v (theta - c) = 0}
      size_t lines = line_count_capped(t.q, nul.dim(), kCertifyLines);
      bool certify = lines <= kCertifyLines;
      size_t probe = certify ? lines : kProbeLines;
      std::optional<Subspace> bad;
      size_t seen = 0;
      for_each_line(t, nul.basis, [&](const std::vector<uint8_t>& v) {
        Subspace s = spin_vector(r, v, m.gens);
        ++seen;
        if (s.dim() < n) {
          bad = std::move(s);
          return false;
        }
        return seen < probe;
      });
      if (bad) return {false, std::move(bad)};
      if (!certify) continue;
      // Transposed side: a proper spin there yields a witness in the
      // original module through the perpendicular subspace.
      Subspace nult = null_space(bm);  // {w : w (theta - c)^T = 0}
      std::optional<Subspace> tbad;
      for_each_line(t, nult.basis, [&](const std::vector<uint8_t>& w) {
        Subspace s = spin_vector(r, w, tgens);
        if (s.dim() < n) {
          tbad = std::move(s);
          return false;
        }
        return true;
      });
      if (tbad) return {false, null_space(tbad->basis)};
      return {true, std::nullopt};
    }
  }

  // Exhaustive fallback: spin every line of the full space.
  if (pow_within(t.q, n, size_t(1) << 20)) {
    Matrix id = Matrix::identity(r, n);
    std::optional<Subspace> bad;
    for_each_line(t, id, [&](const std::vector<uint8_t>& v) {
      Subspace s = spin_vector(r, v, m.gens);
      if (s.dim() < n) {
        bad = std::move(s);
        return false;
      }
      return true;
    });
    if (bad) return {false, std::move(bad)};
    return {true, std::nullopt};
  }
  throw std::runtime_error("is_irreducible: no certifying word found within caps");
}

Representation sub_representation(const Representation& m, const Subspace& w) {
  if (w.ring != m.ring || w.ambient != m.dim)
    throw std::invalid_argument("sub_representation: subspace does not match the module");
  if (w.dim() == 0) throw std::invalid_argument("sub_representation: zero subspace");
  Representation out;
  out.ring = m.ring;
  out.dim = w.dim();
  out.gen_names = m.gen_names;
  out.group = m.group;
  out.gens.reserve(m.gens.size());
  for (const auto& g : m.gens) out.gens.push_back(coords_in_rows(mat_mul(w.basis, g), w.basis));
  return out;
}

Representation quotient_representation(const Representation& m, const Subspace& w) {
  if (w.ring != m.ring || w.ambient != m.dim)
    throw std::invalid_argument("quotient_representation: subspace does not match the module");
  size_t n = m.dim, k = w.dim();
  if (k == n) throw std::invalid_argument("quotient_representation: quotient is zero");
  std::vector<char> is_pivot(n, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(w.basis.at(i, j))) {
        is_pivot[j] = 1;
        break;
      }
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  size_t f = free_cols.size();

  Representation out;
  out.ring = m.ring;
  out.dim = f;
  out.gen_names = m.gen_names;
  out.group = m.group;
  for (const auto& g : m.gens) {
    Matrix q(m.ring, f, f);
    for (size_t fi = 0; fi < f; ++fi) {
      Matrix v(m.ring, 1, n);
      for (size_t j = 0; j < n; ++j) v.set(0, j, g.at(free_cols[fi], j));
      Matrix res = reduce_rows_mod(v, w);
      for (size_t fj = 0; fj < f; ++fj) q.set(fi, fj, res.at(0, free_cols[fj]));
    }
    out.gens.push_back(std::move(q));
  }
  return out;
}

namespace {

struct StdBasisSchedule {
  struct Item {
    size_t row, gen;
    bool accepted;
  };
  std::vector<Item> items;
};

// Greedy spinning basis from a seed vector, recording the trace so the same
// construction can be replayed in another module.
std::optional<Matrix> standard_basis(const Representation& m, const std::vector<uint8_t>& v,
                                     StdBasisSchedule* schedule) {
  const FFTables& t = tables(m.ring);
  size_t n = m.dim;
  std::vector<std::vector<uint8_t>> basis{v};
  Echelon ech(t, n);
  ech.add(v);
  for (size_t r = 0; r < basis.size() && basis.size() < n; ++r) {
    for (size_t gi = 0; gi < m.gens.size() && basis.size() < n; ++gi) {
      auto w = row_times(t, basis[r], m.gens[gi]);
      bool fresh = ech.add(w);
      if (schedule) schedule->items.push_back({r, gi, fresh});
      if (fresh) basis.push_back(std::move(w));
    }
  }
  if (basis.size() < n) return std::nullopt;
  Matrix out(m.ring, n, n);
  auto& d = out.ff();
  for (size_t i = 0; i < n; ++i) std::copy(basis[i].begin(), basis[i].end(), d.begin() + i * n);
  return out;
}

std::optional<Matrix> replay_standard_basis(const Representation& m, const std::vector<uint8_t>& v,
                                            const StdBasisSchedule& schedule) {
  const FFTables& t = tables(m.ring);
  size_t n = m.dim;
  std::vector<std::vector<uint8_t>> basis{v};
  Echelon ech(t, n);
  ech.add(v);
  for (const auto& item : schedule.items) {
    if (item.row >= basis.size()) return std::nullopt;
    auto w = row_times(t, basis[item.row], m.gens[item.gen]);
    bool fresh = ech.add(w);
    if (fresh != item.accepted) return std::nullopt;
    if (fresh) basis.push_back(std::move(w));
  }
  if (basis.size() < n) return std::nullopt;
  Matrix out(m.ring, n, n);
  auto& d = out.ff();
  for (size_t i = 0; i < n; ++i) std::copy(basis[i].begin(), basis[i].end(), d.begin() + i * n);
  return out;
}

}  // namespace

std::optional<Matrix> module_isomorphism(const Representation& a, const Representation& b,
                                         uint64_t seed) {
  if (a.ring != b.ring) throw std::invalid_argument("module_isomorphism: ring mismatch");
  if (a.gen_names != b.gen_names)
    throw std::invalid_argument("module_isomorphism: generator names differ");
  if (a.dim != b.dim) return std::nullopt;
  const Ring& r = a.ring;
  const FFTables& t = tables(r);
  (void)t;
  size_t n = a.dim;
  if (n == 0) return Matrix(r, 0, 0);

  std::mt19937_64 rng(seed);
  std::vector<Matrix> pa = a.gens, pb = b.gens;
  const size_t kWordCap = 500;
  for (size_t it = 0; it < kWordCap; ++it) {
    Matrix wa, wb;
    if (it < a.gens.size()) {
      wa = a.gens[it];
      wb = b.gens[it];
    } else {
      int kind = int(rng() % 3);
      size_t i = rng() % pa.size(), j = rng() % pa.size();
      wa = kind == 0 ? mat_mul(pa[i], pa[j]) : kind == 1 ? mat_add(pa[i], pa[j]) : mat_sub(pa[i], pa[j]);
      wb = kind == 0 ? mat_mul(pb[i], pb[j]) : kind == 1 ? mat_add(pb[i], pb[j]) : mat_sub(pb[i], pb[j]);
      if (pa.size() < 64) {
        pa.push_back(wa);
        pb.push_back(wb);
      }
    }
    auto roots = ff_roots(r, charpoly(wa));
    for (auto [c, mult] : roots.roots) {
      (void)mult;
      Subspace na = null_space(transpose(shift_by(wa, c)));
      if (na.dim() != 1) continue;
      Subspace nb = null_space(transpose(shift_by(wb, c)));
      if (nb.dim() != 1) return std::nullopt;  // nullities of a common word differ
      StdBasisSchedule sched;
      auto ca = standard_basis(a, na.basis.ff(), &sched);
      if (!ca) continue;  // kernel vector does not generate; try another word
      auto cb = replay_standard_basis(b, nb.basis.ff(), sched);
      if (!cb) return std::nullopt;
      Matrix cai = mat_inverse(*ca), cbi = mat_inverse(*cb);
      for (size_t gi = 0; gi < a.gens.size(); ++gi) {
        Matrix lhs = mat_mul(mat_mul(*ca, a.gens[gi]), cai);
        Matrix rhs = mat_mul(mat_mul(*cb, b.gens[gi]), cbi);
        if (!(lhs == rhs)) return std::nullopt;
      }
      return mat_mul(cai, *cb);
    }
  }
  throw std::runtime_error("module_isomorphism: no deciding word found within caps");
}

namespace {

void chop_rec(const Representation& m, const RepCatalog& catalog, uint64_t seed,
              std::map<std::string, std::pair<size_t, size_t>>& acc) {
  if (m.dim == 0) return;
  auto res = is_irreducible(m, seed);
  if (res.irreducible) {
    for (const auto& entry : catalog) {
      if (entry.rep.dim != m.dim || entry.rep.ring != m.ring) continue;
      if (entry.rep.gen_names != m.gen_names) continue;
      if (module_isomorphism(m, entry.rep, seed)) {
        auto& slot = acc[entry.label];
        slot.first = m.dim;
        ++slot.second;
        return;
      }
    }
    throw std::runtime_error("chop: composition factor of dimension " + std::to_string(m.dim) +
                             " matches no catalog entry");
  }
  chop_rec(sub_representation(m, *res.witness), catalog, seed, acc);
  chop_rec(quotient_representation(m, *res.witness), catalog, seed, acc);
}

}  // namespace

ChopResult chop(const Representation& m, const RepCatalog& catalog, uint64_t seed) {
  std::map<std::string, std::pair<size_t, size_t>> acc;
  chop_rec(m, catalog, seed, acc);
  std::vector<std::pair<std::pair<size_t, std::string>, size_t>> items;
  for (const auto& [label, dm] : acc) items.push_back({{dm.first, label}, dm.second});
  std::sort(items.begin(), items.end());
  ChopResult out;
  out.total_dim = m.dim;
  for (const auto& [key, mult] : items) {
    out.labels.push_back(key.second);
    out.multiplicities.push_back(mult);
  }
  return out;
}

std::string ChopResult::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    os << labels[i] << " x" << multiplicities[i];
  }
  return os.str();
}

std::vector<Matrix> end_basis(const Representation& m) {
  const Ring& r = m.ring;
  if (!r.is_field()) throw std::invalid_argument("end_basis: field module required");
  size_t n = m.dim;
  size_t per = n * n;
  Matrix sys(r, m.gens.size() * per, per);
  for (size_t gi = 0; gi < m.gens.size(); ++gi) {
    const Matrix& g = m.gens[gi];
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        size_t row = gi * per + a * n + b;
        for (size_t k = 0; k < n; ++k) {
          // (g X - X g)_{ab} = sum_k g[a][k] X[k][b] - X[a][k] g[k][b]
          size_t c1 = k * n + b, c2 = a * n + k;
          sys.set(row, c1, add(sys.at(row, c1), g.at(a, k)));
          sys.set(row, c2, sub(sys.at(row, c2), g.at(k, b)));
        }
      }
  }
  Subspace sol = null_space(sys);
  std::vector<Matrix> out;
  out.reserve(sol.dim());
  for (size_t i = 0; i < sol.dim(); ++i) {
    Matrix x(r, n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) x.set(a, b, sol.basis.at(i, a * n + b));
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

// Splits the module along the coprime factors of the characteristic
// polynomial of an endomorphism; empty when phi gives no split.
std::vector<Subspace> eigen_split_by(const Representation& m, const Matrix& phi) {
  const Ring& r = m.ring;
  size_t n = m.dim;
  auto roots = ff_roots(r, charpoly(phi));
  size_t pieces_n = roots.roots.size() + (roots.cofactor.size() > 1 ? 1 : 0);
  if (pieces_n < 2) return {};
  std::vector<Subspace> pieces;
  for (auto [c, mult] : roots.roots)
    pieces.push_back(null_space(transpose(mat_pow(shift_by(phi, c), (unsigned long)mult))));
  if (roots.cofactor.size() > 1) {
    Matrix acc(r, n, n);
    for (size_t i = roots.cofactor.size(); i-- > 0;) {
      acc = mat_mul(acc, phi);
      if (roots.cofactor[i])
        acc = mat_add(acc, scalar_mul(ff_scalar(r, roots.cofactor[i]), Matrix::identity(r, n)));
    }
    pieces.push_back(null_space(transpose(acc)));
  }
  size_t total = 0;
  for (const auto& p : pieces) total += p.dim();
  if (total != n) throw std::logic_error("eigen split dimensions do not sum to the module dimension");
  return pieces;
}

std::vector<Subspace> try_eigen_split(const Representation& m, const std::vector<Matrix>& ends,
                                      std::mt19937_64& rng) {
  for (const auto& phi : ends) {
    auto p = eigen_split_by(m, phi);
    if (!p.empty()) return p;
  }
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = i + 1; j < ends.size(); ++j) {
      auto p = eigen_split_by(m, mat_add(ends[i], ends[j]));
      if (!p.empty()) return p;
    }
  const FFTables& t = tables(m.ring);
  for (size_t it = 0; it < 200; ++it) {
    Matrix phi(m.ring, m.dim, m.dim);
    for (const auto& e : ends) {
      uint8_t c = uint8_t(rng() % t.q);
      if (c) phi = mat_add(phi, scalar_mul(ff_scalar(m.ring, c), e));
    }
    auto p = eigen_split_by(m, phi);
    if (!p.empty()) return p;
  }
  return {};
}

// Nontrivial idempotent split of the module, or empty when End contains no
// nontrivial idempotent (the module is then indecomposable).
std::vector<Subspace> try_idempotent_split(const Representation& m, const std::vector<Matrix>& ends) {
  const FFTables& t = tables(m.ring);
  size_t e = ends.size();
  if (!pow_within(t.q, e, size_t(1) << 20))
    throw std::runtime_error("indecomposable_summands: endomorphism idempotent search guard exceeded");
  Matrix id = Matrix::identity(m.ring, m.dim);
  std::vector<uint8_t> alpha(e, 0);
  for (;;) {
    size_t bumped = e;
    for (size_t i = e; i-- > 0;) {
      if (uint8_t(alpha[i] + 1) < t.q) {
        alpha[i] = uint8_t(alpha[i] + 1);
        bumped = i;
        break;
      }
      alpha[i] = 0;
    }
    if (bumped == e) break;
    Matrix x(m.ring, m.dim, m.dim);
    for (size_t i = 0; i < e; ++i)
      if (alpha[i]) x = mat_add(x, scalar_mul(ff_scalar(m.ring, alpha[i]), ends[i]));
    if (x == id) continue;
    if (!(mat_mul(x, x) == x)) continue;
    Subspace im = row_space(x);
    Subspace ker = null_space(transpose(x));
    if (im.dim() == 0 || ker.dim() == 0) continue;
    return {im, ker};
  }
  return {};
}

}  // namespace

std::vector<Summand> indecomposable_summands(const Representation& m, uint64_t seed) {
  tables(m.ring);
  std::mt19937_64 rng(seed);
  std::vector<Summand> out;
  std::deque<std::pair<Subspace, Representation>> work;
  work.push_back({full_subspace(m.ring, m.dim), m});
  while (!work.empty()) {
    auto [space, rep] = std::move(work.front());
    work.pop_front();
    auto ends = end_basis(rep);
    std::vector<Subspace> pieces;
    if (ends.size() > 1) {
      pieces = try_eigen_split(rep, ends, rng);
      if (pieces.empty()) pieces = try_idempotent_split(rep, ends);
    }
    if (pieces.empty()) {
      out.push_back({std::move(space), std::move(rep)});
      continue;
    }
    for (const auto& p : pieces)
      work.push_back({row_space(mat_mul(p.basis, space.basis)), sub_representation(rep, p)});
  }
  std::sort(out.begin(), out.end(),
            [](const Summand& a, const Summand& b) { return subspace_less(a.space, b.space); });
  return out;
}

namespace {

std::vector<uint8_t> node_key(const Subspace& s) {
  std::vector<uint8_t> k;
  const auto& b = s.basis.ff();
  k.reserve(b.size() + 1);
  k.push_back(uint8_t(s.dim()));
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

struct InvariantSets {
  std::vector<Subspace> nodes;
  std::vector<char> cyclic;  // spin of a single vector
};

// Every subspace invariant under the generators: spin of each line, closed
// under sums. Exhaustive; guarded by q^dim <= 2^24.
InvariantSets invariant_subspaces(const Ring& r, size_t n, const std::vector<Matrix>& gens) {
  const FFTables& t = tables(r);
  if (!pow_within(t.q, n, size_t(1) << 24))
    throw std::runtime_error("submodule enumeration: size guard exceeded and fallback disabled");
  std::map<std::vector<uint8_t>, size_t> index;
  std::vector<Subspace> nodes;
  std::vector<char> cyclic;
  auto add = [&](const Subspace& s, bool cyc) {
    auto key = node_key(s);
    auto it = index.find(key);
    if (it != index.end()) {
      if (cyc) cyclic[it->second] = 1;
      return;
    }
    index.emplace(std::move(key), nodes.size());
    nodes.push_back(s);
    cyclic.push_back(cyc ? 1 : 0);
  };
  add(zero_subspace(r, n), false);
  add(full_subspace(r, n), false);
  Matrix id = Matrix::identity(r, n);
  for_each_line(t, id, [&](const std::vector<uint8_t>& v) {
    add(spin_vector(r, v, gens), true);
    return true;
  });
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].dim() == 0 || nodes[j].dim() == 0) continue;
      add(subspace_sum(nodes[i], nodes[j]), false);
    }
  std::vector<size_t> order(nodes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return subspace_less(nodes[a], nodes[b]); });
  InvariantSets out;
  for (size_t i : order) {
    out.nodes.push_back(std::move(nodes[i]));
    out.cyclic.push_back(cyclic[i]);
  }
  return out;
}

}  // namespace

SubmoduleLattice submodule_lattice(const Representation& m) {
  auto sets = invariant_subspaces(m.ring, m.dim, m.gens);
  SubmoduleLattice lat;
  lat.nodes = std::move(sets.nodes);
  size_t k = lat.nodes.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (lat.nodes[i].dim() >= lat.nodes[j].dim()) continue;
      if (!subspace_leq(lat.nodes[i], lat.nodes[j])) continue;
      bool covering = true;
      for (size_t l = 0; l < k && covering; ++l) {
        if (l == i || l == j) continue;
        if (lat.nodes[l].dim() <= lat.nodes[i].dim() || lat.nodes[l].dim() >= lat.nodes[j].dim())
          continue;
        if (subspace_leq(lat.nodes[i], lat.nodes[l]) && subspace_leq(lat.nodes[l], lat.nodes[j]))
          covering = false;
      }
      if (covering) lat.edges.push_back({i, j});
    }
  lat.indecomposable.assign(k, false);
  lat.projective.assign(k, false);
  for (size_t i = 0; i < k; ++i) {
    if (lat.nodes[i].dim() == 0) continue;
    Representation sub = sub_representation(m, lat.nodes[i]);
    lat.indecomposable[i] = indecomposable_summands(sub).size() == 1;
    if (m.group) lat.projective[i] = is_projective(sub, *m.group);
  }
  return lat;
}

size_t complementary_indecomposable_pairs(const SubmoduleLattice& lat) {
  if (lat.nodes.empty()) return 0;
  size_t n = lat.nodes.front().ambient;
  size_t count = 0;
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    for (size_t j = i + 1; j < lat.nodes.size(); ++j) {
      if (!lat.indecomposable[i] || !lat.indecomposable[j]) continue;
      if (lat.nodes[i].dim() + lat.nodes[j].dim() != n) continue;
      if (subspace_intersect(lat.nodes[i], lat.nodes[j]).dim() != 0) continue;
      ++count;
    }
  return count;
}

LoewySeries loewy_series(const Representation& m, const RepCatalog& catalog, uint64_t seed) {
  if (!m.group) throw std::invalid_argument("loewy_series: representation has no group attached");
  const FiniteGroup& g = *m.group;
  const Ring& r = m.ring;
  tables(r);
  size_t n = m.dim;
  if (n == 0) throw std::invalid_argument("loewy_series: empty module");

  std::vector<const LabeledRep*> irr;
  for (const auto& e : catalog)
    if (e.rep.group.get() == m.group.get() && e.rep.ring == r) irr.push_back(&e);
  if (irr.empty()) throw std::invalid_argument("loewy_series: catalog has no irreducibles for this group");

  // Jacobson radical of the group algebra: kernel of the map onto the direct
  // sum of the endomorphism rings of the irreducibles.
  size_t cols = 0;
  for (const auto* e : irr) cols += e->rep.dim * e->rep.dim;
  Matrix phi(r, g.order(), cols);
  {
    size_t off = 0;
    for (const auto* e : irr) {
      auto imgs = element_images(e->rep, g);
      size_t d = e->rep.dim;
      auto& pd = phi.ff();
      for (size_t h = 0; h < g.order(); ++h) {
        const auto& md = imgs[h].ff();
        for (size_t idx = 0; idx < d * d; ++idx) pd[h * cols + off + idx] = md[idx];
      }
      off += d * d;
    }
  }
  if (rank(phi) != cols)
    throw std::runtime_error("loewy_series: catalog entries are not distinct absolutely irreducible modules");
  Subspace jac = null_space(transpose(phi));

  auto imgs_m = element_images(m, g);
  std::vector<Matrix> jacts;
  for (size_t i = 0; i < jac.dim(); ++i) {
    Matrix a(r, n, n);
    for (size_t h = 0; h < g.order(); ++h) {
      Scalar c = jac.basis.at(i, h);
      if (!is_zero(c)) a = mat_add(a, scalar_mul(c, imgs_m[h]));
    }
    jacts.push_back(std::move(a));
  }

  // Ascending socle chain: V_{i+1} = {v : v a lies in V_i for all a in J}.
  std::vector<Subspace> chain{zero_subspace(r, n)};
  while (chain.back().dim() < n) {
    const Subspace& w = chain.back();
    Matrix tw = reduce_rows_mod(Matrix::identity(r, n), w);
    Matrix k(r, n, jacts.size() * n);
    auto& kd = k.ff();
    for (size_t j = 0; j < jacts.size(); ++j) {
      Matrix blk = mat_mul(jacts[j], tw);
      const auto& bd = blk.ff();
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) kd[a * (jacts.size() * n) + j * n + b] = bd[a * n + b];
    }
    Subspace next = null_space(transpose(k));
    if (next.dim() <= chain.back().dim())
      throw std::runtime_error("loewy_series: socle series stalls (incomplete irreducible list)");
    chain.push_back(std::move(next));
  }

  // Dual check: the radical series must have the same length.
  {
    size_t rad_len = 0;
    Subspace rad = full_subspace(r, n);
    while (rad.dim() > 0) {
      ++rad_len;
      if (jacts.empty()) break;
      Matrix stackm(r, rad.dim() * jacts.size(), n);
      auto& sd = stackm.ff();
      for (size_t j = 0; j < jacts.size(); ++j) {
        Matrix blk = mat_mul(rad.basis, jacts[j]);
        const auto& bd = blk.ff();
        std::copy(bd.begin(), bd.end(), sd.begin() + j * rad.dim() * n);
      }
      Subspace next = row_space(stackm);
      if (next.dim() >= rad.dim())
        throw std::runtime_error("loewy_series: radical series stalls (incomplete irreducible list)");
      rad = std::move(next);
    }
    if (rad_len != chain.size() - 1)
      throw std::logic_error("loewy_series: radical and socle series lengths disagree");
  }

  LoewySeries out;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    Representation sub = sub_representation(m, chain[i + 1]);
    Representation layer = sub;
    if (chain[i].dim() > 0) {
      Subspace inner = row_space(coords_in_rows(chain[i].basis, chain[i + 1].basis));
      layer = quotient_representation(sub, inner);
    }
    ChopResult cr = chop(layer, catalog, seed);
    std::vector<std::string> labels;
    for (size_t j = 0; j < cr.labels.size(); ++j)
      for (size_t c = 0; c < cr.multiplicities[j]; ++c) labels.push_back(cr.labels[j]);
    out.layers.push_back(std::move(labels));
  }
  std::ostringstream os;
  for (size_t i = 0; i < out.layers.size(); ++i) {
    if (i) os << ".";
    bool wrap = out.layers.size() > 1 && out.layers[i].size() > 1;
    if (wrap) os << "(";
    for (size_t j = 0; j < out.layers[i].size(); ++j) {
      if (j) os << " + ";
      os << out.layers[i][j];
    }
    if (wrap) os << ")";
  }
  out.rendering = os.str();
  return out;
}

namespace {

bool is_power_of(size_t k, unsigned p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

std::vector<size_t> subgroup_closure(const FiniteGroup& g, const std::vector<size_t>& base,
                                     size_t extra) {
  std::vector<char> in(g.order(), 0);
  std::deque<size_t> queue;
  std::vector<size_t> members;
  auto push = [&](size_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (size_t x : base) push(x);
  push(extra);
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < members.size(); ++i) {
      size_t y = members[i];
      push(g.mul[x][y]);
      push(g.mul[y][x]);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<size_t> sylow_subgroup(const FiniteGroup& g, unsigned p) {
  if (p < 2) throw std::invalid_argument("sylow_subgroup: invalid prime");
  size_t n = g.order();
  size_t target = 1, rem = n;
  while (rem % p == 0) {
    rem /= p;
    target *= p;
  }
  std::vector<size_t> members{0};
  if (target == 1) return members;
  std::vector<char> in(n, 0);
  in[0] = 1;
  while (members.size() < target) {
    bool grew = false;
    for (size_t x = 1; x < n && !grew; ++x) {
      if (in[x] || !is_power_of(g.element_orders[x], p)) continue;
      auto closed = subgroup_closure(g, members, x);
      if (!is_power_of(closed.size(), p)) continue;
      members = std::move(closed);
      std::fill(in.begin(), in.end(), 0);
      for (size_t y : members) in[y] = 1;
      grew = true;
    }
    if (!grew) throw std::runtime_error("sylow_subgroup: closure search failed");
  }
  return members;
}

bool is_projective(const Representation& m, const FiniteGroup& g) {
  unsigned p = m.ring.char_p();
  if (p == 0) throw std::invalid_argument("is_projective: finite characteristic required");
  if (g.order() % p != 0) return true;
  auto syl = sylow_subgroup(g, p);
  if (m.dim % syl.size() != 0) return false;
  auto imgs = element_images(m, g);
  Matrix z(m.ring, m.dim, m.dim);
  for (size_t idx : syl) z = mat_add(z, imgs[idx]);
  // Higman's criterion: the restriction is free exactly when the subgroup-sum
  // element acts with rank dim/|H| (one per free summand).
  return rank(z) * syl.size() == m.dim;
}

std::vector<Subspace> two_sided_invariant_subspaces(const std::vector<Matrix>& left_gens,
                                                    const std::vector<Matrix>& right_gens) {
  if (left_gens.empty() || right_gens.empty())
    throw std::invalid_argument("two_sided_invariant_subspaces: empty generator list");
  const Ring& r = left_gens.front().ring();
  size_t n = left_gens.front().rows();
  std::vector<Matrix> gens = left_gens;
  gens.insert(gens.end(), right_gens.begin(), right_gens.end());
  for (const auto& g : gens)
    if (g.ring() != r || g.rows() != n || g.cols() != n)
      throw std::invalid_argument("two_sided_invariant_subspaces: generator shape mismatch");
  return invariant_subspaces(r, n, gens).nodes;
}

IdealCensus ideal_census(const FiniteGroup& g, const Ring& field) {
  tables(field);
  size_t n = g.order();
  std::vector<Matrix> gens;
  for (const auto& gen : g.gens) {
    size_t gi = element_index(g, gen);
    Matrix left(field, n, n), right(field, n, n);
    for (size_t x = 0; x < n; ++x) {
      left.set_int(x, g.mul[gi][x], 1);
      right.set_int(x, g.mul[x][gi], 1);
    }
    gens.push_back(std::move(left));
    gens.push_back(std::move(right));
  }
  auto sets = invariant_subspaces(field, n, gens);
  IdealCensus out;
  for (size_t i = 0; i < sets.nodes.size(); ++i) {
    if (sets.nodes[i].dim() == 0 || sets.nodes[i].dim() == n) continue;
    out.ideals.push_back(sets.nodes[i]);
    out.principal.push_back(sets.cyclic[i] != 0);
  }
  return out;
}

namespace {

std::vector<uint8_t> convolve(const FFTables& t, const std::vector<std::vector<size_t>>& mul,
                              const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
  size_t n = x.size();
  std::vector<uint8_t> out(n, 0);
  for (size_t h = 0; h < n; ++h) {
    if (!x[h]) continue;
    for (size_t k = 0; k < n; ++k) {
      if (!y[k]) continue;
      size_t ix = mul[h][k];
      out[ix] = ff_add(t, out[ix], ff_mul(t, x[h], y[k]));
    }
  }
  return out;
}

}  // namespace

BlockDecomposition block_decomposition(const FiniteGroup& g, unsigned p,
                                       const RepCatalog& irreducibles) {
  Ring r = gfp(p);
  const FFTables& t = *r.ff;
  size_t n = g.order();
  size_t nc = g.classes.size();
  if (!pow_within(p, nc, size_t(1) << 20))
    throw std::runtime_error("block_decomposition: central idempotent search guard exceeded");

  // Enumerate central idempotents over the class-sum basis.
  std::vector<std::vector<uint8_t>> idem_alphas;
  std::vector<std::vector<uint8_t>> idem_vecs;
  std::vector<uint8_t> alpha(nc, 0);
  for (;;) {
    size_t bumped = nc;
    for (size_t i = nc; i-- > 0;) {
      if (uint8_t(alpha[i] + 1) < p) {
        alpha[i] = uint8_t(alpha[i] + 1);
        bumped = i;
        break;
      }
      alpha[i] = 0;
    }
    if (bumped == nc) break;
    std::vector<uint8_t> x(n, 0);
    for (size_t c = 0; c < nc; ++c)
      if (alpha[c])
        for (size_t idx : g.classes[c]) x[idx] = alpha[c];
    if (convolve(t, g.mul, x, x) == x) {
      idem_alphas.push_back(alpha);
      idem_vecs.push_back(std::move(x));
    }
  }

  // Primitive ones: no smaller nonzero idempotent sits below them.
  std::vector<size_t> atoms;
  for (size_t i = 0; i < idem_vecs.size(); ++i) {
    bool atom = true;
    for (size_t j = 0; j < idem_vecs.size() && atom; ++j) {
      if (j == i) continue;
      if (convolve(t, g.mul, idem_vecs[j], idem_vecs[i]) == idem_vecs[j]) atom = false;
    }
    if (atom) atoms.push_back(i);
  }
  {
    std::vector<uint8_t> sum(n, 0);
    for (size_t i : atoms)
      for (size_t h = 0; h < n; ++h) sum[h] = ff_add(t, sum[h], idem_vecs[i][h]);
    std::vector<uint8_t> one(n, 0);
    one[0] = 1;
    if (sum != one) throw std::logic_error("block_decomposition: primitive idempotents do not sum to 1");
  }

  struct Block {
    std::vector<uint8_t> alpha;
    std::vector<std::pair<std::pair<size_t, std::string>, size_t>> members;  // ((dim,label), idx)
    size_t dim = 0;
  };
  std::vector<Block> blocks;
  for (size_t i : atoms) {
    Block b;
    b.alpha = idem_alphas[i];
    Matrix rm(r, n, n);
    for (size_t h = 0; h < n; ++h)
      for (size_t k = 0; k < n; ++k) {
        if (!idem_vecs[i][k]) continue;
        size_t col = g.mul[h][k];
        rm.set(h, col, add(rm.at(h, col), ff_scalar(r, idem_vecs[i][k])));
      }
    b.dim = rank(rm);
    blocks.push_back(std::move(b));
  }

  for (size_t ei = 0; ei < irreducibles.size(); ++ei) {
    const auto& entry = irreducibles[ei];
    if (entry.rep.ring != r)
      throw std::invalid_argument("block_decomposition: catalog entry over a different field");
    auto imgs = element_images(entry.rep, g);
    size_t home = blocks.size();
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      Matrix val(r, entry.rep.dim, entry.rep.dim);
      const auto& vec = idem_vecs[atoms[bi]];
      for (size_t h = 0; h < n; ++h)
        if (vec[h]) val = mat_add(val, scalar_mul(ff_scalar(r, vec[h]), imgs[h]));
      if (!is_zero_matrix(val)) {
        if (home != blocks.size())
          throw std::logic_error("block_decomposition: irreducible meets two blocks");
        home = bi;
      }
    }
    if (home == blocks.size())
      throw std::logic_error("block_decomposition: irreducible meets no block");
    blocks[home].members.push_back({{entry.rep.dim, entry.label}, ei});
  }

  for (auto& b : blocks) std::sort(b.members.begin(), b.members.end());
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    bool ae = a.members.empty(), be = b.members.empty();
    if (ae != be) return be;
    if (!ae && a.members.front().first != b.members.front().first)
      return a.members.front().first < b.members.front().first;
    return a.alpha < b.alpha;
  });

  BlockDecomposition out;
  for (auto& b : blocks) {
    out.idempotents.push_back(std::move(b.alpha));
    std::vector<std::string> names;
    for (auto& mme : b.members) names.push_back(mme.first.second);
    out.members.push_back(std::move(names));
    out.summand_dims.push_back(b.dim);
  }
  return out;
}

}  // namespace modrep
