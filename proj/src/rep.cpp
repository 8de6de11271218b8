#include "modrep/rep.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "modrep/poly.hpp"

namespace modrep {

const Matrix& Representation::gen(const std::string& name) const {
  for (size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == name) return gens[i];
  throw std::invalid_argument("no generator named '" + name + "'");
}

namespace {

Matrix inverse_any(const Matrix& m) {
  if (m.ring().is_field()) return mat_inverse(m);
  // Finite-order matrices over Z or Z[sqrt(-2)]: inverse is a power.
  size_t ord = matrix_order(m, 256);
  return mat_pow(m, static_cast<unsigned long>(ord - 1));
}

void validate_invertible(const Matrix& m) {
  if (m.ring().is_field()) {
    if (is_zero(mat_det(m))) throw std::invalid_argument("generator is singular");
  } else {
    matrix_order(m, 256);  // throws when no finite order exists
  }
}

}  // namespace

Representation make_rep(std::vector<std::string> names, std::vector<Matrix> gens,
                        std::shared_ptr<const FiniteGroup> group) {
  if (gens.empty()) throw std::invalid_argument("make_rep: no generators");
  if (names.size() != gens.size()) throw std::invalid_argument("make_rep: name count mismatch");
  size_t dim = gens[0].rows();
  for (const auto& g : gens) {
    if (g.ring() != gens[0].ring() || g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("make_rep: generators must be square over one ring");
    validate_invertible(g);
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("make_rep: duplicate generator name");
  Representation rep{gens[0].ring(), dim, std::move(names), std::move(gens), std::move(group)};
  if (rep.group) {
    if (rep.group->gens.size() != rep.gens.size())
      throw std::invalid_argument("make_rep: generator count differs from the group's");
    if (!is_homomorphism(rep, *rep.group))
      throw std::invalid_argument("make_rep: generator images violate the group's relations");
  }
  return rep;
}

std::vector<Matrix> element_images(const Representation& rep, const FiniteGroup& g) {
  if (g.gens.size() != rep.gens.size())
    throw std::invalid_argument("element_images: generator count mismatch");
  std::vector<Matrix> imgs;
  imgs.reserve(g.order());
  imgs.push_back(Matrix::identity(rep.ring, rep.dim));
  for (size_t i = 1; i < g.order(); ++i) {
    auto [head, gi] = g.provenance[i];
    imgs.push_back(mat_mul(imgs[head], rep.gens[gi]));
  }
  return imgs;
}

bool is_homomorphism(const Representation& rep, const FiniteGroup& g) {
  auto imgs = element_images(rep, g);
  for (size_t i = 0; i < g.order(); ++i)
    for (size_t j = 0; j < g.order(); ++j)
      if (!(mat_mul(imgs[i], imgs[j]) == imgs[g.mul[i][j]])) return false;
  return true;
}

namespace {

std::shared_ptr<const FiniteGroup> merged_group(const Representation& a, const Representation& b,
                                                const char* what) {
  if (a.group && b.group && a.group != b.group)
    throw std::invalid_argument(std::string(what) + ": different groups attached");
  return a.group ? a.group : b.group;
}

void require_compatible(const Representation& a, const Representation& b, const char* what) {
  if (a.ring != b.ring) throw std::invalid_argument(std::string(what) + ": ring mismatch");
  if (a.gen_names != b.gen_names)
    throw std::invalid_argument(std::string(what) + ": generator names differ");
}

}  // namespace

Representation tensor(const Representation& a, const Representation& b) {
  require_compatible(a, b, "tensor");
  std::vector<Matrix> gens;
  gens.reserve(a.gens.size());
  for (size_t i = 0; i < a.gens.size(); ++i) gens.push_back(kron(a.gens[i], b.gens[i]));
  return make_rep(a.gen_names, std::move(gens), merged_group(a, b, "tensor"));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b, "direct_sum");
  std::vector<Matrix> gens;
  gens.reserve(a.gens.size());
  for (size_t i = 0; i < a.gens.size(); ++i) gens.push_back(direct_sum_mat(a.gens[i], b.gens[i]));
  return make_rep(a.gen_names, std::move(gens), merged_group(a, b, "direct_sum"));
}

Representation dual(const Representation& a) {
  std::vector<Matrix> gens;
  gens.reserve(a.gens.size());
  for (const auto& g : a.gens) gens.push_back(transpose(inverse_any(g)));
  return make_rep(a.gen_names, std::move(gens), a.group);
}

namespace {

Representation squared(const Representation& a, bool symmetric) {
  if (a.ring.char_p() == 2)
    throw std::invalid_argument("symmetric/exterior square: characteristic 2 not supported");
  size_t n = a.dim;
  std::vector<std::pair<size_t, size_t>> basis;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = symmetric ? i : i + 1; j < n; ++j) basis.push_back({i, j});
  std::vector<size_t> pos(n * n, SIZE_MAX);
  for (size_t b = 0; b < basis.size(); ++b) pos[basis[b].first * n + basis[b].second] = b;
  std::vector<Matrix> gens;
  for (const auto& g : a.gens) {
    Matrix m(a.ring, basis.size(), basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
      auto [i, j] = basis[b];
      for (size_t k = 0; k < n; ++k) {
        Scalar gik = g.at(i, k);
        if (is_zero(gik)) continue;
        for (size_t l = 0; l < n; ++l) {
          Scalar c = mul(gik, g.at(j, l));
          if (is_zero(c)) continue;
          size_t kk = k, ll = l;
          bool flip = k > l;
          if (flip) std::swap(kk, ll);
          if (symmetric) {
            size_t t = pos[kk * n + ll];
            m.set(b, t, add(m.at(b, t), c));
          } else {
            if (k == l) continue;
            size_t t = pos[kk * n + ll];
            m.set(b, t, add(m.at(b, t), flip ? neg(c) : c));
          }
        }
      }
    }
    gens.push_back(std::move(m));
  }
  return make_rep(a.gen_names, std::move(gens), a.group);
}

}  // namespace

Representation sym2(const Representation& a) { return squared(a, true); }
Representation alt2(const Representation& a) { return squared(a, false); }

Representation reduce_mod(const Representation& a, unsigned p) {
  if (a.ring.kind != RingKind::Int)
    throw std::invalid_argument("reduce_mod: integral representation required");
  Ring f = gfp(p);
  std::vector<Matrix> gens;
  gens.reserve(a.gens.size());
  for (const auto& g : a.gens) gens.push_back(reduce_mod(g, f));
  return make_rep(a.gen_names, std::move(gens), a.group);
}

namespace {

// Fixed multiplicative generators whose lift to characteristic zero is
// pinned: GF(9)* = <x+1> -> exp(i*pi/4), GF(4)* = <x> -> exp(2*pi*i/3),
// GF(3)* = <-1> -> -1, GF(2)* trivial.
uint8_t lifting_generator(const Ring& ext) {
  unsigned q = ext.q();
  if (q == 9) return 4;  // x+1
  if (q == 4) return 2;  // x
  if (q == 3) return 2;  // -1
  if (q == 2) return 1;
  throw std::invalid_argument("brauer_character: unsupported splitting field " + ext.name());
}

// Fold a multiset of root-of-unity exponents (mod q-1) into Z[sqrt(-2)].
ZS2 cyclotomic_to_zs2(const Ring& ext, const std::vector<mpz_class>& counts) {
  unsigned ord = ext.q() - 1;
  if (ord == 8) {
    // zeta_8^4 = -1; value = n0 + n1 z + n2 z^2 + n3 z^3 with z^2 = i.
    mpz_class n0 = counts[0] - counts[4], n1 = counts[1] - counts[5];
    mpz_class n2 = counts[2] - counts[6], n3 = counts[3] - counts[7];
    if (n2 != 0 || n1 != n3)
      throw std::runtime_error("brauer_character: value does not lie in Z[sqrt(-2)]");
    return ZS2(n0, n1);  // sqrt(-2) = zeta_8 + zeta_8^3
  }
  if (ord == 3) {
    // zeta_3^2 = -1 - zeta_3.
    mpz_class n0 = counts[0] - counts[2], n1 = counts[1] - counts[2];
    if (n1 != 0) throw std::runtime_error("brauer_character: value does not lie in Z");
    return ZS2(n0, 0);
  }
  if (ord == 2) return ZS2(counts[0] - counts[1], 0);
  return ZS2(counts[0], 0);
}

}  // namespace

BrauerCharacter brauer_character(const Representation& a, const FiniteGroup& g, const Ring& ext) {
  if (!a.ring.is_finite_field())
    throw std::invalid_argument("brauer_character: representation must be over a finite field");
  unsigned p = a.ring.char_p();
  if (ext.char_p() != p) throw std::invalid_argument("brauer_character: characteristic mismatch");
  uint8_t zeta = lifting_generator(ext);
  unsigned ord = ext.q() - 1;
  std::vector<size_t> dlog(ext.q(), 0);
  {
    uint8_t pow = 1;
    for (unsigned t = 0; t < ord; ++t) {
      dlog[pow] = t;
      pow = ff_mul(*ext.ff, pow, zeta);
    }
    if (pow != 1) throw std::logic_error("brauer_character: lifting generator has wrong order");
  }
  auto imgs = element_images(a, g);
  BrauerCharacter bc;
  bc.p = p;
  bc.class_indices = p_regular_classes(g, p);
  for (size_t c : bc.class_indices) {
    size_t rep_idx = g.classes[c][0];
    auto evs = eigenvalues_ff(imgs[rep_idx], ext);
    std::vector<mpz_class> counts(ord, 0);
    for (const auto& ev : evs) {
      uint8_t e = std::get<uint8_t>(ev.v);
      if (e == 0) throw std::runtime_error("brauer_character: singular class representative");
      counts[dlog[e]] += 1;
    }
    bc.values.push_back(cyclotomic_to_zs2(ext, counts));
    bc.class_labels.push_back(std::to_string(g.element_orders[rep_idx]) + "@" + std::to_string(c));
  }
  return bc;
}

namespace {

// Recursive-descent parser for formal Z-combinations of generator words.
//   Expr   := ['-'] Term (('+'|'-') Term)*
//   Term   := int | [int] Factor+
//   Factor := Atom ['^' ['-'] int]
//   Atom   := '1' | generator letter | '(' Expr ')'
struct ExprParser {
  const Representation& rep;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_factor() {
    skip();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }
  long parse_int() {
    skip();
    bool negative = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("expression: expected an integer at position " + std::to_string(pos));
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
    return negative ? -v : v;
  }

  Matrix generator(char c) {
    std::string name(1, c);
    for (size_t i = 0; i < rep.gen_names.size(); ++i)
      if (rep.gen_names[i] == name) return rep.gens[i];
    // j and k are standard abbreviations when i and w are generators.
    if (c == 'j' || c == 'k') {
      const Matrix& mi = rep.gen("i");
      const Matrix& mw = rep.gen("w");
      Matrix winv = inverse_any(mw);
      return c == 'j' ? mat_mul(mat_mul(winv, mi), mw) : mat_mul(mat_mul(mw, mi), winv);
    }
    throw std::invalid_argument(std::string("expression: unknown generator '") + c + "'");
  }

  Matrix atom() {
    skip();
    if (eat('(')) {
      Matrix m = expr();
      if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
      return m;
    }
    if (pos >= s.size()) throw std::invalid_argument("expression: unexpected end");
    char c = s[pos];
    if (c == '1') {
      ++pos;
      return Matrix::identity(rep.ring, rep.dim);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos;
      return generator(c);
    }
    throw std::invalid_argument(std::string("expression: unexpected character '") + c + "'");
  }

  Matrix factor() {
    Matrix m = atom();
    skip();
    if (eat('^')) {
      long e = parse_int();
      if (e < 0) {
        m = inverse_any(m);
        e = -e;
      }
      m = mat_pow(m, static_cast<unsigned long>(e));
    }
    return m;
  }

  Matrix expr() {
    skip();
    bool negate = eat('-');
    Matrix acc = parse_term();
    if (negate) acc = mat_neg(acc);
    for (;;) {
      skip();
      if (eat('+'))
        acc = mat_add(acc, parse_term());
      else if (eat('-'))
        acc = mat_sub(acc, parse_term());
      else
        break;
    }
    return acc;
  }

  Matrix parse_term() {
    skip();
    bool coeff_present = false;
    long coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      // A digit is a coefficient when a factor follows; a lone "1" is the
      // identity atom and any other bare integer means that multiple of it.
      size_t save = pos;
      long v = parse_int();
      bool lone_one = v == 1 && pos - save == 1;
      if (lone_one && pos < s.size() && s[pos] == '^') {
        pos = save;  // let factor() handle "1^n"
      } else if (peek_factor()) {
        coeff = v;
        coeff_present = true;
      } else {
        return scalar_mul(from_int(rep.ring, v), Matrix::identity(rep.ring, rep.dim));
      }
    }
    Matrix acc = factor();
    while (peek_factor()) acc = mat_mul(acc, factor());
    if (coeff_present && coeff != 1) acc = scalar_mul(from_int(rep.ring, coeff), acc);
    return acc;
  }
};

}  // namespace

Matrix class_sum_image(const Representation& rep, const std::string& expr) {
  ExprParser p{rep, expr};
  Matrix m = p.expr();
  p.skip();
  if (p.pos != expr.size())
    throw std::invalid_argument("expression: trailing input at position " + std::to_string(p.pos));
  return m;
}

Representation regular_module(const FiniteGroup& g, const Ring& ring, bool identify_minus_one) {
  size_t n = g.order();
  std::vector<size_t> gen_idx;
  for (const auto& gen : g.gens) gen_idx.push_back(element_index(g, gen));
  if (!identify_minus_one) {
    std::vector<Matrix> gens;
    for (size_t gi : gen_idx) {
      Matrix m(ring, n, n);
      for (size_t h = 0; h < n; ++h) m.set_int(h, g.mul[h][gi], 1);
      gens.push_back(std::move(m));
    }
    return make_rep(g.gen_names, std::move(gens));
  }
  std::vector<size_t> neg_idx(n);
  for (size_t i = 0; i < n; ++i) {
    Matrix neg = mat_neg(g.elements[i]);
    try {
      neg_idx[i] = element_index(g, neg);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("regular_module: -identity is not a group element");
    }
  }
  std::vector<size_t> basis;  // pair representatives: the smaller index
  std::vector<size_t> pos(n, SIZE_MAX);
  std::vector<int> sign(n);
  for (size_t i = 0; i < n; ++i) {
    size_t r = std::min(i, neg_idx[i]);
    if (r == i && pos[i] == SIZE_MAX) {
      pos[i] = basis.size();
      basis.push_back(i);
    }
  }
  for (size_t i = 0; i < n; ++i) {
    size_t r = std::min(i, neg_idx[i]);
    pos[i] = pos[r];
    sign[i] = i == r ? 1 : -1;
  }
  std::vector<Matrix> gens;
  for (size_t gi : gen_idx) {
    Matrix m(ring, basis.size(), basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
      size_t prod = g.mul[basis[b]][gi];
      m.set_int(b, pos[prod], sign[prod]);
    }
    gens.push_back(std::move(m));
  }
  return make_rep(g.gen_names, std::move(gens));
}

}  // namespace modrep
