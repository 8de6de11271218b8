#include "modrep/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace modrep {

ZS2 operator+(const ZS2& x, const ZS2& y) { return {x.a + y.a, x.b + y.b}; }
ZS2 operator-(const ZS2& x, const ZS2& y) { return {x.a - y.a, x.b - y.b}; }
ZS2 operator*(const ZS2& x, const ZS2& y) {
  return {x.a * y.a - 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}
ZS2 operator-(const ZS2& x) { return {-x.a, -x.b}; }
ZS2 conj(const ZS2& x) { return {x.a, -x.b}; }
mpz_class norm(const ZS2& x) { return x.a * x.a + 2 * x.b * x.b; }

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using PolyP = std::vector<uint8_t>;  // dense coefficients mod p, little-endian

PolyP trim(PolyP f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PolyP poly_mul_p(const PolyP& f, const PolyP& g, unsigned p) {
  if (f.empty() || g.empty()) return {};
  PolyP h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = static_cast<uint8_t>((h[i + j] + f[i] * g[j]) % p);
  return trim(h);
}

// Remainder of f by monic g.
PolyP poly_rem_p(PolyP f, const PolyP& g, unsigned p) {
  f = trim(f);
  while (f.size() >= g.size()) {
    uint8_t c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = static_cast<uint8_t>((f[shift + i] + p - c * g[i] % p) % p);
    f = trim(f);
  }
  return f;
}

bool poly_irreducible_p(const PolyP& f, unsigned p) {
  unsigned k = static_cast<unsigned>(f.size()) - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      PolyP g(d + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<uint8_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FFTables> build_tables(unsigned p, unsigned k, const PolyP& min_poly) {
  auto t = std::make_shared<FFTables>();
  t->p = p;
  t->k = k;
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  t->q = q;
  t->min_poly = min_poly;

  auto decode = [&](unsigned e) {
    PolyP f(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<uint8_t>(e % p);
      e /= p;
    }
    return trim(f);
  };
  auto encode = [&](const PolyP& f) {
    unsigned e = 0, w = 1;
    for (unsigned i = 0; i < k; ++i) {
      e += (i < f.size() ? f[i] : 0) * w;
      w *= p;
    }
    return static_cast<uint8_t>(e);
  };

  t->add_t.resize(q * q);
  t->mul_t.resize(q * q);
  t->neg_t.resize(q);
  t->inv_t.assign(q, 0);
  for (unsigned x = 0; x < q; ++x) {
    PolyP fx = decode(x);
    PolyP nx(fx.size());
    for (size_t i = 0; i < fx.size(); ++i) nx[i] = static_cast<uint8_t>((p - fx[i]) % p);
    t->neg_t[x] = encode(trim(nx));
    for (unsigned y = 0; y < q; ++y) {
      PolyP fy = decode(y);
      PolyP s(std::max(fx.size(), fy.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        unsigned v = (i < fx.size() ? fx[i] : 0) + (i < fy.size() ? fy[i] : 0);
        s[i] = static_cast<uint8_t>(v % p);
      }
      t->add_t[x * q + y] = encode(trim(s));
      t->mul_t[x * q + y] = encode(poly_rem_p(poly_mul_p(fx, fy, p), min_poly, p));
    }
  }
  for (unsigned x = 1; x < q; ++x)
    for (unsigned y = 1; y < q; ++y)
      if (t->mul_t[x * q + y] == 1) t->inv_t[x] = static_cast<uint8_t>(y);
  return t;
}

std::shared_ptr<const FFTables> cached_tables(unsigned p, unsigned k, const PolyP& min_poly) {
  static std::mutex m;
  static std::map<std::tuple<unsigned, unsigned, PolyP>, std::shared_ptr<const FFTables>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(p, k, min_poly);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = build_tables(p, k, min_poly);
  cache.emplace(key, t);
  return t;
}

const FFTables& tables(const Ring& r) {
  if (!r.ff) throw std::invalid_argument("ring is not a finite field");
  return *r.ff;
}

}  // namespace

unsigned Ring::q() const { return tables(*this).q; }

unsigned Ring::char_p() const { return ff ? ff->p : 0; }

std::string Ring::name() const {
  switch (kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return "GF(" + std::to_string(ff->q) + ")";
    case RingKind::Int:
      return "Z";
    case RingKind::Rat:
      return "Q";
    case RingKind::ZSqrtMinus2:
      return "Z[sqrt(-2)]";
  }
  return "?";
}

bool Ring::operator==(const Ring& o) const {
  if (kind != o.kind) return false;
  if (!ff) return true;
  return ff->p == o.ff->p && ff->k == o.ff->k && ff->min_poly == o.ff->min_poly;
}

Ring gfp(unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p): p must be prime");
  if (p > 255) throw std::invalid_argument("GF(p): p too large");
  Ring r;
  r.kind = RingKind::GFp;
  r.ff = cached_tables(p, 1, PolyP{0, 1});  // x, i.e. the residue x = 0
  return r;
}

Ring gfpk(unsigned p, unsigned k, const std::vector<unsigned>& min_poly) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p^k): p must be prime");
  if (k < 1 || min_poly.size() != k + 1) throw std::invalid_argument("GF(p^k): need monic degree-k minimal polynomial");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 255) throw std::invalid_argument("GF(p^k): field too large");
  }
  PolyP f(min_poly.size());
  for (size_t i = 0; i < min_poly.size(); ++i) f[i] = static_cast<uint8_t>(min_poly[i] % p);
  if (f.back() != 1) throw std::invalid_argument("GF(p^k): minimal polynomial must be monic");
  if (!poly_irreducible_p(f, p)) throw std::invalid_argument("GF(p^k): minimal polynomial is reducible");
  Ring r;
  r.kind = RingKind::GFpk;
  r.ff = cached_tables(p, k, f);
  return r;
}

Ring gf4() { return gfpk(2, 2, {1, 1, 1}); }
Ring gf9() { return gfpk(3, 2, {1, 0, 1}); }

Ring integers() {
  Ring r;
  r.kind = RingKind::Int;
  return r;
}

Ring rationals() {
  Ring r;
  r.kind = RingKind::Rat;
  return r;
}

Ring zsqrtm2() {
  Ring r;
  r.kind = RingKind::ZSqrtMinus2;
  return r;
}

Scalar ring_zero(const Ring& r) { return from_int(r, 0); }
Scalar ring_one(const Ring& r) { return from_int(r, 1); }

Scalar from_int(const Ring& r, long n) {
  switch (r.kind) {
    case RingKind::GFp:
    case RingKind::GFpk: {
      long p = r.ff->p;
      return {r, static_cast<uint8_t>(((n % p) + p) % p)};
    }
    case RingKind::Int:
      return {r, mpz_class(n)};
    case RingKind::Rat:
      return {r, mpq_class(n)};
    case RingKind::ZSqrtMinus2:
      return {r, ZS2(n)};
  }
  throw std::logic_error("from_int: bad ring");
}

Scalar ff_scalar(const Ring& r, unsigned encoded) {
  if (encoded >= tables(r).q) throw std::invalid_argument("ff_scalar: encoding out of range");
  return {r, static_cast<uint8_t>(encoded)};
}

namespace {

void require_same(const Scalar& x, const Scalar& y) {
  if (x.ring != y.ring) throw std::invalid_argument("scalar ring mismatch");
}

}  // namespace

Scalar add(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  switch (x.ring.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return {x.ring, ff_add(*x.ring.ff, std::get<uint8_t>(x.v), std::get<uint8_t>(y.v))};
    case RingKind::Int:
      return {x.ring, mpz_class(std::get<mpz_class>(x.v) + std::get<mpz_class>(y.v))};
    case RingKind::Rat:
      return {x.ring, mpq_class(std::get<mpq_class>(x.v) + std::get<mpq_class>(y.v))};
    case RingKind::ZSqrtMinus2:
      return {x.ring, std::get<ZS2>(x.v) + std::get<ZS2>(y.v)};
  }
  throw std::logic_error("add: bad ring");
}

Scalar sub(const Scalar& x, const Scalar& y) { return add(x, neg(y)); }

Scalar mul(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  switch (x.ring.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return {x.ring, ff_mul(*x.ring.ff, std::get<uint8_t>(x.v), std::get<uint8_t>(y.v))};
    case RingKind::Int:
      return {x.ring, mpz_class(std::get<mpz_class>(x.v) * std::get<mpz_class>(y.v))};
    case RingKind::Rat:
      return {x.ring, mpq_class(std::get<mpq_class>(x.v) * std::get<mpq_class>(y.v))};
    case RingKind::ZSqrtMinus2:
      return {x.ring, std::get<ZS2>(x.v) * std::get<ZS2>(y.v)};
  }
  throw std::logic_error("mul: bad ring");
}

Scalar neg(const Scalar& x) {
  switch (x.ring.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return {x.ring, ff_neg(*x.ring.ff, std::get<uint8_t>(x.v))};
    case RingKind::Int:
      return {x.ring, mpz_class(-std::get<mpz_class>(x.v))};
    case RingKind::Rat:
      return {x.ring, mpq_class(-std::get<mpq_class>(x.v))};
    case RingKind::ZSqrtMinus2:
      return {x.ring, -std::get<ZS2>(x.v)};
  }
  throw std::logic_error("neg: bad ring");
}

Scalar inv(const Scalar& x) {
  if (!x.ring.is_field()) throw std::invalid_argument("inv: ring is not a field");
  if (is_zero(x)) throw std::invalid_argument("inv: zero is not invertible");
  if (x.ring.kind == RingKind::Rat) return {x.ring, mpq_class(1 / std::get<mpq_class>(x.v))};
  return {x.ring, ff_inv(*x.ring.ff, std::get<uint8_t>(x.v))};
}

bool is_zero(const Scalar& x) {
  switch (x.ring.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return std::get<uint8_t>(x.v) == 0;
    case RingKind::Int:
      return std::get<mpz_class>(x.v) == 0;
    case RingKind::Rat:
      return std::get<mpq_class>(x.v) == 0;
    case RingKind::ZSqrtMinus2:
      return std::get<ZS2>(x.v) == ZS2();
  }
  throw std::logic_error("is_zero: bad ring");
}

bool scalar_eq(const Scalar& x, const Scalar& y) {
  if (x.ring != y.ring) return false;
  return x.v == y.v;
}

Scalar embed(const Scalar& x, const Ring& ext) {
  if (!x.ring.is_finite_field() || !ext.is_finite_field())
    throw std::invalid_argument("embed: finite fields only");
  if (x.ring.char_p() != ext.char_p())
    throw std::invalid_argument("embed: characteristic mismatch");
  uint8_t e = std::get<uint8_t>(x.v);
  if (e >= x.ring.char_p()) throw std::invalid_argument("embed: element not in the prime field");
  return {ext, e};
}

std::string to_text(const Scalar& x) {
  switch (x.ring.kind) {
    case RingKind::GFp:
      return std::to_string(std::get<uint8_t>(x.v));
    case RingKind::GFpk: {
      unsigned e = std::get<uint8_t>(x.v), p = x.ring.ff->p, k = x.ring.ff->k;
      std::string s = "[";
      for (unsigned i = 0; i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(e % p);
        e /= p;
      }
      return s + "]";
    }
    case RingKind::Int:
      return std::get<mpz_class>(x.v).get_str();
    case RingKind::Rat: {
      const auto& q = std::get<mpq_class>(x.v);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case RingKind::ZSqrtMinus2: {
      const auto& z = std::get<ZS2>(x.v);
      return "[" + z.a.get_str() + "," + z.b.get_str() + "]";
    }
  }
  throw std::logic_error("to_text: bad ring");
}

mpq_class parse_decimal(const std::string& s) {
  size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  unsigned frac = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + s);
      seen_dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      seen_digit = true;
      if (seen_dot) ++frac;
    } else {
      throw std::invalid_argument("bad decimal: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal: " + s);
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (unsigned j = 0; j < frac; ++j) den *= 10;
  mpq_class r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  mpq_class num = parse_decimal(s.substr(0, slash));
  mpq_class den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("bad rational: " + s);
  mpq_class r = num / den;
  r.canonicalize();
  return r;
}

std::string decimal_string(const mpq_class& x, unsigned digits) {
  mpz_class scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  mpq_class scaled = abs(x) * scale;
  mpz_class n = scaled.get_num() / scaled.get_den();
  mpq_class rem = scaled - mpq_class(n);
  if (2 * rem >= 1) n += 1;  // half away from zero
  mpz_class whole = n / scale, frac = n % scale;
  std::string s = (x < 0 && n != 0) ? "-" : "";
  s += whole.get_str();
  if (digits) {
    std::string f = frac.get_str();
    s += "." + std::string(digits - f.size(), '0') + f;
  }
  return s;
}

}  // namespace modrep
