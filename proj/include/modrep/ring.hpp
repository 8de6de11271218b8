#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace modrep {

enum class RingKind { GFp, GFpk, Int, Rat, ZSqrtMinus2 };

// Element a + b*sqrt(-2) of Z[sqrt(-2)], with (sqrt(-2))^2 = -2.
struct ZS2 {
  mpz_class a{0}, b{0};

  ZS2() = default;
  ZS2(long a_, long b_ = 0) : a(a_), b(b_) {}
  ZS2(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
  bool operator==(const ZS2&) const = default;
};

ZS2 operator+(const ZS2& x, const ZS2& y);
ZS2 operator-(const ZS2& x, const ZS2& y);
ZS2 operator*(const ZS2& x, const ZS2& y);
ZS2 operator-(const ZS2& x);
ZS2 conj(const ZS2& x);
mpz_class norm(const ZS2& x);  // a^2 + 2b^2

// Lookup tables for one finite field GF(p^k). Elements are encoded as
// e = sum digit_i * p^i where the digits are the coefficients of the
// residue polynomial, so GF(p) elements are just their residues and the
// encoding of a base-field element is the same in every extension.
struct FFTables {
  unsigned p = 0, k = 0, q = 0;
  std::vector<uint8_t> min_poly;      // monic, degree k, size k+1
  std::vector<uint8_t> add_t, mul_t;  // q*q, row-major
  std::vector<uint8_t> neg_t, inv_t;  // size q; inv_t[0] is unused
};

inline uint8_t ff_add(const FFTables& t, uint8_t x, uint8_t y) { return t.add_t[x * t.q + y]; }
inline uint8_t ff_mul(const FFTables& t, uint8_t x, uint8_t y) { return t.mul_t[x * t.q + y]; }
inline uint8_t ff_neg(const FFTables& t, uint8_t x) { return t.neg_t[x]; }
inline uint8_t ff_sub(const FFTables& t, uint8_t x, uint8_t y) { return ff_add(t, x, ff_neg(t, y)); }
inline uint8_t ff_inv(const FFTables& t, uint8_t x) { return t.inv_t[x]; }

class Ring {
 public:
  RingKind kind = RingKind::Int;
  std::shared_ptr<const FFTables> ff;  // set for GFp/GFpk only

  bool is_field() const {
    return kind == RingKind::GFp || kind == RingKind::GFpk || kind == RingKind::Rat;
  }
  bool is_finite_field() const { return ff != nullptr; }
  unsigned q() const;       // field order; finite fields only
  unsigned char_p() const;  // characteristic, 0 for Int/Rat/ZSqrtMinus2
  std::string name() const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }
};

Ring gfp(unsigned p);
Ring gfpk(unsigned p, unsigned k, const std::vector<unsigned>& min_poly);
Ring gf4();  // GF(2)[x]/(x^2+x+1)
Ring gf9();  // GF(3)[x]/(x^2+1)
Ring integers();
Ring rationals();
Ring zsqrtm2();

struct Scalar {
  Ring ring;
  std::variant<uint8_t, mpz_class, mpq_class, ZS2> v;
};

Scalar ring_zero(const Ring& r);
Scalar ring_one(const Ring& r);
Scalar from_int(const Ring& r, long n);
Scalar ff_scalar(const Ring& r, unsigned encoded);

Scalar add(const Scalar& x, const Scalar& y);
Scalar sub(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar inv(const Scalar& x);  // fields only, x nonzero
bool is_zero(const Scalar& x);
bool scalar_eq(const Scalar& x, const Scalar& y);

// Reinterprets a base-field element inside an extension with the same
// characteristic (the encoding of constants is shared, see FFTables).
Scalar embed(const Scalar& x, const Ring& ext);

// Canonical text forms: GF(p) "2"; GF(p^k) "[a,b]" meaning a+b*x;
// Z "n"; Q "p/q" (plain "n" when integral); Z[sqrt(-2)] "[a,b]".
std::string to_text(const Scalar& x);

// Exact decimal parsing ("939.5654133" -> 9395654133/10^7); rejects
// anything that is not a plain signed decimal numeral.
mpq_class parse_decimal(const std::string& s);
// "p/q" or "n", exact.
mpq_class parse_rational(const std::string& s);
// Fixed-point rendering of an exact rational, round half away from zero.
std::string decimal_string(const mpq_class& x, unsigned digits);

}  // namespace modrep
