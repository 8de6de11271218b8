// Internal element-operation policies and ring dispatch. Each Matrix payload
// type gets an Ops struct; dispatch() switches on the ring kind and hands the
// caller's generic lambda the right policy.
#pragma once

#include <stdexcept>
#include <string>

#include "modrep/matrix.hpp"

namespace modrep::detail {

struct FFOps {
  const FFTables* t;
  using T = uint8_t;
  static constexpr bool field = true;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& x, const T& y) const { return ff_add(*t, x, y); }
  T sub(const T& x, const T& y) const { return ff_sub(*t, x, y); }
  T mul(const T& x, const T& y) const { return ff_mul(*t, x, y); }
  T neg(const T& x) const { return ff_neg(*t, x); }
  T inv(const T& x) const { return ff_inv(*t, x); }
  bool nz(const T& x) const { return x != 0; }
};

struct IntOps {
  using T = mpz_class;
  static constexpr bool field = false;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& x, const T& y) const { return x + y; }
  T sub(const T& x, const T& y) const { return x - y; }
  T mul(const T& x, const T& y) const { return x * y; }
  T neg(const T& x) const { return -x; }
  T inv(const T&) const { throw std::logic_error("no inverses in Z"); }
  bool nz(const T& x) const { return x != 0; }
};

struct RatOps {
  using T = mpq_class;
  static constexpr bool field = true;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& x, const T& y) const { return x + y; }
  T sub(const T& x, const T& y) const { return x - y; }
  T mul(const T& x, const T& y) const { return x * y; }
  T neg(const T& x) const { return -x; }
  T inv(const T& x) const { return 1 / x; }
  bool nz(const T& x) const { return x != 0; }
};

struct ZS2Ops {
  using T = ZS2;
  static constexpr bool field = false;
  T zero() const { return ZS2(); }
  T one() const { return ZS2(1); }
  T add(const T& x, const T& y) const { return x + y; }
  T sub(const T& x, const T& y) const { return x - y; }
  T mul(const T& x, const T& y) const { return x * y; }
  T neg(const T& x) const { return -x; }
  T inv(const T&) const { throw std::logic_error("no inverses in Z[sqrt(-2)]"); }
  bool nz(const T& x) const { return !(x == ZS2()); }
};

template <class F>
decltype(auto) dispatch(const Ring& r, F&& f) {
  switch (r.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return f(FFOps{r.ff.get()});
    case RingKind::Int:
      return f(IntOps{});
    case RingKind::Rat:
      return f(RatOps{});
    case RingKind::ZSqrtMinus2:
      return f(ZS2Ops{});
  }
  throw std::logic_error("bad ring kind");
}

template <class F>
decltype(auto) dispatch_field(const Ring& r, const char* what, F&& f) {
  switch (r.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return f(FFOps{r.ff.get()});
    case RingKind::Rat:
      return f(RatOps{});
    default:
      throw std::invalid_argument(std::string(what) + ": ring is not a field");
  }
}

template <class Ops>
const std::vector<typename Ops::T>& vec(Ops, const Matrix& m) {
  return std::get<std::vector<typename Ops::T>>(m.data());
}
template <class Ops>
std::vector<typename Ops::T>& vec(Ops, Matrix& m) {
  return std::get<std::vector<typename Ops::T>>(m.data());
}

inline void require_same_ring(const Matrix& a, const Matrix& b, const char* what) {
  if (a.ring() != b.ring()) throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

}  // namespace modrep::detail
