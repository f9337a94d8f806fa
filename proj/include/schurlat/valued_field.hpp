#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schurlat/finite_field.hpp"

namespace schurlat {

/// Normalized valuation; kInfiniteVal stands for val(0) = +inf.
using Val = int;
inline constexpr Val kInfiniteVal = std::numeric_limits<int>::max();

using Rng = std::mt19937_64;

enum class Backend { kPadic, kLaurent, kUnramified };

/// Runtime description of a discretely valued field: Q with the p-adic
/// valuation, F_q(t) with the t-adic valuation, or the unramified extension
/// Q(a) of degree f in which p stays prime (residue field F_{p^f}).
struct FieldSpec {
  Backend backend = Backend::kPadic;
  std::uint64_t p = 2;  // prime for kPadic and kUnramified
  std::uint64_t q = 2;  // prime power for kLaurent
  unsigned degree = 1;  // f for kUnramified

  static FieldSpec padic(std::uint64_t p) { return {Backend::kPadic, p, 0, 1}; }
  static FieldSpec laurent(std::uint64_t q) { return {Backend::kLaurent, 0, q, 1}; }
  static FieldSpec unramified(std::uint64_t p, unsigned f) { return {Backend::kUnramified, p, 0, f}; }

  std::uint64_t residue_characteristic() const;
  std::uint64_t field_characteristic() const;  // 0 for Q
  std::uint64_t residue_field_size() const;
  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Mixed characteristic: Q with the p-adic valuation.

class PadicField {
 public:
  using Elem = mpq_class;

  explicit PadicField(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  const FiniteField& residue_field() const { return *residue_; }
  FieldSpec spec() const { return FieldSpec::padic(p_); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_integer(const mpz_class& v) const { return Elem(v); }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }

  Elem uniformizer() const { return Elem(static_cast<unsigned long>(p_)); }
  /// ϖ^e for any integer e.
  Elem pow_uniformizer(int e) const;

  Val val(const Elem& x) const;
  /// Image in F_p. Throws NegativeValuation when val(x) < 0.
  FiniteField::Elem reduce(const Elem& x) const;
  /// Canonical lift of a residue: its digit in {0..p-1}.
  Elem lift(FiniteField::Elem r) const { return Elem(static_cast<unsigned long>(r)); }
  /// Canonical representative of x modulo ϖ^v R: the p-adic expansion of x
  /// truncated below degree v.
  Elem truncate(const Elem& x, Val v) const;

  /// Units whose generated closed subgroup is all of Z_p^x: {g, -1} with g
  /// a primitive root mod p^2 (p odd), {-1, 3} for p = 2.
  std::vector<Elem> unit_sample_set(int level) const;

  /// Uniform element of {0, ..., p^digits - 1}.
  Elem random_digits(Rng& rng, int digits) const;
  Elem random_unit(Rng& rng, int digits) const;

  std::string to_string(const Elem& x) const;
  Elem parse(std::string_view text) const;

 private:
  std::uint64_t p_;
  mpz_class p_z_;
  const FiniteField* residue_;
};

// ---------------------------------------------------------------------------
// Equal characteristic: F_q(t) with the t-adic valuation.

namespace fqpoly {
using Poly = std::vector<std::uint32_t>;  // low to high, no trailing zeros

void trim(Poly& a);
Poly add(const FiniteField& f, const Poly& a, const Poly& b);
Poly sub(const FiniteField& f, const Poly& a, const Poly& b);
Poly mul(const FiniteField& f, const Poly& a, const Poly& b);
Poly scale(const FiniteField& f, const Poly& a, FiniteField::Elem c);
/// (quotient, remainder); b must be nonzero.
std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& a, const Poly& b);
Poly gcd(const FiniteField& f, Poly a, Poly b);
/// Index of the lowest nonzero coefficient (a nonzero).
int order_at_zero(const Poly& a);
std::string to_string(const FiniteField& f, const Poly& a);
}  // namespace fqpoly

/// Element of F_q(t) as a reduced fraction with monic denominator. A
/// default-constructed value is zero and not yet bound to a field; it adopts
/// the field of the other operand in arithmetic.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const FiniteField* f, fqpoly::Poly num, fqpoly::Poly den);
  static RatFunc constant(const FiniteField* f, FiniteField::Elem c);
  static RatFunc polynomial(const FiniteField* f, fqpoly::Poly num);

  const FiniteField* field() const { return f_; }
  const fqpoly::Poly& num() const { return num_; }
  const fqpoly::Poly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  void normalize();

  const FiniteField* f_ = nullptr;
  fqpoly::Poly num_;
  fqpoly::Poly den_{1};
};

class LaurentField {
 public:
  using Elem = RatFunc;

  explicit LaurentField(std::uint64_t q);

  std::uint64_t order() const { return fq_->order(); }
  const FiniteField& residue_field() const { return *fq_; }
  FieldSpec spec() const { return FieldSpec::laurent(fq_->order()); }

  Elem zero() const { return RatFunc::constant(fq_, 0); }
  Elem one() const { return RatFunc::constant(fq_, 1); }
  Elem from_int(long long v) const { return RatFunc::constant(fq_, fq_->from_int(v)); }
  Elem from_integer(const mpz_class& v) const;
  bool is_zero(const Elem& x) const { return x.is_zero(); }

  Elem uniformizer() const { return RatFunc::polynomial(fq_, {0, 1}); }
  Elem pow_uniformizer(int e) const;

  Val val(const Elem& x) const;
  FiniteField::Elem reduce(const Elem& x) const;
  Elem lift(FiniteField::Elem r) const { return RatFunc::constant(fq_, r); }
  /// Laurent expansion of x truncated below degree v.
  Elem truncate(const Elem& x, Val v) const;

  /// {c} ∪ {1 + c t^j : 1 <= j <= level}, c a generator of F_q^x.
  std::vector<Elem> unit_sample_set(int level) const;

  /// Polynomial of degree < digits with uniform coefficients.
  Elem random_digits(Rng& rng, int digits) const;
  Elem random_unit(Rng& rng, int digits) const;

  std::string to_string(const Elem& x) const;
  Elem parse(std::string_view text) const;

 private:
  const FiniteField* fq_;
};

// ---------------------------------------------------------------------------
// Unramified extension of degree f: Q[a]/(m(a)) with m the monic integer
// lift (digits 0..p-1) of the primitive modulus of F_{p^f}. Because m is
// irreducible mod p, 1, a, .., a^(f-1) is an integral basis and the
// valuation of an element is the minimum p-adic valuation of its
// coordinates.

/// Element of Q(a) as its coordinate vector (low to high, trailing zeros
/// trimmed). Default-constructed values are zero and unbound, as for
/// RatFunc.
class UnramElem {
 public:
  UnramElem() = default;
  UnramElem(const FiniteField* f, std::vector<mpq_class> coords);

  const FiniteField* field() const { return f_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend UnramElem operator+(const UnramElem& a, const UnramElem& b);
  friend UnramElem operator-(const UnramElem& a, const UnramElem& b);
  friend UnramElem operator*(const UnramElem& a, const UnramElem& b);
  friend UnramElem operator/(const UnramElem& a, const UnramElem& b);
  friend UnramElem operator-(const UnramElem& a);
  UnramElem& operator+=(const UnramElem& b) { return *this = *this + b; }
  UnramElem& operator-=(const UnramElem& b) { return *this = *this - b; }
  UnramElem& operator*=(const UnramElem& b) { return *this = *this * b; }
  UnramElem& operator/=(const UnramElem& b) { return *this = *this / b; }
  friend bool operator==(const UnramElem& a, const UnramElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UnramElem& a, const UnramElem& b) { return !(a == b); }

  UnramElem inverse() const;

 private:
  void trim();

  const FiniteField* f_ = nullptr;
  std::vector<mpq_class> c_;
};

class UnramifiedField {
 public:
  using Elem = UnramElem;

  /// Throws InvalidInput unless p is prime, f >= 2 and p^f <= 2^16.
  UnramifiedField(std::uint64_t p, unsigned f);

  std::uint64_t prime() const { return base_.prime(); }
  unsigned degree() const { return fq_->degree(); }
  const FiniteField& residue_field() const { return *fq_; }
  FieldSpec spec() const { return FieldSpec::unramified(prime(), degree()); }
  /// Monic integer minimal polynomial of the generator a, low to high.
  std::vector<long> minimal_polynomial() const;

  Elem zero() const { return Elem(fq_, {}); }
  Elem one() const { return from_int(1); }
  Elem from_int(long long v) const { return Elem(fq_, {mpq_class(static_cast<long>(v))}); }
  Elem from_integer(const mpz_class& v) const { return Elem(fq_, {mpq_class(v)}); }
  Elem from_rational(const mpq_class& v) const { return Elem(fq_, {v}); }
  /// The generator a.
  Elem generator() const { return Elem(fq_, {mpq_class(0), mpq_class(1)}); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }

  Elem uniformizer() const { return from_integer(mpz_class(static_cast<unsigned long>(prime()))); }
  Elem pow_uniformizer(int e) const { return from_rational(base_.pow_uniformizer(e)); }

  Val val(const Elem& x) const;
  FiniteField::Elem reduce(const Elem& x) const;
  /// Canonical lift: coordinates are the base-p digits of the residue code.
  Elem lift(FiniteField::Elem r) const;
  /// Coordinatewise p-adic truncation below degree v.
  Elem truncate(const Elem& x, Val v) const;

  /// {lift(g), -1} ∪ {1 + p·a^i, 1 + p^2·a^i : i < f}, g a generator of
  /// F_{p^f}^x; together they topologically generate R^x.
  std::vector<Elem> unit_sample_set(int level) const;

  Elem random_digits(Rng& rng, int digits) const;
  Elem random_unit(Rng& rng, int digits) const;

  /// Polynomial in a with rational coefficients, e.g. "3/2*a^2-a+1".
  std::string to_string(const Elem& x) const;
  Elem parse(std::string_view text) const;

 private:
  PadicField base_;
  const FiniteField* fq_;
};

/// Smallest primitive root modulo p^2 (p odd prime).
std::uint64_t primitive_root_mod_p_squared(std::uint64_t p);

}  // namespace schurlat
