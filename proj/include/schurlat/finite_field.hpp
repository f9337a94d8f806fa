#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schurlat {

/// The finite field F_q, q = p^k. Elements are encoded as integers in
/// [0, q): for k = 1 the residue itself, for k > 1 the base-p digits of the
/// coefficient vector over a fixed primitive modulus (lowest digit = constant
/// term). Instances are interned and live for the whole process, so raw
/// pointers to them are stable.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Interned field of order q. Throws InvalidInput unless q is a prime
  /// power (q < 2^31 for primes, q <= 2^16 for proper prime powers).
  static const FiniteField& get(std::uint64_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// A generator of the cyclic group F_q^x.
  Elem generator() const { return generator_; }

  /// Coefficients of the primitive modulus (low to high, monic); empty when
  /// k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::string to_string(Elem a) const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField(std::uint32_t p, unsigned k);

  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  Elem generator_ = 1;
  std::vector<std::uint32_t> modulus_;
  // k > 1 only: exp_[i] = g^i, log_[a] = discrete log of a != 0.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

/// (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

}  // namespace schurlat
