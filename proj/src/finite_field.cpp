#include "schurlat/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "schurlat/error.hpp"

namespace schurlat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

const FiniteField& FiniteField::get(std::uint64_t q) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<FiniteField>> interned;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = interned.find(q);
  if (it != interned.end()) return *it->second;
  auto [p, k] = prime_power(q);
  if (k == 0) {
    fail(ErrorCode::kInvalidInput, "field order " + std::to_string(q) + " is not a prime power");
  }
  if (k == 1 && p >= (1ULL << 31)) {
    fail(ErrorCode::kInvalidInput, "prime " + std::to_string(p) + " too large");
  }
  if (k > 1 && q > (1ULL << 16)) {
    fail(ErrorCode::kInvalidInput, "prime power " + std::to_string(q) + " too large (cap 2^16)");
  }
  auto field = std::unique_ptr<FiniteField>(new FiniteField(static_cast<std::uint32_t>(p), k));
  const FiniteField& ref = *field;
  interned.emplace(q, std::move(field));
  return ref;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (k_ == 1) {
    if (p_ == 2) {
      generator_ = 1;
      return;
    }
    auto factors = prime_factors(p_ - 1);
    for (std::uint64_t g = 2; g < p_; ++g) {
      bool primitive = true;
      for (auto f : factors) {
        if (powmod(g, (p_ - 1) / f, p_) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = static_cast<Elem>(g);
        return;
      }
    }
    return;
  }
  build_tables();
}

void FiniteField::build_tables() {
  // Search monic moduli x^k + c_{k-1}x^{k-1} + ... + c_0 (encoded as the
  // lower digits) until x has multiplicative order q - 1.
  for (std::uint32_t code = 1; code < q_; ++code) {
    modulus_.assign(k_ + 1, 0);
    std::uint32_t c = code;
    for (unsigned i = 0; i < k_; ++i) {
      modulus_[i] = c % p_;
      c /= p_;
    }
    modulus_[k_] = 1;
    if (modulus_[0] == 0) continue;

    exp_.assign(q_ - 1, 0);
    std::vector<std::uint32_t> digits(k_, 0);
    digits[0] = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      Elem enc = 0;
      for (unsigned j = k_; j-- > 0;) enc = enc * p_ + digits[j];
      if (i > 0 && enc == 1) {
        ok = false;
        break;
      }
      exp_[i] = enc;
      // multiply by x modulo the modulus
      std::uint32_t top = digits[k_ - 1];
      for (unsigned j = k_ - 1; j > 0; --j) digits[j] = digits[j - 1];
      digits[0] = 0;
      for (unsigned j = 0; j < k_; ++j) {
        digits[j] = static_cast<std::uint32_t>((digits[j] + static_cast<std::uint64_t>(p_ - modulus_[j]) * top) % p_);
      }
    }
    if (!ok) continue;
    Elem back = 0;
    for (unsigned j = k_; j-- > 0;) back = back * p_ + digits[j];
    if (back != 1) continue;
    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
    generator_ = exp_.size() > 1 ? exp_[1] : 1;
    return;
  }
  fail(ErrorCode::kInvalidInput, "no primitive modulus found");
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  while (a) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::kSingular, "inverse of zero in F_" + std::to_string(q_));
  if (k_ == 1) return static_cast<Elem>(powmod(a, p_ - 2, p_));
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::to_string(Elem a) const { return std::to_string(a); }

}  // namespace schurlat
