#include "schurlat/valued_field.hpp"

#include <algorithm>
#include <cctype>

#include "schurlat/error.hpp"

namespace schurlat {

std::uint64_t FieldSpec::residue_characteristic() const {
  if (backend == Backend::kLaurent) return prime_power(q).first;
  return p;
}

std::uint64_t FieldSpec::field_characteristic() const {
  return backend == Backend::kLaurent ? prime_power(q).first : 0;
}

std::uint64_t FieldSpec::residue_field_size() const {
  switch (backend) {
    case Backend::kPadic:
      return p;
    case Backend::kLaurent:
      return q;
    case Backend::kUnramified:
      break;
  }
  std::uint64_t size = 1;
  for (unsigned i = 0; i < degree; ++i) size *= p;
  return size;
}

std::string FieldSpec::describe() const {
  switch (backend) {
    case Backend::kPadic:
      return "Q_" + std::to_string(p);
    case Backend::kLaurent:
      return "F_" + std::to_string(q) + "(t)";
    case Backend::kUnramified:
      break;
  }
  return "Q_" + std::to_string(p) + "^ur(" + std::to_string(degree) + ")";
}

std::uint64_t primitive_root_mod_p_squared(std::uint64_t p) {
  const std::uint64_t m = p * p;
  const std::uint64_t order = p * (p - 1);
  std::vector<std::uint64_t> factors;
  std::uint64_t n = order;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  auto powmod = [m](std::uint64_t a, std::uint64_t e) {
    unsigned __int128 r = 1, b = a % m;
    while (e) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
  };
  for (std::uint64_t g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto f : factors) {
      if (powmod(g, order / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorCode::kInvalidInput, "no primitive root mod p^2");
}

// ---------------------------------------------------------------------------
// PadicField

PadicField::PadicField(std::uint64_t p) : p_(p), p_z_(static_cast<unsigned long>(p)) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "p = " + std::to_string(p) + " is not prime");
  residue_ = &FiniteField::get(p);
}

PadicField::Elem PadicField::pow_uniformizer(int e) const {
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), p_z_.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Elem(power);
  Elem r(mpz_class(1), power);
  r.canonicalize();
  return r;
}

Val PadicField::val(const Elem& x) const {
  if (sgn(x) == 0) return kInfiniteVal;
  mpz_class rest;
  auto vn = mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), p_z_.get_mpz_t());
  auto vd = mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), p_z_.get_mpz_t());
  return static_cast<Val>(vn) - static_cast<Val>(vd);
}

FiniteField::Elem PadicField::reduce(const Elem& x) const {
  Val v = val(x);
  if (v < 0) fail(ErrorCode::kNegativeValuation, "reduce: negative valuation " + std::to_string(v));
  if (v > 0) return 0;
  mpz_class n = x.get_num() % p_z_;
  if (n < 0) n += p_z_;
  mpz_class d = x.get_den() % p_z_;
  const FiniteField& f = *residue_;
  return f.div(static_cast<FiniteField::Elem>(n.get_ui()), static_cast<FiniteField::Elem>(d.get_ui()));
}

PadicField::Elem PadicField::truncate(const Elem& x, Val v) const {
  Val e = val(x);
  if (e == kInfiniteVal || e >= v) return zero();
  Val shift = e < 0 ? -e : 0;
  Elem y = x * pow_uniformizer(shift);
  mpz_class modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p_z_.get_mpz_t(), static_cast<unsigned long>(v + shift));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), y.get_den_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (y.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  Elem out(r);
  if (shift > 0) out *= pow_uniformizer(-shift);
  return out;
}

std::vector<PadicField::Elem> PadicField::unit_sample_set(int /*level*/) const {
  if (p_ == 2) return {Elem(-1), Elem(3)};
  return {Elem(static_cast<unsigned long>(primitive_root_mod_p_squared(p_))), Elem(-1)};
}

PadicField::Elem PadicField::random_digits(Rng& rng, int digits) const {
  std::uniform_int_distribution<std::uint64_t> digit(0, p_ - 1);
  mpz_class out = 0, scale = 1;
  for (int i = 0; i < digits; ++i) {
    out += scale * static_cast<unsigned long>(digit(rng));
    scale *= p_z_;
  }
  return Elem(out);
}

PadicField::Elem PadicField::random_unit(Rng& rng, int digits) const {
  std::uniform_int_distribution<std::uint64_t> lead(1, p_ - 1);
  Elem rest = digits > 1 ? random_digits(rng, digits - 1) : zero();
  Elem out = Elem(static_cast<unsigned long>(lead(rng))) + uniformizer() * rest;
  if (rng() & 1) out = -out;
  return out;
}

std::string PadicField::to_string(const Elem& x) const { return x.get_str(); }

PadicField::Elem PadicField::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Elem out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    fail(ErrorCode::kInvalidInput, "cannot parse rational '" + std::string(text) + "'");
  }
  if (sgn(out.get_den()) == 0) fail(ErrorCode::kInvalidInput, "zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over F_q

namespace fqpoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const FiniteField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

Poly sub(const FiniteField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

Poly mul(const FiniteField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

Poly scale(const FiniteField& f, const Poly& a, FiniteField::Elem c) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& a, const Poly& b) {
  if (b.empty()) fail(ErrorCode::kSingular, "polynomial division by zero");
  Poly r = a;
  if (r.size() < b.size()) return {{}, r};
  Poly quot(r.size() - b.size() + 1, 0);
  FiniteField::Elem lead_inv = f.inv(b.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    FiniteField::Elem c = f.mul(r[k + b.size() - 1], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
    }
  }
  trim(quot);
  trim(r);
  return {quot, r};
}

Poly gcd(const FiniteField& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(f, a, f.inv(a.back()));
  return a;
}

int order_at_zero(const Poly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

std::string to_string(const FiniteField& f, const Poly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coeff = f.to_string(a[k]);
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (a[k] != 1) out += coeff + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace fqpoly

// ---------------------------------------------------------------------------
// RatFunc

namespace {

const FiniteField* pick_field(const RatFunc& a, const RatFunc& b) {
  return a.field() ? a.field() : b.field();
}

bool is_one(const fqpoly::Poly& p) { return p.size() == 1 && p[0] == 1; }

}  // namespace

RatFunc::RatFunc(const FiniteField* f, fqpoly::Poly num, fqpoly::Poly den)
    : f_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc RatFunc::constant(const FiniteField* f, FiniteField::Elem c) {
  RatFunc r;
  r.f_ = f;
  if (c != 0) r.num_ = {c};
  return r;
}

RatFunc RatFunc::polynomial(const FiniteField* f, fqpoly::Poly num) {
  RatFunc r;
  r.f_ = f;
  fqpoly::trim(num);
  r.num_ = std::move(num);
  return r;
}

void RatFunc::normalize() {
  fqpoly::trim(num_);
  fqpoly::trim(den_);
  if (den_.empty()) fail(ErrorCode::kSingular, "rational function with zero denominator");
  if (num_.empty()) {
    den_ = {1};
    return;
  }
  if (!f_) fail(ErrorCode::kInvalidInput, "rational function without a coefficient field");
  const FiniteField& f = *f_;
  if (!is_one(den_)) {
    fqpoly::Poly g = fqpoly::gcd(f, num_, den_);
    if (!is_one(g)) {
      num_ = fqpoly::divmod(f, num_, g).first;
      den_ = fqpoly::divmod(f, den_, g).first;
    }
    FiniteField::Elem lead = den_.back();
    if (lead != 1) {
      FiniteField::Elem li = f.inv(lead);
      num_ = fqpoly::scale(f, num_, li);
      den_ = fqpoly::scale(f, den_, li);
    }
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) {
    RatFunc r = a.is_zero() ? b : a;
    r.f_ = pick_field(a, b);
    return r;
  }
  const FiniteField& f = *pick_field(a, b);
  if (is_one(a.den_) && is_one(b.den_)) return RatFunc::polynomial(&f, fqpoly::add(f, a.num_, b.num_));
  if (a.den_ == b.den_) return RatFunc(&f, fqpoly::add(f, a.num_, b.num_), a.den_);
  return RatFunc(&f, fqpoly::add(f, fqpoly::mul(f, a.num_, b.den_), fqpoly::mul(f, b.num_, a.den_)),
                 fqpoly::mul(f, a.den_, b.den_));
}

RatFunc operator-(const RatFunc& a) {
  if (a.is_zero()) return a;
  RatFunc r = a;
  for (auto& c : r.num_) c = a.f_->neg(c);
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  const FiniteField* fp = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return RatFunc::constant(fp, 0);
  const FiniteField& f = *fp;
  if (is_one(a.den_) && is_one(b.den_)) return RatFunc::polynomial(&f, fqpoly::mul(f, a.num_, b.num_));
  return RatFunc(&f, fqpoly::mul(f, a.num_, b.num_), fqpoly::mul(f, a.den_, b.den_));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(ErrorCode::kSingular, "division by zero in F_q(t)");
  const FiniteField& f = *pick_field(a, b);
  if (a.is_zero()) return RatFunc::constant(&f, 0);
  return RatFunc(&f, fqpoly::mul(f, a.num_, b.den_), fqpoly::mul(f, a.den_, b.num_));
}

// ---------------------------------------------------------------------------
// LaurentField

LaurentField::LaurentField(std::uint64_t q) : fq_(&FiniteField::get(q)) {}

LaurentField::Elem LaurentField::from_integer(const mpz_class& v) const {
  mpz_class r = v % static_cast<unsigned long>(fq_->characteristic());
  return from_int(r.get_si());
}

LaurentField::Elem LaurentField::pow_uniformizer(int e) const {
  fqpoly::Poly mono(static_cast<std::size_t>(e < 0 ? -e : e) + 1, 0);
  mono.back() = 1;
  if (e >= 0) return RatFunc::polynomial(fq_, mono);
  return RatFunc(fq_, {1}, mono);
}

Val LaurentField::val(const Elem& x) const {
  if (x.is_zero()) return kInfiniteVal;
  return fqpoly::order_at_zero(x.num()) - fqpoly::order_at_zero(x.den());
}

FiniteField::Elem LaurentField::reduce(const Elem& x) const {
  Val v = val(x);
  if (v < 0) fail(ErrorCode::kNegativeValuation, "reduce: negative valuation " + std::to_string(v));
  if (v > 0) return 0;
  return fq_->div(x.num()[0], x.den()[0]);
}

LaurentField::Elem LaurentField::truncate(const Elem& x, Val v) const {
  Val e = val(x);
  if (e == kInfiniteVal || e >= v) return zero();
  const FiniteField& f = *fq_;
  int on = fqpoly::order_at_zero(x.num());
  int od = fqpoly::order_at_zero(x.den());
  fqpoly::Poly a(x.num().begin() + on, x.num().end());
  fqpoly::Poly b(x.den().begin() + od, x.den().end());
  std::size_t terms = static_cast<std::size_t>(v - e);
  fqpoly::Poly c(terms, 0);
  FiniteField::Elem b0_inv = f.inv(b[0]);
  for (std::size_t k = 0; k < terms; ++k) {
    FiniteField::Elem acc = k < a.size() ? a[k] : 0;
    for (std::size_t i = 1; i <= k && i < b.size(); ++i) acc = f.sub(acc, f.mul(b[i], c[k - i]));
    c[k] = f.mul(acc, b0_inv);
  }
  if (e >= 0) {
    fqpoly::Poly shifted(static_cast<std::size_t>(e), 0);
    shifted.insert(shifted.end(), c.begin(), c.end());
    return RatFunc::polynomial(fq_, shifted);
  }
  return RatFunc(fq_, c, pow_uniformizer(-e).num());
}

std::vector<LaurentField::Elem> LaurentField::unit_sample_set(int level) const {
  FiniteField::Elem c = fq_->order() == 2 ? 1 : fq_->generator();
  std::vector<Elem> out{RatFunc::constant(fq_, c)};
  for (int j = 1; j <= level; ++j) {
    fqpoly::Poly poly(static_cast<std::size_t>(j) + 1, 0);
    poly[0] = 1;
    poly[static_cast<std::size_t>(j)] = c;
    out.push_back(RatFunc::polynomial(fq_, poly));
  }
  return out;
}

LaurentField::Elem LaurentField::random_digits(Rng& rng, int digits) const {
  std::uniform_int_distribution<std::uint32_t> coeff(0, fq_->order() - 1);
  fqpoly::Poly poly(static_cast<std::size_t>(std::max(digits, 0)), 0);
  for (auto& c : poly) c = coeff(rng);
  return RatFunc::polynomial(fq_, poly);
}

LaurentField::Elem LaurentField::random_unit(Rng& rng, int digits) const {
  std::uniform_int_distribution<std::uint32_t> lead(1, fq_->order() - 1);
  fqpoly::Poly poly = digits > 1 ? random_digits(rng, digits - 1).num() : fqpoly::Poly{};
  poly.insert(poly.begin(), lead(rng));
  return RatFunc::polynomial(fq_, poly);
}

std::string LaurentField::to_string(const Elem& x) const {
  if (x.is_zero()) return "0";
  std::string num = fqpoly::to_string(*fq_, x.num());
  if (is_one(x.den())) return num;
  return "(" + num + ")/(" + fqpoly::to_string(*fq_, x.den()) + ")";
}

namespace {

fqpoly::Poly parse_poly(const FiniteField& f, std::string s, std::string_view original) {
  auto bad = [&]() -> fqpoly::Poly {
    fail(ErrorCode::kInvalidInput, "cannot parse F_q(t) element '" + std::string(original) + "'");
  };
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) return bad();
  fqpoly::Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty()) return bad();
    long long coeff = 1;
    std::size_t exponent = 0;
    auto tpos = term.find('t');
    std::string coeff_text = tpos == std::string::npos ? term : term.substr(0, tpos);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    if (!coeff_text.empty()) {
      if (!std::all_of(coeff_text.begin(), coeff_text.end(), ::isdigit)) return bad();
      coeff = std::stoll(coeff_text);
    } else if (tpos == std::string::npos) {
      return bad();
    }
    if (tpos != std::string::npos) {
      exponent = 1;
      std::string rest = term.substr(tpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2) return bad();
        std::string digits = rest.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) return bad();
        exponent = std::stoul(digits);
      }
    }
    FiniteField::Elem c = f.degree() == 1 ? f.from_int(coeff) : static_cast<FiniteField::Elem>(coeff);
    if (c >= f.order()) return bad();
    if (negative) c = f.neg(c);
    if (out.size() <= exponent) out.resize(exponent + 1, 0);
    out[exponent] = f.add(out[exponent], c);
  }
  fqpoly::trim(out);
  return out;
}

}  // namespace

LaurentField::Elem LaurentField::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto slash = s.find(")/(");
  std::size_t cut = std::string::npos;
  if (slash != std::string::npos) {
    cut = slash + 1;
  } else if (s.find('(') == std::string::npos) {
    cut = s.find('/');
  }
  if (cut == std::string::npos) return RatFunc::polynomial(fq_, parse_poly(*fq_, s, text));
  fqpoly::Poly num = parse_poly(*fq_, s.substr(0, cut), text);
  fqpoly::Poly den = parse_poly(*fq_, s.substr(cut + 1), text);
  if (den.empty()) fail(ErrorCode::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  return RatFunc(fq_, num, den);
}

// ---------------------------------------------------------------------------
// UnramElem

namespace {

const FiniteField* pick_field(const UnramElem& a, const UnramElem& b) {
  return a.field() ? a.field() : b.field();
}

// Reduces a coefficient vector modulo the monic lift of f's modulus.
void reduce_mod_minpoly(const FiniteField& f, std::vector<mpq_class>& c) {
  const auto& m = f.modulus();
  const std::size_t k = f.degree();
  for (std::size_t i = c.size(); i-- > k;) {
    if (sgn(c[i]) == 0) continue;
    const mpq_class lead = c[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (m[j] != 0) c[i - k + j] -= lead * static_cast<unsigned long>(m[j]);
    }
    c[i] = 0;
  }
  if (c.size() > k) c.resize(k);
}

}  // namespace

UnramElem::UnramElem(const FiniteField* f, std::vector<mpq_class> coords) : f_(f), c_(std::move(coords)) {
  if (f_ && c_.size() > f_->degree()) reduce_mod_minpoly(*f_, c_);
  trim();
}

void UnramElem::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UnramElem operator+(const UnramElem& a, const UnramElem& b) {
  std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.c_.size()) out[i] += a.c_[i];
    if (i < b.c_.size()) out[i] += b.c_[i];
  }
  return UnramElem(pick_field(a, b), std::move(out));
}

UnramElem operator-(const UnramElem& a) {
  UnramElem r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UnramElem operator-(const UnramElem& a, const UnramElem& b) { return a + (-b); }

UnramElem operator*(const UnramElem& a, const UnramElem& b) {
  const FiniteField* f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return UnramElem(f, {});
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  if (out.size() > 1 && !f) fail(ErrorCode::kInvalidInput, "extension element without a field");
  return UnramElem(f, std::move(out));
}

UnramElem UnramElem::inverse() const {
  if (is_zero()) fail(ErrorCode::kSingular, "division by zero in unramified extension");
  if (c_.size() == 1) return UnramElem(f_, {1 / c_[0]});
  // Solve (multiplication by this) y = 1 by Gauss-Jordan over Q.
  const std::size_t k = f_->degree();
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k + 1));
  UnramElem power(f_, {mpq_class(1)});
  const UnramElem a(f_, {mpq_class(0), mpq_class(1)});
  for (std::size_t j = 0; j < k; ++j) {
    UnramElem col = *this * power;
    for (std::size_t i = 0; i < col.c_.size(); ++i) m[i][j] = col.c_[i];
    power = power * a;
  }
  m[0][k] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && sgn(m[piv][col]) == 0) ++piv;
    if (piv == k) fail(ErrorCode::kSingular, "unramified extension: singular multiplication map");
    std::swap(m[piv], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<mpq_class> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = m[i][k];
  return UnramElem(f_, std::move(out));
}

UnramElem operator/(const UnramElem& a, const UnramElem& b) { return a * b.inverse(); }

// ---------------------------------------------------------------------------
// UnramifiedField

UnramifiedField::UnramifiedField(std::uint64_t p, unsigned f) : base_(p) {
  if (f < 2) fail(ErrorCode::kInvalidInput, "unramified extension degree must be >= 2");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > (1u << 16)) fail(ErrorCode::kInvalidInput, "residue field of the extension is too large");
  }
  fq_ = &FiniteField::get(q);
}

std::vector<long> UnramifiedField::minimal_polynomial() const {
  std::vector<long> out;
  for (auto c : fq_->modulus()) out.push_back(static_cast<long>(c));
  return out;
}

Val UnramifiedField::val(const Elem& x) const {
  if (x.is_zero()) return kInfiniteVal;
  Val best = kInfiniteVal;
  for (const auto& c : x.coords()) best = std::min(best, base_.val(c));
  return best;
}

FiniteField::Elem UnramifiedField::reduce(const Elem& x) const {
  Val v = val(x);
  if (v < 0) fail(ErrorCode::kNegativeValuation, "reduce: negative valuation " + std::to_string(v));
  FiniteField::Elem code = 0, scale = 1;
  const auto p = static_cast<FiniteField::Elem>(prime());
  for (const auto& c : x.coords()) {
    code += base_.reduce(c) * scale;
    scale *= p;
  }
  return code;
}

UnramifiedField::Elem UnramifiedField::lift(FiniteField::Elem r) const {
  std::vector<mpq_class> coords;
  const auto p = static_cast<FiniteField::Elem>(prime());
  for (unsigned i = 0; i < degree(); ++i) {
    coords.emplace_back(static_cast<unsigned long>(r % p));
    r /= p;
  }
  return Elem(fq_, std::move(coords));
}

UnramifiedField::Elem UnramifiedField::truncate(const Elem& x, Val v) const {
  std::vector<mpq_class> coords;
  for (const auto& c : x.coords()) coords.push_back(base_.truncate(c, v));
  return Elem(fq_, std::move(coords));
}

std::vector<UnramifiedField::Elem> UnramifiedField::unit_sample_set(int /*level*/) const {
  std::vector<Elem> out{lift(fq_->generator()), from_int(-1)};
  const mpz_class p(static_cast<unsigned long>(prime()));
  for (unsigned i = 0; i < degree(); ++i) {
    for (const mpz_class& scale : {p, mpz_class(p * p)}) {
      std::vector<mpq_class> coords(i + 1);
      coords[i] = mpq_class(scale);
      coords[0] += 1;
      out.emplace_back(fq_, std::move(coords));
    }
  }
  return out;
}

UnramifiedField::Elem UnramifiedField::random_digits(Rng& rng, int digits) const {
  std::vector<mpq_class> coords;
  for (unsigned i = 0; i < degree(); ++i) coords.push_back(base_.random_digits(rng, digits));
  return Elem(fq_, std::move(coords));
}

UnramifiedField::Elem UnramifiedField::random_unit(Rng& rng, int digits) const {
  std::uniform_int_distribution<FiniteField::Elem> lead(1, fq_->order() - 1);
  Elem rest = digits > 1 ? random_digits(rng, digits - 1) : zero();
  return lift(lead(rng)) + uniformizer() * rest;
}

std::string UnramifiedField::to_string(const Elem& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  const auto& c = x.coords();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    std::string coeff = c[k].get_str();
    if (!out.empty() && coeff[0] != '-') out += "+";
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (c[k] == -1) {
      out += "-";
    } else if (c[k] != 1) {
      out += coeff + "*";
    }
    out += "a";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UnramifiedField::Elem UnramifiedField::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&]() -> Elem {
    fail(ErrorCode::kInvalidInput, "cannot parse extension element '" + std::string(text) + "'");
  };
  if (s.empty()) return bad();
  std::vector<mpq_class> coords;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty()) return bad();
    auto apos = term.find('a');
    std::string coeff_text = apos == std::string::npos ? term : term.substr(0, apos);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    mpq_class coeff(1);
    if (!coeff_text.empty()) {
      coeff = base_.parse(coeff_text);
    } else if (apos == std::string::npos) {
      return bad();
    }
    std::size_t exponent = 0;
    if (apos != std::string::npos) {
      exponent = 1;
      std::string rest = term.substr(apos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2 || rest.size() > 4) return bad();
        std::string digits = rest.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) return bad();
        exponent = std::stoul(digits);
      }
    }
    if (coords.size() <= exponent) coords.resize(exponent + 1);
    coords[exponent] += negative ? -coeff : coeff;
  }
  return Elem(fq_, std::move(coords));
}

}  // namespace schurlat
