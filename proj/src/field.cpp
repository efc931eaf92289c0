#include "gt1/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gt1 {

bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; u64(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<u32>;  // constant term first

int poly_deg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[size_t(i)] != 0) return i;
  return -1;
}

// a mod b over F_p, b monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& b, u32 p) {
  int db = poly_deg(b);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    u32 lead = a[size_t(da)];
    int shift = da - db;
    for (int i = 0; i <= db; ++i) {
      u64 t = u64(lead) * b[size_t(i)] % p;
      u32& c = a[size_t(i + shift)];
      c = u32((c + p - u32(t)) % p);
    }
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = u32((r[i + j] + u64(a[i]) * b[j]) % p);
  }
  return r;
}

Poly digits_of(u64 m, u32 p, u32 len) {
  Poly c(len, 0);
  for (u32 i = 0; i < len; ++i) {
    c[i] = u32(m % p);
    m /= p;
  }
  return c;
}

u64 ipow(u64 b, u32 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool poly_irreducible(const std::vector<u32>& poly, u32 p) {
  int deg = poly_deg(poly);
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (u32 d = 1; d <= u32(deg) / 2; ++d) {
    u64 count = ipow(p, d);
    for (u64 m = 0; m < count; ++m) {
      Poly div = digits_of(m, p, d + 1);
      div[d] = 1;
      if (poly_deg(poly_mod(poly, div, p)) < 0) return false;
    }
  }
  return true;
}

std::string poly_to_string(const std::vector<u32>& poly) {
  std::ostringstream os;
  bool first = true;
  for (int i = poly_deg(poly); i >= 0; --i) {
    u32 c = poly[size_t(i)];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      os << "t";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Field Field::make(u32 p, u32 s, u64 max_q) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (s < 1) throw std::invalid_argument("field degree must be >= 1");
  u64 q = ipow(p, s);
  if (q > max_q) throw std::invalid_argument("field size exceeds configured bound");

  // Sieve for the lexicographically least monic irreducible of degree s.
  Poly mod;
  for (u64 m = 0;; ++m) {
    Poly cand = digits_of(m, p, s + 1);
    cand[s] = 1;
    if (poly_irreducible(cand, p)) {
      mod = cand;
      break;
    }
  }
  return make_with_modulus(p, s, mod, max_q);
}

Field Field::make_with_modulus(u32 p, u32 s, std::vector<u32> modulus, u64 max_q) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (s < 1) throw std::invalid_argument("field degree must be >= 1");
  u64 q = ipow(p, s);
  if (q > max_q) throw std::invalid_argument("field size exceeds configured bound");
  if (modulus.size() != size_t(s) + 1 || modulus[s] != 1)
    throw std::invalid_argument("modulus must be monic of degree s");
  for (u32 c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!poly_irreducible(modulus, p))
    throw std::invalid_argument("modulus is reducible");

  Field f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = u32(q);
  f.modulus_ = std::move(modulus);
  f.build_tables();
  return f;
}

std::string Field::modulus_str() const { return poly_to_string(modulus_); }

std::vector<u32> Field::to_coeffs(FieldElem a) const {
  return digits_of(a, p_, s_);
}

FieldElem Field::from_coeffs(const std::vector<u32>& c) const {
  u64 code = 0;
  for (size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return FieldElem(code);
}

FieldElem Field::add_raw(FieldElem a, FieldElem b) const {
  u64 code = 0, mult = 1;
  for (u32 i = 0; i < s_; ++i) {
    code += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return FieldElem(code);
}

FieldElem Field::mul_raw(FieldElem a, FieldElem b) const {
  Poly prod = poly_mul(digits_of(a, p_, s_), digits_of(b, p_, s_), p_);
  Poly rem = s_ > 1 ? poly_mod(prod, modulus_, p_) : prod;
  rem.resize(s_, 0);
  return from_coeffs(rem);
}

FieldElem Field::pow(FieldElem a, u64 e) const {
  FieldElem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return inv_[a];
}

void Field::build_tables() {
  neg_.resize(q_);
  for (u32 a = 0; a < q_; ++a) {
    u64 code = 0, mult = 1, x = a;
    for (u32 i = 0; i < s_; ++i) {
      code += (p_ - x % p_) % p_ * mult;
      x /= p_;
      mult *= p_;
    }
    neg_[a] = FieldElem(code);
  }

  if (q_ <= 256) {
    tables_ = true;
    add_t_.resize(size_t(q_) * q_);
    mul_t_.resize(size_t(q_) * q_);
    for (u32 a = 0; a < q_; ++a)
      for (u32 b = 0; b < q_; ++b) {
        add_t_[size_t(a) * q_ + b] = add_raw(a, b);
        mul_t_[size_t(a) * q_ + b] = mul_raw(a, b);
      }
  }

  inv_.resize(q_);
  frob_.resize(q_);
  inv_[0] = 0;
  for (u32 a = 0; a < q_; ++a) {
    if (a != 0) {
      inv_[a] = pow(a, u64(q_) - 2);
      ensure(mul(a, inv_[a]) == 1, "field inverse table");
    }
    frob_[a] = pow(a, p_);
  }
}

}  // namespace gt1
