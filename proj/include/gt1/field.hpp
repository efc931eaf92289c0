#pragma once

#include <string>
#include <vector>

#include "gt1/common.hpp"

namespace gt1 {

// Element of F_{p^s}, encoded as an integer in 0..q-1 whose base-p digits are
// the coefficients of the residue polynomial, constant term least significant.
// 0 is the additive and 1 the multiplicative identity.
using FieldElem = u32;

// Arithmetic in F_{p^s} for a deterministic modulus: the lexicographically
// least monic irreducible polynomial of degree s, where coefficient vectors
// (c0,...,c_{s-1}) are ordered as base-p integers with c0 least significant.
// For s = 1 this degenerates to the polynomial t and plain mod-p arithmetic.
class Field {
 public:
  static constexpr u64 kDefaultMaxQ = u64(1) << 20;

  static Field make(u32 p, u32 s, u64 max_q = kDefaultMaxQ);
  // Same, but with a caller-chosen modulus (length s+1, constant term first,
  // monic). Rejects reducible polynomials.
  static Field make_with_modulus(u32 p, u32 s, std::vector<u32> modulus,
                                 u64 max_q = kDefaultMaxQ);

  u32 p() const { return p_; }
  u32 s() const { return s_; }
  u32 q() const { return q_; }
  const std::vector<u32>& modulus() const { return modulus_; }
  std::string modulus_str() const;  // e.g. "t^2+1" or "t"

  FieldElem add(FieldElem a, FieldElem b) const {
    return tables_ ? add_t_[size_t(a) * q_ + b] : add_raw(a, b);
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return tables_ ? mul_t_[size_t(a) * q_ + b] : mul_raw(a, b);
  }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  // Multiplicative inverse; a = 0 is a domain error.
  FieldElem inv(FieldElem a) const;
  // The Galois generator a -> a^p; iterating s times is the identity.
  FieldElem frob(FieldElem a) const { return frob_[a]; }
  FieldElem pow(FieldElem a, u64 e) const;

  bool table_backed() const { return tables_; }

  std::vector<u32> to_coeffs(FieldElem a) const;  // length s, base-p digits
  FieldElem from_coeffs(const std::vector<u32>& c) const;

 private:
  Field() = default;
  void build_tables();

  FieldElem add_raw(FieldElem a, FieldElem b) const;
  FieldElem mul_raw(FieldElem a, FieldElem b) const;

  u32 p_ = 0, s_ = 0, q_ = 0;
  std::vector<u32> modulus_;  // length s+1, monic
  bool tables_ = false;
  std::vector<FieldElem> add_t_, mul_t_;    // q*q when table-backed
  std::vector<FieldElem> neg_, inv_, frob_;  // always built, size q
};

bool is_prime(u32 n);

// Lexicographic-least-first check used by the modulus sieve: trial division
// against every monic polynomial of degree 1..deg/2. Coefficients are
// constant-term-first and poly must be monic of degree >= 1.
bool poly_irreducible(const std::vector<u32>& poly, u32 p);

std::string poly_to_string(const std::vector<u32>& poly);

}  // namespace gt1
