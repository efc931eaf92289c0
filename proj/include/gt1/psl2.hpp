#pragma once

#include <vector>

#include "gt1/common.hpp"
#include "gt1/field.hpp"

namespace gt1 {

// 2x2 matrix over F_q, row major.
struct Matrix2 {
  FieldElem m11 = 0, m12 = 0, m21 = 0, m22 = 0;
  bool operator==(const Matrix2&) const = default;
};

struct GroupOptions {
  // Dense |G| x |G| multiplication table is built when |G| <= this. Above it
  // products fall back to lift arithmetic plus an index lookup.
  u32 mult_table_max_order = 6000;
  u32 threads = 1;
};

// PSL(2,q): every element is stored as a canonical lift in SL(2,q) and owns a
// dense index (its rank in lexicographic order of lift entry codes). For odd q
// the canonical lift is the one of {M, -M} whose first nonzero entry e
// (scanning m11, m12, m21, m22) has code(e) < code(-e); for even q lifts are
// unique. Conjugacy classes are computed by explicit orbit closure.
class Group {
 public:
  u32 order() const { return n_; }
  const Field& field() const { return f_; }
  u32 identity() const { return identity_; }

  const Matrix2& lift(u32 i) const { return lifts_[i]; }

  u32 mul(u32 a, u32 b) const {
    if (has_mult_) return mult_[size_t(a) * n_ + b];
    return mul_slow(a, b);
  }
  u32 inv(u32 a) const { return inv_[a]; }
  u32 conj(u32 u, u32 x) const { return mul(mul(u, x), inv_[u]); }

  // Trace of the canonical lift. The other lift's trace is its negative.
  FieldElem trace(u32 i) const { return trace_[i]; }

  // Conjugation by diag(1,-1); identity map in characteristic two.
  u32 alpha(u32 i) const { return alpha_[i]; }
  // Entrywise field Frobenius on the lift.
  u32 frob(u32 i) const { return frob_[i]; }

  u32 class_of(u32 i) const { return class_of_[i]; }
  u32 num_classes() const { return u32(class_rep_.size()); }
  // Least element index in the class; classes are numbered by their rep.
  u32 class_rep(u32 c) const { return class_rep_[c]; }
  u64 class_size(u32 c) const { return class_size_[c]; }

  std::vector<u32> centralizer(u32 x) const;

  Matrix2 canonical_lift(Matrix2 m) const;
  // Index of the PSL element with the given SL lift (either sign). The lift
  // is assumed to have determinant one.
  u32 index_of(const Matrix2& m) const;

  Matrix2 matmul(const Matrix2& x, const Matrix2& y) const;
  Matrix2 matinv(const Matrix2& m) const;
  FieldElem det(const Matrix2& m) const;

 private:
  friend Group make_group(const Field& f, const GroupOptions& opts);
  Group() = default;

  u32 mul_slow(u32 a, u32 b) const;
  u64 pack(const Matrix2& m) const {
    u64 q = f_.q();
    return ((u64(m.m11) * q + m.m12) * q + m.m21) * q + m.m22;
  }

  Field f_;
  u32 n_ = 0;
  u32 identity_ = 0;
  std::vector<Matrix2> lifts_;
  std::vector<u64> codes_;        // packed lifts, ascending; rank == index
  std::vector<u32> direct_idx_;   // q^4-sized direct lookup when affordable
  bool has_mult_ = false;
  std::vector<u16> mult_;
  std::vector<u32> inv_, alpha_, frob_, class_of_, class_rep_;
  std::vector<u64> class_size_;
  std::vector<FieldElem> trace_;
};

// Enumerates SL(2,q), canonicalizes lifts, assigns indices, and computes the
// conjugacy class table. Rejects q < 4 (PSL(2,2) and PSL(2,3) are not simple).
Group make_group(const Field& f, const GroupOptions& opts = {});

}  // namespace gt1
