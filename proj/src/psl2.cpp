#include "gt1/psl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace gt1 {

namespace {
constexpr u64 kDirectLookupMax = u64(1) << 24;
}

Matrix2 Group::canonical_lift(Matrix2 m) const {
  if (f_.p() == 2) return m;
  const FieldElem* e = &m.m11;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (f_.neg(e[i]) < e[i])
      return Matrix2{f_.neg(m.m11), f_.neg(m.m12), f_.neg(m.m21), f_.neg(m.m22)};
    return m;
  }
  return m;  // zero matrix; never a group element
}

u32 Group::index_of(const Matrix2& m) const {
  u64 code = pack(canonical_lift(m));
  if (!direct_idx_.empty()) return direct_idx_[code];
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  ensure(it != codes_.end() && *it == code, "lift not in element table");
  return u32(it - codes_.begin());
}

Matrix2 Group::matmul(const Matrix2& x, const Matrix2& y) const {
  const Field& f = f_;
  return Matrix2{
      f.add(f.mul(x.m11, y.m11), f.mul(x.m12, y.m21)),
      f.add(f.mul(x.m11, y.m12), f.mul(x.m12, y.m22)),
      f.add(f.mul(x.m21, y.m11), f.mul(x.m22, y.m21)),
      f.add(f.mul(x.m21, y.m12), f.mul(x.m22, y.m22)),
  };
}

Matrix2 Group::matinv(const Matrix2& m) const {
  return Matrix2{m.m22, f_.neg(m.m12), f_.neg(m.m21), m.m11};
}

FieldElem Group::det(const Matrix2& m) const {
  return f_.sub(f_.mul(m.m11, m.m22), f_.mul(m.m12, m.m21));
}

u32 Group::mul_slow(u32 a, u32 b) const {
  return index_of(matmul(lifts_[a], lifts_[b]));
}

std::vector<u32> Group::centralizer(u32 x) const {
  std::vector<u32> out;
  for (u32 u = 0; u < n_; ++u)
    if (mul(u, x) == mul(x, u)) out.push_back(u);
  return out;
}

Group make_group(const Field& f, const GroupOptions& opts) {
  if (f.q() < 4)
    throw std::invalid_argument("PSL(2,q) requires q >= 4 (simple, non-abelian)");

  Group g;
  g.f_ = f;
  const u32 q = f.q();

  // Solved-form scan of SL(2,q): fixing (m11, m12, m21) determines m22 when
  // m11 != 0; for m11 = 0 the constraint is m21 = -m12^{-1} with m22 free.
  std::vector<u64> codes;
  codes.reserve(size_t(q) * q * (q + 1));
  u64 canonical_raw = 0;
  auto push = [&](const Matrix2& m) {
    Matrix2 c = g.canonical_lift(m);
    if (c == m) ++canonical_raw;
    codes.push_back(g.pack(c));
  };
  for (u32 m11 = 1; m11 < q; ++m11) {
    FieldElem i11 = f.inv(m11);
    for (u32 m12 = 0; m12 < q; ++m12)
      for (u32 m21 = 0; m21 < q; ++m21)
        push(Matrix2{m11, m12, m21, f.mul(i11, f.add(1, f.mul(m12, m21)))});
  }
  for (u32 m12 = 1; m12 < q; ++m12) {
    FieldElem m21 = f.neg(f.inv(m12));
    for (u32 m22 = 0; m22 < q; ++m22) push(Matrix2{0, m12, m21, m22});
  }

  u64 sl_order = u64(q) * q * q - q;
  ensure(codes.size() == sl_order, "SL(2,q) scan count");
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  u64 expected = f.p() == 2 ? sl_order : sl_order / 2;
  ensure(codes.size() == expected, "PSL(2,q) order after canonicalization");
  // Sign-rule involution: each element has exactly one canonical lift among
  // the raw scan (which hits every SL matrix once).
  ensure(canonical_raw == expected, "canonical lift sign rule");

  g.n_ = u32(codes.size());
  g.codes_ = std::move(codes);
  g.lifts_.resize(g.n_);
  for (u32 i = 0; i < g.n_; ++i) {
    u64 c = g.codes_[i];
    g.lifts_[i] = Matrix2{u32(c / q / q / q % q), u32(c / q / q % q),
                          u32(c / q % q), u32(c % q)};
  }

  u64 q4 = u64(q) * q * q * q;
  if (q4 <= kDirectLookupMax) {
    g.direct_idx_.assign(q4, 0xFFFFFFFFu);
    for (u32 i = 0; i < g.n_; ++i) g.direct_idx_[g.codes_[i]] = i;
  }

  g.identity_ = g.index_of(Matrix2{1, 0, 0, 1});

  g.inv_.resize(g.n_);
  g.trace_.resize(g.n_);
  g.alpha_.resize(g.n_);
  g.frob_.resize(g.n_);
  for (u32 i = 0; i < g.n_; ++i) {
    const Matrix2& m = g.lifts_[i];
    g.inv_[i] = g.index_of(g.matinv(m));
    g.trace_[i] = f.add(m.m11, m.m22);
    g.alpha_[i] = g.index_of(Matrix2{m.m11, f.neg(m.m12), f.neg(m.m21), m.m22});
    g.frob_[i] = g.index_of(
        Matrix2{f.frob(m.m11), f.frob(m.m12), f.frob(m.m21), f.frob(m.m22)});
  }

  if (g.n_ <= opts.mult_table_max_order) {
    g.mult_.resize(size_t(g.n_) * g.n_);
    u32 threads = resolve_threads(opts.threads);
    parallel_chunks(g.n_, threads, [&](u32, u64 lo, u64 hi) {
      for (u64 a = lo; a < hi; ++a)
        for (u64 b = 0; b < g.n_; ++b)
          g.mult_[a * g.n_ + b] = u16(g.mul_slow(u32(a), u32(b)));
    });
    g.has_mult_ = true;
  }

  // Conjugacy classes by orbit closure: sweep indices ascending, conjugate
  // each fresh seed by every group element.
  g.class_of_.assign(g.n_, 0xFFFFFFFFu);
  for (u32 i = 0; i < g.n_; ++i) {
    if (g.class_of_[i] != 0xFFFFFFFFu) continue;
    u32 cid = u32(g.class_rep_.size());
    g.class_rep_.push_back(i);
    u64 size = 0;
    for (u32 u = 0; u < g.n_; ++u) {
      u32 j = g.conj(u, i);
      if (g.class_of_[j] == 0xFFFFFFFFu) {
        g.class_of_[j] = cid;
        ++size;
      } else {
        ensure(g.class_of_[j] == cid, "conjugacy orbit closure");
      }
    }
    g.class_size_.push_back(size);
  }
  u64 total = 0;
  for (u64 s : g.class_size_) total += s;
  ensure(total == g.n_, "class equation");

  return g;
}

}  // namespace gt1
