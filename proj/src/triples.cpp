#include "gt1/triples.hpp"

#include <algorithm>
#include <atomic>

namespace gt1 {

namespace {

u64 pack_pair(std::pair<u32, u32> p) { return (u64(p.first) << 32) | p.second; }

// Reusable closure scratch; one per worker thread.
struct GenScratch {
  std::vector<u32> stamp;
  std::vector<u32> work;
  u32 epoch = 0;

  explicit GenScratch(u32 n) : stamp(n, 0) { work.reserve(n); }

  bool generates(const Group& g, u32 x, u32 y) {
    ++epoch;
    work.clear();
    u32 seen = 0;
    auto visit = [&](u32 e) {
      if (stamp[e] != epoch) {
        stamp[e] = epoch;
        work.push_back(e);
        ++seen;
      }
    };
    visit(g.identity());
    for (size_t head = 0; head < work.size(); ++head) {
      u32 t = work[head];
      visit(g.mul(t, x));
      visit(g.mul(t, y));
    }
    return seen == g.order();
  }
};

}  // namespace

bool generates(const Group& g, u32 x, u32 y) {
  GenScratch scratch(g.order());
  return scratch.generates(g, x, y);
}

std::pair<u32, u32> canonical_pair(const Group& g, u32 x, u32 y) {
  u32 bx = x, by = y;
  const u32 n = g.order();
  for (u32 u = 0; u < n; ++u) {
    u32 a = g.conj(u, x);
    if (a > bx) continue;
    u32 b = g.conj(u, y);
    if (a < bx || b < by) {
      bx = a;
      by = b;
    }
  }
  return {bx, by};
}

TraceKey pair_trace_key(const Group& g, u32 x, u32 y) {
  const Field& f = g.field();
  const Matrix2& mx = g.lift(x);
  const Matrix2& my = g.lift(y);
  Matrix2 mz = g.matinv(g.matmul(mx, my));
  return TraceKey{{f.add(mx.m11, mx.m22), f.add(my.m11, my.m22),
                   f.add(mz.m11, mz.m22)}};
}

TraceKey normalize_fiber_key(const Field& f, TraceKey k) {
  FieldElem a = k.t[0], b = k.t[1], c = k.t[2];
  TraceKey best = k;
  const TraceKey variants[3] = {
      {{f.neg(a), f.neg(b), c}}, {{f.neg(a), b, f.neg(c)}}, {{a, f.neg(b), f.neg(c)}}};
  for (const TraceKey& v : variants)
    if (v.pack() < best.pack()) best = v;
  return best;
}

TraceKey normalize_block_key(const Field& f, TraceKey k) {
  TraceKey even = normalize_fiber_key(f, k);
  TraceKey odd = normalize_fiber_key(f, TraceKey{{k.t[0], k.t[1], f.neg(k.t[2])}});
  return even.pack() < odd.pack() ? even : odd;
}

u32 ClassSet::id_of(std::pair<u32, u32> rep) const {
  u64 code = pack_pair(rep);
  auto it = std::lower_bound(reps.begin(), reps.end(), rep);
  if (it == reps.end() || pack_pair(*it) != code) return size();
  return u32(it - reps.begin());
}

ClassSet enumerate_classes(const Group& g, u32 threads) {
  threads = resolve_threads(threads);
  const u32 n = g.order();

  std::vector<u64> found;
  std::atomic<u64> generating{0};
  u64 pairs_tested = 0;

  for (u32 c = 0; c < g.num_classes(); ++c) {
    u32 x0 = g.class_rep(c);
    std::vector<u32> cent = g.centralizer(x0);
    pairs_tested += n;

    std::vector<std::vector<u64>> per_thread(threads);
    parallel_chunks(n, threads, [&](u32 tid, u64 lo, u64 hi) {
      GenScratch scratch(n);
      std::vector<u64>& out = per_thread[tid];
      u64 local_gen = 0;
      for (u64 y = lo; y < hi; ++y) {
        if (!scratch.generates(g, x0, u32(y))) continue;
        ++local_gen;
        u32 ymin = u32(y);
        for (u32 u : cent) {
          u32 cand = g.conj(u, u32(y));
          if (cand < ymin) ymin = cand;
        }
        out.push_back((u64(x0) << 32) | ymin);
      }
      generating += local_gen;
    });
    for (auto& part : per_thread)
      found.insert(found.end(), part.begin(), part.end());
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  ClassSet cs;
  cs.reps.reserve(found.size());
  for (u64 code : found)
    cs.reps.emplace_back(u32(code >> 32), u32(code & 0xFFFFFFFFu));

  const Field& f = g.field();
  cs.raw_key.resize(cs.reps.size());
  cs.fiber_key.resize(cs.reps.size());
  cs.block_key.resize(cs.reps.size());
  for (u32 i = 0; i < cs.size(); ++i) {
    cs.raw_key[i] = pair_trace_key(g, cs.reps[i].first, cs.reps[i].second);
    cs.fiber_key[i] = normalize_fiber_key(f, cs.raw_key[i]);
    cs.block_key[i] = normalize_block_key(f, cs.raw_key[i]);
    cs.fibers[cs.fiber_key[i].pack()].push_back(i);
    cs.base_blocks[cs.block_key[i].pack()].push_back(i);
  }

  cs.stats.pairs_tested = pairs_tested;
  cs.stats.generating_pairs = generating.load();
  return cs;
}

std::vector<u32> fiber_classes(const ClassSet& cs, const Group& g, TraceKey k) {
  TraceKey norm = normalize_fiber_key(g.field(), k);
  auto it = cs.fibers.find(norm.pack());
  if (it == cs.fibers.end()) return {};
  return it->second;
}

}  // namespace gt1
