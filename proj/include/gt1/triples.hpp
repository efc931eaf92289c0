#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "gt1/common.hpp"
#include "gt1/psl2.hpp"

namespace gt1 {

// Lift traces (a, b, c) of a triple (x, y, z), xyz = 1. Keys attached to
// triple classes come from a product-one lift triple (X, Y, (XY)^-1), so a
// class genuinely lies in the trace fiber its key names.
struct TraceKey {
  std::array<FieldElem, 3> t{0, 0, 0};
  bool operator==(const TraceKey&) const = default;
  u64 pack() const { return (u64(t[0]) << 42) | (u64(t[1]) << 21) | t[2]; }
};

// Conjugacy classes of generating triples: each class is stored as its
// canonical representative pair (x, y) with z = (xy)^-1 implicit; the rep is
// the lexicographic minimum of (index(uxu^-1), index(uyu^-1)) over u in G.
// Ids are 0..N-1 in lexicographic rep order.
struct ClassSet {
  std::vector<std::pair<u32, u32>> reps;
  std::vector<TraceKey> raw_key;    // product-one lift traces of the rep
  std::vector<TraceKey> fiber_key;  // normalized over even sign changes
  std::vector<TraceKey> block_key;  // normalized over all sign changes
  std::map<u64, std::vector<u32>> fibers;       // fiber_key.pack() -> ids
  std::map<u64, std::vector<u32>> base_blocks;  // block_key.pack() -> ids

  u32 size() const { return u32(reps.size()); }
  // Id of the class with this canonical rep; size() when absent.
  u32 id_of(std::pair<u32, u32> rep) const;

  struct Stats {
    u64 pairs_tested = 0;
    u64 generating_pairs = 0;
  } stats;
};

// True iff <x, y> is all of G: worklist closure over right multiplication by
// x and y, with a membership bitmap, run to completion.
bool generates(const Group& g, u32 x, u32 y);

// Definitional canonical form: minimizes (index(uxu^-1), index(uyu^-1)) over
// all u in G. Requires nothing of x, y beyond membership.
std::pair<u32, u32> canonical_pair(const Group& g, u32 x, u32 y);

// Product-one trace key of a pair: traces of (X, Y, (X*Y)^-1) at lift level.
TraceKey pair_trace_key(const Group& g, u32 x, u32 y);

// Least key among the even formal sign changes {(+,+,+),(-,-,+),(-,+,-),(+,-,-)}.
// When a coordinate is zero this already sweeps every sign variant.
TraceKey normalize_fiber_key(const Field& f, TraceKey k);
// Least key among all eight formal sign changes.
TraceKey normalize_block_key(const Field& f, TraceKey k);

// Enumerates every triple class: for each conjugacy class representative x0
// of G (the least-index member, so it is the first coordinate of any
// canonical rep it appears in) and each y with generates(x0, y), the
// canonical rep is (x0, min over centralizer(x0) of uyu^-1).
ClassSet enumerate_classes(const Group& g, u32 threads = 1);

// Classes in the fiber of k, after even-sign normalization; possibly empty.
std::vector<u32> fiber_classes(const ClassSet& cs, const Group& g, TraceKey k);

}  // namespace gt1
