#pragma once

#include <array>
#include <string>
#include <vector>

#include "gt1/common.hpp"
#include "gt1/triples.hpp"

namespace gt1 {

// One element of H = Out(G) x S3 as a permutation of triple-class ids,
// tagged by its (alpha exponent, Frobenius exponent, S3 word) decomposition.
struct HElem {
  u32 alpha_e = 0;
  u32 frob_e = 0;
  std::string s3;  // word in the generators: "", "t", "d", "td", "dt", "tdt"
  std::vector<u32> perm;
};

// The action of H on triple classes. theta maps [x,y,z] to [y,x,z^x] (the
// pair swap), delta maps it to [z,y,x^y] (first coordinate replaced by z);
// alpha and sigma act by the outer automorphisms. Construction asserts
// theta^2 = delta^2 = (theta delta)^3 = 1, the commutation of the two
// actions, and the freeness of the Out factor, and aborts if any fails.
struct HAction {
  std::vector<u32> theta, delta, alpha, sigma;
  std::vector<HElem> elems;  // all |H| composites, 6s for even q, 12s for odd

  u32 n() const { return u32(theta.size()); }
};

HAction build_haction(const Group& g, const ClassSet& cs);

// Componentwise conjugacy labels: label[t] = (class_of x, class_of y,
// class_of z) of the rep. Two ids are equivalent iff labels are equal.
std::vector<u64> equiv_labels(const Group& g, const ClassSet& cs);

std::vector<u32> compose_perm(const std::vector<u32>& f, const std::vector<u32>& g);
bool is_identity_perm(const std::vector<u32>& p);

}  // namespace gt1
