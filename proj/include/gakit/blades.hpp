#pragma once
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gakit/error.hpp"

namespace gakit {

// A basis blade as a bitmask: bit i set <=> basis vector with index i present.
using BladeKey = uint32_t;

inline int grade(BladeKey k) { return std::popcount(k); }

// Metric signature G(p,q,r). Null basis vectors occupy the lowest indices,
// then the +1-squaring ones, then the -1-squaring ones. Basis vectors are
// named from 0 when the algebra is degenerate (r > 0) and from 1 otherwise,
// so G(2,0,1) reads e0,e1,e2 while G(2) reads e1,e2.
struct Signature {
  int p = 0;
  int q = 0;
  int r = 0;
  int dim = 0;
  int start_index = 1;
  std::vector<int8_t> metric;

  static Signature make(int p, int q, int r);

  int metric_of(int i) const { return metric[static_cast<size_t>(i)]; }
  BladeKey pseudoscalar_key() const { return dim == 0 ? 0u : ((1u << dim) - 1u); }
  size_t blade_count() const { return size_t{1} << dim; }

  bool operator==(const Signature& o) const { return p == o.p && q == o.q && r == o.r; }
};

struct SignedBlade {
  int coef = 0; // in {-1, 0, +1}; 0 only when a null basis vector squared
  BladeKey key = 0;
};

// All 2^d blade keys sorted by (grade, key). The position of a key in this
// sequence is its canonical index.
std::vector<BladeKey> canonical_order(const Signature& sig);

// Digit-based blade names: "e" + ascending basis-vector digits, "e" bare for
// the scalar blade. Only defined while every digit stays in 0..9.
std::string blade_name(BladeKey key, const Signature& sig);

// Strict parse: rejects unknown characters, out-of-range digits, repeated or
// descending digits.
BladeKey parse_blade_name(std::string_view name, const Signature& sig);

// Lenient parse used by coefficient access: a well-formed name whose digits
// fall outside this algebra yields in_algebra=false instead of an error.
struct ParsedBlade {
  bool in_algebra = false;
  BladeKey key = 0;
};
ParsedBlade parse_blade_name_lenient(std::string_view name, const Signature& sig);

// Geometric product of two basis blades. key is always a XOR b; coef picks up
// the reordering sign and one metric factor per shared basis vector.
SignedBlade gp_blades(BladeKey a, BladeKey b, const Signature& sig);

// (-1)^(k(k-1)/2) for k = grade(key).
int reverse_sign(BladeKey key);

// Metric-free right complement, signed so that blade ^ dual(blade) = +pseudoscalar.
// undual_blade is its exact inverse: undual(dual(k)) = (+1, k).
SignedBlade dual_blade(BladeKey key, const Signature& sig);
SignedBlade undual_blade(BladeKey key, const Signature& sig);

} // namespace gakit
