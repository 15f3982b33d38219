#include "gakit/blades.hpp"

#include <algorithm>

namespace gakit {

Signature Signature::make(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) fail(ErrorCode::InvalidArgument, "signature counts must be nonnegative");
  int d = p + q + r;
  if (d > 16) fail(ErrorCode::InvalidArgument, "signature dimension exceeds 16");
  Signature sig;
  sig.p = p;
  sig.q = q;
  sig.r = r;
  sig.dim = d;
  sig.start_index = r > 0 ? 0 : 1;
  sig.metric.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) sig.metric[static_cast<size_t>(i)] = i < r ? 0 : (i < r + p ? 1 : -1);
  return sig;
}

std::vector<BladeKey> canonical_order(const Signature& sig) {
  std::vector<BladeKey> keys(sig.blade_count());
  for (size_t k = 0; k < keys.size(); ++k) keys[k] = static_cast<BladeKey>(k);
  std::sort(keys.begin(), keys.end(), [](BladeKey a, BladeKey b) {
    int ga = grade(a), gb = grade(b);
    return ga != gb ? ga < gb : a < b;
  });
  return keys;
}

std::string blade_name(BladeKey key, const Signature& sig) {
  if (key >= sig.blade_count()) fail(ErrorCode::InvalidArgument, "blade key out of range for this algebra");
  std::string name = "e";
  for (int i = 0; i < sig.dim; ++i) {
    if (!(key & (1u << i))) continue;
    int digit = i + sig.start_index;
    if (digit > 9) fail(ErrorCode::InvalidArgument, "digit-based blade names require dimension <= " + std::to_string(10 - sig.start_index));
    name.push_back(static_cast<char>('0' + digit));
  }
  return name;
}

namespace {

// Shared parser core: validates syntax, reports digits outside the algebra
// through `in_algebra` rather than deciding the error policy itself.
ParsedBlade parse_core(std::string_view name, const Signature& sig) {
  if (name.empty() || name[0] != 'e') fail(ErrorCode::ParseError, "blade name must start with 'e'");
  ParsedBlade out;
  out.in_algebra = true;
  int prev = -1;
  for (size_t i = 1; i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9') fail(ErrorCode::ParseError, std::string("invalid character '") + c + "' in blade name");
    int digit = c - '0';
    if (digit <= prev) fail(ErrorCode::ParseError, "blade name digits must be distinct and ascending");
    prev = digit;
    int index = digit - sig.start_index;
    if (index < 0 || index >= sig.dim) {
      out.in_algebra = false;
      continue;
    }
    out.key |= 1u << index;
  }
  return out;
}

} // namespace

BladeKey parse_blade_name(std::string_view name, const Signature& sig) {
  ParsedBlade parsed = parse_core(name, sig);
  if (!parsed.in_algebra)
    fail(ErrorCode::ParseError, "blade name '" + std::string(name) + "' names basis vectors outside this algebra");
  return parsed.key;
}

ParsedBlade parse_blade_name_lenient(std::string_view name, const Signature& sig) {
  return parse_core(name, sig);
}

SignedBlade gp_blades(BladeKey a, BladeKey b, const Signature& sig) {
  // Transposition count to merge the two ascending index lists: for each bit
  // of b, the number of higher bits set in a.
  int swaps = 0;
  for (BladeKey t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int coef = (swaps & 1) ? -1 : 1;
  for (BladeKey common = a & b; common != 0; common &= common - 1)
    coef *= sig.metric_of(std::countr_zero(common));
  return SignedBlade{coef, a ^ b};
}

int reverse_sign(BladeKey key) {
  int k = grade(key);
  return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// Reordering sign of a * b for disjoint keys; the metric never enters.
int permutation_sign(BladeKey a, BladeKey b) {
  int swaps = 0;
  for (BladeKey t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

} // namespace

SignedBlade dual_blade(BladeKey key, const Signature& sig) {
  BladeKey comp = (~key) & sig.pseudoscalar_key();
  return SignedBlade{permutation_sign(key, comp), comp};
}

SignedBlade undual_blade(BladeKey key, const Signature& sig) {
  BladeKey comp = (~key) & sig.pseudoscalar_key();
  // Inverse of dual_blade: the sign dual_blade(comp) attaches to key.
  return SignedBlade{permutation_sign(comp, key), comp};
}

} // namespace gakit
