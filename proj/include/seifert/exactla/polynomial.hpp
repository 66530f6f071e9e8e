#ifndef SEIFERT_EXACTLA_POLYNOMIAL_HPP
#define SEIFERT_EXACTLA_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "seifert/exactla/types.hpp"

namespace seifert::exactla {

/// Dense univariate integer polynomial, coefficients from degree 0 upward.
/// The zero polynomial is the empty vector.
using IntPoly = std::vector<BigInt>;

enum class RootRegion { Positive, Negative };

namespace poly {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

inline int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline BigInt evaluate(const IntPoly& p, const BigInt& x) {
  BigInt acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * BigInt(k));
  trim(d);
  return d;
}

/// Nonnegative gcd of the coefficients.
inline BigInt content(const IntPoly& p) {
  BigInt g(0);
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

/// Divides out the content; the sign of the leading coefficient is kept.
inline IntPoly primitive_part(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  const BigInt g = content(p);
  for (auto& c : p) c /= g;
  return p;
}

/// r with lc(b)^(deg a - deg b + 1) * a = q * b + r and deg r < deg b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
  const long db = degree(b);
  const BigInt& lb = b.back();
  while (degree(a) >= db) {
    const long shift = degree(a) - db;
    const BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (long k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

/// Greatest common divisor in Z[t] via the primitive remainder sequence;
/// returned primitive with positive leading coefficient.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

/// Splits p = t^k * q with q(0) != 0.
inline std::pair<IntPoly, std::size_t> strip_zero_roots(IntPoly p) {
  trim(p);
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  p.erase(p.begin(), p.begin() + static_cast<long>(k));
  return {p, k};
}

/// Sturm sequence p, p', -rem(...), ... with every member rescaled by a
/// positive constant, which leaves all sign counts unchanged.
inline std::vector<IntPoly> sturm_sequence(IntPoly p) {
  trim(p);
  std::vector<IntPoly> seq;
  if (p.empty()) return seq;
  seq.push_back(primitive_part(p));
  IntPoly d = derivative(seq.back());
  if (d.empty()) return seq;
  seq.push_back(primitive_part(d));
  while (true) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    const long power = degree(a) - degree(b) + 1;
    const bool flip = !(b.back() < 0 && power % 2 != 0);
    if (flip)
      for (auto& c : r) c = -c;
    seq.push_back(primitive_part(std::move(r)));
  }
  return seq;
}

inline std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline std::size_t sturm_variations_at_zero(const std::vector<IntPoly>& seq) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(sign(p.front()));
  return sign_changes(s);
}

inline std::size_t sturm_variations_at_infinity(const std::vector<IntPoly>& seq, bool negative) {
  std::vector<int> s;
  for (const auto& p : seq) {
    int v = sign(p.back());
    if (negative && degree(p) % 2 != 0) v = -v;
    s.push_back(v);
  }
  return sign_changes(s);
}

/// Number of distinct real roots of p in (0, inf) or (-inf, 0). Requires
/// p(0) != 0.
inline std::size_t count_distinct_roots(const IntPoly& p, RootRegion region) {
  if (p.empty() || p.front() == 0)
    throw std::invalid_argument("count_distinct_roots: polynomial vanishes at 0");
  const auto seq = sturm_sequence(p);
  const std::size_t at_zero = sturm_variations_at_zero(seq);
  if (region == RootRegion::Positive) return at_zero - sturm_variations_at_infinity(seq, false);
  return sturm_variations_at_infinity(seq, true) - at_zero;
}

/// Real roots in the region counted with multiplicity. Uses the chain
/// P_0 = p, P_{j+1} = gcd(P_j, P_j'), whose j-th member has exactly the roots
/// of multiplicity > j, each once.
inline std::size_t count_roots_with_multiplicity(const IntPoly& p, RootRegion region) {
  std::size_t total = 0;
  IntPoly current = primitive_part(p);
  while (degree(current) > 0) {
    total += count_distinct_roots(current, region);
    current = gcd(current, derivative(current));
  }
  return total;
}

/// Sign variations of the coefficient sequence of p(t) (or p(-t)). For a
/// polynomial with only real roots this equals the exact root count.
inline std::size_t descartes_sign_changes(const IntPoly& p, RootRegion region) {
  std::vector<int> s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int v = sign(p[k]);
    if (region == RootRegion::Negative && k % 2 != 0) v = -v;
    s.push_back(v);
  }
  return sign_changes(s);
}

}  // namespace poly
}  // namespace seifert::exactla

#endif  // SEIFERT_EXACTLA_POLYNOMIAL_HPP
