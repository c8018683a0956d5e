// Alexander polynomials of braid closures, by Burau minors and by Fox
// calculus on the Artin presentation.
#ifndef KNOTCAT_ALEXANDER_HPP
#define KNOTCAT_ALEXANDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace knotcat {

using UPoly = std::vector<Integer>;  // ascending coefficients, no trailing zeros

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Laurent polynomial in t as t^shift * poly.
inline std::pair<UPoly, int> to_upoly(const Laurent& l) {
  if (l.is_zero()) return {{}, 0};
  int t = Variables::id("t");
  for (int v : l.variables())
    if (v != t) throw std::invalid_argument("expected a polynomial in t, got " + l.str());
  int lo = l.min_exponent(t), hi = l.max_exponent(t);
  UPoly p(hi - lo + 1, 0);
  for (auto& [m, c] : l.terms()) p[m.exponent(t) - lo] += c;
  trim(p);
  return {p, lo};
}

inline Laurent from_upoly(const UPoly& p, int shift = 0) {
  Laurent r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r += Laurent(p[i]) * Laurent::variable("t", static_cast<int>(i) + shift);
  return r;
}

inline Integer content(const UPoly& p) {
  Integer g = 0;
  for (auto& c : p) g = gcd(g, c);
  return g;
}

inline UPoly primitive_part(const UPoly& p) {
  Integer c = content(p);
  if (c == 0) return {};
  UPoly r = p;
  for (auto& x : r) x /= c;
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

// Pseudo-remainder of a by b: lc(b)^k a mod b.
inline UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    Integer la = a.back(), lb = b.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// gcd over Z[t] via the primitive polynomial remainder sequence.
inline UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return b.empty() ? UPoly{} : (b.back() < 0 ? primitive_part(b) : b);
  if (b.empty()) return a.back() < 0 ? UPoly([&] {
    UPoly r = a;
    for (auto& x : r) x = -x;
    return r;
  }()) : a;
  Integer c = gcd(content(a), content(b));
  UPoly x = primitive_part(a), y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = primitive_part(pseudo_remainder(x, y));
    x = y;
    y = r;
  }
  for (auto& v : x) v *= c;
  return x;
}

// Laurent gcd up to units: units t^k are stripped before taking the gcd.
inline Laurent laurent_gcd(const std::vector<Laurent>& ps) {
  UPoly g;
  for (auto& p : ps) g = upoly_gcd(g, to_upoly(p).first);
  return from_upoly(g);
}

inline Laurent determinant(const LaurentMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  if (n == 1) return m[0][0];
  Laurent r;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    LaurentMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Laurent> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    Laurent term = m[0][j] * determinant(sub);
    if (j % 2) r -= term;
    else r += term;
  }
  return r;
}

// All minors of size (rows - 1) x (cols - 1).
inline std::vector<Laurent> codimension_one_minors(const LaurentMatrix& m, std::size_t cols) {
  std::vector<Laurent> out;
  std::size_t rows = m.size();
  if (rows == 0 || cols == 0) return {Laurent(1)};
  for (std::size_t dr = 0; dr < rows; ++dr)
    for (std::size_t dc = 0; dc < cols; ++dc) {
      LaurentMatrix sub;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == dr) continue;
        std::vector<Laurent> row;
        for (std::size_t k = 0; k < cols; ++k)
          if (k != dc) row.push_back(m[i][k]);
        sub.push_back(row);
      }
      if (sub.size() != cols - 1) continue;
      Laurent d = determinant(sub);
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

// Divide by +-t^k so the lowest coefficient is the constant term and positive.
inline Laurent normalize_alexander(const Laurent& p) {
  if (p.is_zero()) return p;
  auto [u, shift] = to_upoly(p);
  (void)shift;
  if (u.front() < 0)
    for (auto& x : u) x = -x;
  return from_upoly(u);
}

inline bool equal_up_to_units(const Laurent& a, const Laurent& b) {
  return normalize_alexander(a) == normalize_alexander(b);
}

inline Laurent substitute_inverse_t(const Laurent& p) {
  auto [u, shift] = to_upoly(p);
  Laurent r;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) r += Laurent(u[i]) * Laurent::variable("t", -(static_cast<int>(i) + shift));
  return r;
}

struct AlexPoly {
  std::string method;
  std::optional<Laurent> polynomial;     // set for knots
  std::vector<Laurent> ideal_generators;  // the minors, for links
  bool symmetric = false;

  std::string str() const { return polynomial ? polynomial->str() : "(link: see ideal generators)"; }
};

// Abelianized Fox Jacobian: rows relators, columns generators, x_i -> t.
inline LaurentMatrix fox_jacobian(const GroupPresentation& g) {
  std::size_t n = g.generators.size();
  LaurentMatrix m;
  for (auto& r : g.relators) {
    std::vector<Laurent> row(n);
    int e = 0;
    for (int l : r) {
      std::size_t j = static_cast<std::size_t>(std::abs(l)) - 1;
      if (l > 0) {
        row[j] += Laurent::variable("t", e);
        ++e;
      } else {
        --e;
        row[j] -= Laurent::variable("t", e);
      }
    }
    m.push_back(row);
  }
  return m;
}

inline AlexPoly alexander_polynomial(const BraidWord& b, const std::string& method = "burau") {
  static const YBOperator burau = burau_operator();
  LaurentMatrix m;
  std::size_t cols = static_cast<std::size_t>(b.strands);
  if (method == "burau") {
    m = categorical_closure(burau, b).matrix;
  } else if (method == "fox") {
    m = fox_jacobian(knot_group_presentation(b));
  } else {
    throw std::invalid_argument("unknown Alexander method '" + method + "' (expected burau or fox)");
  }
  AlexPoly a;
  a.method = method;
  a.ideal_generators = codimension_one_minors(m, cols);
  if (strand_orbits(b).component_count() != 1) return a;
  Laurent g = normalize_alexander(laurent_gcd(a.ideal_generators));
  a.polynomial = g;
  a.symmetric = equal_up_to_units(g, substitute_inverse_t(g));
  return a;
}

}  // namespace knotcat

#endif
