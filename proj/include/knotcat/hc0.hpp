// Degree-0 homology of the knot DGA and the peripheral (cord) presentation
// of the knot category.
#ifndef KNOTCAT_HC0_HPP
#define KNOTCAT_HC0_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "points.hpp"

namespace knotcat {

// Multiplies by a monomial in lambda, mu so that both have minimal exponent
// 0 over all coefficients, then fixes the sign on the leading term.
inline Element normalize_relation(const Element& e) {
  if (e.is_zero()) return e;
  Monomial shift;
  for (const char* v : {"lambda", "mu"}) {
    int id = Variables::id(v);
    int lo = 0;
    bool first = true;
    for (auto& [p, c] : e.terms()) {
      if (c.is_zero()) continue;
      int m = c.min_exponent(id);
      lo = first ? m : std::min(lo, m);
      first = false;
    }
    if (lo != 0) shift.exps.emplace_back(id, -lo);
  }
  std::sort(shift.exps.begin(), shift.exps.end(), [](auto& a, auto& b) { return Variables::less(a.first, b.first); });
  Laurent u(shift, 1);
  Element r = u * e;
  const Laurent& lead = r.terms().rbegin()->second;
  if (lead.terms().rbegin()->second < 0) r = -r;
  return r;
}

inline std::vector<Element> dedupe_relations(const std::vector<Element>& rs) {
  std::vector<Element> out;
  std::set<std::string> seen;
  for (auto& r : rs) {
    if (r.is_zero()) continue;
    Element n = normalize_relation(r);
    if (seen.insert(to_json(n).dump()).second) out.push_back(n);
  }
  return out;
}

// Free algebra on a_ij (i != j) modulo d(B_ij), d(C_ij) of the knot DGA, with
// A_ij = a_ij for i < j and A_ij = -mu a_ij for i > j.
inline AlgebraPresentation hc0_presentation(const BraidWord& b) {
  require_knot(b);
  int n = b.strands;
  LinkDGCategory cat;
  cat.dg = knot_dg_closed_form(b);
  cat.strands = n;
  KnotDGA k = knot_dga_at_1(cat, 1);
  std::vector<std::string> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(hm_name(i, j));
  AlgebraPresentation H = make_algebra("hc0(" + b.str() + ")", gens);
  const Quiver& dq = *k.dga->quiver;
  std::map<ArrowId, Element> rescale;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Element a = H.algebra->arrow(hm_name(i, j));
      rescale.emplace(dq.arrow_id(dga_name('A', i, j)), i < j ? a : -Laurent::variable("mu") * a);
    }
  auto to_h = [&](const Element& x) {
    Element out(H.algebra->quiver, 0, 0);
    for (auto& [p, c] : x.terms()) {
      Element t = Element::identity(H.algebra->quiver, 0, c);
      for (ArrowId a : p) {
        auto it = rescale.find(a);
        if (it == rescale.end()) throw ClosureError("degree-0 residue contains " + dq.arrow(a).name);
        t = t * it->second;
      }
      out += t;
    }
    return out;
  };
  std::vector<Element> rels;
  for (char g : {'B', 'C'})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) rels.push_back(to_h(k.dga->d(dq.arrow_id(dga_name(g, i, j)))));
  H.relations = dedupe_relations(rels);
  return H;
}

// ------------------------------------------------------------ peripheral

struct PeripheralPresentation {
  GroupPresentation group;
  Word meridian;
  Word longitude;
  Word longitude_trace;          // before the framing correction
  int framing_correction = 0;    // exponent of m removed from the trace
  int writhe = 0;
  std::vector<Word> conjugators;  // x_i = g_i x_1 g_i^-1
  PresentationPtr category;       // k[pi]^+<a, a*> with objects 0, 1
  std::vector<Element> ideal;     // relations (1)-(3)
  std::vector<Element> object0;   // (m-1)(m-mu), (m-1)(l-lambda)
  AlgebraPresentation object1;    // cord algebra on c_jk = -alpha_j* alpha_k
};

inline std::string cord_name(int j, int k) { return "c" + std::to_string(j) + "_" + std::to_string(k); }

namespace detail {

// Splits a free-reduced conjugate W x_p W^-1 into (W, p).
inline std::pair<Word, int> split_conjugate(const Word& w) {
  if (w.size() % 2 == 0) throw ClosureError("image " + word_string(w) + " is not a conjugate of a generator");
  std::size_t h = w.size() / 2;
  Word pre(w.begin(), w.begin() + static_cast<long>(h));
  Word suf(w.begin() + static_cast<long>(h) + 1, w.end());
  if (w[h] < 0 || inverse_word(pre) != suf)
    throw ClosureError("image " + word_string(w) + " is not a conjugate of a generator");
  return {pre, w[h]};
}

// Expands alpha_j* w alpha_k in the cord generators: x_i -> e + alpha_i alpha_i*,
// x_i^-1 -> e - mu^-1 alpha_i alpha_i*, alpha_p* alpha_q -> -c_pq or mu - 1.
inline Element expand_cord(const AlgebraPresentation& A, const Word& w, int j, int k) {
  const QuiverPtr& q = A.algebra->quiver;
  Laurent mu = Laurent::variable("mu");
  auto pair = [&](int p, int r) {
    return p == r ? Element::identity(q, 0, mu - Laurent(1)) : Element::arrow(q, q->arrow_id(cord_name(p, r)), Laurent(-1));
  };
  // acc[p]: partial sums whose last open alpha* carries index p.
  std::map<int, Element> acc;
  acc.emplace(j, Element::identity(q, 0));
  for (int l : w) {
    int i = std::abs(l);
    Laurent c = l > 0 ? Laurent(1) : -Laurent::variable("mu", -1);
    Element add(q, 0, 0);
    for (auto& [p, e] : acc) add += c * (e * pair(p, i));
    auto it = acc.find(i);
    if (it == acc.end()) acc.emplace(i, add);
    else it->second += add;
  }
  Element out(q, 0, 0);
  for (auto& [p, e] : acc) out += e * pair(p, k);
  return out;
}

inline Element word_element(const PresentationPtr& P, const Word& w) {
  Element e = P->id("0");
  for (int l : w) e = e * P->arrow("x" + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : ""));
  return e;
}

}  // namespace detail

enum class LongitudeFraming { ExponentSum, Writhe };

// The longitude is the strand trace of x_1 times m^-k, where k is its
// exponent sum (linking number zero) or, optionally, the braid writhe.
inline PeripheralPresentation peripheral_presentation(const BraidWord& b,
                                                      LongitudeFraming framing = LongitudeFraming::ExponentSum) {
  require_knot(b);
  static const YBOperator artin = artin_operator();
  int n = b.strands;
  PeripheralPresentation P;
  P.group = knot_group_presentation(b);
  P.writhe = writhes(b).total;
  P.meridian = {1};

  Substitution beta = braid_action_endo(artin, b);
  std::vector<Word> W(n + 1);
  std::vector<int> target(n + 1), from(n + 1);
  for (int i = 1; i <= n; ++i) {
    auto [pre, p] = detail::split_conjugate(free_reduce(element_to_word(beta.image("x" + std::to_string(i)))));
    W[i] = pre;
    target[i] = p;
    from[p] = i;
  }
  P.conjugators.assign(n + 1, {});
  for (int p = 1, steps = 1; steps < n; ++steps) {
    int i = from[p];
    P.conjugators[i] = concat_words(W[i], P.conjugators[p]);
    p = i;
  }
  P.longitude_trace = concat_words(W[1], P.conjugators[target[1]]);
  int e = 0;
  for (int l : P.longitude_trace) e += l > 0 ? 1 : -1;
  if (framing == LongitudeFraming::Writhe) e = P.writhe;
  P.framing_correction = e;
  Word mpow(static_cast<std::size_t>(std::abs(e)), e > 0 ? -1 : 1);
  P.longitude = concat_words(P.longitude_trace, mpow);

  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  q->add_object("1");
  for (int i = 1; i <= n; ++i) q->add_invertible("x" + std::to_string(i), 0, 0, "x", i);
  q->add_arrow("a", 1, 0, 0);
  q->add_arrow("a*", 0, 1, 0);
  auto C = make_presentation("peripheral(" + b.str() + ")", q);
  P.category = C;
  Laurent lam = Laurent::variable("lambda"), mu = Laurent::variable("mu");
  Element m = detail::word_element(C, P.meridian), l = detail::word_element(C, P.longitude);
  Element a = C->arrow("a"), as = C->arrow("a*"), e0 = C->id("0"), e1 = C->id("1");
  P.ideal = {a * as + e0 - m, as * a + e1 - mu * e1, lam * a - l * a, lam * as - as * l};
  P.object0 = {(m - e0) * (m - mu * e0), (m - e0) * (l - lam * e0)};

  std::vector<std::string> gens;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) gens.push_back(cord_name(j, k));
  P.object1 = make_algebra("cord(" + b.str() + ")", gens);
  std::vector<Element> rels;
  auto E = [&](const Word& w, int j, int k) { return detail::expand_cord(P.object1, w, j, k); };
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (auto& r : P.group.relators) rels.push_back(E(r, j, k) - E({}, j, k));
  for (int j = 1; j <= n; ++j)
    for (int i = 2; i <= n; ++i) {
      rels.push_back(E(P.conjugators[i], j, 1) - E({}, j, i));
      rels.push_back(E(inverse_word(P.conjugators[i]), 1, j) - E({}, i, j));
    }
  for (int j = 1; j <= n; ++j) {
    rels.push_back(E(P.longitude, j, 1) - lam * E({}, j, 1));
    rels.push_back(E(P.longitude, 1, j) - lam * E({}, 1, j));
  }
  P.object1.relations = dedupe_relations(rels);
  return P;
}

}  // namespace knotcat

#endif
