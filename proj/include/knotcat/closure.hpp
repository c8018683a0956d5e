// Closures of braids: categorical closure, writhe-adjusted Psi, the knot DG
// category (closed form and cylinder pushout), the endomorphism DGA at
// object 1, the fully noncommutative link DG category and the Burau cone.
#ifndef KNOTCAT_CLOSURE_HPP
#define KNOTCAT_CLOSURE_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylinder.hpp"
#include "json_io.hpp"
#include "operators.hpp"

namespace knotcat {

class ClosureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<int>;  // +i for x_i, -i for x_i^-1
using LaurentMatrix = std::vector<std::vector<Laurent>>;

inline std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : "");
  }
  return s;
}

inline Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline Word concat_words(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

// Reads a free-group monomial as a word.
inline Word element_to_word(const Element& e) {
  auto mono = e.as_monomial();
  if (!mono && e.terms().empty()) return {};
  if (!mono || !mono->second.is_one()) throw ClosureError("element " + e.str() + " is not a group word");
  Word w;
  const Quiver& q = *e.quiver();
  for (ArrowId a : mono->first) {
    const Arrow& ar = q.arrow(a);
    w.push_back(ar.inverse_atom ? -ar.copy : ar.copy);
  }
  return w;
}

inline std::string matrix_string(const LaurentMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += (i ? ", [" : "[");
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].str();
    s += "]";
  }
  return s + "]";
}

enum class ClosureKind { Group, ModuleMatrix, Category, Algebra };

inline std::string kind_name(ClosureKind k) {
  switch (k) {
    case ClosureKind::Group: return "group";
    case ClosureKind::ModuleMatrix: return "module-matrix";
    case ClosureKind::Category: return "k-category";
    default: return "algebra";
  }
}

struct ClosurePresentation {
  ClosureKind kind = ClosureKind::Group;
  std::string op;
  std::vector<std::string> generators;
  std::vector<Word> relators;          // groups
  LaurentMatrix matrix;                // modules: one row per relation
  PresentationPtr category;            // linear settings, objects identified along orbits
  std::vector<Element> relations;
};

// Burau matrix with rows the coefficient vectors of the images of x_i.
inline LaurentMatrix matrix_of(const Substitution& s) {
  const Quiver& q = *s.source()->quiver;
  int n = static_cast<int>(q.arrow_count());
  LaurentMatrix m(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i)
    for (auto& [p, c] : s.image(i).terms()) {
      if (p.size() != 1) throw ClosureError("Burau image is not linear");
      m[i][q.arrow(p[0]).copy - 1] += c;
    }
  return m;
}

inline LaurentMatrix identity_minus(const LaurentMatrix& m) {
  LaurentMatrix r = m;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = (i == j ? Laurent(1) : Laurent()) - m[i][j];
  return r;
}

// The quotient of A^(n) by the object identifications of beta: objects in one
// orbit of the object map collapse onto the least member.
inline std::pair<PresentationPtr, std::vector<ObjectId>> collapse_objects(const Substitution& beta) {
  const Quiver& q = *beta.source()->quiver;
  std::vector<ObjectId> rep(q.object_count());
  std::iota(rep.begin(), rep.end(), 0);
  std::function<ObjectId(ObjectId)> find = [&](ObjectId o) { return rep[o] == o ? o : rep[o] = find(rep[o]); };
  for (std::size_t o = 0; o < q.object_count(); ++o) {
    ObjectId a = find(static_cast<ObjectId>(o)), b = find(beta.object(static_cast<ObjectId>(o)));
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  auto nq = std::make_shared<Quiver>();
  std::vector<ObjectId> to(q.object_count(), -1);
  for (std::size_t o = 0; o < q.object_count(); ++o)
    if (find(static_cast<ObjectId>(o)) == static_cast<ObjectId>(o))
      to[o] = nq->add_object(q.object(static_cast<ObjectId>(o)).name);
  for (std::size_t o = 0; o < q.object_count(); ++o) to[o] = to[find(static_cast<ObjectId>(o))];
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(static_cast<ArrowId>(a));
    if (ar.inverse_atom) continue;
    if (ar.inverse >= 0) nq->add_invertible(ar.name, to[ar.source], to[ar.target], ar.stem, ar.copy);
    else nq->add_arrow(ar.name, to[ar.source], to[ar.target], ar.degree, ar.stem, ar.copy);
  }
  auto P = make_presentation(beta.source()->name, nq);
  for (auto& r : beta.source()->rules.rules()) {
    Path l;
    for (ArrowId a : r.lhs) l.push_back(nq->arrow_id(q.arrow(a).name));
    P->rules.add(l, transport(r.rhs, nq, [&](ArrowId a) { return nq->arrow_id(q.arrow(a).name); },
                             [&](ObjectId o) { return to[o]; }));
  }
  return {P, to};
}

inline ClosurePresentation categorical_closure(const YBOperator& op, const BraidWord& b) {
  Substitution beta = braid_action_endo(op, b);
  const Quiver& q = *beta.source()->quiver;
  ClosurePresentation cp;
  cp.op = op.name;
  for (auto& a : q.arrows())
    if (!a.inverse_atom) cp.generators.push_back(a.name);
  if (op.name == "artin" || op.name == "negative_control") {
    cp.kind = ClosureKind::Group;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(static_cast<ArrowId>(a));
      if (ar.inverse_atom) continue;
      cp.relators.push_back(concat_words(element_to_word(beta.image(static_cast<ArrowId>(a))), {-ar.copy}));
    }
    return cp;
  }
  if (op.name == "burau") {
    cp.kind = ClosureKind::ModuleMatrix;
    cp.matrix = identity_minus(matrix_of(beta));
    return cp;
  }
  auto [P, to] = collapse_objects(beta);
  cp.kind = P->quiver->object_count() == 1 ? ClosureKind::Algebra : ClosureKind::Category;
  cp.category = P;
  auto move = [&](const Element& e) {
    return P->nf(transport(e, P->quiver, [&](ArrowId a) { return P->quiver->arrow_id(q.arrow(a).name); },
                           [&](ObjectId o) { return to[o]; }));
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    if (q.arrow(id).inverse_atom) continue;
    Element r = move(beta.image(id)) - move(Element::arrow(beta.source()->quiver, id));
    cp.relations.push_back(P->nf(r));
  }
  return cp;
}

// Psi = beta o (theta chi^-w amalg id). Without torsion and coloring this is beta.
inline Substitution writhe_adjusted_psi(const YBOperator& op, const BraidWord& b, const std::string& coloring = "") {
  Substitution beta = braid_action_endo(op, b);
  bool colored = !coloring.empty() && coloring != "id";
  if (!op.has_torsion() && !colored) return beta;
  if (strand_orbits(b).component_count() != 1)
    throw ClosureError("writhe-adjusted closure needs a braid closing to a knot");
  if (!op.coproduct) throw ClosureError("operator " + op.name + " has no strand coproduct");
  int w = writhes(b).total;
  Substitution twist = compose(op.coloring(coloring), power(op.torsion(w > 0), std::abs(w)));
  return compose(beta, coproduct_map(op, b.strands, {twist}));
}

// Shared operator instances so that algebras and generators are cached.
inline const YBOperator& mu_central_op() {
  static const YBOperator op = gmv_mu_central_operator();
  return op;
}
inline const YBOperator& gmv_op() {
  static const YBOperator op = gmv_operator();
  return op;
}

struct Resolution {
  PresentationPtr B;
  PresentationPtr A;
  Substitution p;
};

// Semi-free B: a: 1 -> 0, a*: 0 -> 1, xi: 1 -> 1 of degree 1, d(xi) = a* a - (mu - 1) e_1.
inline Resolution resolution_B() {
  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  q->add_object("1");
  q->add_arrow("a", 1, 0, 0);
  q->add_arrow("a*", 0, 1, 0);
  ArrowId xi = q->add_arrow("xi", 1, 1, 1);
  auto B = make_presentation("B", q);
  B->differential[xi] = parse_element(q, "a* a - [mu - 1] e_1");
  Resolution r;
  r.B = B;
  r.A = mu_central_op().algebra(1);
  r.p = Substitution::by_object_names(r.B, r.A);
  r.p.set("a", r.A->arrow("a1"));
  r.p.set("a*", r.A->arrow("a1*"));
  r.p.set("xi", r.A->zero(r.A->quiver->object_id("1"), r.A->quiver->object_id("1")));
  return r;
}

inline CylinderNaming knot_cylinder_naming() {
  CylinderNaming nm;
  nm.prime = [](const std::string& n) { return n + "'"; };
  nm.shift = [](const std::string& n) {
    if (n == "a") return std::string("b");
    if (n == "a*") return std::string("b*");
    if (n == "xi") return std::string("eta");
    return "s" + n;
  };
  return nm;
}

inline Cylinder knot_cylinder() { return baues_lemaire_cylinder(resolution_B().B, knot_cylinder_naming()); }

struct LinkDGCategory {
  PresentationPtr dg;
  std::vector<std::string> component_objects;
  std::vector<std::string> parameters;
  std::vector<int> marked_strands;
  std::vector<int> writhes;
  int strands = 1;
};

inline std::string knot_dg_name(const BraidWord& b) { return "knot_dg(" + b.str() + ")"; }

inline void require_knot(const BraidWord& b) {
  if (strand_orbits(b).component_count() != 1) throw ClosureError("braid does not close to a knot");
}

// Def. of the knot DG category written out directly.
inline PresentationPtr knot_dg_closed_form(const BraidWord& b, const std::string& coloring = "theta_lambda") {
  require_knot(b);
  int n = b.strands;
  PresentationPtr A = mu_central_op().algebra(n);
  Substitution psi = writhe_adjusted_psi(mu_central_op(), b, coloring);
  auto q = std::make_shared<Quiver>(*A->quiver);
  for (int i = 1; i <= n; ++i) {
    q->add_arrow(idx("b", i), 1, 0, 1, "b", i);
    q->add_arrow(idx("b", i) + "*", 0, 1, 1, "b*", i);
    q->add_arrow(idx("eta", i), 1, 1, 2, "eta", i);
  }
  auto P = make_presentation(knot_dg_name(b), q);
  for (auto& r : A->rules.rules()) P->rules.add(r.lhs, transport_by_name(r.rhs, q));
  auto el = [&](const std::string& s) { return P->parse(s); };
  for (int i = 1; i <= n; ++i) {
    std::string a = idx("a", i), as = a + "*", bb = idx("b", i), bs = bb + "*";
    Element pa = transport_by_name(psi.image(a), q), pas = transport_by_name(psi.image(as), q);
    P->differential[q->arrow_id(bb)] = P->nf(pa - el(a));
    P->differential[q->arrow_id(bs)] = P->nf(pas - el(as));
    P->differential[q->arrow_id(idx("eta", i))] = P->nf(-(el(bs) * el(a)) - pas * el(bb));
  }
  return P;
}

// The pushout of A^(n) <- B^(n) amalg B^(n) -> Cyl(B)^(n), the left map being
// (Psi o p, p) on the two ends of the cylinder.
inline PresentationPtr knot_dg_pushout(const BraidWord& b, const std::string& coloring = "theta_lambda") {
  require_knot(b);
  int n = b.strands;
  PresentationPtr A = mu_central_op().algebra(n);
  Substitution psi = writhe_adjusted_psi(mu_central_op(), b, coloring);
  Cylinder cy = knot_cylinder();
  PresentationPtr C = copies(cy.cyl, n);
  const Quiver& cq = *C->quiver;
  std::map<ArrowId, Element> images;
  ObjectId one = A->quiver->object_id("1");
  for (int j = 1; j <= n; ++j) {
    std::string a = idx("a", j), as = a + "*";
    images.emplace(cq.arrow_id(a), psi.image(a));
    images.emplace(cq.arrow_id(as), psi.image(as));
    images.emplace(cq.arrow_id(a + "'"), A->arrow(a));
    images.emplace(cq.arrow_id(as + "'"), A->arrow(as));
    images.emplace(cq.arrow_id(idx("xi", j)), A->zero(one, one));
    images.emplace(cq.arrow_id(idx("xi", j) + "'"), A->zero(one, one));
  }
  return pushout_along_generators(A, C, images, knot_dg_name(b));
}

inline std::string canonical_json(const Presentation& p) { return to_json(p).dump(); }

inline void require_d_squared(const Presentation& p) {
  DifferentialReport rep = check_d_squared(p);
  if (!rep.ok())
    throw ClosureError(p.name + ": " + rep.issues.front().problem + " on " + rep.issues.front().generator + ": " +
                       rep.issues.front().residue.str());
}

inline LinkDGCategory knot_dg_category(const BraidWord& b, const std::string& coloring = "theta_lambda") {
  PresentationPtr closed = knot_dg_closed_form(b, coloring);
  PresentationPtr pushed = knot_dg_pushout(b, coloring);
  if (canonical_json(*closed) != canonical_json(*pushed))
    throw ClosureError("pushout and closed form of the knot DG category disagree");
  require_d_squared(*closed);
  LinkDGCategory c;
  c.dg = closed;
  c.component_objects = {"1"};
  c.parameters = {"lambda", "mu"};
  c.marked_strands = {1};
  c.writhes = {writhes(b).total};
  c.strands = b.strands;
  return c;
}

// ------------------------------------------------------------ knot DGA

inline std::string dga_name(char g, int i, int j) {
  return std::string(1, g) + std::to_string(i) + "_" + std::to_string(j);
}

// Rewrites endomorphisms of object 1 of a knot DG category in the DGA
// generators A_ij = -a_i* a_j, B_ij = b_i* a_j, C_ij = a_i* b_j,
// D_ij = b_i* b_j, e_i = -eta_i, with a_i* a_i = mu - 1.
class DgaTranslator {
 public:
  DgaTranslator(PresentationPtr C, PresentationPtr dga) : C_(std::move(C)), dga_(std::move(dga)) {}

  Element translate(const Element& e) const {
    const Quiver& q = *C_->quiver;
    ObjectId one = q.object_id("1");
    if (e.source() != one || e.target() != one) throw ClosureError("element is not an endomorphism of object 1");
    Trie root;
    for (auto& [p, c] : e.terms()) {
      Trie* t = &root;
      for (ArrowId a : p) {
        auto& child = t->next[a];
        if (!child) child = std::make_unique<Trie>();
        t = child.get();
      }
      t->coeff += c;
    }
    Element out(dga_->quiver, 0, 0);
    State s{Element::identity(dga_->quiver, 0), {}};
    Path seen;
    walk(root, s, seen, out);
    return out;
  }

 private:
  // The DGA value of x y for x in {a_i*, b_i*} and y in {a_j, b_j}.
  Element pair(const Arrow& x, const Arrow& y) const {
    const QuiverPtr& dq = dga_->quiver;
    int a = x.copy, b = y.copy;
    if (x.stem == "a*" && y.stem == "a") {
      if (a == b) return Element::identity(dq, 0, Laurent::variable("mu") - Laurent(1));
      return Element::arrow(dq, dq->arrow_id(dga_name('A', a, b)), Laurent(-1));
    }
    char g = x.stem == "b*" ? (y.stem == "a" ? 'B' : 'D') : 'C';
    return Element::arrow(dq, dq->arrow_id(dga_name(g, a, b)));
  }

  struct Trie {
    Laurent coeff;
    std::map<ArrowId, std::unique_ptr<Trie>> next;
  };

  // Partial value of a path prefix: the part ending at object 1, and one
  // partial sum per unpaired starred arrow.
  struct State {
    Element closed;
    std::map<ArrowId, Element> open;
  };

  // Paths are read left to right over a trie so shared prefixes are
  // translated once; T_k = e_0 + a_k a_k* and T_k^-1 = e_0 - mu^-1 a_k a_k*.
  void walk(const Trie& t, const State& s, Path& seen, Element& out) const {
    if (!t.coeff.is_zero()) {
      if (!s.open.empty()) throw fail(seen);
      out += t.coeff * s.closed;
    }
    for (auto& [a, child] : t.next) {
      seen.push_back(a);
      walk(*child, step(s, a, seen), seen, out);
      seen.pop_back();
    }
  }

  ClosureError fail(const Path& p) const {
    return ClosureError("path " + path_string(*C_->quiver, p, 0) + " is not expressible at object 1");
  }

  State step(const State& s, ArrowId id, const Path& seen) const {
    const Quiver& q = *C_->quiver;
    const QuiverPtr& dq = dga_->quiver;
    const Arrow& x = q.arrow(id);
    State r{Element(dq, 0, 0), {}};
    if (x.stem == "eta") {
      if (!s.open.empty()) throw fail(seen);
      r.closed = s.closed * Element::arrow(dq, dq->arrow_id(idx("e", x.copy)), Laurent(-1));
    } else if (x.stem == "a*" || x.stem == "b*") {
      if (!s.open.empty()) throw fail(seen);
      r.open.emplace(id, s.closed);
    } else if (x.stem == "a" || x.stem == "b") {
      if (s.open.empty()) throw fail(seen);
      for (auto& [o, acc] : s.open) r.closed += acc * pair(q.arrow(o), x);
    } else if (x.stem == "T" || x.stem == "T^-1") {
      if (s.open.empty()) throw fail(seen);
      const Arrow& ak = q.arrow(q.arrow_id(idx("a", x.copy)));
      ArrowId aks = q.arrow_id(idx("a", x.copy) + "*");
      Laurent c = x.stem == "T" ? Laurent(1) : -Laurent::variable("mu", -1);
      Element through(dq, 0, 0);
      for (auto& [o, acc] : s.open) through += c * (acc * pair(q.arrow(o), ak));
      r.open = s.open;
      auto it = r.open.find(aks);
      if (it == r.open.end()) r.open.emplace(aks, through);
      else it->second += through;
    } else {
      throw fail(seen);
    }
    return r;
  }

  PresentationPtr C_, dga_;
};

struct KnotDGA {
  PresentationPtr dga;
  PresentationPtr category;
  std::shared_ptr<DgaTranslator> translator;
  int strands = 1;
};

// Differentials are computed for generators of degree <= max_degree.
inline KnotDGA knot_dga_at_1(const LinkDGCategory& cat, int max_degree = 2) {
  const Presentation& C = *cat.dg;
  int n = cat.strands;
  auto q = std::make_shared<Quiver>();
  q->add_object("1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) q->add_arrow(dga_name('A', i, j), 0, 0, 0);
  for (char g : {'B', 'C'})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) q->add_arrow(dga_name(g, i, j), 0, 0, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) q->add_arrow(dga_name('D', i, j), 0, 0, 2);
  for (int i = 1; i <= n; ++i) q->add_arrow(idx("e", i), 0, 0, 2);
  auto P = make_presentation("knot_dga(" + C.name + ")", q);
  auto tr = std::make_shared<DgaTranslator>(cat.dg, P);
  auto el = [&](const std::string& s) { return C.parse(s); };
  auto set_d = [&](const std::string& gen, const Element& def) {
    if (q->arrow(q->arrow_id(gen)).degree > max_degree) return;
    Element d = tr->translate(extend_differential(C, def));
    if (!d.is_zero()) P->differential[q->arrow_id(gen)] = d;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::string ai = idx("a", i), aj = idx("a", j), bi = idx("b", i), bj = idx("b", j);
      if (i != j) set_d(dga_name('A', i, j), -(el(ai + "*") * el(aj)));
      set_d(dga_name('B', i, j), el(bi + "*") * el(aj));
      set_d(dga_name('C', i, j), el(ai + "*") * el(bj));
      set_d(dga_name('D', i, j), el(bi + "*") * el(bj));
    }
  for (int i = 1; i <= n; ++i) set_d(idx("e", i), -el(idx("eta", i)));
  KnotDGA k;
  k.dga = P;
  k.category = cat.dg;
  k.translator = tr;
  k.strands = n;
  return k;
}

// Humphries-Magnus action against the mu-central GMV action read through
// A_ij = -a_i* a_j, with a_ij = A_ij for i < j and -mu^-1 A_ij for i > j.
inline std::vector<std::string> hm_transport_mismatches(int n) {
  static const YBOperator hm = humphries_magnus_operator();
  const YBOperator& gm = mu_central_op();
  PresentationPtr A = gm.algebra(n), H = hm.algebra(n);
  auto q = std::make_shared<Quiver>();
  q->add_object("1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) q->add_arrow(dga_name('A', i, j), 0, 0, 0);
  PresentationPtr D = make_presentation("A_ij(" + std::to_string(n) + ")", q);
  DgaTranslator tr(A, D);
  Laurent mu = Laurent::variable("mu");
  std::map<ArrowId, Element> lower_gen;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        Element a = H->arrow(hm_name(i, j));
        lower_gen.emplace(q->arrow_id(dga_name('A', i, j)), i < j ? a : -mu * a);
      }
  auto lower = [&](const Element& x) {
    Element out(H->quiver, 0, 0);
    for (auto& [p, c] : x.terms()) {
      Element t = Element::identity(H->quiver, 0, c);
      for (ArrowId a : p) t = t * lower_gen.at(a);
      out += t;
    }
    return out;
  };
  std::vector<std::string> bad;
  for (int k = 1; k < n; ++k)
    for (bool inv : {false, true}) {
      Substitution s = gm.generator(n, k, inv), h = hm.generator(n, k, inv);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          Element img = A->nf(-(s.image(idx("a", i) + "*") * s.image(idx("a", j))));
          Element via = lower(tr.translate(img));
          if (i > j) via = -Laurent::variable("mu", -1) * via;
          const Element& direct = h.image(hm_name(i, j));
          if (via != direct)
            bad.push_back("s" + std::to_string(k) + (inv ? "^-1" : "") + " on " + hm_name(i, j) + ": transported " +
                          via.str() + ", direct " + direct.str());
        }
    }
  return bad;
}

// ------------------------------------------- fully noncommutative link DG

// Objects 0 and one vertex per component carrying lambda_i, mu_i loops.
// T_j is eliminated in favour of e_0 + a_j a_j*, which keeps the system
// confluent without a central mu.
inline LinkDGCategory fnc_link_dg_category(const BraidWord& b) {
  OrbitPartition orb = strand_orbits(b);
  WritheReport wr = writhes(b);
  int n = b.strands, r = orb.component_count();
  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  for (int i = 1; i <= r; ++i) q->add_object(std::to_string(i), i);
  auto comp = [&](int j) { return orb.component_of[j] + 1; };
  for (int i = 1; i <= r; ++i) {
    q->add_invertible(idx("lambda", i), i, i, "lambda", i);
    q->add_invertible(idx("mu", i), i, i, "mu", i);
  }
  for (int j = 1; j <= n; ++j) {
    int i = comp(j);
    q->add_arrow(idx("a", j), i, 0, 0, "a", j);
    q->add_arrow(idx("a", j) + "*", 0, i, 0, "a*", j);
    auto [t, ti] = q->add_invertible(idx("T", j), 0, 0, "T", j);
    q->set_weight(t, 3);
    q->set_weight(ti, 4);
    q->add_arrow(idx("b", j), i, 0, 1, "b", j);
    q->add_arrow(idx("b", j) + "*", 0, i, 1, "b*", j);
    q->add_arrow(idx("eta", j), i, i, 2, "eta", j);
  }
  auto P = make_presentation("fnc(" + b.str() + ")", q);
  for (int i = 1; i <= r; ++i) {
    std::vector<ArrowId> atoms;
    for (auto stem : {"lambda", "mu"}) {
      atoms.push_back(q->arrow_id(idx(stem, i)));
      atoms.push_back(q->arrow_id(idx(stem, i) + "^-1"));
    }
    for (std::size_t s = 0; s < atoms.size(); ++s)
      for (std::size_t t = s + 1; t < atoms.size(); ++t)
        if (q->arrow(atoms[s]).inverse != atoms[t]) P->rules.add_oriented({atoms[t], atoms[s]}, {atoms[s], atoms[t]});
    for (auto stem : {"lambda", "mu"}) {
      ArrowId x = q->arrow_id(idx(stem, i)), y = q->arrow_id(idx(stem, i) + "^-1");
      P->rules.add({x, y}, Element::identity(q, i));
      P->rules.add({y, x}, Element::identity(q, i));
    }
  }
  for (int j = 1; j <= n; ++j) {
    int i = comp(j);
    std::string a = idx("a", j), as = a + "*", mu = idx("mu", i);
    P->rules.add({q->arrow_id(as), q->arrow_id(a)}, parse_element(q, mu + " - e_" + std::to_string(i)));
    P->rules.add({q->arrow_id(idx("T", j))}, parse_element(q, "e_0 + " + a + " " + as));
    P->rules.add({q->arrow_id(idx("T", j) + "^-1")}, parse_element(q, "e_0 - " + a + " " + mu + "^-1 " + as));
  }

  // beta-bar on A~^(n), moved to this quiver with strand objects collapsed.
  Substitution beta = braid_action_endo(gmv_op(), b);
  const Quiver& gq = *beta.source()->quiver;
  auto move = [&](const Element& e) {
    return P->nf(transport(
        e, q, [&](ArrowId a) { return q->arrow_id(gq.arrow(a).name); },
        [&](ObjectId o) { return gq.object(o).copy == 0 ? ObjectId(0) : ObjectId(comp(gq.object(o).copy)); }));
  };
  auto el = [&](const std::string& s) { return P->parse(s); };
  LinkDGCategory c;
  c.strands = n;
  for (int i = 1; i <= r; ++i) {
    c.component_objects.push_back(std::to_string(i));
    c.parameters.push_back(idx("lambda", i));
    c.parameters.push_back(idx("mu", i));
    c.marked_strands.push_back(orb.blocks[i - 1].front());
    c.writhes.push_back(wr.components[i - 1]);
  }
  for (int j = 1; j <= n; ++j) {
    int i = comp(j);
    bool marked = c.marked_strands[i - 1] == j;
    int w = wr.components[i - 1];
    std::string a = idx("a", j), as = a + "*", bb = idx("b", j), bs = bb + "*";
    Element pa = move(beta.image(gq.arrow_id(a))), pas = move(beta.image(gq.arrow_id(as)));
    if (marked) {
      std::string L = idx("lambda", i), M = idx("mu", i);
      Element right = el(words({L + "^-1", word_power(M, -w)}));
      Element left = el(words({L, word_power(M, w)}));
      pa = P->nf(pa * right);
      pas = P->nf(left * pas);
    }
    P->differential[q->arrow_id(bb)] = P->nf(pa - el(a));
    P->differential[q->arrow_id(bs)] = P->nf(pas - el(as));
    P->differential[q->arrow_id(idx("eta", j))] = P->nf(-(el(bs) * el(a)) - pas * el(bb));
  }
  c.dg = P;
  return c;
}

// Central specialization lambda_1 -> lambda, mu_1 -> mu of a one-component
// FNC category into the knot DG category; returns generators whose
// differentials disagree.
inline std::vector<std::string> fnc_specialization_mismatches(const BraidWord& b) {
  require_knot(b);
  LinkDGCategory f = fnc_link_dg_category(b);
  LinkDGCategory k = knot_dg_category(b);
  Substitution s = Substitution::by_object_names(f.dg, k.dg);
  const Quiver& fq = *f.dg->quiver;
  for (std::size_t a = 0; a < fq.arrow_count(); ++a) {
    const Arrow& ar = fq.arrow(static_cast<ArrowId>(a));
    if (ar.inverse_atom) continue;
    if (ar.stem == "lambda" || ar.stem == "mu")
      s.set(static_cast<ArrowId>(a), Element::identity(k.dg->quiver, k.dg->quiver->object_id("1"),
                                                       Laurent::variable(ar.stem)));
    else
      s.set(static_cast<ArrowId>(a), k.dg->arrow(ar.name));
  }
  std::vector<std::string> bad = rule_violations(s);
  for (std::size_t a = 0; a < fq.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    const Arrow& ar = fq.arrow(id);
    if (ar.stem != "b" && ar.stem != "b*" && ar.stem != "eta") continue;
    if (s.apply(f.dg->d(id)) != k.dg->d(k.dg->quiver->arrow_id(ar.name))) bad.push_back(ar.name);
  }
  return bad;
}

// ------------------------------------------------------------ Burau cone

// Standard Burau matrices multiplied out; independent of the substitution engine.
inline LaurentMatrix burau_matrix(const BraidWord& b) {
  int n = b.strands;
  auto identity = [n]() {
    LaurentMatrix m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  auto mul = [n](const LaurentMatrix& x, const LaurentMatrix& y) {
    LaurentMatrix r(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (x[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };
  Laurent t = Laurent::variable("t"), ti = Laurent::variable("t", -1);
  LaurentMatrix m = identity();
  for (int l : b.letters) {
    int k = std::abs(l) - 1;
    LaurentMatrix g = identity();
    g[k][k] = 0;
    g[k + 1][k + 1] = 0;
    if (l > 0) {
      g[k][k] = Laurent(1) - t;
      g[k][k + 1] = t;
      g[k + 1][k] = 1;
    } else {
      g[k][k + 1] = 1;
      g[k + 1][k] = ti;
      g[k + 1][k + 1] = Laurent(1) - ti;
    }
    m = mul(g, m);
  }
  return m;
}

// Fraction-free row echelon form over Z[t^+-1]; zero rows dropped.
inline LaurentMatrix row_echelon(LaurentMatrix m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t r = rank; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      if (!piv || (m[r][c].is_unit() && !m[*piv][c].is_unit()) ||
          (m[r][c].is_unit() == m[*piv][c].is_unit() && m[r][c].terms().size() < m[*piv][c].terms().size()))
        piv = r;
    }
    if (!piv) continue;
    std::swap(m[rank], m[*piv]);
    if (m[rank][c].is_unit()) {
      Laurent u = m[rank][c].unit_inverse();
      for (auto& x : m[rank]) x = u * x;
    }
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      Laurent f = m[r][c], p = m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = p * m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

struct BurauCone {
  int strands = 1;
  LaurentMatrix differential;  // degree 1 -> degree 0, rows are relations
  LaurentMatrix h0_relations;  // row echelon form of the differential
  int h0_free_rank_bound() const { return strands - static_cast<int>(h0_relations.size()); }
};

inline BurauCone burau_cone(const BraidWord& b) {
  BurauCone c;
  c.strands = b.strands;
  c.differential = identity_minus(burau_matrix(b));
  c.h0_relations = row_echelon(c.differential);
  return c;
}

}  // namespace knotcat

#endif
