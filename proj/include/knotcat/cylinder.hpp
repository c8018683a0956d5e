// Baues-Lemaire cylinders of semi-free DG categories, disjoint copies and
// pushouts along generator inclusions.
#ifndef KNOTCAT_CYLINDER_HPP
#define KNOTCAT_CYLINDER_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dg.hpp"

namespace knotcat {

struct CylinderNaming {
  std::function<std::string(const std::string&)> prime = [](const std::string& n) { return n + "'"; };
  std::function<std::string(const std::string&)> shift = [](const std::string& n) { return "s" + n; };
};

class NotSemiFree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Cylinder {
  PresentationPtr base;
  PresentationPtr cyl;
  Substitution i;        // base -> cyl, onto the unprimed copy
  Substitution i_prime;  // base -> cyl, onto the primed copy
  Substitution pi;       // cyl -> base
  std::map<ArrowId, ArrowId> shift;        // base generator -> its shifted copy
  std::map<ArrowId, ArrowId> prime_of;     // base generator -> primed copy
  std::map<ArrowId, ArrowId> unprime_of;   // base generator -> unprimed copy

  // The (i, i')-biderivation S: base -> cyl of degree +1 extending x -> sx.
  Element S(const Element& e) const {
    const Presentation& B = *base;
    const Presentation& C = *cyl;
    Element out(C.quiver, i.object(e.source()), i.object(e.target()));
    for (auto& [path, c] : e.terms()) {
      int deg = 0;
      for (std::size_t k = 0; k < path.size(); ++k) {
        Element left = Element::identity(C.quiver, i.object(B.quiver->arrow(path[0]).target));
        for (std::size_t m = 0; m < k; ++m) left = left * i.image(path[m]);
        Element right = Element::identity(C.quiver, i.object(B.quiver->arrow(path[k]).source));
        for (std::size_t m = k + 1; m < path.size(); ++m) right = right * i_prime.image(path[m]);
        Element term = left * S_generator(path[k]) * right;
        out += (deg % 2 == 0 ? c : -c) * term;
        deg += B.quiver->arrow(path[k]).degree;
      }
    }
    return C.nf(out);
  }

  Element S_generator(ArrowId a) const {
    const Arrow& ar = base->quiver->arrow(a);
    if (ar.inverse_atom) {
      // S(x^-1) = -x^-1 S(x) x'^-1 for x of degree 0
      Element xinv = i.image(a), xpinv = i_prime.image(a);
      return cyl->nf(-(xinv * S_generator(ar.inverse) * xpinv));
    }
    return Element::arrow(cyl->quiver, shift.at(a));
  }

  // Homotopy h on the cylinder: h(x) = 0, h(x') = -sx, h(sx) = 0, extended
  // as an (i o pi, id)-biderivation. Satisfies id - i o pi = d h + h d.
  Element homotopy(const Element& e) const {
    const Presentation& C = *cyl;
    Element out(C.quiver, e.source(), e.target());
    for (auto& [path, c] : e.terms()) {
      int deg = 0;
      for (std::size_t k = 0; k < path.size(); ++k) {
        Element hk = homotopy_generator(path[k]);
        if (!hk.is_zero()) {
          Element left = Element::identity(C.quiver, C.quiver->arrow(path[0]).target);
          for (std::size_t m = 0; m < k; ++m) left = left * i.apply(pi.image(path[m]));
          Element right = Element::identity(C.quiver, C.quiver->arrow(path[k]).source);
          for (std::size_t m = k + 1; m < path.size(); ++m) right = right * Element::arrow(C.quiver, path[m]);
          out += (deg % 2 == 0 ? c : -c) * (left * hk * right);
        }
        deg += C.quiver->arrow(path[k]).degree;
      }
    }
    return C.nf(out);
  }

  Element homotopy_generator(ArrowId a) const {
    const Presentation& C = *cyl;
    const Arrow& ar = C.quiver->arrow(a);
    for (auto& [b, p] : prime_of) {
      if (p != a) continue;
      const Arrow& bar = base->quiver->arrow(b);
      if (bar.inverse_atom) {
        // h(x'^-1) = -(i pi)(x'^-1) h(x') x'^-1
        Element lhs = i.image(b);
        Element hx = homotopy_generator(prime_of.at(bar.inverse));
        return C.nf(-(lhs * hx * Element::arrow(C.quiver, a)));
      }
      return -Element::arrow(C.quiver, shift.at(b));
    }
    return Element(C.quiver, ar.source, ar.target);
  }
};

// Builds Cyl(B) for a semi-free B whose only rules are inverse cancellations.
inline Cylinder baues_lemaire_cylinder(const PresentationPtr& B, const CylinderNaming& naming = {}) {
  const Quiver& bq = *B->quiver;
  for (auto& r : B->rules.rules()) {
    bool cancel = r.lhs.size() == 2 && bq.arrow(r.lhs[0]).inverse == r.lhs[1];
    if (!cancel) throw NotSemiFree("presentation " + B->name + " has a non-free relation");
  }
  auto q = std::make_shared<Quiver>();
  for (auto& o : bq.objects()) q->add_object(o.name, o.copy);
  Cylinder cy;
  std::map<ArrowId, ArrowId> unp, pr, sh;
  auto add_family = [&](std::map<ArrowId, ArrowId>& into, const std::function<std::string(const std::string&)>& nm) {
    for (std::size_t a = 0; a < bq.arrow_count(); ++a) {
      const Arrow& ar = bq.arrow(static_cast<ArrowId>(a));
      if (ar.inverse_atom) continue;
      if (ar.inverse >= 0) {
        auto [x, y] = q->add_invertible(nm(ar.name), ar.source, ar.target);
        into[static_cast<ArrowId>(a)] = x;
        into[ar.inverse] = y;
      } else {
        into[static_cast<ArrowId>(a)] = q->add_arrow(nm(ar.name), ar.source, ar.target, ar.degree);
      }
    }
  };
  add_family(unp, [](const std::string& n) { return n; });
  add_family(pr, naming.prime);
  for (std::size_t a = 0; a < bq.arrow_count(); ++a) {
    const Arrow& ar = bq.arrow(static_cast<ArrowId>(a));
    if (ar.inverse_atom) continue;
    sh[static_cast<ArrowId>(a)] = q->add_arrow(naming.shift(ar.name), ar.source, ar.target, ar.degree + 1);
  }
  auto C = make_presentation("Cyl(" + B->name + ")", q);
  add_inverse_rules(*C);
  PresentationPtr Cc = C;

  cy.base = B;
  cy.cyl = Cc;
  cy.shift = sh;
  cy.prime_of = pr;
  cy.unprime_of = unp;
  cy.i = Substitution::by_object_names(B, Cc);
  cy.i_prime = Substitution::by_object_names(B, Cc);
  for (auto& [b, c] : unp)
    if (!bq.arrow(b).inverse_atom) cy.i.set(b, Element::arrow(q, c));
  for (auto& [b, c] : pr)
    if (!bq.arrow(b).inverse_atom) cy.i_prime.set(b, Element::arrow(q, c));

  // Differential: i(dx), i'(dx), and d(sx) = x - x' - S(dx).
  for (auto& [b, c] : unp) {
    if (bq.arrow(b).inverse_atom) continue;
    Element db = B->d(b);
    if (!db.is_zero()) C->differential[c] = cy.i.apply(db);
  }
  for (auto& [b, c] : pr) {
    if (bq.arrow(b).inverse_atom) continue;
    Element db = B->d(b);
    if (!db.is_zero()) C->differential[c] = cy.i_prime.apply(db);
  }
  for (auto& [b, s] : sh) {
    Element ds = Element::arrow(q, unp[b]) - Element::arrow(q, pr[b]) - cy.S(B->d(b));
    C->differential[s] = C->nf(ds);
  }

  cy.pi = Substitution::by_object_names(Cc, B);
  for (auto& [b, c] : unp)
    if (!bq.arrow(b).inverse_atom) cy.pi.set(c, Element::arrow(B->quiver, b));
  for (auto& [b, c] : pr)
    if (!bq.arrow(b).inverse_atom) cy.pi.set(c, Element::arrow(B->quiver, b));
  for (auto& [b, s] : sh) cy.pi.set(s, Element(B->quiver, bq.arrow(b).source, bq.arrow(b).target));
  return cy;
}

struct HomotopyIssue {
  std::string generator;
  Element residue;
};

// Checks (id - i pi)(g) = (d h + h d)(g) on every cylinder generator.
inline std::vector<HomotopyIssue> check_cylinder_homotopy(const Cylinder& cy) {
  std::vector<HomotopyIssue> bad;
  const Presentation& C = *cy.cyl;
  for (std::size_t a = 0; a < C.quiver->arrow_count(); ++a) {
    ArrowId g = static_cast<ArrowId>(a);
    Element ge = Element::arrow(C.quiver, g);
    Element lhs = ge - cy.i.apply(cy.pi.image(g));
    Element rhs = extend_differential(C, cy.homotopy(ge)) + cy.homotopy(C.d(g));
    Element res = C.nf(lhs - rhs);
    if (!res.is_zero()) bad.push_back({C.quiver->arrow(g).name, res});
  }
  return bad;
}

// n copies of P over shared objects; arrow "x" of copy j is named by `rename`.
inline PresentationPtr copies(const PresentationPtr& P, int n,
                              const std::function<std::string(const std::string&, int)>& rename =
                                  [](const std::string& s, int j) { return indexed_name(s, j); }) {
  const Quiver& pq = *P->quiver;
  auto q = std::make_shared<Quiver>();
  for (auto& o : pq.objects()) q->add_object(o.name, o.copy);
  std::vector<std::vector<ArrowId>> ids(n + 1, std::vector<ArrowId>(pq.arrow_count()));
  for (int j = 1; j <= n; ++j) {
    for (std::size_t a = 0; a < pq.arrow_count(); ++a) {
      const Arrow& ar = pq.arrow(static_cast<ArrowId>(a));
      if (ar.inverse_atom) continue;
      if (ar.inverse >= 0) {
        auto [x, y] = q->add_invertible(rename(ar.name, j), ar.source, ar.target, ar.name, j);
        ids[j][a] = x;
        ids[j][ar.inverse] = y;
      } else {
        ids[j][a] = q->add_arrow(rename(ar.name, j), ar.source, ar.target, ar.degree, ar.name, j);
      }
    }
  }
  auto out = make_presentation(P->name + "^(" + std::to_string(n) + ")", q);
  for (int j = 1; j <= n; ++j) {
    auto am = [&](ArrowId a) { return ids[j][a]; };
    auto om = [](ObjectId o) { return o; };
    for (auto& r : P->rules.rules()) {
      Path l;
      for (ArrowId a : r.lhs) l.push_back(ids[j][a]);
      out->rules.add(l, transport(r.rhs, q, am, om));
    }
    for (auto& [a, da] : P->differential) out->differential[ids[j][a]] = transport(da, q, am, om);
  }
  return out;
}

// Pushout of A <- (generators of C listed in `images`) -> C. Generators of C
// with an image in A are identified with it; the remaining generators are
// adjoined to A with differential obtained by pushing d_C forward.
inline PresentationPtr pushout_along_generators(const PresentationPtr& A, const PresentationPtr& C,
                                                const std::map<ArrowId, Element>& images,
                                                const std::string& name) {
  const Quiver& aq = *A->quiver;
  const Quiver& cq = *C->quiver;
  auto q = std::make_shared<Quiver>(aq);
  std::map<ArrowId, ArrowId> fresh;
  for (std::size_t a = 0; a < cq.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    const Arrow& ar = cq.arrow(id);
    if (images.count(id) || ar.inverse_atom) continue;
    ObjectId s = q->object_id(cq.object(ar.source).name), t = q->object_id(cq.object(ar.target).name);
    if (ar.inverse >= 0) {
      auto [x, y] = q->add_invertible(ar.name, s, t, ar.stem, ar.copy);
      fresh[id] = x;
      fresh[ar.inverse] = y;
    } else {
      fresh[id] = q->add_arrow(ar.name, s, t, ar.degree, ar.stem, ar.copy);
    }
  }
  auto P = make_presentation(name, q);
  for (auto& r : A->rules.rules()) P->rules.add(r.lhs, transport_by_name(r.rhs, q));
  for (auto& [a, da] : A->differential) P->differential[a] = transport_by_name(da, q);
  PresentationPtr Pc = P;
  Substitution phi = Substitution::by_object_names(C, Pc);
  for (auto& [c, img] : images) phi.set(c, transport_by_name(img, q));
  for (auto& [c, p] : fresh)
    if (!cq.arrow(c).inverse_atom) phi.set(c, Element::arrow(q, p));
  for (auto& [c, p] : fresh) {
    if (cq.arrow(c).inverse_atom) continue;
    Element d = phi.apply(C->d(c));
    if (!d.is_zero()) P->differential[p] = d;
  }
  return Pc;
}

}  // namespace knotcat

#endif
