// Presentations (quiver + rewriting rules + optional differential),
// substitutions between them, and differential checks.
#ifndef KNOTCAT_DG_HPP
#define KNOTCAT_DG_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rewrite.hpp"

namespace knotcat {

struct Presentation {
  std::string name;
  QuiverPtr quiver;
  RewriteSystem rules;
  std::map<ArrowId, Element> differential;  // missing entries mean d = 0

  Element nf(const Element& e) const { return normal_form(e, rules); }
  Element parse(const std::string& s) const { return nf(parse_element(quiver, s)); }
  Element arrow(std::string_view n) const { return Element::arrow(quiver, quiver->arrow_id(n)); }
  Element id(std::string_view obj) const { return Element::identity(quiver, quiver->object_id(obj)); }
  Element zero(ObjectId s, ObjectId t) const { return Element(quiver, s, t); }

  // d on a generator; inverse atoms use d(x^-1) = -x^-1 d(x) x^-1.
  Element d(ArrowId a) const {
    const Arrow& ar = quiver->arrow(a);
    auto it = differential.find(a);
    if (it != differential.end()) return it->second;
    if (ar.inverse_atom) {
      auto jt = differential.find(ar.inverse);
      if (jt != differential.end() && !jt->second.is_zero()) {
        Element inv = Element::arrow(quiver, a);
        return nf(-(inv * jt->second * inv));
      }
    }
    return Element(quiver, ar.source, ar.target);
  }
};

using PresentationPtr = std::shared_ptr<const Presentation>;

inline std::shared_ptr<Presentation> make_presentation(std::string name, QuiverPtr q) {
  auto p = std::make_shared<Presentation>();
  p->name = std::move(name);
  p->quiver = q;
  p->rules = RewriteSystem(q);
  return p;
}

// Adds x x^-1 -> e and x^-1 x -> e for every inverse pair.
inline void add_inverse_rules(Presentation& p) {
  for (std::size_t a = 0; a < p.quiver->arrow_count(); ++a) {
    const Arrow& ar = p.quiver->arrow(static_cast<ArrowId>(a));
    if (ar.inverse < 0 || ar.inverse_atom) continue;
    ArrowId x = static_cast<ArrowId>(a), y = ar.inverse;
    p.rules.add({x, y}, Element::identity(p.quiver, ar.target));
    p.rules.add({y, x}, Element::identity(p.quiver, ar.source));
  }
}

// Leibniz rule d(fg) = d(f) g + (-1)^|f| f d(g), applied term by term.
inline Element extend_differential(const Presentation& p, const Element& e) {
  Element out(p.quiver, e.source(), e.target());
  for (auto& [path, c] : e.terms()) {
    int sign_deg = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      Element di = p.d(path[i]);
      Laurent sc = (sign_deg % 2 == 0) ? c : -c;
      for (auto& [dp, dc] : di.terms()) {
        Path np(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i));
        np.insert(np.end(), dp.begin(), dp.end());
        np.insert(np.end(), path.begin() + static_cast<std::ptrdiff_t>(i + 1), path.end());
        out.add_term(np, sc * dc);
      }
      sign_deg += p.quiver->arrow(path[i]).degree;
    }
  }
  return p.nf(out);
}

struct DifferentialIssue {
  std::string generator;
  std::string problem;
  Element residue;
};

struct DifferentialReport {
  std::vector<DifferentialIssue> issues;
  std::size_t checked = 0;
  bool ok() const { return issues.empty(); }
};

// d^2 = 0 on generators, d of degree -1 preserving endpoints, and
// compatibility of d with every rewriting rule.
inline DifferentialReport check_d_squared(const Presentation& p) {
  DifferentialReport rep;
  const Quiver& q = *p.quiver;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    ArrowId a = static_cast<ArrowId>(i);
    const Arrow& ar = q.arrow(a);
    Element da = p.d(a);
    ++rep.checked;
    if (!da.is_zero()) {
      if (da.source() != ar.source || da.target() != ar.target)
        rep.issues.push_back({ar.name, "d changes endpoints", da});
      else if (!da.is_homogeneous() || da.degree() != ar.degree - 1)
        rep.issues.push_back({ar.name, "d does not have degree -1", da});
    }
    Element dd = extend_differential(p, da);
    if (!dd.is_zero()) rep.issues.push_back({ar.name, "d^2 != 0", dd});
  }
  for (auto& r : p.rules.rules()) {
    ++rep.checked;
    Element lhs = Element::path(p.quiver, r.lhs);
    Element diff = extend_differential(p, lhs) - extend_differential(p, r.rhs);
    diff = p.nf(diff);
    if (!diff.is_zero())
      rep.issues.push_back({path_string(q, r.lhs, 0), "d incompatible with rule", diff});
  }
  return rep;
}

class SubstitutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A functor between presentations given on generators. Images are kept in
// normal form; images of inverse atoms are derived from invertible monomials.
class Substitution {
 public:
  Substitution() = default;
  Substitution(PresentationPtr source, PresentationPtr target, std::vector<ObjectId> objects)
      : source_(std::move(source)), target_(std::move(target)), objects_(std::move(objects)) {
    if (objects_.size() != source_->quiver->object_count())
      throw SubstitutionError("object map has wrong size");
    images_.resize(source_->quiver->arrow_count());
    explicit_.assign(source_->quiver->arrow_count(), false);
  }

  // Objects matched by name.
  static Substitution by_object_names(PresentationPtr source, PresentationPtr target) {
    std::vector<ObjectId> objs;
    for (auto& o : source->quiver->objects()) objs.push_back(target->quiver->object_id(o.name));
    return Substitution(std::move(source), std::move(target), std::move(objs));
  }

  static Substitution identity(const PresentationPtr& p) {
    Substitution s = by_object_names(p, p);
    for (std::size_t a = 0; a < p->quiver->arrow_count(); ++a)
      s.set(static_cast<ArrowId>(a), Element::arrow(p->quiver, static_cast<ArrowId>(a)));
    return s;
  }

  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  ObjectId object(ObjectId o) const { return objects_.at(o); }
  const std::vector<ObjectId>& object_map() const { return objects_; }

  void set(ArrowId a, const Element& image) {
    const Arrow& ar = source_->quiver->arrow(a);
    if (image.quiver() != target_->quiver)
      throw SubstitutionError("image of " + ar.name + " lives in another quiver");
    if (image.source() != objects_[ar.source] || image.target() != objects_[ar.target])
      throw SubstitutionError("image of " + ar.name + " has wrong endpoints");
    if (!image.is_zero() && (!image.is_homogeneous() || image.degree() != ar.degree))
      throw SubstitutionError("image of " + ar.name + " has wrong degree");
    images_[a] = target_->nf(image);
    explicit_[a] = true;
    if (ar.inverse >= 0 && !explicit_[ar.inverse]) {
      auto inv = invert_monomial(*images_[a]);
      images_[ar.inverse] = inv;
    }
  }
  void set(std::string_view arrow, const Element& image) { set(source_->quiver->arrow_id(arrow), image); }
  void set(std::string_view arrow, const std::string& image) { set(arrow, target_->parse(image)); }
  void set(std::string_view arrow, const char* image) { set(arrow, std::string(image)); }

  bool has(ArrowId a) const { return images_.at(a).has_value(); }

  const Element& image(ArrowId a) const {
    const auto& img = images_.at(a);
    if (!img) throw SubstitutionError("no image for generator " + source_->quiver->arrow(a).name);
    return *img;
  }
  const Element& image(std::string_view a) const { return image(source_->quiver->arrow_id(a)); }

  Element apply(const Element& e) const {
    if (e.quiver() != source_->quiver) throw SubstitutionError("element not in the source presentation");
    Element out(target_->quiver, objects_[e.source()], objects_[e.target()]);
    for (auto& [path, c] : e.terms()) {
      if (path.empty()) {
        out += Element::identity(target_->quiver, objects_[e.source()], c);
        continue;
      }
      Element acc = image(path.back());
      for (std::size_t i = path.size() - 1; i-- > 0;) {
        if (acc.is_zero()) break;
        acc = target_->nf(image(path[i]) * acc);
      }
      out += c * acc;
    }
    return target_->nf(out);
  }

  // Generators whose images differ between two substitutions.
  std::vector<ArrowId> differences(const Substitution& other) const {
    std::vector<ArrowId> bad;
    for (std::size_t a = 0; a < images_.size(); ++a) {
      const Arrow& ar = source_->quiver->arrow(static_cast<ArrowId>(a));
      if (ar.inverse_atom) continue;
      if (!has(static_cast<ArrowId>(a)) || !other.has(static_cast<ArrowId>(a)) ||
          image(static_cast<ArrowId>(a)) != other.image(static_cast<ArrowId>(a)))
        bad.push_back(static_cast<ArrowId>(a));
    }
    return bad;
  }

 private:
  std::optional<Element> invert_monomial(const Element& img) const {
    auto mono = img.as_monomial();
    if (!mono || !mono->second.is_unit()) return std::nullopt;
    Path inv;
    for (auto it = mono->first.rbegin(); it != mono->first.rend(); ++it) {
      ArrowId i = target_->quiver->arrow(*it).inverse;
      if (i < 0) return std::nullopt;
      inv.push_back(i);
    }
    if (inv.empty()) return Element::identity(target_->quiver, img.source(), mono->second.unit_inverse());
    return target_->nf(Element::path(target_->quiver, inv, mono->second.unit_inverse()));
  }

  PresentationPtr source_, target_;
  std::vector<ObjectId> objects_;
  std::vector<std::optional<Element>> images_;
  std::vector<bool> explicit_;
};

// (f o g): apply g first.
inline Substitution compose(const Substitution& f, const Substitution& g) {
  if (g.target() != f.source()) throw SubstitutionError("substitutions are not composable");
  std::vector<ObjectId> objs;
  for (ObjectId o : g.object_map()) objs.push_back(f.object(o));
  Substitution r(g.source(), f.target(), objs);
  const Quiver& q = *g.source()->quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    if (q.arrow(id).inverse_atom || !g.has(id)) continue;
    r.set(id, f.apply(g.image(id)));
  }
  // Inverse atoms whose images were not derivable from monomials.
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    if (q.arrow(id).inverse_atom && !r.has(id) && g.has(id)) r.set(id, f.apply(g.image(id)));
  }
  return r;
}

// Moves an element between quivers along arrow and object maps.
inline Element transport(const Element& e, const QuiverPtr& to,
                         const std::function<ArrowId(ArrowId)>& arrow_map,
                         const std::function<ObjectId(ObjectId)>& object_map) {
  Element out(to, object_map(e.source()), object_map(e.target()));
  for (auto& [p, c] : e.terms()) {
    Path np;
    np.reserve(p.size());
    for (ArrowId a : p) np.push_back(arrow_map(a));
    out.add_term(np, c);
  }
  return out;
}

inline Element transport_by_name(const Element& e, const QuiverPtr& to) {
  const Quiver& from = *e.quiver();
  return transport(
      e, to, [&](ArrowId a) { return to->arrow_id(from.arrow(a).name); },
      [&](ObjectId o) { return to->object_id(from.object(o).name); });
}

// Checks that a substitution sends every rule to an identity in the target.
inline std::vector<std::string> rule_violations(const Substitution& s) {
  std::vector<std::string> bad;
  const Presentation& src = *s.source();
  for (auto& r : src.rules.rules()) {
    Element lhs = Element::path(src.quiver, r.lhs);
    if (s.apply(lhs) != s.apply(r.rhs)) bad.push_back(path_string(*src.quiver, r.lhs, 0));
  }
  return bad;
}

// Checks s o d = d o s on generators.
inline std::vector<std::string> chain_map_violations(const Substitution& s) {
  std::vector<std::string> bad;
  const Presentation& src = *s.source();
  for (std::size_t a = 0; a < src.quiver->arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    Element lhs = s.apply(src.d(id));
    Element rhs = extend_differential(*s.target(), s.image(id));
    if (lhs != rhs) bad.push_back(src.quiver->arrow(id).name);
  }
  return bad;
}

}  // namespace knotcat

#endif
