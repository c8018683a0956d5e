// Elements of a path category: finite Laurent-linear combinations of
// composable paths with common endpoints. Paths are stored in written
// order, so [x, y] means x after y and needs source(x) == target(y).
#ifndef KNOTCAT_ELEMENT_HPP
#define KNOTCAT_ELEMENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "quiver.hpp"

namespace knotcat {

using Path = std::vector<ArrowId>;
using QuiverPtr = std::shared_ptr<const Quiver>;

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Total weight, then length, then lexicographic on arrow ids. With unit
// weights this is the usual length-lexicographic order.
struct PathLess {
  const std::vector<int>* weights = nullptr;

  int weight(const Path& p) const {
    if (!weights) return static_cast<int>(p.size());
    int w = 0;
    for (ArrowId a : p) w += (*weights)[a];
    return w;
  }
  bool operator()(const Path& a, const Path& b) const {
    if (weights) {
      int wa = weight(a), wb = weight(b);
      if (wa != wb) return wa < wb;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Path concat(const Path& a, const Path& b) {
  Path r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline int path_degree(const Quiver& q, const Path& p) {
  int d = 0;
  for (ArrowId a : p) d += q.arrow(a).degree;
  return d;
}

inline void check_composable(const Quiver& q, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (q.arrow(p[i]).source != q.arrow(p[i + 1]).target)
      throw CompositionError("arrows " + q.arrow(p[i]).name + " and " + q.arrow(p[i + 1]).name +
                             " are not composable");
  }
}

inline std::string path_string(const Quiver& q, const Path& p, ObjectId obj) {
  if (p.empty()) return "e_" + q.object(obj).name;
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += q.arrow(p[i]).name;
  }
  return s;
}

class Element {
 public:
  using TermMap = std::map<Path, Laurent, PathLess>;

  Element() = default;
  Element(QuiverPtr q, ObjectId source, ObjectId target)
      : quiver_(std::move(q)), source_(source), target_(target),
        terms_(PathLess{quiver_ ? &quiver_->weights() : nullptr}) {}

  static Element identity(QuiverPtr q, ObjectId obj, const Laurent& c = Laurent(1)) {
    Element e(std::move(q), obj, obj);
    e.add_term({}, c);
    return e;
  }
  static Element arrow(QuiverPtr q, ArrowId a, const Laurent& c = Laurent(1)) {
    const Arrow& ar = q->arrow(a);
    Element e(q, ar.source, ar.target);
    e.add_term({a}, c);
    return e;
  }
  static Element path(QuiverPtr q, const Path& p, const Laurent& c = Laurent(1)) {
    if (p.empty()) throw std::invalid_argument("empty path needs an object");
    check_composable(*q, p);
    ObjectId s = q->arrow(p.back()).source, t = q->arrow(p.front()).target;
    Element e(std::move(q), s, t);
    e.add_term(p, c);
    return e;
  }

  const QuiverPtr& quiver() const { return quiver_; }
  ObjectId source() const { return source_; }
  ObjectId target() const { return target_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Degree of the (homogeneous) element; zero elements report 0.
  int degree() const { return terms_.empty() ? 0 : path_degree(*quiver_, terms_.begin()->first); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (auto& [p, c] : terms_)
      if (path_degree(*quiver_, p) != d) return false;
    return true;
  }

  void add_term(const Path& p, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_parallel(o);
    for (auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_parallel(o);
    for (auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& [p, c] : a.terms_) c = -c;
    return a;
  }
  friend Element operator*(const Laurent& s, Element a) {
    if (s.is_zero()) {
      a.terms_.clear();
      return a;
    }
    for (auto& [p, c] : a.terms_) c = s * c;
    return a;
  }
  // Composition in written order: (a * b) applies b first.
  friend Element operator*(const Element& a, const Element& b) {
    if (a.quiver_ != b.quiver_) throw CompositionError("elements live in different quivers");
    if (a.source_ != b.target_)
      throw CompositionError("cannot compose: source " + a.quiver_->object(a.source_).name +
                             " != target " + a.quiver_->object(b.target_).name);
    Element r(a.quiver_, b.source_, a.target_);
    for (auto& [pa, ca] : a.terms_)
      for (auto& [pb, cb] : b.terms_) r.add_term(concat(pa, pb), ca * cb);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.quiver_ == b.quiver_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Single-term element with unit coefficient, if it is one.
  std::optional<std::pair<Path, Laurent>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  std::string str() const {
    if (!quiver_) return "0";
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Largest terms first, matching how polynomials are usually written.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [p, c] = *it;
      std::string cs = c.str();
      bool neg = false;
      Laurent mag = c;
      if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
        neg = true;
        mag = -c;
        cs = mag.str();
      }
      out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      if (!mag.is_one()) {
        if (mag.is_constant()) out << cs << " ";
        else out << "[" << cs << "] ";
      }
      out << path_string(*quiver_, p, source_);
    }
    return out.str();
  }

 private:
  void check_parallel(const Element& o) const {
    if (quiver_ != o.quiver_) throw CompositionError("elements live in different quivers");
    if (source_ != o.source_ || target_ != o.target_)
      throw CompositionError("cannot add elements with different endpoints");
  }

  QuiverPtr quiver_;
  ObjectId source_ = 0;
  ObjectId target_ = 0;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

// Parses the printed form: terms separated by " + " / " - ", each an optional
// integer or [laurent] coefficient followed by arrow names or e_<object>.
inline Element parse_element(const QuiverPtr& q, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  // Re-join bracketed coefficients that contain spaces.
  std::vector<std::string> merged;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (!tok[i].empty() && tok[i][0] == '[' && tok[i].back() != ']') {
      std::string acc = tok[i];
      while (++i < tok.size()) {
        acc += " " + tok[i];
        if (tok[i].back() == ']') break;
      }
      merged.push_back(acc);
    } else {
      merged.push_back(tok[i]);
    }
  }
  struct Raw {
    Laurent coeff;
    Path path;
    std::optional<ObjectId> identity;
  };
  std::vector<Raw> raws;
  Raw cur{Laurent(1), {}, std::nullopt};
  bool have = false;
  auto flush = [&]() {
    if (!have) throw ParseError("empty term in '" + text + "'");
    raws.push_back(cur);
    cur = Raw{Laurent(1), {}, std::nullopt};
    have = false;
  };
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const std::string& t = merged[i];
    if (t == "+" || t == "-") {
      if (have) flush();
      else if (!raws.empty() || i > 0) throw ParseError("dangling operator in '" + text + "'");
      if (t == "-") cur.coeff = -cur.coeff;
      continue;
    }
    if (t[0] == '[') {
      cur.coeff = cur.coeff * Laurent::parse(t.substr(1, t.size() - 2));
      continue;
    }
    if (t[0] == '-' && t.size() > 1 && !have) {
      cur.coeff = -cur.coeff;
      std::string rest = t.substr(1);
      if (std::isdigit(static_cast<unsigned char>(rest[0]))) {
        cur.coeff = cur.coeff * Laurent::parse(rest);
        continue;
      }
      merged[i] = rest;
      --i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      cur.coeff = cur.coeff * Laurent::parse(t);
      have = true;
      continue;
    }
    if (t.rfind("e_", 0) == 0 && !q->find_arrow(t)) {
      cur.identity = q->object_id(t.substr(2));
      have = true;
      continue;
    }
    cur.path.push_back(q->arrow_id(t));
    have = true;
  }
  if (have) flush();
  if (raws.empty()) throw ParseError("empty element '" + text + "'");
  std::optional<ObjectId> src, tgt;
  std::vector<Element> parts;
  for (auto& r : raws) {
    if (!r.path.empty()) {
      if (r.identity) throw ParseError("identity mixed with arrows in '" + text + "'");
      parts.push_back(Element::path(q, r.path, r.coeff));
    } else if (r.identity) {
      parts.push_back(Element::identity(q, *r.identity, r.coeff));
    } else {
      parts.push_back(Element());  // bare scalar, endpoints fixed below
      parts.back() = Element();
    }
    if (!parts.back().quiver()) continue;
    src = parts.back().source();
    tgt = parts.back().target();
  }
  if (!src) throw ParseError("cannot infer endpoints of scalar '" + text + "'");
  Element result(q, *src, *tgt);
  for (std::size_t i = 0; i < raws.size(); ++i) {
    if (!parts[i].quiver()) {
      if (*src != *tgt) throw ParseError("scalar term in non-endomorphism '" + text + "'");
      result += Element::identity(q, *src, raws[i].coeff);
    } else {
      result += parts[i];
    }
  }
  return result;
}

}  // namespace knotcat

#endif
