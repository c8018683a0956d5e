// Braid actions on presented categories: the operator catalog and the
// Yang-Baxter, Reidemeister and sigma-naturality verifiers.
#ifndef KNOTCAT_OPERATORS_HPP
#define KNOTCAT_OPERATORS_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "braid.hpp"
#include "dg.hpp"

namespace knotcat {

class OperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string idx(const std::string& stem, int i) { return indexed_name(stem, i); }
inline std::string hm_name(int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); }

// Space-separated power of a token (empty for exponent 0).
inline std::string word_power(const std::string& x, int e) {
  std::string s;
  std::string tok = e > 0 ? x : x + "^-1";
  for (int i = 0; i < std::abs(e); ++i) s += (s.empty() ? "" : " ") + tok;
  return s;
}
inline std::string t_power(int k, int e) { return word_power(idx("T", k), e); }

inline std::string words(std::initializer_list<std::string> parts) {
  std::string s;
  for (auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += " ";
    s += p;
  }
  return s;
}

using ImageMap = std::vector<std::pair<std::string, std::string>>;

inline std::vector<ObjectId> identity_objects(const PresentationPtr& p) {
  std::vector<ObjectId> v(p->quiver->object_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<ObjectId>(i);
  return v;
}

// Builds an endomorphism from printed images; unlisted arrows are fixed.
inline Substitution substitution_from(const PresentationPtr& p, std::vector<ObjectId> objects,
                                      const ImageMap& images) {
  Substitution s(p, p, std::move(objects));
  const Quiver& q = *p->quiver;
  for (auto& [name, img] : images) s.set(q.arrow_id(name), p->parse(img));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    if (!s.has(id)) s.set(id, Element::arrow(p->quiver, id));
  }
  return s;
}

// ---------------------------------------------------------------- algebras

// Free group on x_1..x_n as a one-object category.
inline PresentationPtr free_group_algebra(int n) {
  auto q = std::make_shared<Quiver>();
  q->add_object("*");
  for (int i = 1; i <= n; ++i) q->add_invertible(idx("x", i), 0, 0, "x", i);
  auto p = make_presentation("F" + std::to_string(n), q);
  add_inverse_rules(*p);
  return p;
}

// The free module over Z[t^+-1] on x_1..x_n.
inline PresentationPtr burau_module(int n) {
  auto q = std::make_shared<Quiver>();
  q->add_object("*");
  for (int i = 1; i <= n; ++i) q->add_arrow(idx("x", i), 0, 0, 0, "x", i);
  return make_presentation("R^" + std::to_string(n), q);
}

// A~^(n): objects 0 and 1..n, a_i: i -> 0, a_i*: 0 -> i, T_i invertible at 0,
// with a_i a_i* = T_i - e_0.
inline PresentationPtr gmv_tilde_algebra(int n) {
  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  for (int i = 1; i <= n; ++i) q->add_object(std::to_string(i), i);
  for (int i = 1; i <= n; ++i) {
    q->add_arrow(idx("a", i), i, 0, 0, "a", i);
    q->add_arrow(idx("a", i) + "*", 0, i, 0, "a*", i);
    q->add_invertible(idx("T", i), 0, 0, "T", i);
  }
  auto p = make_presentation("A~^(" + std::to_string(n) + ")", q);
  for (int i = 1; i <= n; ++i)
    p->rules.add({q->arrow_id(idx("a", i)), q->arrow_id(idx("a", i) + "*")},
                 parse_element(q, idx("T", i) + " - e_0"));
  add_inverse_rules(*p);
  return p;
}

// Rules of the mu-central quotient for strand i. The last two rules complete
// the system: without them T a a* has two distinct normal forms.
inline void add_mu_central_rules(Presentation& p, int i) {
  const QuiverPtr& q = p.quiver;
  std::string a = idx("a", i), as = a + "*", T = idx("T", i), Ti = T + "^-1";
  ArrowId A = q->arrow_id(a), As = q->arrow_id(as), Tt = q->arrow_id(T), Tn = q->arrow_id(Ti);
  p.rules.add({As, A}, parse_element(q, "[mu - 1] e_1"));
  p.rules.add({A, As}, parse_element(q, T + " - e_0"));
  p.rules.add({Tt, A}, parse_element(q, "[mu] " + a));
  p.rules.add({As, Tt}, parse_element(q, "[mu] " + as));
  p.rules.add({Tt, Tn}, parse_element(q, "e_0"));
  p.rules.add({Tn, Tt}, parse_element(q, "e_0"));
  p.rules.add({Tn, A}, parse_element(q, "[mu^-1] " + a));
  p.rules.add({As, Tn}, parse_element(q, "[mu^-1] " + as));
  p.rules.add({Tt, Tt}, parse_element(q, "[mu + 1] " + T + " - [mu] e_0"));
  p.rules.add({Tn}, parse_element(q, "[1 + mu^-1] e_0 - [mu^-1] " + T));
}

enum class MuCentralRules { Completed, AsStated, Bare };

// A^(n): objects 0 and 1 shared by all strands, a_i: 1 -> 0, a_i*: 0 -> 1.
// AsStated omits the two completion rules; Bare keeps only a*a and aa*.
inline PresentationPtr gmv_mu_central_algebra(int n, MuCentralRules which = MuCentralRules::Completed) {
  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  q->add_object("1");
  for (int i = 1; i <= n; ++i) {
    q->add_arrow(idx("a", i), 1, 0, 0, "a", i);
    q->add_arrow(idx("a", i) + "*", 0, 1, 0, "a*", i);
    q->add_invertible(idx("T", i), 0, 0, "T", i);
  }
  auto p = make_presentation("A^(" + std::to_string(n) + ")", q);
  for (int i = 1; i <= n; ++i) {
    ArrowId A = q->arrow_id(idx("a", i)), As = q->arrow_id(idx("a", i) + "*");
    ArrowId Tt = q->arrow_id(idx("T", i)), Tn = q->arrow_id(idx("T", i) + "^-1");
    switch (which) {
      case MuCentralRules::Completed:
        add_mu_central_rules(*p, i);
        break;
      case MuCentralRules::AsStated:
        p->rules.add({As, A}, parse_element(q, "[mu - 1] e_1"));
        p->rules.add({A, As}, parse_element(q, idx("T", i) + " - e_0"));
        p->rules.add({Tt, A}, parse_element(q, "[mu] " + idx("a", i)));
        p->rules.add({As, Tt}, parse_element(q, "[mu] " + idx("a", i) + "*"));
        p->rules.add({Tt, Tn}, parse_element(q, "e_0"));
        p->rules.add({Tn, Tt}, parse_element(q, "e_0"));
        p->rules.add({Tn, A}, parse_element(q, "[mu^-1] " + idx("a", i)));
        p->rules.add({As, Tn}, parse_element(q, "[mu^-1] " + idx("a", i) + "*"));
        break;
      case MuCentralRules::Bare:
        p->rules.add({As, A}, parse_element(q, "[mu - 1] e_1"));
        p->rules.add({A, As}, parse_element(q, idx("T", i) + " - e_0"));
        break;
    }
  }
  return p;
}

// Free algebra on a_ij (i != j) over Z[mu^+-1], one object.
inline PresentationPtr humphries_magnus_algebra(int n) {
  auto q = std::make_shared<Quiver>();
  q->add_object("1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) q->add_arrow(hm_name(i, j), 0, 0, 0);
  return make_presentation("HM^(" + std::to_string(n) + ")", q);
}

// Commutative Laurent coefficients u^+-1 (one loop per stem at object 0),
// per strand, together with a_k: k -> 0, a_k*: 0 -> k. The optional ideal is
// a_k a_k* = T_k - e_0 and needs a stem named T.
struct CrispParisData {
  std::vector<std::string> stems{"T"};
  std::string x = "T";
  std::string y = "1";
  bool gmv_ideal = true;
};

inline PresentationPtr crisp_paris_algebra(const CrispParisData& data, int n) {
  if (data.stems.empty()) throw OperatorError("Crisp-Paris data needs at least one coefficient stem");
  if (data.gmv_ideal && std::find(data.stems.begin(), data.stems.end(), "T") == data.stems.end())
    throw OperatorError("the ideal a a* = T - 1 needs a coefficient named T");
  auto q = std::make_shared<Quiver>();
  q->add_object("0");
  for (int i = 1; i <= n; ++i) q->add_object(std::to_string(i), i);
  for (int i = 1; i <= n; ++i) {
    q->add_arrow(idx("a", i), i, 0, 0, "a", i);
    q->add_arrow(idx("a", i) + "*", 0, i, 0, "a*", i);
    for (auto& u : data.stems) q->add_invertible(idx(u, i), 0, 0, u, i);
  }
  auto p = make_presentation("CP^(" + std::to_string(n) + ")", q);
  for (int i = 1; i <= n; ++i) {
    if (data.gmv_ideal)
      p->rules.add({q->arrow_id(idx("a", i)), q->arrow_id(idx("a", i) + "*")},
                   parse_element(q, idx("T", i) + " - e_0"));
    // Loops of one strand commute.
    std::vector<ArrowId> atoms;
    for (auto& u : data.stems) {
      atoms.push_back(q->arrow_id(idx(u, i)));
      atoms.push_back(q->arrow_id(idx(u, i) + "^-1"));
    }
    for (std::size_t s = 0; s < atoms.size(); ++s)
      for (std::size_t t = s + 1; t < atoms.size(); ++t) {
        if (q->arrow(atoms[s]).inverse == atoms[t]) continue;
        p->rules.add_oriented({atoms[t], atoms[s]}, {atoms[s], atoms[t]});
      }
  }
  add_inverse_rules(*p);
  return p;
}

// A +-monomial of the coefficient ring as (sign, word in strand k).
inline std::pair<int, std::string> crisp_paris_word(const CrispParisData& data, const std::string& text, int k,
                                                    bool invert) {
  Laurent m = Laurent::parse(text);
  if (m.terms().size() != 1) throw OperatorError("Crisp-Paris coefficient '" + text + "' is not a monomial");
  const auto& [mono, c] = *m.terms().begin();
  if (c != 1 && c != -1) throw OperatorError("Crisp-Paris coefficient '" + text + "' is not invertible");
  std::string w;
  for (auto& [var, e] : mono.exps) {
    std::string name = Variables::name(var);
    if (std::find(data.stems.begin(), data.stems.end(), name) == data.stems.end())
      throw OperatorError("Crisp-Paris coefficient uses unknown variable " + name);
    w = words({w, word_power(idx(name, k), invert ? -e : e)});
  }
  return {c == 1 ? 1 : -1, w};
}

// ---------------------------------------------------------------- operators

struct YBOperator {
  std::string name;
  bool coproduct = true;  // A^(n) carries strand copies with metadata
  std::function<PresentationPtr(int)> make_algebra;
  std::function<Substitution(const PresentationPtr&, int k, bool inverse)> make_generator;
  // Declared torsion on A^(1); unset means trivial.
  std::function<Substitution(const PresentationPtr&, bool inverse)> make_torsion;
  std::map<std::string, std::function<Substitution(const PresentationPtr&)>> colorings;
  // Inverse of (sigma o i1, i1) on A^(2).
  std::function<Substitution(const PresentationPtr&)> make_left_unit_inverse;

  PresentationPtr algebra(int n) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->algebras.find(n);
    if (it != cache_->algebras.end()) return it->second;
    PresentationPtr p = make_algebra(n);
    cache_->algebras.emplace(n, p);
    return p;
  }
  Substitution generator(int n, int k, bool inverse = false) const {
    if (k < 1 || k >= n) throw BraidError("generator index out of range");
    PresentationPtr A = algebra(n);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto key = std::make_tuple(n, k, inverse);
    auto it = cache_->generators.find(key);
    if (it != cache_->generators.end()) return it->second;
    return cache_->generators.emplace(key, make_generator(A, k, inverse)).first->second;
  }
  Substitution torsion(bool inverse = false) const {
    PresentationPtr a1 = algebra(1);
    if (!make_torsion) return Substitution::identity(a1);
    return make_torsion(a1, inverse);
  }
  bool has_torsion() const { return static_cast<bool>(make_torsion); }
  Substitution coloring(const std::string& c) const {
    if (c.empty() || c == "id") return Substitution::identity(algebra(1));
    auto it = colorings.find(c);
    if (it == colorings.end()) throw OperatorError("operator " + name + " has no coloring '" + c + "'");
    return it->second(algebra(1));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, PresentationPtr> algebras;
    std::map<std::tuple<int, int, bool>, Substitution> generators;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline YBOperator artin_operator() {
  YBOperator op;
  op.name = "artin";
  op.make_algebra = free_group_algebra;
  op.make_generator = [](const PresentationPtr& A, int k, bool inverse) {
    std::string xk = idx("x", k), xl = idx("x", k + 1);
    if (!inverse) return substitution_from(A, identity_objects(A), {{xk, words({xk, xl, xk + "^-1"})}, {xl, xk}});
    return substitution_from(A, identity_objects(A), {{xk, xl}, {xl, words({xl + "^-1", xk, xl})}});
  };
  op.make_left_unit_inverse = [](const PresentationPtr& A2) {
    return substitution_from(A2, identity_objects(A2), {{"x1", "x2"}, {"x2", "x2^-1 x1 x2"}});
  };
  return op;
}

inline YBOperator burau_operator() {
  YBOperator op;
  op.name = "burau";
  op.make_algebra = burau_module;
  op.make_generator = [](const PresentationPtr& A, int k, bool inverse) {
    std::string xk = idx("x", k), xl = idx("x", k + 1);
    if (!inverse)
      return substitution_from(A, identity_objects(A), {{xk, "[1 - t] " + xk + " + [t] " + xl}, {xl, xk}});
    return substitution_from(A, identity_objects(A), {{xk, xl}, {xl, "[t^-1] " + xk + " + [1 - t^-1] " + xl}});
  };
  op.make_left_unit_inverse = [](const PresentationPtr& A2) {
    return substitution_from(A2, identity_objects(A2), {{"x1", "x2"}, {"x2", "[t^-1] x1 + [1 - t^-1] x2"}});
  };
  return op;
}

// Images of the GMV / Wada generator with parameter N; object k and k+1
// are swapped when the strands own their objects.
inline Substitution wada_generator(const PresentationPtr& A, int k, bool inverse, int N) {
  int l = k + 1;
  std::string ak = idx("a", k), al = idx("a", l), Tk = idx("T", k), Tl = idx("T", l);
  std::vector<ObjectId> objs = identity_objects(A);
  auto ok = A->quiver->find_object(std::to_string(k));
  if (ok && A->quiver->object(*ok).copy == k) {
    ObjectId ol = A->quiver->object_id(std::to_string(l));
    std::swap(objs[*ok], objs[ol]);
  }
  ImageMap m;
  if (!inverse) {
    m = {{ak, words({t_power(k, N), al})},
         {ak + "*", words({al + "*", t_power(k, -N)})},
         {Tk, words({t_power(k, N), Tl, t_power(k, -N)})},
         {Tk + "^-1", words({t_power(k, N), Tl + "^-1", t_power(k, -N)})},
         {al, ak},
         {al + "*", ak + "*"},
         {Tl, Tk},
         {Tl + "^-1", Tk + "^-1"}};
  } else {
    m = {{ak, al},
         {ak + "*", al + "*"},
         {Tk, Tl},
         {Tk + "^-1", Tl + "^-1"},
         {al, words({t_power(l, -N), ak})},
         {al + "*", words({ak + "*", t_power(l, N)})},
         {Tl, words({t_power(l, -N), Tk, t_power(l, N)})},
         {Tl + "^-1", words({t_power(l, -N), Tk + "^-1", t_power(l, N)})}};
  }
  return substitution_from(A, objs, m);
}

inline Substitution theta_lambda(const PresentationPtr& A1) {
  return substitution_from(A1, identity_objects(A1), {{"a1", "[lambda^-1] a1"}, {"a1*", "[lambda] a1*"}});
}

inline YBOperator wada_family(std::string name, int N, std::function<PresentationPtr(int)> algebra) {
  YBOperator op;
  op.name = std::move(name);
  op.make_algebra = std::move(algebra);
  op.make_generator = [N](const PresentationPtr& A, int k, bool inverse) { return wada_generator(A, k, inverse, N); };
  op.make_torsion = [N](const PresentationPtr& A1, bool inverse) {
    int e = inverse ? -N : N;
    return substitution_from(A1, identity_objects(A1),
                             {{"a1", words({t_power(1, e), "a1"})}, {"a1*", words({"a1*", t_power(1, -e)})}});
  };
  op.make_left_unit_inverse = [N](const PresentationPtr& A2) {
    std::vector<ObjectId> objs = identity_objects(A2);
    if (auto o1 = A2->quiver->find_object("1"); o1 && A2->quiver->object(*o1).copy == 1)
      std::swap(objs[*o1], objs[A2->quiver->object_id("2")]);
    return substitution_from(A2, objs,
                             {{"a1", "a2"},
                              {"a1*", "a2*"},
                              {"T1", "T2"},
                              {"T1^-1", "T2^-1"},
                              {"a2", words({t_power(2, -N), "a1"})},
                              {"a2*", words({"a1*", t_power(2, N)})},
                              {"T2", words({t_power(2, -N), "T1", t_power(2, N)})},
                              {"T2^-1", words({t_power(2, -N), "T1^-1", t_power(2, N)})}});
  };
  op.colorings["theta_lambda"] = theta_lambda;
  return op;
}

inline YBOperator gmv_operator() { return wada_family("gmv", 1, gmv_tilde_algebra); }

inline YBOperator wada_operator(int N) {
  return wada_family("wada_n(" + std::to_string(N) + ")", N, gmv_tilde_algebra);
}

inline YBOperator gmv_mu_central_operator() {
  return wada_family("gmv_mu_central", 1, [](int n) { return gmv_mu_central_algebra(n); });
}

inline YBOperator crisp_paris_operator(const CrispParisData& data) {
  // Validate the data once up front.
  crisp_paris_word(data, data.x, 1, false);
  crisp_paris_word(data, data.y, 1, false);
  YBOperator op;
  op.name = "crisp_paris";
  op.make_algebra = [data](int n) { return crisp_paris_algebra(data, n); };
  op.make_generator = [data](const PresentationPtr& A, int k, bool inverse) {
    int l = k + 1;
    std::vector<ObjectId> objs = identity_objects(A);
    std::swap(objs[A->quiver->object_id(std::to_string(k))], objs[A->quiver->object_id(std::to_string(l))]);
    auto w = [&](const std::string& t, int s, bool inv) { return crisp_paris_word(data, t, s, inv); };
    auto coeff = [](int sign) { return std::string(sign < 0 ? "-" : ""); };
    ImageMap m;
    std::string ak = idx("a", k), al = idx("a", l);
    if (!inverse) {
      auto [sx, xk] = w(data.x, k, false);
      auto [sxi, xki] = w(data.x, k, true);
      auto [sy, yk] = w(data.y, k, false);
      auto [syi, yki] = w(data.y, k, true);
      m = {{ak, coeff(sx) + words({xk, al})},
           {ak + "*", coeff(sxi) + words({al + "*", xki})},
           {al, coeff(sy) + words({yk, ak})},
           {al + "*", coeff(syi) + words({ak + "*", yki})}};
      for (auto& u : data.stems) {
        m.push_back({idx(u, k), words({xk, idx(u, l), xki})});
        m.push_back({idx(u, l), words({yk, idx(u, k), yki})});
      }
    } else {
      auto [sxi, xli] = w(data.x, l, true);
      auto [sx, xl] = w(data.x, l, false);
      auto [syi, yli] = w(data.y, l, true);
      auto [sy, yl] = w(data.y, l, false);
      m = {{ak, coeff(syi) + words({yli, al})},
           {ak + "*", coeff(sy) + words({al + "*", yl})},
           {al, coeff(sxi) + words({xli, ak})},
           {al + "*", coeff(sx) + words({ak + "*", xl})}};
      for (auto& u : data.stems) {
        m.push_back({idx(u, k), idx(u, l)});
        m.push_back({idx(u, l), words({xli, idx(u, k), xl})});
      }
    }
    return substitution_from(A, objs, m);
  };
  op.make_torsion = [data](const PresentationPtr& A1, bool inverse) {
    auto [sx, x] = crisp_paris_word(data, data.x, 1, inverse);
    auto [sy, y] = crisp_paris_word(data, data.y, 1, inverse);
    auto [sxi, xi] = crisp_paris_word(data, data.x, 1, !inverse);
    auto [syi, yi] = crisp_paris_word(data, data.y, 1, !inverse);
    std::string s = sx * sy < 0 ? "-" : "";
    return substitution_from(A1, identity_objects(A1),
                             {{"a1", s + words({x, y, "a1"})}, {"a1*", s + words({"a1*", yi, xi})}});
  };
  op.make_left_unit_inverse = [data](const PresentationPtr& A2) {
    std::vector<ObjectId> objs = identity_objects(A2);
    std::swap(objs[A2->quiver->object_id("1")], objs[A2->quiver->object_id("2")]);
    auto [sxi, x2i] = crisp_paris_word(data, data.x, 2, true);
    auto [sx, x2] = crisp_paris_word(data, data.x, 2, false);
    ImageMap m = {{"a1", "a2"},
                  {"a1*", "a2*"},
                  {"a2", std::string(sxi < 0 ? "-" : "") + words({x2i, "a1"})},
                  {"a2*", std::string(sx < 0 ? "-" : "") + words({"a1*", x2})}};
    for (auto& u : data.stems) {
      m.push_back({idx(u, 1), idx(u, 2)});
      m.push_back({idx(u, 2), words({x2i, idx(u, 1), x2})});
    }
    return substitution_from(A2, objs, m);
  };
  if (data.gmv_ideal) op.colorings["theta_lambda"] = theta_lambda;
  return op;
}

inline YBOperator humphries_magnus_operator() {
  YBOperator op;
  op.name = "humphries_magnus";
  op.coproduct = false;
  op.make_algebra = humphries_magnus_algebra;
  op.make_generator = [](const PresentationPtr& A, int k, bool inverse) {
    int n = 1;
    while (static_cast<std::size_t>(n * (n - 1)) < A->quiver->arrow_count()) ++n;
    int l = k + 1;
    ImageMap m;
    for (int i = 1; i <= n; ++i) {
      if (i == k || i == l) continue;
      if (!inverse) {
        m.push_back({hm_name(k, i), hm_name(l, i) + " - " + hm_name(l, k) + " " + hm_name(k, i)});
        m.push_back({hm_name(i, k), hm_name(i, l) + " - " + hm_name(i, k) + " " + hm_name(k, l)});
        m.push_back({hm_name(l, i), hm_name(k, i)});
        m.push_back({hm_name(i, l), hm_name(i, k)});
      } else {
        m.push_back({hm_name(k, i), hm_name(l, i)});
        m.push_back({hm_name(i, k), hm_name(i, l)});
        m.push_back({hm_name(l, i), hm_name(k, i) + " - " + hm_name(k, l) + " " + hm_name(l, i)});
        m.push_back({hm_name(i, l), hm_name(i, k) + " - " + hm_name(i, l) + " " + hm_name(l, k)});
      }
    }
    m.push_back({hm_name(k, l), "-" + hm_name(l, k)});
    m.push_back({hm_name(l, k), "-" + hm_name(k, l)});
    return substitution_from(A, identity_objects(A), m);
  };
  return op;
}

// x_k -> x_{k+1}, x_{k+1} -> x_k x_{k+1}: invertible but not Yang-Baxter.
inline YBOperator negative_control_operator() {
  YBOperator op;
  op.name = "negative_control";
  op.make_algebra = free_group_algebra;
  op.make_generator = [](const PresentationPtr& A, int k, bool inverse) {
    std::string xk = idx("x", k), xl = idx("x", k + 1);
    if (!inverse) return substitution_from(A, identity_objects(A), {{xk, xl}, {xl, words({xk, xl})}});
    return substitution_from(A, identity_objects(A), {{xl, xk}, {xk, words({xl, xk + "^-1"})}});
  };
  op.make_left_unit_inverse = [](const PresentationPtr& A2) {
    return substitution_from(A2, identity_objects(A2), {{"x1", "x2"}, {"x2", "x1"}});
  };
  return op;
}

struct OperatorParams {
  int N = 1;
  CrispParisData crisp_paris;
};

inline std::vector<std::string> catalog_names() {
  return {"artin", "burau", "gmv", "gmv_mu_central", "humphries_magnus", "wada_n", "crisp_paris"};
}

inline YBOperator catalog_operator(const std::string& name, const OperatorParams& params = {}) {
  if (name == "artin") return artin_operator();
  if (name == "burau") return burau_operator();
  if (name == "gmv") return gmv_operator();
  if (name == "gmv_mu_central") return gmv_mu_central_operator();
  if (name == "humphries_magnus") return humphries_magnus_operator();
  if (name == "wada_n" || name == "wada") return wada_operator(params.N);
  if (name == "crisp_paris") return crisp_paris_operator(params.crisp_paris);
  if (name == "negative_control") return negative_control_operator();
  throw OperatorError("unknown operator '" + name + "'");
}

// ------------------------------------------------------------ braid action

// Left action: letters are applied right to left, so endo(b1 b2) = endo(b1) o endo(b2).
inline Substitution braid_action_endo(const YBOperator& op, const BraidWord& b) {
  PresentationPtr A = op.algebra(b.strands);
  std::vector<Substitution> gens;
  for (int l : b.letters) gens.push_back(op.generator(b.strands, std::abs(l), l < 0));
  std::vector<ObjectId> objs = identity_objects(A);
  for (ObjectId& o : objs)
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) o = it->object(o);
  Substitution result(A, A, objs);
  const Quiver& q = *A->quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    Element e = Element::arrow(A->quiver, id);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) e = it->apply(e);
    result.set(id, e);
  }
  return result;
}

// ------------------------------------------------------- coproduct plumbing

inline ObjectId copy_object_in(const Quiver& q, int copy) {
  for (std::size_t i = 0; i < q.object_count(); ++i)
    if (q.object(static_cast<ObjectId>(i)).copy == copy) return static_cast<ObjectId>(i);
  throw OperatorError("no object for strand " + std::to_string(copy));
}

// A^(m) -> A^(n), strand j to strand j + offset.
inline Substitution strand_inclusion(const YBOperator& op, int n, int m, int offset) {
  PresentationPtr S = op.algebra(m), T = op.algebra(n);
  const Quiver &qs = *S->quiver, &qt = *T->quiver;
  std::vector<ObjectId> objs;
  for (auto& o : qs.objects())
    objs.push_back(o.copy == 0 ? qt.object_id(o.name) : copy_object_in(qt, o.copy + offset));
  Substitution s(S, T, objs);
  for (std::size_t a = 0; a < qs.arrow_count(); ++a) {
    const Arrow& ar = qs.arrow(static_cast<ArrowId>(a));
    auto target = qt.copy_arrow(ar.stem, ar.copy + offset);
    if (!target) throw OperatorError("strand inclusion has no image for " + ar.name);
    s.set(static_cast<ArrowId>(a), Element::arrow(T->quiver, *target));
  }
  return s;
}

// Fold A^(n) -> A^(1), every strand onto strand 1.
inline Substitution fold_map(const YBOperator& op, int n) {
  PresentationPtr S = op.algebra(n), T = op.algebra(1);
  const Quiver &qs = *S->quiver, &qt = *T->quiver;
  std::vector<ObjectId> objs;
  for (auto& o : qs.objects()) objs.push_back(o.copy == 0 ? qt.object_id(o.name) : copy_object_in(qt, 1));
  Substitution s(S, T, objs);
  for (std::size_t a = 0; a < qs.arrow_count(); ++a) {
    const Arrow& ar = qs.arrow(static_cast<ArrowId>(a));
    s.set(static_cast<ArrowId>(a), Element::arrow(T->quiver, *qt.copy_arrow(ar.stem, 1)));
  }
  return s;
}

// (f_1, ..., f_n): A^(n) -> X from maps f_c: A^(1) -> X.
inline Substitution copairing(const YBOperator& op, const std::vector<Substitution>& maps) {
  int n = static_cast<int>(maps.size());
  PresentationPtr S = op.algebra(n), A1 = op.algebra(1);
  const Quiver &qs = *S->quiver, &q1 = *A1->quiver;
  std::vector<ObjectId> objs;
  for (auto& o : qs.objects()) {
    if (o.copy == 0) objs.push_back(maps[0].object(q1.object_id(o.name)));
    else objs.push_back(maps[o.copy - 1].object(copy_object_in(q1, 1)));
  }
  Substitution s(S, maps[0].target(), objs);
  for (std::size_t a = 0; a < qs.arrow_count(); ++a) {
    const Arrow& ar = qs.arrow(static_cast<ArrowId>(a));
    ArrowId base = *q1.copy_arrow(ar.stem, 1);
    const Substitution& f = maps[ar.copy - 1];
    if (f.has(base)) s.set(static_cast<ArrowId>(a), f.image(base));
  }
  return s;
}

// f_1 amalg ... amalg f_n on A^(n); missing entries are identities.
inline Substitution coproduct_map(const YBOperator& op, int n, const std::vector<std::optional<Substitution>>& fs) {
  std::vector<Substitution> maps;
  for (int c = 1; c <= n; ++c) {
    Substitution inc = strand_inclusion(op, n, 1, c - 1);
    const auto& f = c - 1 < static_cast<int>(fs.size()) ? fs[c - 1] : std::nullopt;
    maps.push_back(f ? compose(inc, *f) : inc);
  }
  return copairing(op, maps);
}

// -------------------------------------------------------------- reports

struct CheckEntry {
  std::string check;
  std::string generator;
  std::string lhs;
  std::string rhs;
  bool pass = true;
};

struct VerificationReport {
  std::string title;
  bool applicable = true;
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;
  std::optional<Substitution> torsion;  // computed torsion (Reidemeister)

  bool passed() const {
    if (!applicable) return false;
    for (auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::vector<CheckEntry> failures() const {
    std::vector<CheckEntry> f;
    for (auto& e : entries)
      if (!e.pass) f.push_back(e);
    return f;
  }
};

// Compares two substitutions generator by generator.
inline void compare_maps(VerificationReport& rep, const std::string& check, const Substitution& lhs,
                         const Substitution& rhs) {
  const Quiver& q = *lhs.source()->quiver;
  bool objects_ok = lhs.object_map() == rhs.object_map();
  if (!objects_ok) rep.entries.push_back({check, "(objects)", "", "", false});
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ArrowId id = static_cast<ArrowId>(a);
    if (q.arrow(id).inverse_atom && !(lhs.has(id) && rhs.has(id))) continue;
    std::string l = lhs.has(id) ? lhs.image(id).str() : "(undefined)";
    std::string r = rhs.has(id) ? rhs.image(id).str() : "(undefined)";
    bool ok = lhs.has(id) && rhs.has(id) && lhs.image(id) == rhs.image(id);
    rep.entries.push_back({check, q.arrow(id).name, l, r, ok});
  }
}

// Solves for the inverse of a substitution that sends invertible generators
// to unit multiples of invertible generators and every other generator to a
// unit multiple of W h W' with exactly one non-invertible arrow h.
inline std::optional<Substitution> solve_monomial_inverse(const Substitution& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) -> std::optional<Substitution> {
    if (why) *why = m;
    return std::nullopt;
  };
  const Quiver &qs = *s.source()->quiver, &qt = *s.target()->quiver;
  std::vector<ObjectId> objs(qt.object_count(), -1);
  for (std::size_t o = 0; o < qs.object_count(); ++o) {
    ObjectId t = s.object(static_cast<ObjectId>(o));
    if (objs[t] >= 0) return fail("object map is not injective");
    objs[t] = static_cast<ObjectId>(o);
  }
  for (ObjectId o : objs)
    if (o < 0) return fail("object map is not surjective");
  Substitution r(s.target(), s.source(), objs);
  auto invertible = [](const Arrow& a) { return a.inverse >= 0; };
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t a = 0; a < qs.arrow_count(); ++a) {
      ArrowId g = static_cast<ArrowId>(a);
      const Arrow& ar = qs.arrow(g);
      if (ar.inverse_atom || invertible(ar) != (pass == 0)) continue;
      auto mono = s.image(g).as_monomial();
      if (!mono || !mono->second.is_unit()) return fail("image of " + ar.name + " is not a unit monomial");
      const Path& w = mono->first;
      Laurent cinv = mono->second.unit_inverse();
      if (pass == 0) {
        if (w.size() != 1) return fail("image of " + ar.name + " is not a single invertible arrow");
        ArrowId h = w[0];
        if (qt.arrow(h).inverse_atom)
          r.set(qt.arrow(h).inverse, Element::arrow(s.source()->quiver, ar.inverse, mono->second));
        else
          r.set(h, Element::arrow(s.source()->quiver, g, cinv));
        continue;
      }
      std::size_t pos = w.size();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (invertible(qt.arrow(w[i]))) continue;
        if (pos != w.size()) return fail("image of " + ar.name + " has two non-invertible arrows");
        pos = i;
      }
      if (pos == w.size()) return fail("image of " + ar.name + " has no non-invertible arrow");
      Element img = Element::arrow(s.source()->quiver, g, cinv);
      auto inverse_word = [&](std::size_t from, std::size_t to) -> Path {
        Path p;
        for (std::size_t i = to; i-- > from;) p.push_back(qt.arrow(w[i]).inverse);
        return p;
      };
      try {
        Path left = inverse_word(0, pos), right = inverse_word(pos + 1, w.size());
        if (!left.empty()) img = r.apply(Element::path(s.target()->quiver, left)) * img;
        if (!right.empty()) img = img * r.apply(Element::path(s.target()->quiver, right));
      } catch (const SubstitutionError& e) {
        return fail(e.what());
      }
      r.set(w[pos], s.source()->nf(img));
    }
  }
  for (std::size_t a = 0; a < qt.arrow_count(); ++a)
    if (!qt.arrow(static_cast<ArrowId>(a)).inverse_atom && !r.has(static_cast<ArrowId>(a)))
      return fail("generator " + qt.arrow(static_cast<ArrowId>(a)).name + " is not hit");
  return r;
}

inline Substitution power(const Substitution& s, int k) {
  Substitution r = Substitution::identity(s.source());
  for (int i = 0; i < k; ++i) r = compose(s, r);
  return r;
}

// ----------------------------------------------------------- verifiers

inline VerificationReport verify_yang_baxter(const YBOperator& op) {
  VerificationReport rep;
  rep.title = "yang_baxter(" + op.name + ")";
  auto s = [&](int n, int k, bool inv = false) { return op.generator(n, k, inv); };
  compare_maps(rep, "braid_relation", compose(s(3, 1), compose(s(3, 2), s(3, 1))),
               compose(s(3, 2), compose(s(3, 1), s(3, 2))));
  compare_maps(rep, "far_commutation", compose(s(4, 1), s(4, 3)), compose(s(4, 3), s(4, 1)));
  PresentationPtr A2 = op.algebra(2);
  Substitution id2 = Substitution::identity(A2);
  compare_maps(rep, "sigma_sigma_inverse", compose(s(2, 1), s(2, 1, true)), id2);
  compare_maps(rep, "sigma_inverse_sigma", compose(s(2, 1, true), s(2, 1)), id2);
  for (bool inv : {false, true})
    for (auto& r : rule_violations(s(2, 1, inv)))
      rep.entries.push_back({inv ? "inverse_respects_relations" : "respects_relations", r, "", "", false});
  return rep;
}

inline VerificationReport verify_reidemeister(const YBOperator& op) {
  VerificationReport rep;
  rep.title = "reidemeister(" + op.name + ")";
  if (!op.coproduct) {
    rep.applicable = false;
    rep.notes.push_back("operator is not defined on a coproduct of strand copies");
    return rep;
  }
  PresentationPtr A1 = op.algebra(1), A2 = op.algebra(2);
  Substitution sigma = op.generator(2, 1);
  Substitution i1 = strand_inclusion(op, 2, 1, 0), i2 = strand_inclusion(op, 2, 1, 1);
  Substitution nabla = fold_map(op, 2);
  Substitution sR = copairing(op, {compose(sigma, i2), i2});
  Substitution sL = copairing(op, {compose(sigma, i1), i1});
  Substitution id1 = Substitution::identity(A1), id2 = Substitution::identity(A2);

  std::string why;
  auto rR = solve_monomial_inverse(sR, &why);
  if (!rR) {
    rep.entries.push_back({"sigma_R_inverse", "", "", why, false});
    return rep;
  }
  compare_maps(rep, "sigma_R_inverse", compose(*rR, sR), id2);
  compare_maps(rep, "sigma_R_inverse", compose(sR, *rR), id2);
  if (op.make_left_unit_inverse) {
    Substitution rL = op.make_left_unit_inverse(A2);
    compare_maps(rep, "sigma_L_inverse", compose(rL, sL), id2);
    compare_maps(rep, "sigma_L_inverse", compose(sL, rL), id2);
  } else if (auto rL2 = solve_monomial_inverse(sL, &why)) {
    compare_maps(rep, "sigma_L_inverse", compose(*rL2, sL), id2);
  } else {
    rep.entries.push_back({"sigma_L_inverse", "", "", why, false});
  }

  Substitution j = compose(nabla, compose(*rR, compose(sigma, i1)));
  Substitution jp = compose(nabla, compose(*rR, i1));
  auto jp_inv = solve_monomial_inverse(jp, &why);
  if (!jp_inv) {
    rep.entries.push_back({"j_prime_invertible", "", "", why, false});
    return rep;
  }
  compare_maps(rep, "j_prime_invertible", compose(*jp_inv, jp), id1);
  Substitution chi = compose(*jp_inv, j);
  compare_maps(rep, "torsion", chi, op.torsion());
  compare_maps(rep, "torsion_inverse", compose(op.torsion(true), op.torsion()), id1);
  rep.torsion = chi;
  return rep;
}

inline VerificationReport verify_sigma_natural(const YBOperator& op, const Substitution& theta) {
  VerificationReport rep;
  rep.title = "sigma_natural(" + op.name + ")";
  if (!op.coproduct) {
    rep.applicable = false;
    rep.notes.push_back("operator is not defined on a coproduct of strand copies");
    return rep;
  }
  Substitution sigma = op.generator(2, 1);
  Substitution t_id = coproduct_map(op, 2, {theta, std::nullopt});
  Substitution id_t = coproduct_map(op, 2, {std::nullopt, theta});
  compare_maps(rep, "square_left", compose(sigma, t_id), compose(id_t, sigma));
  compare_maps(rep, "square_right", compose(sigma, id_t), compose(t_id, sigma));
  return rep;
}

// a -> a, a* -> lambda a*, T -> e_0 + lambda (T - e_0): scales only one side.
inline Substitution one_sided_theta(const PresentationPtr& A1) {
  return substitution_from(A1, identity_objects(A1),
                           {{"a1*", "[lambda] a1*"}, {"T1", "[lambda] T1 + [1 - lambda] e_0"}, {"T1^-1", "T1^-1"}});
}

}  // namespace knotcat

#endif
