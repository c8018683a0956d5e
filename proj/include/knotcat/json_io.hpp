// JSON schema for elements and presentations. Arrays are emitted in a
// canonical order (by names, not internal ids) so that equal presentations
// built along different routes serialize identically.
#ifndef KNOTCAT_JSON_IO_HPP
#define KNOTCAT_JSON_IO_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dg.hpp"

namespace knotcat {

using Json = nlohmann::json;

inline std::vector<std::string> path_names(const Quiver& q, const Path& p) {
  std::vector<std::string> v;
  v.reserve(p.size());
  for (ArrowId a : p) v.push_back(q.arrow(a).name);
  return v;
}

namespace detail {

struct NamedPathLess {
  bool operator()(const std::vector<std::string>& a, const std::vector<std::string>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace detail

inline Json to_json(const Element& e) {
  Json j;
  if (!e.quiver()) return Json{{"source", nullptr}, {"target", nullptr}, {"terms", Json::array()}};
  const Quiver& q = *e.quiver();
  j["source"] = q.object(e.source()).name;
  j["target"] = q.object(e.target()).name;
  std::vector<std::pair<std::vector<std::string>, std::string>> terms;
  for (auto& [p, c] : e.terms()) terms.emplace_back(path_names(q, p), c.str());
  std::sort(terms.begin(), terms.end(),
            [](auto& a, auto& b) { return detail::NamedPathLess{}(a.first, b.first); });
  Json arr = Json::array();
  for (auto& [p, c] : terms) arr.push_back(Json{{"coeff", c}, {"path", p}});
  j["terms"] = arr;
  return j;
}

inline Element element_from_json(const QuiverPtr& q, const Json& j) {
  Element e(q, q->object_id(j.at("source").get<std::string>()), q->object_id(j.at("target").get<std::string>()));
  for (auto& t : j.at("terms")) {
    Path p;
    for (auto& n : t.at("path")) p.push_back(q->arrow_id(n.get<std::string>()));
    check_composable(*q, p);
    e.add_term(p, Laurent::parse(t.at("coeff").get<std::string>()));
  }
  return e;
}

inline Json to_json(const Presentation& p) {
  const Quiver& q = *p.quiver;
  Json j;
  j["name"] = p.name;
  Json objs = Json::array();
  std::vector<std::string> onames;
  for (auto& o : q.objects()) onames.push_back(o.name);
  std::sort(onames.begin(), onames.end());
  for (auto& o : onames) objs.push_back(o);
  j["objects"] = objs;

  std::vector<const Arrow*> arrows;
  for (auto& a : q.arrows()) arrows.push_back(&a);
  std::sort(arrows.begin(), arrows.end(), [](auto* a, auto* b) { return a->name < b->name; });
  Json arr = Json::array();
  for (auto* a : arrows) {
    Json ja{{"name", a->name},
            {"source", q.object(a->source).name},
            {"target", q.object(a->target).name},
            {"degree", a->degree}};
    if (a->inverse >= 0) ja["inverse"] = q.arrow(a->inverse).name;
    arr.push_back(ja);
  }
  j["arrows"] = arr;

  std::vector<std::pair<std::vector<std::string>, Json>> rules;
  for (auto& r : p.rules.rules()) rules.emplace_back(path_names(q, r.lhs), to_json(r.rhs));
  std::sort(rules.begin(), rules.end(), [](auto& a, auto& b) { return detail::NamedPathLess{}(a.first, b.first); });
  Json jr = Json::array();
  for (auto& [l, r] : rules) jr.push_back(Json{{"lhs", l}, {"rhs", r}});
  j["rules"] = jr;

  Json d = Json::object();
  for (auto& [a, da] : p.differential)
    if (!da.is_zero()) d[q.arrow(a).name] = to_json(da);
  j["differential"] = d;
  return j;
}

// Rebuilds a presentation; rule right-hand sides are taken as written.
inline std::shared_ptr<Presentation> presentation_from_json(const Json& j) {
  auto q = std::make_shared<Quiver>();
  for (auto& o : j.at("objects")) q->add_object(o.get<std::string>());
  std::vector<std::string> skip;
  for (auto& a : j.at("arrows")) {
    std::string name = a.at("name").get<std::string>();
    if (std::find(skip.begin(), skip.end(), name) != skip.end()) continue;
    ObjectId s = q->object_id(a.at("source").get<std::string>());
    ObjectId t = q->object_id(a.at("target").get<std::string>());
    if (a.contains("inverse")) {
      std::string inv = a.at("inverse").get<std::string>();
      if (inv != name + "^-1") continue;  // the ^-1 member is added with its partner
      q->add_invertible(name, s, t);
      skip.push_back(inv);
    } else {
      q->add_arrow(name, s, t, a.at("degree").get<int>());
    }
  }
  auto p = make_presentation(j.value("name", std::string("presentation")), q);
  for (auto& r : j.at("rules")) {
    Path lhs;
    for (auto& n : r.at("lhs")) lhs.push_back(q->arrow_id(n.get<std::string>()));
    p->rules.add(lhs, element_from_json(q, r.at("rhs")));
  }
  for (auto& [name, d] : j.at("differential").items()) p->differential[q->arrow_id(name)] = element_from_json(q, d);
  return p;
}

}  // namespace knotcat

#endif
