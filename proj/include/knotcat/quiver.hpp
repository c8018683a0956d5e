// Graded quivers: objects and arrows with degrees. Arrows may carry a
// formal inverse and a copy index used by coproduct constructions.
#ifndef KNOTCAT_QUIVER_HPP
#define KNOTCAT_QUIVER_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotcat {

using ObjectId = int;
using ArrowId = int;

struct Object {
  std::string name;
  int copy = 0;  // 0 for objects shared between copies
};

struct Arrow {
  std::string name;
  ObjectId source = 0;
  ObjectId target = 0;
  int degree = 0;
  ArrowId inverse = -1;     // formal inverse, if any
  bool inverse_atom = false;  // true for the x^-1 member of an inverse pair
  std::string stem;         // name with the copy index removed
  int copy = 0;
};

class Quiver {
 public:
  ObjectId add_object(std::string name, int copy = 0) {
    if (object_index_.count(name)) throw std::invalid_argument("duplicate object " + name);
    objects_.push_back({name, copy});
    object_index_.emplace(std::move(name), static_cast<ObjectId>(objects_.size() - 1));
    return static_cast<ObjectId>(objects_.size() - 1);
  }

  ArrowId add_arrow(std::string name, ObjectId source, ObjectId target, int degree,
                    std::string stem = {}, int copy = 0) {
    if (arrow_index_.count(name)) throw std::invalid_argument("duplicate arrow " + name);
    check_object(source);
    check_object(target);
    Arrow a;
    a.name = name;
    a.source = source;
    a.target = target;
    a.degree = degree;
    a.stem = stem.empty() ? name : std::move(stem);
    a.copy = copy;
    arrows_.push_back(std::move(a));
    weights_.push_back(1);
    ArrowId id = static_cast<ArrowId>(arrows_.size() - 1);
    arrow_index_.emplace(std::move(name), id);
    if (copy != 0) copy_index_[{arrows_.back().stem, copy}] = id;
    return id;
  }

  // Adds x and x^-1 as a pair of degree-0 loops (or opposite arrows).
  std::pair<ArrowId, ArrowId> add_invertible(std::string name, ObjectId source, ObjectId target,
                                             std::string stem = {}, int copy = 0) {
    std::string inv = name + "^-1";
    std::string inv_stem = stem.empty() ? std::string{} : stem + "^-1";
    ArrowId x = add_arrow(std::move(name), source, target, 0, std::move(stem), copy);
    ArrowId y = add_arrow(std::move(inv), target, source, 0, std::move(inv_stem), copy);
    arrows_[x].inverse = y;
    arrows_[y].inverse = x;
    arrows_[y].inverse_atom = true;
    return {x, y};
  }

  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId id) const { return arrows_.at(id); }
  const Object& object(ObjectId id) const { return objects_.at(id); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t object_count() const { return objects_.size(); }

  ArrowId arrow_id(std::string_view name) const {
    auto it = arrow_index_.find(std::string(name));
    if (it == arrow_index_.end()) throw std::out_of_range("unknown arrow '" + std::string(name) + "'");
    return it->second;
  }
  std::optional<ArrowId> find_arrow(std::string_view name) const {
    auto it = arrow_index_.find(std::string(name));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }
  ObjectId object_id(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) throw std::out_of_range("unknown object '" + std::string(name) + "'");
    return it->second;
  }
  std::optional<ObjectId> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<ArrowId> copy_arrow(const std::string& stem, int copy) const {
    auto it = copy_index_.find({stem, copy});
    if (it == copy_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<ObjectId> copy_object(ObjectId o, int copy) const {
    if (objects_.at(o).copy == 0) return o;
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i].copy == copy) return static_cast<ObjectId>(i);
    return std::nullopt;
  }
  // Weights feed the path order (weight, then length, then arrow ids).
  void set_weight(ArrowId a, int w) {
    if (w < 1) throw std::invalid_argument("arrow weights must be positive");
    weights_.at(a) = w;
  }
  const std::vector<int>& weights() const { return weights_; }

  int max_copy() const {
    int m = 0;
    for (auto& a : arrows_) m = std::max(m, a.copy);
    return m;
  }

 private:
  void check_object(ObjectId o) const {
    if (o < 0 || o >= static_cast<ObjectId>(objects_.size()))
      throw std::out_of_range("object id out of range");
  }

  std::vector<Object> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> weights_;
  std::map<std::string, ObjectId> object_index_;
  std::map<std::string, ArrowId> arrow_index_;
  std::map<std::pair<std::string, int>, ArrowId> copy_index_;
};

// Splits "b12*'" into stem "b", index 12 and decoration "*'".
inline std::string indexed_name(const std::string& base, int index) {
  std::size_t i = 0;
  while (i < base.size() && std::isalpha(static_cast<unsigned char>(base[i]))) ++i;
  return base.substr(0, i) + std::to_string(index) + base.substr(i);
}

}  // namespace knotcat

#endif
