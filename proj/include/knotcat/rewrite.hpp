// Path rewriting: rules path -> element, normal forms by leftmost-redex
// reduction of the largest pending term, and critical-pair analysis.
#ifndef KNOTCAT_REWRITE_HPP
#define KNOTCAT_REWRITE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"

namespace knotcat {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rule {
  Path lhs;
  Element rhs;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(QuiverPtr q) : quiver_(std::move(q)) {}

  const QuiverPtr& quiver() const { return quiver_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  // Every rhs term must be strictly smaller than the lhs in the path order,
  // which guarantees termination since the order is compatible with
  // concatenation.
  void add(const Path& lhs, const Element& rhs) {
    if (lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
    check_composable(*quiver_, lhs);
    if (rhs.quiver() != quiver_) throw std::invalid_argument("rule rhs lives in another quiver");
    ObjectId s = quiver_->arrow(lhs.back()).source, t = quiver_->arrow(lhs.front()).target;
    if (rhs.source() != s || rhs.target() != t)
      throw std::invalid_argument("rule " + path_string(*quiver_, lhs, s) + " changes endpoints");
    int d = path_degree(*quiver_, lhs);
    for (auto& [p, c] : rhs.terms()) {
      if (path_degree(*quiver_, p) != d)
        throw std::invalid_argument("rule " + path_string(*quiver_, lhs, s) + " is not homogeneous");
      if (!PathLess{&quiver_->weights()}(p, lhs))
        throw std::invalid_argument("rule " + path_string(*quiver_, lhs, s) +
                                    " does not decrease the path order");
    }
    rules_.push_back({lhs, rhs});
    if (by_first_.size() < quiver_->arrow_count()) by_first_.resize(quiver_->arrow_count());
    by_first_[lhs.front()].push_back(rules_.size() - 1);
  }

  // Orients a two-letter equation x y = c * y' x' so that the larger side is rewritten.
  void add_oriented(const Path& u, const Path& v, const Laurent& c = Laurent(1)) {
    if (PathLess{&quiver_->weights()}(v, u)) add(u, Element::path(quiver_, v, c));
    else add(v, Element::path(quiver_, u, c.unit_inverse()));
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Path& p) const {
    if (rules_.empty()) return std::nullopt;
    for (std::size_t pos = 0; pos < p.size(); ++pos) {
      ArrowId a = p[pos];
      if (static_cast<std::size_t>(a) >= by_first_.size()) continue;
      for (std::size_t ri : by_first_[a]) {
        const Path& l = rules_[ri].lhs;
        if (pos + l.size() > p.size()) continue;
        if (std::equal(l.begin(), l.end(), p.begin() + static_cast<std::ptrdiff_t>(pos)))
          return std::make_pair(pos, ri);
      }
    }
    return std::nullopt;
  }

 private:
  QuiverPtr quiver_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
};

inline Element normal_form(const Element& e, const RewriteSystem& rs,
                           std::size_t budget = kDefaultStepBudget) {
  if (rs.empty() || e.is_zero()) return e;
  Element::TermMap pending = e.terms();
  Element result(e.quiver(), e.source(), e.target());
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Path p = it->first;
    Laurent c = std::move(it->second);
    pending.erase(it);
    auto redex = rs.find_redex(p);
    if (!redex) {
      result.add_term(p, c);
      continue;
    }
    if (++steps > budget)
      throw BudgetExceeded("normal form exceeded " + std::to_string(budget) + " rewrite steps");
    const Rule& r = rs.rules()[redex->second];
    std::size_t pos = redex->first;
    for (auto& [rp, rc] : r.rhs.terms()) {
      Path np;
      np.reserve(p.size() - r.lhs.size() + rp.size());
      np.insert(np.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
      np.insert(np.end(), rp.begin(), rp.end());
      np.insert(np.end(), p.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), p.end());
      Laurent nc = c * rc;
      auto [jt, inserted] = pending.try_emplace(std::move(np), nc);
      if (!inserted) {
        jt->second += nc;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  return result;
}

struct CriticalPair {
  Path overlap;
  Element left;
  Element right;
};

struct ConfluenceReport {
  std::size_t checked = 0;
  std::vector<CriticalPair> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

namespace detail {

inline Element rewrite_at(const Path& w, std::size_t pos, const Rule& r, const QuiverPtr& q) {
  ObjectId s = q->arrow(w.back()).source, t = q->arrow(w.front()).target;
  Element out(q, s, t);
  for (auto& [rp, rc] : r.rhs.terms()) {
    Path np(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    np.insert(np.end(), rp.begin(), rp.end());
    np.insert(np.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
    out.add_term(np, rc);
  }
  return out;
}

}  // namespace detail

// Enumerates overlaps and inclusions between rule left-hand sides and
// compares the two one-step reducts after normalisation.
inline ConfluenceReport check_local_confluence(const RewriteSystem& rs,
                                               std::size_t budget = kDefaultStepBudget) {
  ConfluenceReport report;
  const QuiverPtr& q = rs.quiver();
  const auto& rules = rs.rules();
  auto compare = [&](const Path& w, std::size_t pos1, const Rule& r1, std::size_t pos2, const Rule& r2) {
    ++report.checked;
    Element left = normal_form(detail::rewrite_at(w, pos1, r1, q), rs, budget);
    Element right = normal_form(detail::rewrite_at(w, pos2, r2, q), rs, budget);
    if (left != right) report.unresolved.push_back({w, left, right});
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Path& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Path& l2 = rules[j].lhs;
      // Proper overlaps: a nonempty suffix of l1 equals a prefix of l2.
      for (std::size_t k = 1; k < l2.size() && k < l1.size(); ++k) {
        if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
        Path w = l1;
        w.insert(w.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        compare(w, 0, rules[i], l1.size() - k, rules[j]);
      }
      if (i == j) continue;
      if (l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(pos)))
            compare(l1, 0, rules[i], pos, rules[j]);
        }
      }
    }
  }
  return report;
}

}  // namespace knotcat

#endif
