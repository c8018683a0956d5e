// Group presentations of braid closures, abelianization and homomorphism
// counts into small finite groups.
#ifndef KNOTCAT_GROUP_HPP
#define KNOTCAT_GROUP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "closure.hpp"

namespace knotcat {

inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
    s += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : " ") + word_string(relators[i]);
    return s + ">";
  }
};

inline GroupPresentation knot_group_presentation(const BraidWord& b) {
  static const YBOperator artin = artin_operator();
  ClosurePresentation cp = categorical_closure(artin, b);
  GroupPresentation g;
  g.generators = cp.generators;
  for (auto& r : cp.relators) g.relators.push_back(free_reduce(r));
  return g;
}

struct Abelianization {
  int free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1

  std::string str() const {
    std::string s = "Z^" + std::to_string(free_rank);
    for (auto& d : torsion) s += " + Z/" + d.str();
    return s;
  }
};

// Diagonal of the Smith normal form of an integer matrix.
inline std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> diag;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: fold any entry not divisible by the pivot into row t.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

inline Abelianization abelianization(const GroupPresentation& g) {
  std::size_t n = g.generators.size();
  std::vector<std::vector<Integer>> m;
  for (auto& r : g.relators) {
    std::vector<Integer> row(n, 0);
    for (int l : r) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    m.push_back(row);
  }
  std::vector<Integer> d = smith_diagonal(m);
  Abelianization a;
  a.free_rank = static_cast<int>(n);
  for (auto& x : d) {
    if (x == 0) continue;
    --a.free_rank;
    if (x != 1) a.torsion.push_back(x);
  }
  return a;
}

struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a b
  std::vector<int> inv;
  int identity = 0;
  int order() const { return static_cast<int>(mul.size()); }
};

inline FiniteGroup symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& x) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), x) - perms.begin());
  };
  FiniteGroup g;
  g.name = "S" + std::to_string(k);
  std::size_t n = perms.size();
  g.mul.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> ia(k);
    for (int i = 0; i < k; ++i) ia[perms[a][i]] = i;
    g.inv[a] = index(ia);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = index(c);
    }
  }
  g.identity = 0;
  return g;
}

inline FiniteGroup cyclic_group(int k) {
  FiniteGroup g;
  g.name = "Z" + std::to_string(k);
  g.mul.assign(k, std::vector<int>(k));
  g.inv.assign(k, 0);
  for (int a = 0; a < k; ++a) {
    g.inv[a] = (k - a) % k;
    for (int b = 0; b < k; ++b) g.mul[a][b] = (a + b) % k;
  }
  return g;
}

inline FiniteGroup finite_group(const std::string& name) {
  if (name == "s3" || name == "S3") return symmetric_group(3);
  if (name == "s4" || name == "S4") return symmetric_group(4);
  if (name == "z3" || name == "Z3") return cyclic_group(3);
  throw std::invalid_argument("unknown group '" + name + "' (expected s3, s4 or z3)");
}

struct CountReport {
  std::string invariant;
  std::string target;
  std::uint64_t count = 0;
};

// Backtracking over generator images; a relator is checked as soon as all
// of its generators are assigned.
inline CountReport finite_hom_count(const GroupPresentation& g, const FiniteGroup& t,
                                    std::uint64_t budget = kEnumerationBudget) {
  std::size_t n = g.generators.size();
  long double space = std::pow(static_cast<long double>(t.order()), static_cast<long double>(n));
  if (space > static_cast<long double>(budget))
    throw BudgetExceeded("|" + t.name + "|^" + std::to_string(n) + " exceeds the enumeration budget");
  std::vector<std::vector<const Word*>> due(n + 1);
  for (auto& r : g.relators) {
    std::size_t last = 0;
    for (int l : r) last = std::max<std::size_t>(last, static_cast<std::size_t>(std::abs(l)));
    due[last].push_back(&r);
  }
  std::vector<int> val(n + 1, 0);
  auto holds = [&](const Word& r) {
    int acc = t.identity;
    for (int l : r) {
      int v = val[std::abs(l)];
      acc = t.mul[acc][l > 0 ? v : t.inv[v]];
    }
    return acc == t.identity;
  };
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (auto* r : due[i])
      if (!holds(*r)) return;
    if (i == n) {
      ++count;
      return;
    }
    for (int v = 0; v < t.order(); ++v) {
      val[i + 1] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return {"hom_count", t.name, count};
}

}  // namespace knotcat

#endif
