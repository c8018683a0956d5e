// Finite fields, small matrix rings over them, and exact point counts of
// one-object algebra presentations.
#ifndef KNOTCAT_POINTS_HPP
#define KNOTCAT_POINTS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "alexander.hpp"

namespace knotcat {

// GF(q) with elements encoded as base-p digit vectors of polynomials
// modulo a fixed irreducible; for prime q the encoding is the residue.
class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    if (q < 2 || q > 256) throw std::invalid_argument("field order must be a prime power in [2, 256]");
    p_ = 0;
    for (int d = 2; d <= q; ++d)
      if (q % d == 0) {
        p_ = d;
        break;
      }
    k_ = 0;
    for (int r = q; r > 1; r /= p_) {
      if (r % p_ != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
      ++k_;
    }
    std::vector<int> f = k_ == 1 ? std::vector<int>{0, 1} : irreducible();
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        std::vector<int> x = digits(a), y = digits(b), s(k_), pr(2 * k_, 0);
        for (int i = 0; i < k_; ++i) s[i] = (x[i] + y[i]) % p_;
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) pr[i + j] = (pr[i + j] + x[i] * y[j]) % p_;
        reduce(pr, f);
        add_[a * q + b] = code(s);
        mul_[a * q + b] = code(pr);
      }
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }
  int pow(int a, int e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    int r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int from_integer(const Integer& c) const {
    Integer r = c % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
  }
  std::vector<int> units() const {
    std::vector<int> u;
    for (int a = 1; a < q_; ++a) u.push_back(a);
    return u;
  }

  // Value of a Laurent polynomial at assigned units.
  int evaluate(const Laurent& l, const std::map<int, int>& at) const {
    int acc = 0;
    for (auto& [m, c] : l.terms()) {
      int v = from_integer(c);
      for (auto& [var, e] : m.exps) {
        auto it = at.find(var);
        if (it == at.end()) throw std::invalid_argument("no value for parameter " + Variables::name(var));
        v = mul(v, pow(it->second, e));
      }
      acc = add(acc, v);
    }
    return acc;
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  int code(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }
  // Reduces pr modulo the monic polynomial f of degree k, in place.
  void reduce(std::vector<int>& pr, const std::vector<int>& f) const {
    int deg = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(pr.size()) - 1; i >= deg; --i) {
      int c = pr[i];
      if (!c) continue;
      for (int j = 0; j <= deg; ++j) pr[i - deg + j] = ((pr[i - deg + j] - c * f[j]) % p_ + p_) % p_;
    }
    pr.resize(k_);
  }
  bool has_root_factor(const std::vector<int>& f) const {
    // Monic f of degree k is reducible iff some monic g of degree <= k/2 divides it.
    int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (int c = 0; c < count; ++c) {
        std::vector<int> g(d + 1, 1);
        for (int i = 0, x = c; i < d; ++i, x /= p_) g[i] = x % p_;
        std::vector<int> r = f;
        for (int i = k; i >= d; --i) {
          int m = r[i];
          if (!m) continue;
          for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - m * g[j]) % p_ + p_) % p_;
        }
        bool zero = true;
        for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
        if (zero) return true;
      }
    }
    return false;
  }
  std::vector<int> irreducible() const {
    for (int c = 0; c < q_; ++c) {
      std::vector<int> f(k_ + 1, 1);
      for (int i = 0, x = c; i < k_; ++i, x /= p_) f[i] = x % p_;
      if (!has_root_factor(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// d x d matrices over GF(q), encoded as base-q digit strings (row-major).
class MatrixRing {
 public:
  MatrixRing(std::shared_ptr<const GaloisField> f, int dim) : f_(std::move(f)), d_(dim) {
    if (dim < 1 || dim > 2) throw std::invalid_argument("matrix dimension must be 1 or 2");
    int q = f_->order();
    size_ = 1;
    for (int i = 0; i < dim * dim; ++i) size_ *= q;
    if (size_ > 4096) throw std::invalid_argument("matrix ring too large for tabulation");
    std::vector<std::vector<int>> ent(size_);
    for (int x = 0; x < size_; ++x) ent[x] = entries(x);
    add_.assign(static_cast<std::size_t>(size_) * size_, 0);
    mul_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y) {
        std::vector<int> s(d_ * d_), p(d_ * d_, 0);
        for (int i = 0; i < d_ * d_; ++i) s[i] = f_->add(ent[x][i], ent[y][i]);
        for (int i = 0; i < d_; ++i)
          for (int j = 0; j < d_; ++j)
            for (int k = 0; k < d_; ++k)
              p[i * d_ + j] = f_->add(p[i * d_ + j], f_->mul(ent[x][i * d_ + k], ent[y][k * d_ + j]));
        add_[idx(x, y)] = encode(s);
        mul_[idx(x, y)] = encode(p);
      }
    scalar_.assign(q, 0);
    for (int c = 0; c < q; ++c) {
      std::vector<int> s(d_ * d_, 0);
      for (int i = 0; i < d_; ++i) s[i * d_ + i] = c;
      scalar_[c] = encode(s);
    }
  }

  int size() const { return size_; }
  int dim() const { return d_; }
  const GaloisField& field() const { return *f_; }
  int add(int x, int y) const { return add_[idx(x, y)]; }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int scalar(int c) const { return scalar_[c]; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * size_ + y; }
  std::vector<int> entries(int x) const {
    std::vector<int> e(d_ * d_);
    for (int i = 0; i < d_ * d_; ++i, x /= f_->order()) e[i] = x % f_->order();
    return e;
  }
  int encode(const std::vector<int>& e) const {
    int x = 0;
    for (int i = d_ * d_ - 1; i >= 0; --i) x = x * f_->order() + e[i];
    return x;
  }

  std::shared_ptr<const GaloisField> f_;
  int d_, size_;
  std::vector<int> add_, mul_, scalar_;
};

// A one-object algebra over Z[lambda^+-1, mu^+-1]: free on the arrows of
// `algebra`, modulo `relations`.
struct AlgebraPresentation {
  std::string name;
  PresentationPtr algebra;
  std::vector<Element> relations;

  std::vector<std::string> generators() const {
    std::vector<std::string> g;
    for (auto& a : algebra->quiver->arrows()) g.push_back(a.name);
    return g;
  }
};

inline AlgebraPresentation make_algebra(const std::string& name, const std::vector<std::string>& generators) {
  auto q = std::make_shared<Quiver>();
  q->add_object("1");
  for (auto& g : generators) q->add_arrow(g, 0, 0, 0);
  return {name, make_presentation(name, q), {}};
}

inline Json to_json(const AlgebraPresentation& a) {
  Json j;
  j["name"] = a.name;
  j["generators"] = a.generators();
  Json r = Json::array();
  for (auto& e : a.relations) r.push_back(to_json(e));
  j["relations"] = r;
  return j;
}

struct PointReport {
  std::string target;
  int q = 0, dim = 1;
  std::map<std::pair<int, int>, std::uint64_t> per_units;  // (lambda, mu) -> count
  std::uint64_t total = 0;
  std::uint64_t nodes = 0;

  CountReport report() const { return {"point_count", target, total}; }
};

namespace detail {

struct CompiledRelation {
  std::vector<std::pair<Laurent, std::vector<int>>> terms;
  std::vector<int> vars;  // distinct generator indices
};

class PointSolver {
 public:
  PointSolver(const AlgebraPresentation& P, const MatrixRing& R, std::uint64_t budget)
      : R_(R), budget_(budget) {
    n_ = static_cast<int>(P.algebra->quiver->arrow_count());
    occurs_.assign(n_, {});
    for (auto& e : P.relations) {
      CompiledRelation c;
      for (auto& [p, coeff] : e.terms()) {
        std::vector<int> w(p.begin(), p.end());
        for (int v : w)
          if (std::find(c.vars.begin(), c.vars.end(), v) == c.vars.end()) c.vars.push_back(v);
        c.terms.emplace_back(coeff, w);
      }
      for (int v : c.vars) occurs_[v].push_back(static_cast<int>(rels_.size()));
      rels_.push_back(std::move(c));
    }
  }

  std::uint64_t count(int lambda, int mu, std::uint64_t& nodes) {
    const GaloisField& F = R_.field();
    std::map<int, int> at{{Variables::id("lambda"), lambda}, {Variables::id("mu"), mu}};
    coeff_.assign(rels_.size(), {});
    for (std::size_t r = 0; r < rels_.size(); ++r)
      for (auto& [c, w] : rels_[r].terms) coeff_[r].push_back(R_.scalar(F.evaluate(c, at)));
    val_.assign(n_, 0);
    assigned_.assign(n_, false);
    open_.assign(rels_.size(), 0);
    for (std::size_t r = 0; r < rels_.size(); ++r) {
      open_[r] = static_cast<int>(rels_[r].vars.size());
      if (open_[r] == 0 && !holds(static_cast<int>(r))) return 0;
    }
    nodes_ = &nodes;
    return search(n_);
  }

 private:
  bool holds(int r) const {
    int acc = 0;
    const auto& rel = rels_[r];
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      int x = coeff_[r][t];
      for (int v : rel.terms[t].second) x = R_.mul(x, val_[v]);
      acc = R_.add(acc, x);
    }
    return acc == 0;
  }

  int choose() const {
    for (std::size_t r = 0; r < rels_.size(); ++r)
      if (open_[r] == 1)
        for (int v : rels_[r].vars)
          if (!assigned_[v]) return v;
    int best = -1;
    std::size_t score = 0;
    for (int v = 0; v < n_; ++v)
      if (!assigned_[v] && (best < 0 || occurs_[v].size() > score)) best = v, score = occurs_[v].size();
    return best;
  }

  std::uint64_t search(int remaining) {
    if (++*nodes_ > budget_)
      throw BudgetExceeded("point count exceeded " + std::to_string(budget_) + " search nodes");
    if (remaining == 0) return 1;
    int v = choose();
    assigned_[v] = true;
    for (int r : occurs_[v]) --open_[r];
    std::uint64_t total = 0;
    for (int x = 0; x < R_.size(); ++x) {
      val_[v] = x;
      bool ok = true;
      for (int r : occurs_[v])
        if (open_[r] == 0 && !holds(r)) {
          ok = false;
          break;
        }
      if (ok) total += search(remaining - 1);
    }
    for (int r : occurs_[v]) ++open_[r];
    assigned_[v] = false;
    return total;
  }

  const MatrixRing& R_;
  std::uint64_t budget_;
  int n_ = 0;
  std::vector<CompiledRelation> rels_;
  std::vector<std::vector<int>> occurs_;
  std::vector<std::vector<int>> coeff_;
  std::vector<int> val_, open_;
  std::vector<bool> assigned_;
  std::uint64_t* nodes_ = nullptr;
};

}  // namespace detail

// Counts assignments of d x d matrices over GF(q) to the generators that
// satisfy every relation, with lambda and mu pinned to the given units.
// An empty unit list means all units of GF(q).
inline PointReport point_count(const AlgebraPresentation& P, int q, std::vector<int> lambdas, std::vector<int> mus,
                               int dim = 1, std::uint64_t budget = kEnumerationBudget) {
  auto F = std::make_shared<const GaloisField>(q);
  MatrixRing R(F, dim);
  if (lambdas.empty()) lambdas = F->units();
  if (mus.empty()) mus = F->units();
  for (int u : lambdas)
    if (u <= 0 || u >= q) throw std::invalid_argument("lambda must be a unit of GF(" + std::to_string(q) + ")");
  for (int u : mus)
    if (u <= 0 || u >= q) throw std::invalid_argument("mu must be a unit of GF(" + std::to_string(q) + ")");
  detail::PointSolver solver(P, R, budget);
  PointReport rep;
  rep.q = q;
  rep.dim = dim;
  rep.target = "GF(" + std::to_string(q) + ")" + (dim > 1 ? " " + std::to_string(dim) + "x" + std::to_string(dim) : "");
  if (lambdas.size() == 1 && mus.size() == 1)
    rep.target += " lambda=" + std::to_string(lambdas[0]) + " mu=" + std::to_string(mus[0]);
  else
    rep.target += " all unit pairs";
  for (int l : lambdas)
    for (int m : mus) {
      std::uint64_t c = solver.count(l, m, rep.nodes);
      rep.per_units[{l, m}] = c;
      rep.total += c;
    }
  return rep;
}

inline Json to_json(const PointReport& r) {
  Json j{{"invariant", "point_count"}, {"target", r.target}, {"count", r.total}, {"q", r.q}, {"dim", r.dim}};
  Json per = Json::array();
  for (auto& [k, c] : r.per_units) per.push_back(Json{{"lambda", k.first}, {"mu", k.second}, {"count", c}});
  j["per_units"] = per;
  return j;
}

}  // namespace knotcat

#endif
