// Multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Variables are interned by name; monomials compare by
// variable name so printed output does not depend on interning order.
#ifndef KNOTCAT_LAURENT_HPP
#define KNOTCAT_LAURENT_HPP

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotcat {

using Integer = boost::multiprecision::cpp_int;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Variables {
 public:
  static int id(std::string_view name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return id;
  }
  static const std::string& name(int id) { return table().names.at(id); }
  // Variables are ordered by name, so the order never changes as new ones are interned.
  static bool less(int a, int b) { return a != b && name(a) < name(b); }

 private:
  struct Table {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, int> ids;
  };
  static Table& table() {
    static Table t;
    return t;
  }
};

// Sparse exponent vector, entries sorted by variable name, no zero exponents.
struct Monomial {
  std::vector<std::pair<int, int>> exps;

  int total_degree() const {
    int d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
  }
  int exponent(int var) const {
    for (auto& [v, e] : exps)
      if (v == var) return e;
    return 0;
  }
  bool is_one() const { return exps.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.reserve(a.exps.size() + b.exps.size());
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
      if (j == b.exps.size() ||
          (i < a.exps.size() && Variables::less(a.exps[i].first, b.exps[j].first))) {
        r.exps.push_back(a.exps[i++]);
      } else if (i == a.exps.size() ||
                 Variables::less(b.exps[j].first, a.exps[i].first)) {
        r.exps.push_back(b.exps[j++]);
      } else {
        int e = a.exps[i].second + b.exps[j].second;
        if (e != 0) r.exps.emplace_back(a.exps[i].first, e);
        ++i;
        ++j;
      }
    }
    return r;
  }
  Monomial inverse() const {
    Monomial r = *this;
    for (auto& p : r.exps) p.second = -p.second;
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// Graded order: total degree, then lexicographic on (variable name, exponent).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::min(a.exps.size(), b.exps.size());
    for (std::size_t i = 0; i < n; ++i) {
      int va = a.exps[i].first, vb = b.exps[i].first;
      if (va != vb) return Variables::less(vb, va);  // earlier variable present means larger
      if (a.exps[i].second != b.exps[i].second) return a.exps[i].second < b.exps[i].second;
    }
    return a.exps.size() < b.exps.size();
  }
};

class Laurent {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialLess>;

  Laurent() = default;
  Laurent(long long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_.emplace(Monomial{}, Integer(v));
  }
  Laurent(const Integer& v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_.emplace(Monomial{}, v);
  }
  Laurent(const Monomial& m, const Integer& c) {
    if (c != 0) terms_.emplace(m, c);
  }

  static Laurent variable(std::string_view name, int exp = 1) {
    if (exp == 0) return Laurent(1);
    Monomial m;
    m.exps.emplace_back(Variables::id(name), exp);
    return Laurent(m, 1);
  }

  static Laurent parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Integer constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }
  Laurent unit_inverse() const {
    if (!is_unit()) throw std::domain_error("coefficient " + str() + " is not a unit");
    return Laurent(terms_.begin()->first.inverse(), terms_.begin()->second);
  }
  Laurent pow(int k) const {
    if (k < 0) return unit_inverse().pow(-k);
    Laurent r(1), b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Laurent r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Smallest exponent of a variable over all terms (0 if the polynomial is zero).
  int min_exponent(int var) const {
    bool first = true;
    int best = 0;
    for (auto& [m, c] : terms_) {
      int e = m.exponent(var);
      if (first || e < best) best = e;
      first = false;
    }
    return best;
  }
  int max_exponent(int var) const {
    bool first = true;
    int best = 0;
    for (auto& [m, c] : terms_) {
      int e = m.exponent(var);
      if (first || e > best) best = e;
      first = false;
    }
    return best;
  }
  std::vector<int> variables() const {
    std::vector<int> vs;
    for (auto& [m, c] : terms_)
      for (auto& [v, e] : m.exps)
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [](int a, int b) { return Variables::less(a, b); });
    return vs;
  }

  // Evaluate with integer values for variables modulo p. `value(var, exp)`
  // returns var^exp mod p as an integer in [0, p).
  long long evaluate_mod(long long p, const std::function<long long(int, int)>& value) const {
    long long acc = 0;
    for (auto& [m, c] : terms_) {
      Integer cm = c % p;
      if (cm < 0) cm += p;
      long long t = cm.convert_to<long long>();
      for (auto& [v, e] : m.exps) t = t * value(v, e) % p;
      acc = (acc + t) % p;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (mag != 1 || m.is_one()) {
        out << mag;
        wrote = true;
      }
      for (auto& [v, e] : m.exps) {
        if (wrote) out << "*";
        out << Variables::name(v);
        if (e != 1) out << "^" << e;
        wrote = true;
      }
    }
    return out.str();
  }

 private:
  TermMap terms_;
};

namespace detail {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  Laurent run() {
    Laurent r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse coefficient '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Laurent expr() {
    skip();
    Laurent r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Laurent t = term();
    r = neg ? -t : t;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else break;
    }
    return r;
  }
  Laurent term() {
    Laurent r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r *= factor();
        continue;
      }
      // implicit multiplication: "2mu" or "(..)(..)"
      if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        r *= factor();
        continue;
      }
      break;
    }
    return r;
  }
  int exponent() {
    skip();
    bool neg = false;
    bool paren = eat('(');
    if (eat('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }
  Laurent factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    Laurent base;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (c == '-') {
      ++pos_;
      return -factor();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = Laurent(Integer(std::string(s_.substr(start, pos_ - start))));
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      base = Laurent::variable(s_.substr(start, pos_ - start));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (eat('^')) {
      int e = exponent();
      if (e < 0 && !base.is_unit()) fail("negative power of a non-unit");
      base = base.pow(e);
    }
    return base;
  }
};

}  // namespace detail

inline Laurent Laurent::parse(std::string_view text) { return detail::LaurentParser(text).run(); }

// [k]_q = (q^k - 1)/(q - 1) as a Laurent polynomial; negative k gives -q^k [-k]_q.
inline Laurent quantum_integer(int k, const Laurent& q) {
  Laurent r;
  if (k >= 0) {
    Laurent p(1);
    for (int i = 0; i < k; ++i) {
      r += p;
      p *= q;
    }
  } else {
    Laurent qi = q.unit_inverse();
    Laurent p = qi;
    for (int i = 0; i < -k; ++i) {
      r -= p;
      p *= qi;
    }
  }
  return r;
}

// Divide out the largest monomial factor and fix the sign so the leading
// coefficient is positive. Used to compare ideal generators up to units.
inline Laurent normalize_up_to_units(const Laurent& p) {
  if (p.is_zero()) return p;
  Monomial shift;
  for (int v : p.variables()) {
    int e = p.min_exponent(v);
    if (e != 0) shift.exps.emplace_back(v, -e);
  }
  std::sort(shift.exps.begin(), shift.exps.end(),
            [](auto& a, auto& b) { return Variables::less(a.first, b.first); });
  Laurent r = p * Laurent(shift, 1);
  if (r.terms().rbegin()->second < 0) r = -r;
  return r;
}

}  // namespace knotcat

#endif
