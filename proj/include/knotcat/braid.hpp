// Braid words and their combinatorics.
#ifndef KNOTCAT_BRAID_HPP
#define KNOTCAT_BRAID_HPP

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcat {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +k for sigma_k, -k for its inverse

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
    if (n < 1) throw BraidError("strand count must be positive");
    for (int l : letters)
      if (l == 0 || std::abs(l) > n - 1)
        throw BraidError("generator index " + std::to_string(l) + " out of range for B" + std::to_string(n));
  }

  // Tokens "s<k>", "s<k>^-1" or signed integers, separated by spaces or commas.
  static BraidWord parse(std::string_view text, int n) {
    std::vector<int> word;
    std::string buf(text);
    for (char& c : buf)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(buf);
    for (std::string tok; in >> tok;) {
      std::string t = tok;
      int sign = 1;
      if (t[0] == 's' || t[0] == 'S') {
        t = t.substr(1);
        auto caret = t.find('^');
        if (caret != std::string::npos) {
          std::string e = t.substr(caret + 1);
          if (e != "-1" && e != "1" && e != "+1") throw BraidError("malformed token '" + tok + "'");
          if (e == "-1") sign = -1;
          t = t.substr(0, caret);
        }
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw BraidError("malformed token '" + tok + "'");
      } else {
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (t[0] == '-') sign = -1;
        t = t.substr(start);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw BraidError("malformed token '" + tok + "'");
      }
      word.push_back(sign * std::stoi(t));
    }
    return BraidWord(n, word);
  }

  std::string str() const {
    std::string s;
    for (int l : letters) {
      if (!s.empty()) s += " ";
      s += "s" + std::to_string(std::abs(l));
      if (l < 0) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

// Strand tracking: position p holds strand perm[p] after reading the word
// left to right. Result maps starting strand i to its final position.
inline std::vector<int> underlying_permutation(const BraidWord& b) {
  std::vector<int> at(b.strands + 1);
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters) {
    int k = std::abs(l);
    std::swap(at[k], at[k + 1]);
  }
  std::vector<int> perm(b.strands + 1);
  for (int p = 1; p <= b.strands; ++p) perm[at[p]] = p;
  perm[0] = 0;
  return perm;
}

struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // sorted, ordered by least element
  std::vector<int> component_of;         // 1-based strand -> 0-based block index
  int component_count() const { return static_cast<int>(blocks.size()); }
};

inline OrbitPartition strand_orbits(const BraidWord& b) {
  std::vector<int> perm = underlying_permutation(b);
  OrbitPartition o;
  o.component_of.assign(b.strands + 1, -1);
  for (int i = 1; i <= b.strands; ++i) {
    if (o.component_of[i] >= 0) continue;
    std::vector<int> block;
    int j = i;
    while (o.component_of[j] < 0) {
      o.component_of[j] = static_cast<int>(o.blocks.size());
      block.push_back(j);
      j = perm[j];
    }
    std::sort(block.begin(), block.end());
    o.blocks.push_back(block);
  }
  return o;
}

struct WritheReport {
  int total = 0;
  std::vector<int> components;  // indexed like OrbitPartition::blocks
};

inline WritheReport writhes(const BraidWord& b) {
  OrbitPartition orb = strand_orbits(b);
  WritheReport w;
  w.components.assign(orb.blocks.size(), 0);
  std::vector<int> at(b.strands + 1);
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters) {
    int k = std::abs(l), s = l > 0 ? 1 : -1;
    w.total += s;
    int c1 = orb.component_of[at[k]], c2 = orb.component_of[at[k + 1]];
    if (c1 == c2) w.components[c1] += s;
    std::swap(at[k], at[k + 1]);
  }
  return w;
}

inline std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

enum class MarkovKind { Conjugation, StabilizePositive, StabilizeNegative };

struct MarkovMove {
  MarkovKind kind = MarkovKind::Conjugation;
  std::vector<int> conjugator;

  static MarkovMove conjugate(std::vector<int> g) { return {MarkovKind::Conjugation, std::move(g)}; }
  static MarkovMove stabilize(bool positive) {
    return {positive ? MarkovKind::StabilizePositive : MarkovKind::StabilizeNegative, {}};
  }
  std::string str() const {
    switch (kind) {
      case MarkovKind::StabilizePositive: return "stab+";
      case MarkovKind::StabilizeNegative: return "stab-";
      default: {
        std::string w;
        for (int l : conjugator) {
          if (!w.empty()) w += " ";
          w += "s" + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : "");
        }
        return "conj(" + w + ")";
      }
    }
  }
};

// Conjugation returns g b g^-1 (freely reduced); stabilization appends
// sigma_n^{+-1} in B_{n+1}.
inline BraidWord markov_move(const BraidWord& b, const MarkovMove& m) {
  if (m.kind == MarkovKind::Conjugation) {
    for (int l : m.conjugator)
      if (l == 0 || std::abs(l) > b.strands - 1) throw BraidError("conjugator index out of range");
    std::vector<int> w = m.conjugator;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    for (auto it = m.conjugator.rbegin(); it != m.conjugator.rend(); ++it) w.push_back(-*it);
    return BraidWord(b.strands, free_reduce(w));
  }
  std::vector<int> w = b.letters;
  w.push_back(m.kind == MarkovKind::StabilizePositive ? b.strands : -b.strands);
  return BraidWord(b.strands + 1, w);
}

}  // namespace knotcat

#endif
