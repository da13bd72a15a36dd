#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gapcert/generators.hpp"

namespace gapcert {

/// S letters are always Hermitian. T letters are Hermitian by default; the
/// paper-literal system with free (starred) T letters is kept behind this
/// switch.
struct HermiticityConfig {
  bool t_hermitian = true;

  friend bool operator==(const HermiticityConfig& a, const HermiticityConfig& b) {
    return a.t_hermitian == b.t_hermitian;
  }
};

/// One letter of the word alphabet: a generator, possibly starred.
struct Letter {
  Generator gen;
  bool starred = false;
  bool hermitian = true;
  int adjoint_id = 0;

  std::string str() const { return gen.str() + (starred ? "*" : ""); }
};

/// Fixed, deterministically ordered alphabet for a given site count and
/// Hermiticity configuration. Letter ids index into `letters`.
class LetterTable {
 public:
  LetterTable(int n, HermiticityConfig config) : n_(n), config_(config) {
    auto gens = all_generators(n);
    for (auto& g : gens) {
      Letter l;
      l.gen = g;
      l.hermitian = g.is_s() || config.t_hermitian;
      l.adjoint_id = static_cast<int>(letters_.size());
      letters_.push_back(l);
    }
    if (!config.t_hermitian) {
      int base = static_cast<int>(letters_.size());
      int idx = 0;
      for (auto& g : gens) {
        if (g.is_s()) {
          ++idx;
          continue;
        }
        Letter l;
        l.gen = g;
        l.starred = true;
        l.hermitian = false;
        l.adjoint_id = idx;
        letters_[static_cast<std::size_t>(idx)].adjoint_id =
            base + static_cast<int>(starred_of_.size());
        starred_of_.push_back(idx);
        letters_.push_back(l);
        ++idx;
      }
    }
    for (std::size_t id = 0; id < letters_.size(); ++id)
      id_of_[key(letters_[id].gen, letters_[id].starred)] = static_cast<int>(id);
  }

  int n() const { return n_; }
  const HermiticityConfig& config() const { return config_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int id) const { return letters_[static_cast<std::size_t>(id)]; }

  int id(const Generator& g, bool starred = false) const {
    auto it = id_of_.find(key(g, starred));
    if (it == id_of_.end()) throw DomainError("LetterTable: unknown letter");
    return it->second;
  }

 private:
  static std::string key(const Generator& g, bool starred) {
    return g.str() + (starred ? "*" : "");
  }
  int n_;
  HermiticityConfig config_;
  std::vector<Letter> letters_;
  std::vector<int> starred_of_;
  std::map<std::string, int> id_of_;
};

/// A word over letter ids; the empty word is the unit.
using Word = std::vector<std::uint16_t>;

/// Graded lexicographic order: degree first, then letter ids.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline Word word_concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word word_adjoint(const Word& w, const LetterTable& table) {
  Word out(w.rbegin(), w.rend());
  for (auto& id : out) id = static_cast<std::uint16_t>(table.letter(id).adjoint_id);
  return out;
}

inline std::string word_str(const Word& w, const LetterTable& table) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += " · ";
    s += table.letter(w[k]).str();
  }
  return s;
}

/// Noncommutative *-polynomial over the letter alphabet.
class NcPoly {
 public:
  using TermMap = std::map<Word, ExactComplex, WordLess>;

  NcPoly() = default;

  static NcPoly unit(ExactComplex c = ExactComplex(1)) {
    NcPoly p;
    p.add_term(Word{}, std::move(c));
    return p;
  }

  static NcPoly letter(int id, ExactComplex c = ExactComplex(1)) {
    NcPoly p;
    p.add_term(Word{static_cast<std::uint16_t>(id)}, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = 0;
    for (auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
  }

  void add_term(const Word& w, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExactComplex coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ExactComplex() : it->second;
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

  NcPoly scaled(const ExactComplex& c) const {
    NcPoly out;
    if (c.is_zero()) return out;
    for (auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
  }

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (auto& [u, cu] : a.terms_)
      for (auto& [v, cv] : b.terms_) out.add_term(word_concat(u, v), cu * cv);
    return out;
  }

  NcPoly adjoint(const LetterTable& table) const {
    NcPoly out;
    for (auto& [w, c] : terms_) out.terms_.emplace(word_adjoint(w, table), c.conj());
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  std::string str(const LetterTable& table) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")·" + word_str(w, table);
    }
    return s;
  }

 private:
  TermMap terms_;
};

/// Lie-to-associative expansion: brackets become xy - yx, the scalar
/// distributes, leaves become length-1 words of unstarred letters.
inline NcPoly expand(const CommTree& t, const LetterTable& table) {
  struct Rec {
    const LetterTable& table;
    NcPoly run(const CommTree::Node* node) {
      if (node->leaf) return NcPoly::letter(table.id(*node->leaf));
      NcPoly a = run(node->left.get());
      NcPoly b = run(node->right.get());
      return a * b - b * a;
    }
  } rec{table};
  return rec.run(t.node().get()).scaled(t.scalar());
}

/// All words of degree <= k in graded lexicographic order, unit first.
inline std::vector<Word> enumerate_words(const LetterTable& table, int k) {
  if (k < 0) throw DomainError("enumerate_words: negative degree");
  std::vector<Word> out;
  out.push_back(Word{});
  std::vector<Word> prev = {Word{}};
  for (int d = 1; d <= k; ++d) {
    std::vector<Word> cur;
    cur.reserve(prev.size() * static_cast<std::size_t>(table.size()));
    for (auto& w : prev)
      for (int id = 0; id < table.size(); ++id) {
        Word e = w;
        e.push_back(static_cast<std::uint16_t>(id));
        cur.push_back(std::move(e));
      }
    out.insert(out.end(), cur.begin(), cur.end());
    prev = std::move(cur);
  }
  return out;
}

}  // namespace gapcert
