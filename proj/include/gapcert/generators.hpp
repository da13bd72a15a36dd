#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapcert/pauli.hpp"

namespace gapcert {

/// Generator of the free Lie algebra: S(i, a) for one site, T(i, j, a, b)
/// for an ordered pair i < j. Axis indices run over {1, 2, 3}.
struct Generator {
  enum class Kind : std::uint8_t { S, T };
  Kind kind;
  int i = 0, j = 0;
  int a = 0, b = 0;

  static Generator s(int i, int a) {
    if (a < 1 || a > 3 || i < 1) throw DomainError("Generator: bad S index");
    Generator g;
    g.kind = Kind::S;
    g.i = i;
    g.a = a;
    return g;
  }

  static Generator t(int i, int j, int a, int b) {
    if (!(i < j) || i < 1) throw DomainError("Generator: T requires i < j");
    if (a < 1 || a > 3 || b < 1 || b > 3) throw DomainError("Generator: bad T axis");
    Generator g;
    g.kind = Kind::T;
    g.i = i;
    g.j = j;
    g.a = a;
    g.b = b;
    return g;
  }

  bool is_s() const { return kind == Kind::S; }

  std::vector<int> sites() const {
    return is_s() ? std::vector<int>{i} : std::vector<int>{i, j};
  }

  friend bool operator==(const Generator& x, const Generator& y) {
    return x.kind == y.kind && x.i == y.i && x.j == y.j && x.a == y.a && x.b == y.b;
  }
  friend auto operator<=>(const Generator& x, const Generator& y) {
    if (x.kind != y.kind) return x.kind <=> y.kind;
    if (x.i != y.i) return x.i <=> y.i;
    if (x.j != y.j) return x.j <=> y.j;
    if (x.a != y.a) return x.a <=> y.a;
    return x.b <=> y.b;
  }

  std::string str() const {
    if (is_s()) return "S" + std::to_string(i) + "^" + std::to_string(a);
    return "T" + std::to_string(i) + std::to_string(j) + "^{" + std::to_string(a) + "," +
           std::to_string(b) + "}";
  }
};

/// Nested-commutator expression over generators with an exact scalar
/// prefactor. Sub-trees always carry scalar 1; the scalar at the root
/// multiplies the whole expression. Nodes are immutable and shared.
class CommTree {
 public:
  struct Node {
    std::optional<Generator> leaf;
    std::shared_ptr<const Node> left, right;
    int depth = 0;  // bracket nesting count
  };

  static CommTree leaf(const Generator& g, ExactComplex scalar = ExactComplex(1)) {
    auto node = std::make_shared<Node>();
    node->leaf = g;
    return CommTree(std::move(scalar), std::move(node));
  }

  /// [x, y]; scalars of the arguments multiply into the root scalar.
  static CommTree bracket(const CommTree& x, const CommTree& y) {
    auto node = std::make_shared<Node>();
    node->left = x.node_;
    node->right = y.node_;
    node->depth = std::max(x.node_->depth, y.node_->depth) + 1;
    return CommTree(x.scalar_ * y.scalar_, std::move(node));
  }

  CommTree scaled(const ExactComplex& c) const { return CommTree(scalar_ * c, node_); }

  const ExactComplex& scalar() const { return scalar_; }
  const std::shared_ptr<const Node>& node() const { return node_; }
  bool is_leaf() const { return node_->leaf.has_value(); }
  int bracket_count() const { return count_brackets(node_.get()); }

  std::string str() const { return scalar_ == ExactComplex(1) ? node_str(node_.get())
                                                              : "(" + scalar_.str() + ")*" +
                                                                    node_str(node_.get()); }

 private:
  CommTree(ExactComplex s, std::shared_ptr<const Node> n)
      : scalar_(std::move(s)), node_(std::move(n)) {}

  static int count_brackets(const Node* n) {
    if (n->leaf) return 0;
    return 1 + count_brackets(n->left.get()) + count_brackets(n->right.get());
  }

  static std::string node_str(const Node* n) {
    if (n->leaf) return n->leaf->str();
    return "[" + node_str(n->left.get()) + ", " + node_str(n->right.get()) + "]";
  }

  ExactComplex scalar_;
  std::shared_ptr<const Node> node_;
};

/// Image of a generator in the Pauli algebra (standard convention, so
/// S(i,a) -> bare Pauli and T(i,j,a,b) -> two-site Pauli product).
inline PauliString generator_image(const Generator& g, int n) {
  PauliString s(n);
  if (g.is_s()) {
    s.set(g.i, static_cast<Axis>(g.a));
  } else {
    s.set(g.i, static_cast<Axis>(g.a));
    s.set(g.j, static_cast<Axis>(g.b));
  }
  return s;
}

/// The Lie algebra homomorphism: generators to Pauli strings, brackets to
/// commutators, scalars multiplied through.
inline PauliPoly f_map(const CommTree& t, int n) {
  struct Rec {
    int n;
    PauliPoly run(const CommTree::Node* node) {
      if (node->leaf) return PauliPoly::single(generator_image(*node->leaf, n));
      return commutator(run(node->left.get()), run(node->right.get()));
    }
  } rec{n};
  return rec.run(t.node().get()).scaled(t.scalar());
}

namespace detail {

// For axis c, the unique cyclically ordered pair (b, a) in
// {(1,2),(2,3),(3,1)} with {a, b} = {1,2,3} \ {c}.
inline int cyc_b(int c) { return c % 3 + 1; }
inline int cyc_a(int c) { return (c + 1) % 3 + 1; }

// Normalizes the scalar so that f_map(tree) == target exactly. The raw
// tree image is a single Pauli string times a nonzero scalar by
// construction; anything else is a bug.
inline CommTree normalize_against(const CommTree& raw, const PauliString& target, int n) {
  PauliPoly img = f_map(raw, n);
  if (img.size() != 1) throw DomainError("g_map: raw tree image is not a single string");
  const auto& [s, c] = *img.terms().begin();
  if (!(s == target)) throw DomainError("g_map: raw tree image hit the wrong string");
  return raw.scaled(ExactComplex(1) / c);
}

}  // namespace detail

/// Nested-commutator preimage of a Pauli string with innermost leaf S on the
/// smallest support site. The scalar is computed, not transcribed, so that
/// f_map(g_map(p)) == p exactly.
inline CommTree g_map(const PauliString& p) {
  auto sites = p.support();
  const int m = static_cast<int>(sites.size());
  if (m == 0) throw DomainError("g_map: identity string has no preimage");
  std::vector<int> c(m);
  for (int k = 0; k < m; ++k) c[k] = static_cast<int>(p.get(sites[static_cast<std::size_t>(k)]));
  if (m == 1) return CommTree::leaf(Generator::s(sites[0], c[0]));
  CommTree t = CommTree::leaf(Generator::s(sites[0], detail::cyc_b(c[0])));
  for (int k = 0; k + 1 < m; ++k) {
    int bnext = (k + 1 == m - 1) ? c[static_cast<std::size_t>(k + 1)]
                                 : detail::cyc_b(c[static_cast<std::size_t>(k + 1)]);
    t = CommTree::bracket(
        t, CommTree::leaf(Generator::t(sites[static_cast<std::size_t>(k)],
                                       sites[static_cast<std::size_t>(k + 1)],
                                       detail::cyc_a(c[static_cast<std::size_t>(k)]), bnext)));
  }
  return detail::normalize_against(t, p, p.n());
}

/// Variant with innermost leaf T on the two smallest support sites; for a
/// string of support m it expands to a degree m-1 word polynomial.
inline CommTree gp_map(const PauliString& p) {
  auto sites = p.support();
  const int m = static_cast<int>(sites.size());
  if (m == 0) throw DomainError("gp_map: identity string has no preimage");
  std::vector<int> c(m);
  for (int k = 0; k < m; ++k) c[k] = static_cast<int>(p.get(sites[static_cast<std::size_t>(k)]));
  if (m == 1) return CommTree::leaf(Generator::s(sites[0], c[0]));
  int b1 = (m == 2) ? c[1] : detail::cyc_b(c[1]);
  CommTree t = CommTree::leaf(Generator::t(sites[0], sites[1], c[0], b1));
  for (int k = 1; k + 1 < m; ++k) {
    int bnext = (k + 1 == m - 1) ? c[static_cast<std::size_t>(k + 1)]
                                 : detail::cyc_b(c[static_cast<std::size_t>(k + 1)]);
    t = CommTree::bracket(
        t, CommTree::leaf(Generator::t(sites[static_cast<std::size_t>(k)],
                                       sites[static_cast<std::size_t>(k + 1)],
                                       detail::cyc_a(c[static_cast<std::size_t>(k)]), bnext)));
  }
  return detail::normalize_against(t, p, p.n());
}

/// g_map / gp_map extended linearly to a traceless PauliPoly.
inline std::vector<CommTree> g_linear(const PauliPoly& p, bool use_gp) {
  std::vector<CommTree> out;
  for (auto& [s, coeff] : p.terms()) {
    if (s.is_identity()) throw DomainError("g_linear: polynomial has an identity component");
    CommTree t = use_gp ? gp_map(s) : g_map(s);
    out.push_back(t.scaled(coeff));
  }
  return out;
}

/// All generators for n sites: 3n of kind S, 9 n(n-1)/2 of kind T.
inline std::vector<Generator> all_generators(int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= 3; ++a) gens.push_back(Generator::s(i, a));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) gens.push_back(Generator::t(i, j, a, b));
  return gens;
}

/// The distinguished basis: raw nested-commutator trees whose images hit
/// each Pauli string of support <= max_support exactly once up to scalar.
inline std::vector<CommTree> enumerate_A(int n, int max_support) {
  if (max_support > n) throw DomainError("enumerate_A: max_support exceeds n");
  std::vector<CommTree> out;
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= 3; ++a) out.push_back(CommTree::leaf(Generator::s(i, a)));

  // iterate over supports of size m >= 2 and all axis choices
  std::vector<int> sites;
  std::function<void(int, int)> rec_sites = [&](int next, int m) {
    if (static_cast<int>(sites.size()) == m) {
      int choices = static_cast<int>(sites.size());  // m-1 cyclic pairs + final axis
      std::vector<int> pick(static_cast<std::size_t>(choices), 1);
      while (true) {
        // pick[k] in {1,2,3}: for k < m-1 the excluded axis c_k; for k = m-1 the final axis
        CommTree t = CommTree::leaf(
            Generator::s(sites[0], detail::cyc_b(pick[0])));
        for (int k = 0; k + 1 < m; ++k) {
          int bnext = (k + 1 == m - 1) ? pick[static_cast<std::size_t>(k + 1)]
                                       : detail::cyc_b(pick[static_cast<std::size_t>(k + 1)]);
          t = CommTree::bracket(t, CommTree::leaf(Generator::t(
                                       sites[static_cast<std::size_t>(k)],
                                       sites[static_cast<std::size_t>(k + 1)],
                                       detail::cyc_a(pick[static_cast<std::size_t>(k)]), bnext)));
        }
        out.push_back(t);
        int k = choices - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == 3) {
          pick[static_cast<std::size_t>(k)] = 1;
          --k;
        }
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
      }
      return;
    }
    if (next > n) return;
    for (int s = next; s <= n; ++s) {
      sites.push_back(s);
      rec_sites(s + 1, m);
      sites.pop_back();
    }
  };
  for (int m = 2; m <= max_support; ++m) rec_sites(1, m);
  return out;
}

enum class RelFamily : std::uint8_t { R4a, R4b, R4c, R4d, R4e, R4f, R4g };

inline const char* family_tag(RelFamily f) {
  switch (f) {
    case RelFamily::R4a: return "4a";
    case RelFamily::R4b: return "4b";
    case RelFamily::R4c: return "4c";
    case RelFamily::R4d: return "4d";
    case RelFamily::R4e: return "4e";
    case RelFamily::R4f: return "4f";
    default: return "4g";
  }
}

/// One relation: f_map(lhs) == sum of f_map over rhs terms, exactly.
struct Relation {
  RelFamily family;
  CommTree lhs;
  std::vector<CommTree> rhs;
};

struct RelationSet {
  int n = 0;
  std::vector<Relation> relations;

  std::map<std::string, std::size_t> family_counts() const {
    std::map<std::string, std::size_t> c;
    for (auto& r : relations) ++c[family_tag(r.family)];
    return c;
  }
};

namespace detail {

inline bool overlap(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return true;
  return false;
}

inline std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline int overlap_count(const Generator& x, const Generator& y) {
  int c = 0;
  for (int s : x.sites())
    for (int t : y.sites())
      if (s == t) ++c;
  return c;
}

}  // namespace detail

/// Visits every relation index tuple as (family, generator list). The word
/// degree of the relation equals the tuple length. Triple and quadruple
/// families are restricted to index tuples with chained support overlap;
/// disjoint tuples reduce to commuting relations already present at degree
/// two.
template <typename Visitor>
inline void for_each_relation_index(int n, Visitor&& visit, int max_degree = 4) {
  if (n < 2) throw DomainError("gen_relations: need n >= 2 (no T generators otherwise)");
  std::vector<Generator> svec, tvec;
  for (auto& g : all_generators(n)) (g.is_s() ? svec : tvec).push_back(g);

  if (max_degree < 2) return;

  // 4a: S-S pairs
  for (std::size_t x = 0; x < svec.size(); ++x)
    for (std::size_t y = x + 1; y < svec.size(); ++y)
      visit(RelFamily::R4a, std::vector<Generator>{svec[x], svec[y]});

  // 4b: S-T pairs
  for (auto& s : svec)
    for (auto& t : tvec) visit(RelFamily::R4b, std::vector<Generator>{s, t});

  // 4c: T-T with one shared site; 4d: same or disjoint support
  for (std::size_t x = 0; x < tvec.size(); ++x)
    for (std::size_t y = x + 1; y < tvec.size(); ++y) {
      int shared = detail::overlap_count(tvec[x], tvec[y]);
      RelFamily fam = (shared == 1) ? RelFamily::R4c : RelFamily::R4d;
      visit(fam, std::vector<Generator>{tvec[x], tvec[y]});
    }

  if (max_degree < 3) return;

  // 4e / 4f: chained T triples and quadruples
  for (std::size_t x = 0; x < tvec.size(); ++x)
    for (std::size_t y = x + 1; y < tvec.size(); ++y) {
      if (!detail::overlap(tvec[x].sites(), tvec[y].sites())) continue;
      auto sup2 = detail::merged(tvec[x].sites(), tvec[y].sites());
      for (auto& t3 : tvec) {
        if (!detail::overlap(sup2, t3.sites())) continue;
        visit(RelFamily::R4e, std::vector<Generator>{tvec[x], tvec[y], t3});
        if (max_degree < 4) continue;
        auto sup3 = detail::merged(sup2, t3.sites());
        for (auto& t4 : tvec) {
          if (!detail::overlap(sup3, t4.sites())) continue;
          visit(RelFamily::R4f, std::vector<Generator>{tvec[x], tvec[y], t3, t4});
        }
      }
    }

  // 4g: [[S, T], T'] with chained overlap
  for (auto& s : svec)
    for (auto& t : tvec) {
      if (!detail::overlap(s.sites(), t.sites())) continue;
      auto sup2 = detail::merged(s.sites(), t.sites());
      for (auto& t2 : tvec) {
        if (!detail::overlap(sup2, t2.sites())) continue;
        visit(RelFamily::R4g, std::vector<Generator>{s, t, t2});
      }
    }
}

/// Builds the Relation for one index tuple: lhs is the left-nested bracket
/// of the tuple, rhs its image pulled back through g (family 4a, 4g) or
/// g' (the rest), with all scalars computed by exact evaluation.
inline Relation make_relation(int n, RelFamily fam, const std::vector<Generator>& gens) {
  CommTree lhs = CommTree::leaf(gens.at(0));
  for (std::size_t k = 1; k < gens.size(); ++k)
    lhs = CommTree::bracket(lhs, CommTree::leaf(gens[k]));
  bool use_gp = !(fam == RelFamily::R4a || fam == RelFamily::R4g);
  PauliPoly img = f_map(lhs, n);
  return Relation{fam, lhs, g_linear(img, use_gp)};
}

/// Generates the relation families with all scalars fixed by exact
/// evaluation under f_map.
inline RelationSet gen_relations(int n, int max_degree = 4) {
  RelationSet rs;
  rs.n = n;
  for_each_relation_index(
      n,
      [&](RelFamily fam, const std::vector<Generator>& gens) {
        rs.relations.push_back(make_relation(n, fam, gens));
      },
      max_degree);
  return rs;
}

/// Per-family relation counts without building trees.
inline std::map<std::string, std::size_t> count_relations(int n) {
  std::map<std::string, std::size_t> counts;
  for_each_relation_index(
      n, [&](RelFamily fam, const std::vector<Generator>&) { ++counts[family_tag(fam)]; });
  return counts;
}

struct VerifyReport {
  bool ok = true;
  std::size_t checked = 0;
  std::map<std::string, std::size_t> per_family;
  std::string first_failure;
};

/// Confirms every relation maps to exactly zero under f_map.
inline VerifyReport verify_relations(const RelationSet& rs) {
  VerifyReport rep;
  for (auto& rel : rs.relations) {
    PauliPoly diff = f_map(rel.lhs, rs.n);
    for (auto& r : rel.rhs) diff -= f_map(r, rs.n);
    ++rep.checked;
    ++rep.per_family[family_tag(rel.family)];
    if (!diff.is_zero()) {
      rep.ok = false;
      if (rep.first_failure.empty())
        rep.first_failure = std::string(family_tag(rel.family)) + ": " + rel.lhs.str();
    }
  }
  return rep;
}

/// Exact rank of the coefficient matrix of {f_map(t) : t in A_n} over the
/// Pauli-string basis. Equals 4^n - 1 when the images span.
inline int span_check(int n) {
  if (n > 4) throw ResourceError("span_check: n above cap 4");
  auto elements = enumerate_A(n, n);
  std::map<PauliString, int> col_of;
  std::vector<std::map<int, ExactComplex>> rows;
  for (auto& t : elements) {
    PauliPoly img = f_map(t, n);
    std::map<int, ExactComplex> row;
    for (auto& [s, c] : img.terms()) {
      auto [it, fresh] = col_of.emplace(s, static_cast<int>(col_of.size()));
      row[it->second] = c;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  // exact sparse Gaussian elimination, pivoting on the lowest column index
  std::map<int, std::map<int, ExactComplex>> pivots;  // col -> normalized row
  int rank = 0;
  for (auto row : rows) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto piv = pivots.find(lead);
      if (piv == pivots.end()) {
        ExactComplex inv = ExactComplex(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      ExactComplex factor = row.begin()->second;
      for (auto& [c, v] : piv->second) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -(factor * v));
        } else {
          it->second -= factor * v;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
  }
  return rank;
}

}  // namespace gapcert
