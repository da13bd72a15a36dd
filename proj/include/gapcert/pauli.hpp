#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gapcert/errors.hpp"
#include "gapcert/rational.hpp"

namespace gapcert {

/// Pauli axis on one site. 0 means the site is untouched (identity).
enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(Axis a) { return "IXYZ"[static_cast<int>(a)]; }

/// Tensor product of single-site Paulis on n qubits, stored densely.
/// Sites are 1-indexed in the public interface.
class PauliString {
 public:
  explicit PauliString(int n) : axes_(static_cast<std::size_t>(n), 0) {
    if (n < 0) throw DomainError("PauliString: negative site count");
  }

  PauliString(int n, std::initializer_list<std::pair<int, Axis>> ops) : PauliString(n) {
    for (auto& [site, a] : ops) set(site, a);
  }

  int n() const { return static_cast<int>(axes_.size()); }

  Axis get(int site) const {
    check_site(site);
    return static_cast<Axis>(axes_[static_cast<std::size_t>(site - 1)]);
  }

  void set(int site, Axis a) {
    check_site(site);
    axes_[static_cast<std::size_t>(site - 1)] = static_cast<std::uint8_t>(a);
  }

  bool is_identity() const {
    for (auto a : axes_)
      if (a) return false;
    return true;
  }

  int support_size() const {
    int s = 0;
    for (auto a : axes_)
      if (a) ++s;
    return s;
  }

  /// Sites with a non-identity letter, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < n(); ++i)
      if (axes_[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    return s;
  }

  std::string str() const {
    if (is_identity()) return "I";
    std::string out;
    for (int i = 1; i <= n(); ++i) {
      Axis a = get(i);
      if (a != Axis::I) {
        out += axis_char(a);
        out += std::to_string(i);
      }
    }
    return out;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.axes_ == b.axes_;
  }

  /// Canonical order: by support size, then support sites, then axes.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    int sa = a.support_size(), sb = b.support_size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.axes_.size() && i < b.axes_.size(); ++i) {
      bool pa = a.axes_[i] != 0, pb = b.axes_[i] != 0;
      if (pa != pb) return pa;  // earlier support first
      if (a.axes_[i] != b.axes_[i]) return a.axes_[i] < b.axes_[i];
    }
    return a.axes_.size() < b.axes_.size();
  }

  const std::vector<std::uint8_t>& raw() const { return axes_; }

 private:
  void check_site(int site) const {
    if (site < 1 || site > n()) throw DomainError("PauliString: site index out of range");
  }
  std::vector<std::uint8_t> axes_;
};

/// Levi-Civita symbol on {1,2,3}.
inline int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (1,2,3)
  if ((a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) || (a == 3 && b == 1 && c == 2))
    return 1;
  return -1;
}

/// Product of two Pauli strings: p * q == phase * r with phase in {1, i, -1, -i}.
/// The phase is returned as the exponent k of i^k, k in {0,1,2,3}.
inline std::pair<int, PauliString> mul_strings_phase(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw DimensionError("mul_strings: mismatched site counts");
  PauliString r(p.n());
  int k = 0;
  for (int site = 1; site <= p.n(); ++site) {
    int a = static_cast<int>(p.get(site));
    int b = static_cast<int>(q.get(site));
    if (a == 0) {
      r.set(site, static_cast<Axis>(b));
    } else if (b == 0 || a == b) {
      r.set(site, a == b ? Axis::I : static_cast<Axis>(a));
    } else {
      // sigma^a sigma^b = i eps_abc sigma^c for distinct a, b
      int c = 6 - a - b;
      r.set(site, static_cast<Axis>(c));
      int e = epsilon(a, b, c);
      k = (k + (e == 1 ? 1 : 3)) & 3;
    }
  }
  return {k, r};
}

inline ExactComplex phase_value(int k) {
  switch (k & 3) {
    case 0: return ExactComplex(1);
    case 1: return ExactComplex::i();
    case 2: return ExactComplex(-1);
    default: return -ExactComplex::i();
  }
}

/// p * q as (phase, string).
inline std::pair<ExactComplex, PauliString> mul_strings(const PauliString& p,
                                                        const PauliString& q) {
  auto [k, r] = mul_strings_phase(p, q);
  return {phase_value(k), r};
}

/// Exact linear combination of Pauli strings on a fixed number of sites.
class PauliPoly {
 public:
  using TermMap = std::map<PauliString, ExactComplex>;

  explicit PauliPoly(int n) : n_(n) {}

  static PauliPoly zero(int n) { return PauliPoly(n); }

  static PauliPoly identity(int n) {
    PauliPoly p(n);
    p.add_term(PauliString(n), ExactComplex(1));
    return p;
  }

  static PauliPoly single(const PauliString& s, ExactComplex c = ExactComplex(1)) {
    PauliPoly p(s.n());
    p.add_term(s, std::move(c));
    return p;
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const PauliString& s, const ExactComplex& c) {
    if (s.n() != n_) throw DimensionError("PauliPoly: term has wrong site count");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExactComplex coeff(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? ExactComplex() : it->second;
  }

  PauliPoly& operator+=(const PauliPoly& o) {
    check(o);
    for (auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  PauliPoly& operator-=(const PauliPoly& o) {
    check(o);
    for (auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
  }
  friend PauliPoly operator+(PauliPoly a, const PauliPoly& b) { return a += b; }
  friend PauliPoly operator-(PauliPoly a, const PauliPoly& b) { return a -= b; }

  PauliPoly scaled(const ExactComplex& c) const {
    PauliPoly out(n_);
    if (c.is_zero()) return out;
    for (auto& [s, v] : terms_) out.terms_.emplace(s, v * c);
    return out;
  }

  friend PauliPoly operator*(const PauliPoly& a, const PauliPoly& b) {
    if (a.n_ != b.n_) throw DimensionError("PauliPoly: mismatched site counts");
    PauliPoly out(a.n_);
    for (auto& [p, cp] : a.terms_)
      for (auto& [q, cq] : b.terms_) {
        auto [phase, r] = mul_strings(p, q);
        out.add_term(r, cp * cq * phase);
      }
    return out;
  }

  /// Pauli strings are self-adjoint, so the adjoint conjugates coefficients.
  PauliPoly adjoint() const {
    PauliPoly out(n_);
    for (auto& [s, c] : terms_) out.terms_.emplace(s, c.conj());
    return out;
  }

  bool is_hermitian() const { return *this == adjoint(); }

  friend bool operator==(const PauliPoly& a, const PauliPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + s.str();
    }
    return out;
  }

 private:
  void check(const PauliPoly& o) const {
    if (o.n_ != n_) throw DimensionError("PauliPoly: mismatched site counts");
  }
  int n_;
  TermMap terms_;
};

inline PauliPoly commutator(const PauliPoly& a, const PauliPoly& b) { return a * b - b * a; }

/// Expectation in the maximally mixed state: 2^{-n} Tr(p), which is the
/// identity-string coefficient.
inline ExactComplex mixed_state_moment(const PauliPoly& p) {
  return p.coeff(PauliString(p.n()));
}

/// Exact dense matrix, row-major, dimension 2^n x 2^n.
struct ExactMatrix {
  int dim = 0;
  std::vector<ExactComplex> a;  // row-major
  ExactComplex& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  const ExactComplex& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * dim + c];
  }
};

inline constexpr int kMatrixSiteCap = 6;

/// Exact tensor-product expansion of a PauliPoly.
inline ExactMatrix to_matrix_exact(const PauliPoly& p, int site_cap = kMatrixSiteCap) {
  const int n = p.n();
  if (n > site_cap) throw ResourceError("to_matrix: site count above cap");
  const int dim = 1 << n;
  ExactMatrix m;
  m.dim = dim;
  m.a.assign(static_cast<std::size_t>(dim) * dim, ExactComplex());
  // single-site entries: value and column for each row bit
  for (auto& [s, c] : p.terms()) {
    for (int row = 0; row < dim; ++row) {
      int col = 0;
      ExactComplex v = c;
      bool zero = false;
      for (int site = 1; site <= n && !zero; ++site) {
        int bit = (row >> (n - site)) & 1;
        int colbit = bit;
        switch (s.get(site)) {
          case Axis::I: break;
          case Axis::X: colbit = 1 - bit; break;
          case Axis::Y:
            colbit = 1 - bit;
            v *= (bit == 0 ? -ExactComplex::i() : ExactComplex::i());
            break;
          case Axis::Z:
            if (bit == 1) v = -v;
            break;
        }
        col = (col << 1) | colbit;
      }
      if (!zero) m.at(row, col) += v;
    }
  }
  return m;
}

inline Eigen::MatrixXcd to_matrix(const PauliPoly& p, int site_cap = kMatrixSiteCap) {
  ExactMatrix em = to_matrix_exact(p, site_cap);
  Eigen::MatrixXcd m(em.dim, em.dim);
  for (int r = 0; r < em.dim; ++r)
    for (int c = 0; c < em.dim; ++c)
      m(r, c) = std::complex<double>(em.at(r, c).re_d(), em.at(r, c).im_d());
  return m;
}

}  // namespace gapcert
