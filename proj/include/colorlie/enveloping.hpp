#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/color_lie.hpp"

namespace colorlie {

/// Ordered monomial y_{k_1}...y_{k_p} of U(g): nondecreasing letters,
/// strictly increasing wherever eps(g,g) != 1. The empty monomial is 1.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  explicit PBWMonomial(std::vector<int> letters) : l_(std::move(letters)) {}

  const std::vector<int>& letters() const { return l_; }
  int length() const { return static_cast<int>(l_.size()); }
  bool is_unit() const { return l_.empty(); }

  // graded lexicographic: by length, then letterwise
  std::strong_ordering operator<=>(const PBWMonomial& o) const {
    if (auto c = l_.size() <=> o.l_.size(); c != 0) return c;
    return l_ <=> o.l_;
  }
  bool operator==(const PBWMonomial&) const = default;

 private:
  std::vector<int> l_;
};

bool monomial_admissible(const ColorLieAlgebra& L, const PBWMonomial& m);
GroupElement monomial_degree(const ColorLieAlgebra& L, const PBWMonomial& m);
std::string monomial_str(const ColorLieAlgebra& L, const PBWMonomial& m);

/// All admissible monomials of length <= max_length, graded lex order.
std::vector<PBWMonomial> pbw_basis_enumerate(const ColorLieAlgebra& L, int max_length);

/// Polynomial in the deformation parameter t; truncation is applied by the
/// ring context, not stored per value.
class TPoly {
 public:
  TPoly() = default;
  static TPoly constant(const Scalar& s) { return t_term(0, s); }
  static TPoly t_term(int order, const Scalar& s);

  Scalar coeff(int order) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  TPoly& add(const TPoly& o);
  TPoly mul(const TPoly& o, int trunc) const;
  TPoly scaled(const Scalar& s) const;

  bool operator==(const TPoly&) const = default;
  std::string str() const;

 private:
  void normalize();
  std::vector<Scalar> c_;  // ascending t powers, no trailing zeros
};

struct ScalarRing {
  using Elem = Scalar;
  Elem one() const { return Scalar(1); }
  Elem from_scalar(const Scalar& s) const { return s; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem scale(const Elem& a, const Scalar& s) const { return a * s; }
  void add_into(Elem& a, const Elem& b) const { a += b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

struct TPolyRing {
  int trunc = 2;  // coefficients live in K[t]/(t^{trunc+1})
  using Elem = TPoly;
  Elem one() const { return TPoly::constant(Scalar(1)); }
  Elem from_scalar(const Scalar& s) const { return TPoly::constant(s); }
  Elem mul(const Elem& a, const Elem& b) const { return a.mul(b, trunc); }
  Elem scale(const Elem& a, const Scalar& s) const { return a.scaled(s); }
  void add_into(Elem& a, const Elem& b) const { a.add(b); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

template <class Ring>
using SparseU = std::map<PBWMonomial, typename Ring::Elem>;

using UElement = std::map<PBWMonomial, Scalar>;
using UPolyElement = std::map<PBWMonomial, TPoly>;

template <class Ring>
void u_add_term(const Ring& ring, SparseU<Ring>& acc, const PBWMonomial& m,
                const typename Ring::Elem& c) {
  if (ring.is_zero(c)) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
    return;
  }
  ring.add_into(it->second, c);
  if (ring.is_zero(it->second)) acc.erase(it);
}

template <class Ring>
void u_axpy(const Ring& ring, SparseU<Ring>& acc, const typename Ring::Elem& f,
            const SparseU<Ring>& v) {
  for (const auto& [m, c] : v) u_add_term(ring, acc, m, ring.mul(f, c));
}

template <class Ring>
int u_filtration_degree(const SparseU<Ring>& u) {
  int top = -1;
  for (const auto& [m, c] : u) top = std::max(top, m.length());
  return top;
}

/// PBW rewriting engine: repeatedly rewrites the leftmost disorder
///   y_a y_b -> eps(a,b) y_b y_a + tail(a,b)          (a > b)
///   y_a y_a -> (1/2) tail(a,a)                       (eps(g_a,g_a) = -1)
/// where tail defaults to the bracket image and may carry deformation
/// corrections of lower filtration. Terminates by the (length,
/// inversion-count) measure; order-independence is property-tested through
/// associativity.
template <class Ring>
class PbwEngine {
 public:
  using Coef = typename Ring::Elem;
  using Elem = SparseU<Ring>;

  PbwEngine(const ColorLieAlgebra& L, Ring ring) : L_(&L), ring_(std::move(ring)) {
    for (int i = 0; i < L.dim(); ++i) {
      if (L.eps(i, i).is_one() && !L.bracket_basis(i, i).empty())
        throw Error("nonzero [x,x] at eps(g,g) = 1: not a PBW-admissible algebra");
    }
    for (int a = 0; a < L.dim(); ++a) {
      for (int b = 0; b <= a; ++b) {
        Elem tail;
        for (const auto& [k, c] : L.bracket_basis(a, b))
          u_add_term(ring_, tail, PBWMonomial({k}), ring_.from_scalar(c));
        if (!tail.empty()) tails_[{a, b}] = std::move(tail);
      }
    }
  }

  const ColorLieAlgebra& algebra() const { return *L_; }
  const Ring& ring() const { return ring_; }

  /// Replaces the relation tail for a pair a >= b (deformation pipelines).
  void set_tail(int a, int b, Elem tail) {
    if (b > a) throw Error("tail index order");
    if (tail.empty())
      tails_.erase({a, b});
    else
      tails_[{a, b}] = std::move(tail);
  }

  const Elem* tail(int a, int b) const {
    auto it = tails_.find({a, b});
    return it == tails_.end() ? nullptr : &it->second;
  }

  Elem unit() const {
    Elem e;
    e.emplace(PBWMonomial(), ring_.one());
    return e;
  }

  Elem normal_form(std::vector<int> word, Coef coeff) const {
    for (int i : word)
      if (i < 0 || i >= L_->dim()) throw Error("word letter out of range");
    Elem result;
    std::vector<std::pair<std::vector<int>, Coef>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      if (ring_.is_zero(c)) continue;

      std::size_t p = 0;
      bool ordered = true;
      for (; p + 1 < w.size(); ++p) {
        if (w[p] > w[p + 1]) {
          ordered = false;
          break;
        }
        if (w[p] == w[p + 1] && !L_->eps(w[p], w[p]).is_one()) {
          ordered = false;
          break;
        }
      }
      if (ordered) {
        u_add_term(ring_, result, PBWMonomial(std::move(w)), c);
        continue;
      }

      int a = w[p], b = w[p + 1];
      if (a > b) {
        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        work.emplace_back(std::move(swapped), ring_.scale(c, L_->eps(a, b)));
        emit_tail(work, w, p, a, b, c);
      } else {
        // eps(g_a, g_a) = -1: 2 y_a y_a = tail(a,a)
        emit_tail(work, w, p, a, a, ring_.scale(c, Scalar::rational(1, 2)));
      }
    }
    return result;
  }

  Elem multiply(const Elem& u, const Elem& v) const {
    Elem out;
    for (const auto& [mu, cu] : u) {
      for (const auto& [mv, cv] : v) {
        std::vector<int> word = mu.letters();
        word.insert(word.end(), mv.letters().begin(), mv.letters().end());
        Elem part = normal_form(std::move(word), ring_.mul(cu, cv));
        for (const auto& [m, c] : part) u_add_term(ring_, out, m, c);
      }
    }
    return out;
  }

 private:
  void emit_tail(std::vector<std::pair<std::vector<int>, Coef>>& work, const std::vector<int>& w,
                 std::size_t p, int a, int b, const Coef& c) const {
    const Elem* t = tail(a, b);
    if (!t) return;
    for (const auto& [m, tc] : *t) {
      std::vector<int> next;
      next.reserve(w.size() - 2 + m.letters().size());
      next.insert(next.end(), w.begin(), w.begin() + p);
      next.insert(next.end(), m.letters().begin(), m.letters().end());
      next.insert(next.end(), w.begin() + p + 2, w.end());
      work.emplace_back(std::move(next), ring_.mul(c, tc));
    }
  }

  const ColorLieAlgebra* L_;
  Ring ring_;
  std::map<std::pair<int, int>, Elem> tails_;
};

using EnvelopingAlgebra = PbwEngine<ScalarRing>;

std::optional<GroupElement> u_homogeneous_degree(const ColorLieAlgebra& L, const UElement& u);

std::string u_str(const ColorLieAlgebra& L, const UElement& u);
std::string u_poly_str(const ColorLieAlgebra& L, const UPolyElement& u);

/// pi_r extraction: the t^r coefficient of a polynomial element.
UElement t_coefficient(const UPolyElement& u, int order);

}  // namespace colorlie
