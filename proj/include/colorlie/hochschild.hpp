#pragma once

#include <functional>
#include <map>
#include <vector>

#include "colorlie/enveloping.hpp"
#include "colorlie/linalg.hpp"

namespace colorlie {

/// Filtration-truncated view of U(g): the PBW monomials of length <= cutoff.
/// Products are computed exactly in U(g); the cutoff bounds only which
/// argument tuples are quantified over (total length <= cutoff), so every
/// product appearing in a differential identity stays inside the view and
/// the Hochschild relations hold on the nose.
class TruncatedUView {
 public:
  using Basis = PBWMonomial;
  using Elem = UElement;

  TruncatedUView(const ColorLieAlgebra& L, int cutoff);

  const ColorLieAlgebra& algebra() const { return *L_; }
  int cutoff() const { return cutoff_; }
  const std::vector<PBWMonomial>& basis() const { return basis_; }
  const std::vector<PBWMonomial>& basis_of_degree(const GroupElement& d) const;

  Elem mul(const Elem& a, const Elem& b) const { return engine_.multiply(a, b); }
  static Elem basis_elem(const Basis& b) { return Elem{{b, Scalar(1)}}; }
  int weight(const Basis& b) const { return b.length(); }
  GroupElement degree(const Basis& b) const { return monomial_degree(*L_, b); }

  /// Tuples of basis monomials with total length <= cutoff.
  std::vector<std::vector<Basis>> domain_tuples(int arity) const;

 private:
  const ColorLieAlgebra* L_;
  int cutoff_;
  EnvelopingAlgebra engine_;
  std::vector<PBWMonomial> basis_;
  mutable std::map<GroupElement, std::vector<PBWMonomial>> by_degree_;
};

/// Finite-dimensional associative algebra given by a multiplication table,
/// for Hochschild computations away from U(g).
class FiniteAssocAlgebra {
 public:
  using Basis = int;
  using Elem = SparseVec;

  FiniteAssocAlgebra(std::vector<std::string> names, std::vector<std::vector<SparseVec>> table);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }

  Elem mul(const Elem& a, const Elem& b) const;
  static Elem basis_elem(int i) { return Elem{{i, Scalar(1)}}; }
  int weight(int) const { return 0; }
  std::vector<std::vector<int>> domain_tuples(int arity) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<SparseVec>> table_;
};

/// Degree-e multilinear p-cochain, values tabulated on basis tuples.
template <class A>
struct HCochainT {
  int arity = 0;
  std::map<std::vector<typename A::Basis>, typename A::Elem> values;

  bool is_zero() const { return values.empty(); }
};

using HCochain = HCochainT<TruncatedUView>;

template <class A>
void h_add(typename A::Elem& acc, const Scalar& f, const typename A::Elem& v) {
  for (const auto& [m, c] : v) {
    Scalar add = f * c;
    if (add.is_zero()) continue;
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, add);
    else {
      it->second += add;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

/// Multilinear evaluation: expands every argument over its basis support.
template <class A>
typename A::Elem h_evaluate(const A& alg, const HCochainT<A>& f,
                            const std::vector<typename A::Elem>& args) {
  if (static_cast<int>(args.size()) != f.arity) throw Error("hochschild arity mismatch");
  typename A::Elem out;
  std::vector<typename A::Basis> tuple(args.size());
  std::function<void(std::size_t, Scalar)> walk = [&](std::size_t pos, Scalar factor) {
    if (pos == args.size()) {
      auto it = f.values.find(tuple);
      if (it != f.values.end()) h_add<A>(out, factor, it->second);
      return;
    }
    for (const auto& [m, c] : args[pos]) {
      tuple[pos] = m;
      walk(pos + 1, factor * c);
    }
  };
  walk(0, Scalar(1));
  return out;
}

/// Hochschild coboundary
///   (df)(a_0,...,a_p) = a_0 f(a_1,...,a_p)
///                     + sum_i (-1)^{i+1} f(a_0,...,a_i a_{i+1},...,a_p)
///                     + (-1)^{p+1} f(a_0,...,a_{p-1}) a_p,
/// tabulated on the algebra's domain tuples of arity p+1.
template <class A>
HCochainT<A> delta_h(const A& alg, const HCochainT<A>& f) {
  HCochainT<A> out;
  out.arity = f.arity + 1;
  int p = f.arity;
  for (const auto& tuple : alg.domain_tuples(p + 1)) {
    typename A::Elem total;

    std::vector<typename A::Elem> args;
    for (int t = 1; t <= p; ++t) args.push_back(A::basis_elem(tuple[t]));
    h_add<A>(total, Scalar(1), alg.mul(A::basis_elem(tuple[0]), h_evaluate(alg, f, args)));

    for (int i = 0; i + 1 <= p; ++i) {
      args.clear();
      for (int t = 0; t < i; ++t) args.push_back(A::basis_elem(tuple[t]));
      args.push_back(alg.mul(A::basis_elem(tuple[i]), A::basis_elem(tuple[i + 1])));
      for (int t = i + 2; t <= p; ++t) args.push_back(A::basis_elem(tuple[t]));
      h_add<A>(total, (i % 2 == 0) ? Scalar(-1) : Scalar(1), h_evaluate(alg, f, args));
    }

    args.clear();
    for (int t = 0; t < p; ++t) args.push_back(A::basis_elem(tuple[t]));
    h_add<A>(total, (p % 2 == 0) ? Scalar(-1) : Scalar(1),
             alg.mul(h_evaluate(alg, f, args), A::basis_elem(tuple[p])));

    if (!total.empty()) out.values.emplace(tuple, std::move(total));
  }
  return out;
}

template <class A>
struct HDefect {
  std::vector<typename A::Basis> tuple;
  typename A::Elem defect;
};

/// Nonzero values of delta_h(f): empty iff f is a cocycle on the view.
template <class A>
std::vector<HDefect<A>> hochschild_cocycle_defects(const A& alg, const HCochainT<A>& f) {
  std::vector<HDefect<A>> out;
  for (auto& [tuple, value] : delta_h(alg, f).values) out.push_back({tuple, value});
  return out;
}

/// Degree-e gradedness of stored values.
VerificationReport check_hcochain_degree(const TruncatedUView& view, const HCochain& f);

/// Exact order-1 triviality test: is the 2-cochain a delta_h image of some
/// degree-e 1-cochain with values inside the view?
bool in_image_of_delta_h(const TruncatedUView& view, const HCochain& f);

}  // namespace colorlie
