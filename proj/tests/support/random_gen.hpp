#pragma once

// Deterministic random generators for property tests.

#include <random>

#include "colorlie/cochain.hpp"
#include "colorlie/color_lie.hpp"
#include "colorlie/hochschild.hpp"

namespace testgen {

using namespace colorlie;

inline Scalar random_rational(std::mt19937_64& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  return Scalar::rational(num(rng), den(rng));
}

/// Random cochain in the slice C^arity(L, M)_gamma, small rational values.
inline Cochain random_cochain(std::mt19937_64& rng, const ColorLieAlgebra& L, const Module& M,
                              int arity, const GroupElement& gamma) {
  Cochain f;
  f.arity = arity;
  f.degree = gamma;
  CochainBasis basis = cochain_tuple_basis(L, M, arity, gamma);
  for (const auto& [tuple, j] : basis.slots) {
    Scalar c = random_rational(rng);
    if (c.is_zero()) continue;
    auto& slot = f.values[tuple];
    sparse_add(slot, j, c);
    if (slot.empty()) f.values.erase(tuple);
  }
  return f;
}

/// Random degree-e Hochschild cochain on a truncated view: sparse values
/// assembled from basis monomials of the matching degree.
inline HCochain random_hcochain(std::mt19937_64& rng, const TruncatedUView& view, int arity) {
  HCochain f;
  f.arity = arity;
  std::uniform_int_distribution<int> pickiness(0, 3);
  const auto& L = view.algebra();
  for (const auto& tuple : view.domain_tuples(arity)) {
    GroupElement deg = L.group().identity();
    for (const auto& m : tuple) deg = L.group().compose(deg, monomial_degree(L, m));
    UElement value;
    for (const auto& target : view.basis_of_degree(deg)) {
      if (pickiness(rng) != 0) continue;
      Scalar c = random_rational(rng, 3);
      if (c.is_zero()) continue;
      auto it = value.find(target);
      if (it == value.end())
        value.emplace(target, c);
      else {
        it->second += c;
        if (it->second.is_zero()) value.erase(it);
      }
    }
    if (!value.empty()) f.values.emplace(tuple, std::move(value));
  }
  return f;
}

}  // namespace testgen
