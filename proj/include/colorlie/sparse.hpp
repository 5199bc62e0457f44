#pragma once

#include <map>

#include "colorlie/scalar.hpp"

namespace colorlie {

/// Sparse coefficient vector over a basis; never stores zeros.
using SparseVec = std::map<int, Scalar>;

inline void sparse_add(SparseVec& acc, int index, const Scalar& value) {
  if (value.is_zero()) return;
  auto it = acc.find(index);
  if (it == acc.end()) {
    acc.emplace(index, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) acc.erase(it);
}

inline void sparse_axpy(SparseVec& acc, const Scalar& factor, const SparseVec& v) {
  if (factor.is_zero()) return;
  for (const auto& [i, c] : v) sparse_add(acc, i, factor * c);
}

inline SparseVec sparse_scaled(const SparseVec& v, const Scalar& factor) {
  SparseVec out;
  sparse_axpy(out, factor, v);
  return out;
}

inline SparseVec sparse_sum(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  sparse_axpy(out, Scalar(1), b);
  return out;
}

inline SparseVec sparse_diff(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  sparse_axpy(out, Scalar(-1), b);
  return out;
}

inline bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

}  // namespace colorlie
