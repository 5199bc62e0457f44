#pragma once

// Independent test-side oracles, kept deliberately naive and separate from
// the library implementations they check.

#include <vector>

#include "colorlie/cochain.hpp"
#include "colorlie/color_lie.hpp"
#include "colorlie/linalg.hpp"

namespace oracles {

using namespace colorlie;

/// Textbook row elimination with division by the pivot.
inline std::size_t naive_rank(QMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t sel = rank;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(rank, j));
    Scalar piv = m.at(rank, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(rank, j) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      Scalar f = m.at(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Direct evaluation of the graded Chevalley-Eilenberg coboundary on one
/// argument tuple, following the two-sum formula term by term. No admissible
/// tuple machinery: cochain values are fetched through Cochain evaluation
/// only for strictly fewer arguments than the output arity.
inline SparseVec naive_delta_eval(const ColorLieAlgebra& L, const Module& M, const Cochain& f,
                                  const std::vector<int>& args) {
  const auto& grp = L.group();
  int n1 = static_cast<int>(args.size());  // = arity + 1
  auto eps_of = [&](const GroupElement& a, const GroupElement& b) {
    return L.bicharacter().eval(a, b);
  };
  SparseVec out;
  for (int i = 0; i < n1; ++i) {
    // (-1)^{i+1} eps(gamma, a_i) prod_{h<i} eps(a_h, a_i) x_i . f(...hat i...)
    Scalar w = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    w *= eps_of(f.degree, L.degree(args[i]));
    for (int h = 0; h < i; ++h) w *= L.eps(args[h], args[i]);
    std::vector<int> rest;
    for (int t = 0; t < n1; ++t)
      if (t != i) rest.push_back(args[t]);
    SparseVec val = evaluate(L, f, rest);
    SparseVec acted;
    for (const auto& [k, c] : val) sparse_axpy(acted, c, M.act(args[i], k));
    sparse_axpy(out, w, acted);
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = i + 1; j < n1; ++j) {
      Scalar w = ((i + j) % 2 == 0) ? Scalar(1) : Scalar(-1);
      for (int h = 0; h < i; ++h) w *= L.eps(args[h], args[i]);
      for (int h = 0; h < j; ++h) w *= L.eps(args[h], args[j]);
      w *= L.eps(args[i], args[j]).inverse();
      std::vector<int> rest;
      for (int t = 0; t < n1; ++t)
        if (t != i && t != j) rest.push_back(args[t]);
      SparseVec br = L.bracket_basis(args[i], args[j]);
      SparseVec total;
      for (const auto& [k, c] : br) {
        std::vector<int> tuple;
        tuple.push_back(k);
        tuple.insert(tuple.end(), rest.begin(), rest.end());
        sparse_axpy(total, c, evaluate(L, f, tuple));
      }
      sparse_axpy(out, w, total);
    }
  }
  return out;
}

/// Multiset counting oracle for PBW monomials: coefficient extraction from
/// prod 1/(1-q) over repeatable letters times prod (1+q) over strict ones.
inline std::vector<long> pbw_count_series(const std::vector<bool>& repeatable, int top) {
  std::vector<long> series(top + 1, 0);
  series[0] = 1;
  for (bool rep : repeatable) {
    std::vector<long> next(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
      if (series[d] == 0) continue;
      if (rep) {
        for (int k = 0; d + k <= top; ++k) next[d + k] += series[d];
      } else {
        next[d] += series[d];
        if (d + 1 <= top) next[d + 1] += series[d];
      }
    }
    series = std::move(next);
  }
  return series;
}

}  // namespace oracles
