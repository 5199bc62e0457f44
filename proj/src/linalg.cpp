#include "colorlie/linalg.hpp"

#include "colorlie/error.hpp"

namespace colorlie {

std::size_t rank_fraction_free(QMatrix m) {
  std::size_t r = 0;
  Scalar prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    // Bareiss step: exact division by the previous pivot keeps entries in
    // the subring generated by the input.
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = Scalar(0);
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

namespace {

struct Rref {
  QMatrix m;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(QMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(QMatrix m) {
  std::size_t n = m.cols();
  Rref red = rref(std::move(m));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> v(n, Scalar(0));
    v[free_c] = Scalar(1);
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
      v[red.pivot_cols[r]] = -red.m.at(r, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool sparse_system_consistent(std::vector<SparseRow> rows) {
  // drop empty equations up front
  std::vector<SparseRow*> pending;
  for (auto& r : rows) {
    if (r.lhs.empty()) {
      if (!r.rhs.is_zero()) return false;
    } else {
      pending.push_back(&r);
    }
  }
  while (!pending.empty()) {
    // pivot on the shortest row to limit fill-in
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i)
      if (pending[i]->lhs.size() < pending[best]->lhs.size()) best = i;
    SparseRow* pivot = pending[best];
    pending[best] = pending.back();
    pending.pop_back();

    int col = pivot->lhs.begin()->first;
    Scalar inv = pivot->lhs.begin()->second.inverse();
    for (auto& [j, c] : pivot->lhs) c *= inv;
    pivot->rhs *= inv;

    std::vector<SparseRow*> next;
    next.reserve(pending.size());
    for (SparseRow* r : pending) {
      auto it = r->lhs.find(col);
      if (it != r->lhs.end()) {
        Scalar f = it->second;
        for (const auto& [j, c] : pivot->lhs) {
          auto jt = r->lhs.find(j);
          if (jt == r->lhs.end()) {
            Scalar v = -(f * c);
            if (!v.is_zero()) r->lhs.emplace(j, v);
          } else {
            jt->second -= f * c;
            if (jt->second.is_zero()) r->lhs.erase(jt);
          }
        }
        r->rhs -= f * pivot->rhs;
        if (r->lhs.empty()) {
          if (!r->rhs.is_zero()) return false;
          continue;
        }
      }
      next.push_back(r);
    }
    pending = std::move(next);
  }
  return true;
}

std::optional<std::vector<Scalar>> solve(QMatrix m, std::vector<Scalar> b) {
  if (b.size() != m.rows()) throw Error("solve: shape mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref red = rref(std::move(aug));
  for (std::size_t c : red.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)

  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
    x[red.pivot_cols[r]] = red.m.at(r, m.cols());
  return x;
}

}  // namespace colorlie
