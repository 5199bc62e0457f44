#include "colorlie/hochschild.hpp"

#include <functional>

namespace colorlie {

TruncatedUView::TruncatedUView(const ColorLieAlgebra& L, int cutoff)
    : L_(&L), cutoff_(cutoff), engine_(L, ScalarRing{}), basis_(pbw_basis_enumerate(L, cutoff)) {
  if (cutoff < 0) throw Error("negative filtration cutoff");
}

const std::vector<PBWMonomial>& TruncatedUView::basis_of_degree(const GroupElement& d) const {
  auto it = by_degree_.find(d);
  if (it == by_degree_.end()) {
    std::vector<PBWMonomial> ms;
    for (const auto& m : basis_)
      if (monomial_degree(*L_, m) == d) ms.push_back(m);
    it = by_degree_.emplace(d, std::move(ms)).first;
  }
  return it->second;
}

std::vector<std::vector<PBWMonomial>> TruncatedUView::domain_tuples(int arity) const {
  std::vector<std::vector<PBWMonomial>> out;
  std::vector<PBWMonomial> cur;
  std::function<void(int, int)> walk = [&](int pos, int budget) {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (const auto& m : basis_) {
      if (m.length() > budget) continue;
      cur.push_back(m);
      walk(pos + 1, budget - m.length());
      cur.pop_back();
    }
  };
  walk(0, cutoff_);
  return out;
}

FiniteAssocAlgebra::FiniteAssocAlgebra(std::vector<std::string> names,
                                       std::vector<std::vector<SparseVec>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  if (table_.size() != names_.size()) throw Error("multiplication table shape mismatch");
  for (const auto& row : table_)
    if (row.size() != names_.size()) throw Error("multiplication table shape mismatch");
}

SparseVec FiniteAssocAlgebra::mul(const Elem& a, const Elem& b) const {
  SparseVec out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) sparse_axpy(out, ci * cj, table_.at(i).at(j));
  return out;
}

std::vector<std::vector<int>> FiniteAssocAlgebra::domain_tuples(int arity) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 0);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < dim(); ++i) {
      cur[pos] = i;
      walk(pos + 1);
    }
  };
  walk(0);
  return out;
}

VerificationReport check_hcochain_degree(const TruncatedUView& view, const HCochain& f) {
  VerificationReport report;
  const auto& L = view.algebra();
  for (const auto& [tuple, value] : f.values) {
    GroupElement target = L.group().identity();
    for (const auto& m : tuple) target = L.group().compose(target, monomial_degree(L, m));
    for (const auto& [m, c] : value)
      if (!(monomial_degree(L, m) == target))
        report.add("hochschild-degree", monomial_str(L, m), "value leaves the tuple degree");
  }
  return report;
}

bool in_image_of_delta_h(const TruncatedUView& view, const HCochain& f) {
  if (f.arity != 2) throw Error("order-1 triviality test expects a 2-cochain");
  const auto& L = view.algebra();

  // unknowns: phi(m)[target] for every view monomial m and every view
  // monomial target of the same degree (phi is degree e)
  std::vector<std::pair<PBWMonomial, PBWMonomial>> slots;
  std::map<std::pair<PBWMonomial, PBWMonomial>, int> slot_index;
  for (const auto& m : view.basis()) {
    for (const auto& target : view.basis_of_degree(monomial_degree(L, m))) {
      slot_index[{m, target}] = static_cast<int>(slots.size());
      slots.emplace_back(m, target);
    }
  }

  // delta phi (a,b) = a phi(b) - phi(ab) + phi(a) b, matched against f(a,b)
  // coordinatewise over the value monomials that appear.
  std::vector<SparseRow> rows;
  for (const auto& pair : view.domain_tuples(2)) {
    const PBWMonomial& a = pair[0];
    const PBWMonomial& b = pair[1];
    std::map<PBWMonomial, std::map<int, Scalar>> coeff;  // value monomial -> unknown -> coefficient

    auto contribute = [&](const PBWMonomial& arg, const Scalar& scale, bool mul_left,
                          const PBWMonomial& other) {
      for (const auto& target : view.basis_of_degree(monomial_degree(L, arg))) {
        int u = slot_index.at({arg, target});
        UElement prod = mul_left ? view.mul(TruncatedUView::basis_elem(other),
                                            TruncatedUView::basis_elem(target))
                                 : view.mul(TruncatedUView::basis_elem(target),
                                            TruncatedUView::basis_elem(other));
        for (const auto& [m, c] : prod) {
          Scalar v = scale * c;
          if (v.is_zero()) continue;
          auto& cell = coeff[m][u];
          cell += v;
          if (cell.is_zero()) coeff[m].erase(u);
        }
      }
    };
    contribute(b, Scalar(1), true, a);   // a phi(b)
    contribute(a, Scalar(1), false, b);  // phi(a) b

    // -phi(ab): expand the product over basis monomials
    UElement ab = view.mul(TruncatedUView::basis_elem(a), TruncatedUView::basis_elem(b));
    for (const auto& [m, c] : ab) {
      for (const auto& target : view.basis_of_degree(monomial_degree(L, m))) {
        int u = slot_index.at({m, target});
        auto& cell = coeff[target][u];
        cell += -c;
        if (cell.is_zero()) coeff[target].erase(u);
      }
    }

    UElement rhs;
    auto it = f.values.find(pair);
    if (it != f.values.end()) rhs = it->second;
    for (const auto& [m, c] : rhs)
      if (coeff.find(m) == coeff.end()) coeff[m] = {};

    for (auto& [m, lhs] : coeff) {
      SparseRow row;
      row.lhs = std::move(lhs);
      auto rh = rhs.find(m);
      row.rhs = rh == rhs.end() ? Scalar(0) : rh->second;
      if (row.lhs.empty() && row.rhs.is_zero()) continue;
      rows.push_back(std::move(row));
    }
  }
  return sparse_system_consistent(std::move(rows));
}

}  // namespace colorlie
