#include "colorlie/cochain.hpp"

#include <algorithm>

namespace colorlie {

std::pair<IndexTuple, Scalar> skew_normalize(const ColorLieAlgebra& L, IndexTuple tuple) {
  Scalar scale(1);
  // insertion sort by adjacent transpositions, each contributing -eps(a,b)
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t k = i; k > 0 && tuple[k - 1] > tuple[k]; --k) {
      scale *= -L.eps(tuple[k - 1], tuple[k]);
      std::swap(tuple[k - 1], tuple[k]);
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] == tuple[i] && L.eps(tuple[i], tuple[i]).is_one())
      return {std::move(tuple), Scalar(0)};
  }
  return {std::move(tuple), scale};
}

bool tuple_admissible(const ColorLieAlgebra& L, const IndexTuple& tuple) {
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] > tuple[i]) return false;
    if (tuple[i - 1] == tuple[i] && L.eps(tuple[i], tuple[i]).is_one()) return false;
  }
  return true;
}

namespace {

void enumerate_tuples(const ColorLieAlgebra& L, int arity, int from, IndexTuple& cur,
                      std::vector<IndexTuple>& out) {
  if (arity == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < L.dim(); ++i) {
    cur.push_back(i);
    bool repeatable = !L.eps(i, i).is_one();
    enumerate_tuples(L, arity - 1, repeatable ? i : i + 1, cur, out);
    cur.pop_back();
  }
}

GroupElement value_degree(const ColorLieAlgebra& L, const GroupElement& gamma,
                          const IndexTuple& tuple) {
  GroupElement d = gamma;
  for (int i : tuple) d = L.group().compose(d, L.degree(i));
  return d;
}

}  // namespace

std::vector<IndexTuple> admissible_tuples(const ColorLieAlgebra& L, int arity) {
  if (arity < 0) throw Error("negative cochain arity");
  std::vector<IndexTuple> out;
  IndexTuple cur;
  enumerate_tuples(L, arity, 0, cur, out);
  return out;
}

long CochainBasis::index_of(const IndexTuple& tuple, int module_index) const {
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].second == module_index && slots[s].first == tuple) return static_cast<long>(s);
  return -1;
}

CochainBasis cochain_tuple_basis(const ColorLieAlgebra& L, const Module& M, int arity,
                                 const GroupElement& gamma) {
  CochainBasis basis;
  basis.arity = arity;
  basis.degree = gamma;
  for (const auto& tuple : admissible_tuples(L, arity)) {
    GroupElement target = value_degree(L, gamma, tuple);
    for (int j = 0; j < M.dim(); ++j)
      if (M.degree(j) == target) basis.slots.emplace_back(tuple, j);
  }
  return basis;
}

SparseVec evaluate(const ColorLieAlgebra& L, const Cochain& f, const IndexTuple& tuple) {
  if (static_cast<int>(tuple.size()) != f.arity) throw Error("cochain arity mismatch");
  auto [rep, scale] = skew_normalize(L, tuple);
  if (scale.is_zero()) return {};
  auto it = f.values.find(rep);
  if (it == f.values.end()) return {};
  return sparse_scaled(it->second, scale);
}

void accumulate(const ColorLieAlgebra& L, Cochain& f, const IndexTuple& tuple,
                const SparseVec& value) {
  if (value.empty()) return;
  if (static_cast<int>(tuple.size()) != f.arity) throw Error("cochain arity mismatch");
  auto [rep, scale] = skew_normalize(L, tuple);
  if (scale.is_zero())
    throw Error("nonzero cochain value on a tuple killed by skew symmetry");
  auto& slot = f.values[rep];
  sparse_axpy(slot, scale.inverse(), value);
  if (slot.empty()) f.values.erase(rep);
}

VerificationReport check_cochain(const ColorLieAlgebra& L, const Module& M, const Cochain& f) {
  VerificationReport report;
  for (const auto& [tuple, value] : f.values) {
    if (static_cast<int>(tuple.size()) != f.arity) {
      report.add("cochain", "tuple", "stored tuple arity mismatch");
      continue;
    }
    if (!tuple_admissible(L, tuple)) {
      report.add("cochain", "tuple", "stored tuple not admissible");
      continue;
    }
    GroupElement target = value_degree(L, f.degree, tuple);
    for (const auto& [j, c] : value)
      if (!(M.degree(j) == target))
        report.add("cochain-degree", "module index " + std::to_string(j),
                   "value degree differs from gamma + sum of argument degrees");
  }
  return report;
}

Cochain delta_ce(const ColorLieAlgebra& L, const Module& M, const Cochain& f) {
  Cochain out;
  out.arity = f.arity + 1;
  out.degree = f.degree;
  for (const auto& tuple : admissible_tuples(L, out.arity)) {
    int n1 = out.arity;
    SparseVec total;

    // action sum: (-1)^{i+1} eps(gamma, a_i) eps_i  x_i . f(..hat i..)
    for (int i = 0; i < n1; ++i) {
      Scalar w = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
      w *= L.bicharacter().eval(f.degree, L.degree(tuple[i]));
      for (int h = 0; h < i; ++h) w *= L.eps(tuple[h], tuple[i]);
      if (w.is_zero()) continue;
      IndexTuple rest;
      for (int t = 0; t < n1; ++t)
        if (t != i) rest.push_back(tuple[t]);
      SparseVec inner = evaluate(L, f, rest);
      if (inner.empty()) continue;
      SparseVec acted;
      for (const auto& [k, c] : inner) sparse_axpy(acted, c, M.act(tuple[i], k));
      sparse_axpy(total, w, acted);
    }

    // bracket sum: (-1)^{i+j} eps_i eps_j eps(a_i,a_j)^{-1}
    //              f([x_i,x_j], ..hat i..hat j..)
    // The eps factors are the Koszul cost of moving x_i and x_j to the
    // front; x_j does not cross x_i, whence the inverse factor.
    for (int i = 0; i < n1; ++i) {
      for (int j = i + 1; j < n1; ++j) {
        SparseVec br = L.bracket_basis(tuple[i], tuple[j]);
        if (br.empty()) continue;
        Scalar w = ((i + j) % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (int h = 0; h < i; ++h) w *= L.eps(tuple[h], tuple[i]);
        for (int h = 0; h < j; ++h) w *= L.eps(tuple[h], tuple[j]);
        w *= L.eps(tuple[i], tuple[j]).inverse();
        IndexTuple rest;
        for (int t = 0; t < n1; ++t)
          if (t != i && t != j) rest.push_back(tuple[t]);
        SparseVec sub;
        for (const auto& [k, c] : br) {
          IndexTuple args;
          args.reserve(rest.size() + 1);
          args.push_back(k);
          args.insert(args.end(), rest.begin(), rest.end());
          sparse_axpy(sub, c, evaluate(L, f, args));
        }
        sparse_axpy(total, w, sub);
      }
    }

    if (!total.empty()) out.values.emplace(tuple, std::move(total));
  }
  return out;
}

QMatrix delta_matrix(const ColorLieAlgebra& L, const Module& M, int arity,
                     const GroupElement& gamma) {
  CochainBasis domain = cochain_tuple_basis(L, M, arity, gamma);
  CochainBasis codomain = cochain_tuple_basis(L, M, arity + 1, gamma);
  QMatrix m(codomain.dim(), domain.dim());
  for (std::size_t col = 0; col < domain.dim(); ++col) {
    Cochain unit;
    unit.arity = arity;
    unit.degree = gamma;
    unit.values[domain.slots[col].first] = SparseVec{{domain.slots[col].second, Scalar(1)}};
    Cochain image = delta_ce(L, M, unit);
    for (const auto& [tuple, value] : image.values) {
      for (const auto& [j, c] : value) {
        long row = codomain.index_of(tuple, j);
        if (row < 0) throw Error("coboundary left the degree slice");  // degree bookkeeping bug
        m.at(static_cast<std::size_t>(row), col) = c;
      }
    }
  }
  return m;
}

CohomologyDims cohomology_dims(const ColorLieAlgebra& L, const Module& M, int arity,
                               const GroupElement& gamma) {
  CohomologyDims dims;
  CochainBasis basis = cochain_tuple_basis(L, M, arity, gamma);
  dims.dim_cochains = static_cast<long>(basis.dim());
  long rank_out = static_cast<long>(rank_fraction_free(delta_matrix(L, M, arity, gamma)));
  dims.dim_cocycles = dims.dim_cochains - rank_out;
  if (arity >= 1)
    dims.dim_coboundaries = static_cast<long>(rank_fraction_free(delta_matrix(L, M, arity - 1, gamma)));
  dims.dim_cohomology = dims.dim_cocycles - dims.dim_coboundaries;
  return dims;
}

namespace {

Cochain cochain_from_vector(const CochainBasis& basis, const std::vector<Scalar>& v) {
  Cochain f;
  f.arity = basis.arity;
  f.degree = basis.degree;
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    if (v[s].is_zero()) continue;
    auto& slot = f.values[basis.slots[s].first];
    sparse_add(slot, basis.slots[s].second, v[s]);
  }
  return f;
}

std::vector<Scalar> vector_from_cochain(const CochainBasis& basis, const Cochain& f) {
  std::vector<Scalar> v(basis.dim(), Scalar(0));
  for (const auto& [tuple, value] : f.values) {
    for (const auto& [j, c] : value) {
      long s = basis.index_of(tuple, j);
      if (s < 0) throw Error("cochain does not live in the requested slice");
      v[static_cast<std::size_t>(s)] = c;
    }
  }
  return v;
}

}  // namespace

std::vector<Cochain> cocycle_basis(const ColorLieAlgebra& L, const Module& M, int arity,
                                   const GroupElement& gamma) {
  CochainBasis basis = cochain_tuple_basis(L, M, arity, gamma);
  std::vector<Cochain> out;
  for (const auto& v : kernel_basis(delta_matrix(L, M, arity, gamma)))
    out.push_back(cochain_from_vector(basis, v));
  return out;
}

std::vector<Cochain> cohomology_witnesses(const ColorLieAlgebra& L, const Module& M, int arity,
                                          const GroupElement& gamma) {
  if (arity < 1) throw Error("cohomology witnesses need arity >= 1");
  CochainBasis basis = cochain_tuple_basis(L, M, arity, gamma);
  QMatrix boundary = delta_matrix(L, M, arity - 1, gamma);
  auto kernel = kernel_basis(delta_matrix(L, M, arity, gamma));

  // grow the coboundary column space by kernel vectors; the ones that
  // enlarge the rank represent a basis of H^n
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t c = 0; c < boundary.cols(); ++c) {
    std::vector<Scalar> col(boundary.rows());
    for (std::size_t r = 0; r < boundary.rows(); ++r) col[r] = boundary.at(r, c);
    cols.push_back(std::move(col));
  }
  auto rank_of = [&](const std::vector<std::vector<Scalar>>& vs) {
    QMatrix m(basis.dim(), vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
      for (std::size_t r = 0; r < basis.dim(); ++r) m.at(r, c) = vs[c][r];
    return rank_fraction_free(std::move(m));
  };
  std::size_t rank = rank_of(cols);
  std::vector<Cochain> witnesses;
  for (const auto& v : kernel) {
    cols.push_back(v);
    std::size_t next = rank_of(cols);
    if (next > rank) {
      rank = next;
      witnesses.push_back(cochain_from_vector(basis, v));
    } else {
      cols.pop_back();
    }
  }
  return witnesses;
}

std::vector<Scalar> class_coordinates(const ColorLieAlgebra& L, const Module& M, const Cochain& f) {
  if (!delta_ce(L, M, f).is_zero()) throw Error("class coordinates of a non-cocycle");
  CochainBasis basis = cochain_tuple_basis(L, M, f.arity, f.degree);
  auto witnesses = cohomology_witnesses(L, M, f.arity, f.degree);
  QMatrix boundary = delta_matrix(L, M, f.arity - 1, f.degree);

  QMatrix system(basis.dim(), witnesses.size() + boundary.cols());
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    auto col = vector_from_cochain(basis, witnesses[w]);
    for (std::size_t r = 0; r < basis.dim(); ++r) system.at(r, w) = col[r];
  }
  for (std::size_t c = 0; c < boundary.cols(); ++c)
    for (std::size_t r = 0; r < basis.dim(); ++r) system.at(r, witnesses.size() + c) = boundary.at(r, c);

  auto solution = solve(std::move(system), vector_from_cochain(basis, f));
  if (!solution) throw Error("cocycle outside the span of witnesses and coboundaries");
  return std::vector<Scalar>(solution->begin(), solution->begin() + witnesses.size());
}

RigidityResult is_graded_rigid(const ColorLieAlgebra& L) {
  Module ad = Module::adjoint(L);
  GroupElement e = L.group().identity();
  CohomologyDims dims = cohomology_dims(L, ad, 2, e);
  RigidityResult result;
  result.rigid = dims.dim_cohomology == 0;
  if (!result.rigid) result.witnesses = cohomology_witnesses(L, ad, 2, e);
  return result;
}

std::vector<GroupElement> occurring_degrees(const ColorLieAlgebra& L, const Module& M, int arity) {
  std::vector<GroupElement> out;
  for (const auto& tuple : admissible_tuples(L, arity)) {
    GroupElement args = L.group().identity();
    for (int i : tuple) args = L.group().compose(args, L.degree(i));
    for (int j = 0; j < M.dim(); ++j) {
      GroupElement gamma = L.group().compose(M.degree(j), L.group().inverse(args));
      if (std::find(out.begin(), out.end(), gamma) == out.end()) out.push_back(gamma);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace colorlie
