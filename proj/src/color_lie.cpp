#include "colorlie/color_lie.hpp"

#include <array>
#include <set>

#include "colorlie/parallel.hpp"

namespace colorlie {

ColorLieAlgebra::ColorLieAlgebra(std::vector<std::string> basis_names,
                                 std::vector<GroupElement> degrees, Bicharacter bicharacter,
                                 std::vector<BracketEntry> brackets)
    : names_(std::move(basis_names)),
      degrees_(std::move(degrees)),
      bichar_(std::move(bicharacter)),
      declared_(std::move(brackets)) {
  if (names_.empty()) throw Error("algebra needs at least one basis vector");
  if (names_.size() != degrees_.size()) throw Error("basis/degree count mismatch");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) throw Error("basis names must be unique and nonempty");
  }
  const auto& grp = bichar_.group();
  for (const auto& d : degrees_)
    if (static_cast<int>(d.exps().size()) != grp.generators())
      throw Error("basis degree does not match the grading group shape");

  int n = dim();
  eps_table_.assign(n, std::vector<Scalar>(n, Scalar(1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eps_table_[i][j] = bichar_.eval(degrees_[i], degrees_[j]);

  // Grading rule: c_{ij}^k = 0 unless g_k = g_i g_j.
  VerificationReport grading;
  for (const auto& entry : declared_) {
    if (entry.left < 0 || entry.left >= n || entry.right < 0 || entry.right >= n)
      throw Error("bracket entry references an unknown basis index");
    GroupElement target = grp.compose(degrees_[entry.left], degrees_[entry.right]);
    for (const auto& [k, c] : entry.terms) {
      if (k < 0 || k >= n) throw Error("bracket term references an unknown basis index");
      if (!(degrees_[k] == target))
        grading.add("grading", "(" + names_[entry.left] + "," + names_[entry.right] + "," + names_[k] + ")",
                    "degree of " + names_[k] + " is " + grp.str(degrees_[k]) + ", bracket degree is " +
                        grp.str(target));
    }
  }
  if (!grading.ok()) throw ValidationError("structure constants violate the grading rule", grading);
}

int ColorLieAlgebra::index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name) return i;
  throw Error("unknown basis name '" + name + "'");
}

const SparseVec* ColorLieAlgebra::declared_entry(int i, int j) const {
  for (const auto& entry : declared_)
    if (entry.left == i && entry.right == j) return &entry.terms;
  return nullptr;
}

SparseVec ColorLieAlgebra::bracket_basis(int i, int j) const {
  if (const SparseVec* direct = declared_entry(i, j)) return *direct;
  if (const SparseVec* flipped = declared_entry(j, i))
    return sparse_scaled(*flipped, -eps(i, j));
  return {};
}

SparseVec ColorLieAlgebra::bracket(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ci] : a) {
    if (i >= dim()) throw Error("vector does not fit this algebra");
    for (const auto& [j, cj] : b) {
      if (j >= dim()) throw Error("vector does not fit this algebra");
      sparse_axpy(out, ci * cj, bracket_basis(i, j));
    }
  }
  return out;
}

std::optional<GroupElement> ColorLieAlgebra::homogeneous_degree(const SparseVec& v) const {
  if (v.empty()) return group().identity();
  std::optional<GroupElement> deg;
  for (const auto& [i, c] : v) {
    if (!deg) {
      deg = degrees_.at(i);
    } else if (!(*deg == degrees_.at(i))) {
      return std::nullopt;
    }
  }
  return deg;
}

VerificationReport ColorLieAlgebra::verify_antisymmetry() const {
  VerificationReport report;
  for (int i = 0; i < dim(); ++i) {
    for (int j = i; j < dim(); ++j) {
      // [x_i,x_j] + eps(i,j)[x_j,x_i] must vanish; on the diagonal with
      // eps = 1 this forces [x_i,x_i] = 0.
      SparseVec defect = bracket_basis(i, j);
      sparse_axpy(defect, eps(i, j), bracket_basis(j, i));
      if (!defect.empty())
        report.add("antisymmetry", "(" + names_[i] + "," + names_[j] + ")",
                   "defect " + vector_str(defect));
    }
  }
  return report;
}

VerificationReport ColorLieAlgebra::verify_jacobi(int threads) const {
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      for (int k = j; k < dim(); ++k) triples.push_back({i, j, k});

  auto unit = [](int i) { return SparseVec{{i, Scalar(1)}}; };
  std::vector<SparseVec> defects(triples.size());
  parallel_for(triples.size(), threads, [&](std::size_t t) {
    auto [i, j, k] = triples[t];
    SparseVec defect;
    sparse_axpy(defect, eps(k, i), bracket(unit(i), bracket_basis(j, k)));
    sparse_axpy(defect, eps(i, j), bracket(unit(j), bracket_basis(k, i)));
    sparse_axpy(defect, eps(j, k), bracket(unit(k), bracket_basis(i, j)));
    defects[t] = std::move(defect);
  });

  VerificationReport report;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    if (defects[t].empty()) continue;
    auto [i, j, k] = triples[t];
    report.add("jacobi", "(" + names_[i] + "," + names_[j] + "," + names_[k] + ")",
               "defect " + vector_str(defects[t]));
  }
  return report;
}

std::string ColorLieAlgebra::vector_str(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    std::string prefix = scalar_product_prefix(c, !first);
    if (first) first = false;
    out += prefix + names_.at(i);
  }
  return out;
}

Module Module::trivial(const ColorLieAlgebra& algebra) {
  Module m(Kind::Trivial, algebra);
  m.names_ = {"1"};
  m.degrees_ = {algebra.group().identity()};
  return m;
}

Module Module::adjoint(const ColorLieAlgebra& algebra) {
  Module m(Kind::Adjoint, algebra);
  for (int i = 0; i < algebra.dim(); ++i) {
    m.names_.push_back(algebra.name(i));
    m.degrees_.push_back(algebra.degree(i));
  }
  return m;
}

Module Module::explicit_action(const ColorLieAlgebra& algebra, std::vector<std::string> names,
                               std::vector<GroupElement> degrees,
                               std::vector<std::vector<SparseVec>> action) {
  Module m(Kind::Explicit, algebra);
  m.names_ = std::move(names);
  m.degrees_ = std::move(degrees);
  m.action_ = std::move(action);
  if (m.names_.size() != m.degrees_.size()) throw Error("module basis/degree count mismatch");
  if (static_cast<int>(m.action_.size()) != algebra.dim())
    throw Error("module action table must have one row per algebra basis vector");
  for (const auto& row : m.action_)
    if (row.size() != m.degrees_.size()) throw Error("module action table shape mismatch");

  // rho must be degree zero and a representation of the color bracket.
  VerificationReport report;
  const auto& grp = algebra.group();
  for (int i = 0; i < algebra.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      GroupElement target = grp.compose(algebra.degree(i), m.degrees_[j]);
      for (const auto& [k, c] : m.action_[i][j])
        if (!(m.degrees_.at(k) == target))
          report.add("module-degree", "(" + algebra.name(i) + "," + m.names_[j] + ")",
                     "action hits " + m.names_[k] + " outside degree " + grp.str(target));
    }
  }
  auto apply = [&](int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) sparse_axpy(out, c, m.action_[i][k]);
    return out;
  };
  for (int i = 0; i < algebra.dim(); ++i) {
    for (int j = 0; j < algebra.dim(); ++j) {
      for (int v = 0; v < m.dim(); ++v) {
        SparseVec unit{{v, Scalar(1)}};
        SparseVec lhs = apply(i, apply(j, unit));
        sparse_axpy(lhs, -algebra.eps(i, j), apply(j, apply(i, unit)));
        SparseVec rhs;
        for (const auto& [k, c] : algebra.bracket_basis(i, j)) sparse_axpy(rhs, c, m.action_[k][v]);
        if (!(sparse_diff(lhs, rhs).empty()))
          report.add("representation", "(" + algebra.name(i) + "," + algebra.name(j) + "," + m.names_[v] + ")",
                     "[rho(x_i),rho(x_j)] != rho([x_i,x_j])");
      }
    }
  }
  if (!report.ok()) throw ValidationError("explicit module action is not a representation", report);
  return m;
}

SparseVec Module::act(int i, int j) const {
  switch (kind_) {
    case Kind::Trivial:
      return {};
    case Kind::Adjoint:
      return algebra_->bracket_basis(i, j);
    case Kind::Explicit:
      return action_.at(i).at(j);
  }
  return {};
}

SparseVec Module::act(const SparseVec& X, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, ci] : X)
    for (const auto& [j, cj] : v) sparse_axpy(out, ci * cj, act(i, j));
  return out;
}

std::string Module::vector_str(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    out += scalar_product_prefix(c, !first) + names_.at(i);
    first = false;
  }
  return out;
}

}  // namespace colorlie
