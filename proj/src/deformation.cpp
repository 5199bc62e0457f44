#include "colorlie/deformation.hpp"

#include <algorithm>

namespace colorlie {

Cochain bracket_cochain(const ColorLieAlgebra& L) {
  Cochain mu0;
  mu0.arity = 2;
  mu0.degree = L.group().identity();
  for (const auto& tuple : admissible_tuples(L, 2)) {
    SparseVec v = L.bracket_basis(tuple[0], tuple[1]);
    if (!v.empty()) mu0.values.emplace(tuple, std::move(v));
  }
  return mu0;
}

DeformedBracket make_deformed_bracket(const ColorLieAlgebra& L, int trunc,
                                      const std::vector<std::pair<int, Cochain>>& components) {
  if (trunc < 0) throw Error("negative truncation order");
  DeformedBracket out;
  out.trunc = trunc;
  out.mu.assign(trunc + 1, Cochain{});
  out.mu[0] = bracket_cochain(L);
  Module ad = Module::adjoint(L);
  GroupElement e = L.group().identity();
  for (const auto& [order, cochain] : components) {
    if (order < 1 || order > trunc)
      throw Error("deformation component order " + std::to_string(order) +
                  " outside 1.." + std::to_string(trunc));
    if (cochain.arity != 2 || !(cochain.degree == e))
      throw Error("deformation components must be 2-cochains of degree e");
    auto check = check_cochain(L, ad, cochain);
    if (!check.ok())
      throw ValidationError("deformation component " + std::to_string(order), check);
    out.mu[order] = cochain;
  }
  for (int r = 1; r <= trunc; ++r) {
    out.mu[r].arity = 2;
    out.mu[r].degree = e;
  }
  return out;
}

namespace {

// mu_s evaluated bilinearly on (basis vector i, sparse vector)
SparseVec eval_pair(const ColorLieAlgebra& L, const Cochain& mu, int i, const SparseVec& v) {
  SparseVec out;
  for (const auto& [j, c] : v) sparse_axpy(out, c, evaluate(L, mu, {i, j}));
  return out;
}

}  // namespace

SparseVec jacobi_order_defect(const ColorLieAlgebra& L, const DeformedBracket& mu, int order,
                              const IndexTuple& triple) {
  if (triple.size() != 3) throw Error("jacobi defect needs a triple");
  int i = triple[0], j = triple[1], k = triple[2];
  SparseVec out;
  for (int s = 0; s <= order; ++s) {
    int u = order - s;
    if (s >= static_cast<int>(mu.mu.size()) || u >= static_cast<int>(mu.mu.size())) continue;
    const Cochain& ms = mu.mu[s];
    const Cochain& mup = mu.mu[u];
    sparse_axpy(out, L.eps(k, i), eval_pair(L, ms, i, evaluate(L, mup, {j, k})));
    sparse_axpy(out, L.eps(i, j), eval_pair(L, ms, j, evaluate(L, mup, {k, i})));
    sparse_axpy(out, L.eps(j, k), eval_pair(L, ms, k, evaluate(L, mup, {i, j})));
  }
  return out;
}

std::vector<JacobiDefect> deformation_jacobi_defects(const ColorLieAlgebra& L,
                                                     const DeformedBracket& mu) {
  if (mu.mu.empty() || mu.mu[0].values != bracket_cochain(L).values)
    throw Error("mu_0 does not match the bracket of the algebra");
  std::vector<JacobiDefect> out;
  for (int r = 0; r <= mu.trunc; ++r) {
    for (const auto& triple : admissible_tuples(L, 3)) {
      SparseVec defect = jacobi_order_defect(L, mu, r, triple);
      if (!defect.empty()) out.push_back({r, triple, std::move(defect)});
    }
  }
  return out;
}

DeformedBracket equivalence_transform(const ColorLieAlgebra& L, const DeformedBracket& mu,
                                      const OneParamFamily& family) {
  int N = mu.trunc;
  int dim = L.dim();
  // pad the family with zero maps and prepend the identity
  std::vector<std::vector<SparseVec>> f(N + 1, std::vector<SparseVec>(dim));
  for (int i = 0; i < dim; ++i) f[0][i] = SparseVec{{i, Scalar(1)}};
  for (std::size_t r = 0; r < family.maps.size(); ++r) {
    if (static_cast<int>(r) + 1 > N) break;
    if (family.maps[r].size() != static_cast<std::size_t>(dim))
      throw Error("equivalence family map has wrong dimension");
    f[r + 1] = family.maps[r];
  }
  for (int r = 1; r <= N; ++r)
    for (int i = 0; i < dim; ++i)
      for (const auto& [j, c] : f[r][i])
        if (!(L.degree(j) == L.degree(i)))
          throw Error("equivalence family maps must have degree e");

  auto apply = [&](const std::vector<SparseVec>& map, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) sparse_axpy(out, c, map[i]);
    return out;
  };

  // Neumann inverse: g_0 = id, g_r = -sum_{s=1..r} f_s o g_{r-s}
  std::vector<std::vector<SparseVec>> g(N + 1, std::vector<SparseVec>(dim));
  g[0] = f[0];
  for (int r = 1; r <= N; ++r) {
    for (int i = 0; i < dim; ++i) {
      SparseVec acc;
      for (int s = 1; s <= r; ++s) sparse_axpy(acc, Scalar(-1), apply(f[s], g[r - s][i]));
      g[r][i] = std::move(acc);
    }
  }

  DeformedBracket out;
  out.trunc = N;
  out.mu.assign(N + 1, Cochain{});
  GroupElement e = L.group().identity();
  for (int r = 0; r <= N; ++r) {
    Cochain& target = out.mu[r];
    target.arity = 2;
    target.degree = e;
    for (const auto& tuple : admissible_tuples(L, 2)) {
      SparseVec total;
      for (int p = 0; p <= r; ++p) {
        for (int q = 0; p + q <= r; ++q) {
          for (int s = 0; p + q + s <= r; ++s) {
            int u = r - p - q - s;
            const SparseVec gx = g[s][tuple[0]];
            const SparseVec gy = g[u][tuple[1]];
            // mu_q(g_s x, g_u y), then f_p
            SparseVec inner;
            for (const auto& [a, ca] : gx)
              for (const auto& [b, cb] : gy)
                sparse_axpy(inner, ca * cb, evaluate(L, mu.mu[q], {a, b}));
            sparse_axpy(total, Scalar(1), apply(f[p], inner));
          }
        }
      }
      if (!total.empty()) target.values.emplace(tuple, std::move(total));
    }
  }
  return out;
}

CentralExtension central_extension(const ColorLieAlgebra& L, const Cochain& omega) {
  Module triv = Module::trivial(L);
  GroupElement e = L.group().identity();
  if (omega.arity != 2 || !(omega.degree == e))
    throw Error("central extension needs a 2-cocycle of degree e");
  auto wellformed = check_cochain(L, triv, omega);
  if (!wellformed.ok()) throw ValidationError("cocycle data malformed", wellformed);
  Cochain defect = delta_ce(L, triv, omega);
  if (!defect.is_zero()) {
    VerificationReport report;
    for (const auto& [tuple, v] : defect.values) {
      std::string loc = "(";
      for (std::size_t t = 0; t < tuple.size(); ++t)
        loc += (t ? "," : "") + L.name(tuple[t]);
      report.add("cocycle", loc + ")", "delta omega != 0");
    }
    throw ValidationError("omega is not a 2-cocycle", report);
  }

  std::string cname = "c";
  bool taken = true;
  while (taken) {
    taken = false;
    for (int i = 0; i < L.dim(); ++i)
      if (L.name(i) == cname) taken = true;
    if (taken) cname += "'";
  }

  std::vector<std::string> names{cname};
  std::vector<GroupElement> degrees{e};
  for (int i = 0; i < L.dim(); ++i) {
    names.push_back(L.name(i));
    degrees.push_back(L.degree(i));
  }

  std::vector<BracketEntry> entries;
  for (const auto& tuple : admissible_tuples(L, 2)) {
    int i = tuple[0], j = tuple[1];
    SparseVec terms;
    for (const auto& [k, c] : L.bracket_basis(i, j)) sparse_add(terms, k + 1, c);
    SparseVec w = evaluate(L, omega, {i, j});
    if (!w.empty()) sparse_add(terms, 0, w.begin()->second);
    if (!terms.empty()) entries.push_back({i + 1, j + 1, std::move(terms)});
  }

  CentralExtension out{
      ColorLieAlgebra(std::move(names), std::move(degrees), L.bicharacter(), std::move(entries)),
      0, cname};
  return out;
}

DeformedMultiplication::DeformedMultiplication(const ColorLieAlgebra& L, int cutoff, int trunc)
    : L_(&L), cutoff_(cutoff), trunc_(trunc), basis_(pbw_basis_enumerate(L, cutoff)) {
  if (cutoff < 0 || trunc < 0) throw Error("deformed multiplication needs cutoff, trunc >= 0");
}

void DeformedMultiplication::set_product(const PBWMonomial& a, const PBWMonomial& b,
                                         UPolyElement value) {
  table_[{a, b}] = std::move(value);
}

const UPolyElement& DeformedMultiplication::product(const PBWMonomial& a,
                                                    const PBWMonomial& b) const {
  auto it = table_.find({a, b});
  if (it == table_.end()) throw Error("monomial pair outside the tabulated cutoff");
  return it->second;
}

UElement DeformedMultiplication::pi(int order, const PBWMonomial& a, const PBWMonomial& b) const {
  return t_coefficient(product(a, b), order);
}

UElement DeformedMultiplication::pi_linear(int order, const UElement& u, const UElement& v) const {
  UElement out;
  ScalarRing ring;
  for (const auto& [mu, cu] : u)
    for (const auto& [mv, cv] : v) u_axpy(ring, out, cu * cv, pi(order, mu, mv));
  return out;
}

HCochain DeformedMultiplication::pi_as_hcochain(int order) const {
  HCochain f;
  f.arity = 2;
  for (const auto& [pair, poly] : table_) {
    UElement value = t_coefficient(poly, order);
    if (!value.empty()) f.values[{pair.first, pair.second}] = std::move(value);
  }
  return f;
}

namespace {

DeformedMultiplication tabulate(const ColorLieAlgebra& L, const PbwEngine<TPolyRing>& engine,
                                int cutoff, int trunc) {
  DeformedMultiplication dm(L, cutoff, trunc);
  const auto& basis = dm.basis();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (a.length() + b.length() > cutoff) continue;
      std::vector<int> word = a.letters();
      word.insert(word.end(), b.letters().begin(), b.letters().end());
      dm.set_product(a, b, engine.normal_form(std::move(word), engine.ring().one()));
    }
  }
  return dm;
}

}  // namespace

DeformedMultiplication extend_deformation_to_u(const ColorLieAlgebra& L, const DeformedBracket& mu,
                                               int cutoff, int trunc) {
  if (!deformation_jacobi_defects(L, mu).empty())
    throw Error("defective input deformation: Jacobi fails mod t^{N+1}");
  TPolyRing ring{trunc};
  PbwEngine<TPolyRing> engine(L, ring);
  for (int a = 0; a < L.dim(); ++a) {
    for (int b = 0; b <= a; ++b) {
      if (a == b && L.eps(a, a).is_one()) continue;
      SparseU<TPolyRing> tail;
      for (int r = 0; r <= std::min(trunc, static_cast<int>(mu.mu.size()) - 1); ++r) {
        for (const auto& [k, c] : evaluate(L, mu.mu[r], {a, b}))
          u_add_term(ring, tail, PBWMonomial({k}), TPoly::t_term(r, c));
      }
      engine.set_tail(a, b, std::move(tail));
    }
  }
  return tabulate(L, engine, cutoff, trunc);
}

DeformedMultiplication central_extension_deformation(const ColorLieAlgebra& L,
                                                     const Cochain& omega, int cutoff, int trunc) {
  central_extension(L, omega);  // validates the cocycle, rejects with locations
  TPolyRing ring{trunc};
  PbwEngine<TPolyRing> engine(L, ring);
  for (int a = 0; a < L.dim(); ++a) {
    for (int b = 0; b <= a; ++b) {
      if (a == b && L.eps(a, a).is_one()) continue;
      SparseU<TPolyRing> tail;
      for (const auto& [k, c] : L.bracket_basis(a, b))
        u_add_term(ring, tail, PBWMonomial({k}), TPoly::constant(c));
      SparseVec w = evaluate(L, omega, {a, b});
      if (!w.empty()) u_add_term(ring, tail, PBWMonomial(), TPoly::t_term(1, w.begin()->second));
      engine.set_tail(a, b, std::move(tail));
    }
  }
  return tabulate(L, engine, cutoff, trunc);
}

std::vector<AssociativityDefect> order_associativity_defects(const DeformedMultiplication& dm) {
  std::vector<AssociativityDefect> out;
  ScalarRing ring;
  const auto& basis = dm.basis();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (a.length() + b.length() > dm.cutoff()) continue;
      for (const auto& c : basis) {
        if (a.length() + b.length() + c.length() > dm.cutoff()) continue;
        for (int r = 0; r <= dm.trunc(); ++r) {
          UElement defect;
          for (int s = 0; s <= r; ++s) {
            UElement left = dm.pi_linear(s, dm.pi(r - s, a, b), UElement{{c, Scalar(1)}});
            UElement right = dm.pi_linear(s, UElement{{a, Scalar(1)}}, dm.pi(r - s, b, c));
            u_axpy(ring, defect, Scalar(1), left);
            u_axpy(ring, defect, Scalar(-1), right);
          }
          if (!defect.empty()) out.push_back({r, a, b, c, std::move(defect)});
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<PairDefect> antisym_defects_impl(const DeformedMultiplication& dm,
                                             const std::function<UElement(int, int)>& expected) {
  const ColorLieAlgebra& L = dm.algebra();
  std::vector<PairDefect> out;
  ScalarRing ring;
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = 0; j < L.dim(); ++j) {
      PBWMonomial mi({i}), mj({j});
      UElement defect = dm.pi(1, mi, mj);
      u_axpy(ring, defect, -L.eps(i, j), dm.pi(1, mj, mi));
      u_axpy(ring, defect, Scalar(-1), expected(i, j));
      if (!defect.empty()) out.push_back({i, j, std::move(defect)});
    }
  }
  return out;
}

}  // namespace

std::vector<PairDefect> antisymmetrization_defects(const DeformedMultiplication& dm,
                                                   const Cochain& mu1) {
  const ColorLieAlgebra& L = dm.algebra();
  return antisym_defects_impl(dm, [&](int i, int j) {
    UElement out;
    for (const auto& [k, c] : evaluate(L, mu1, {i, j})) out.emplace(PBWMonomial({k}), c);
    return out;
  });
}

std::vector<PairDefect> central_identity_defects(const DeformedMultiplication& dm,
                                                 const Cochain& omega) {
  const ColorLieAlgebra& L = dm.algebra();
  return antisym_defects_impl(dm, [&](int i, int j) {
    UElement out;
    SparseVec w = evaluate(L, omega, {i, j});
    if (!w.empty()) out.emplace(PBWMonomial(), w.begin()->second);
    return out;
  });
}

bool order1_trivial(const TruncatedUView& view, const DeformedMultiplication& dm) {
  if (view.cutoff() != dm.cutoff() || &view.algebra() != &dm.algebra())
    throw Error("view does not match the tabulated multiplication");
  return in_image_of_delta_h(view, dm.pi_as_hcochain(1));
}

}  // namespace colorlie
