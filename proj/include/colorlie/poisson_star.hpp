#pragma once

#include <map>

#include "colorlie/enveloping.hpp"
#include "colorlie/report.hpp"

namespace colorlie {

/// Element of gr U(g): color-symmetric monomials with scalar coefficients.
/// Monomials share the PBW admissibility rule; the product is
/// eps-commutative and squares at strict letters vanish (lower filtration).
struct SymElement {
  std::map<PBWMonomial, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SymElement&) const = default;
};

void sym_add_term(SymElement& acc, const PBWMonomial& m, const Scalar& c);
void sym_axpy(SymElement& acc, const Scalar& f, const SymElement& v);

/// Components by gr-degree (length); empty map for zero.
std::map<int, SymElement> sym_components(const SymElement& s);

/// gr-degree when homogeneous in length (identity-free query; 0 for zero).
std::optional<int> sym_gr_degree(const SymElement& s);
std::optional<GroupElement> sym_g_degree(const ColorLieAlgebra& L, const SymElement& s);

std::string sym_str(const ColorLieAlgebra& L, const SymElement& s);

/// Canonical projection U(g)_n -> gr^n: keeps exactly the length-n part.
/// Errors when the filtration degree of u exceeds n.
SymElement gr_project(const ColorLieAlgebra& L, const UElement& u, int level);

/// The identity lift gr -> U on monomials.
UElement sym_lift(const SymElement& s);

SymElement sym_multiply(const ColorLieAlgebra& L, const SymElement& a, const SymElement& b);

/// {u,v} = pi_{p+q-1}(uv - chi(u,v) vu) on homogeneous elements.
SymElement poisson_bracket(const ColorLieAlgebra& L, const SymElement& a, const SymElement& b);

/// Color antisymmetry, Jacobi and Leibniz for { , } on generator triples
/// and seeded random monomials of gr-degree <= 3.
VerificationReport verify_color_poisson(const ColorLieAlgebra& L, int random_trials = 50,
                                        unsigned long long seed = 2024);

/// Color symmetrization map gr U(g) -> U(g): per length-p monomial, the
/// inversion-signed permutation average (1/p! normalized so that
/// gr_project(symmetrize(s), p) = s).
UElement symmetrize(const ColorLieAlgebra& L, const SymElement& s);

/// Decomposition of u in U(g) against the symmetrization sections, peeled
/// from the top filtration level: u = sum_j symmetrize(out[j]).
std::map<int, SymElement> symmetrize_inverse(const ColorLieAlgebra& L, const UElement& u);

/// Truncated star series: comp[n] is the t^n coefficient.
struct StarSeries {
  int trunc = 0;
  std::vector<SymElement> comp;

  const SymElement& at(int n) const;
};

/// PBW star product u * v = sum_n t^n omega^{-1}((omega(u) omega(v))_{p+q-n}),
/// extended bilinearly over gr-degree components, truncated at order N.
StarSeries star_product(const ColorLieAlgebra& L, const SymElement& u, const SymElement& v,
                        int trunc);

std::string star_series_str(const ColorLieAlgebra& L, const StarSeries& s);

}  // namespace colorlie
