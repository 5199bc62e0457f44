#pragma once

#include <utility>
#include <vector>

#include "colorlie/cochain.hpp"
#include "colorlie/hochschild.hpp"

namespace colorlie {

/// Truncated graded deformation of the bracket: mu_t = sum_r t^r mu_r with
/// mu_0 the bracket of L and each mu_r an adjoint-valued 2-cochain of
/// degree e.
struct DeformedBracket {
  int trunc = 0;              // N
  std::vector<Cochain> mu;    // indices 0..N
};

/// Builds the family from its higher components; mu_0 is taken from L.
/// Components beyond the truncation order are rejected.
DeformedBracket make_deformed_bracket(const ColorLieAlgebra& L, int trunc,
                                      const std::vector<std::pair<int, Cochain>>& components);

/// The bracket of L packaged as a 2-cochain (degree e, adjoint values).
Cochain bracket_cochain(const ColorLieAlgebra& L);

struct JacobiDefect {
  int order = 0;
  IndexTuple triple;
  SparseVec defect;
};

/// Order-by-order color Jacobi defects of mu_t on basis triples; empty
/// means mu_t is a color Lie bracket mod t^{N+1}. The order-1 layer
/// vanishes exactly when delta_ce(mu_1) = 0.
std::vector<JacobiDefect> deformation_jacobi_defects(const ColorLieAlgebra& L,
                                                     const DeformedBracket& mu);

/// Jacobi expression of order r evaluated on one (arbitrary) index triple.
SparseVec jacobi_order_defect(const ColorLieAlgebra& L, const DeformedBracket& mu, int order,
                              const IndexTuple& triple);

/// Formal family f = id + sum_{r>=1} t^r f_r of degree-e 1-cochains, as
/// linear maps given columnwise on the basis.
struct OneParamFamily {
  std::vector<std::vector<SparseVec>> maps;  // maps[r-1][i] = f_r(x_i)
};

/// Transports mu along the family: mu' = f o mu o (f^{-1} x f^{-1}),
/// truncated. First order: mu'_1 = mu_1 - delta_ce(f_1).
DeformedBracket equivalence_transform(const ColorLieAlgebra& L, const DeformedBracket& mu,
                                      const OneParamFamily& family);

struct CentralExtension {
  ColorLieAlgebra algebra;  // basis {c, x_1, ..., x_n}, c central of degree e
  int c_index = 0;
  std::string c_name;
};

/// Central extension g_omega for a CE 2-cocycle omega with trivial
/// coefficients; rejects non-cocycles with the defect locations.
CentralExtension central_extension(const ColorLieAlgebra& L, const Cochain& omega);

/// Tabulated t-truncated multiplication on U(g): pi_t(u,v) on PBW monomial
/// pairs of total length <= cutoff.
class DeformedMultiplication {
 public:
  DeformedMultiplication(const ColorLieAlgebra& L, int cutoff, int trunc);

  const ColorLieAlgebra& algebra() const { return *L_; }
  int cutoff() const { return cutoff_; }
  int trunc() const { return trunc_; }
  const std::vector<PBWMonomial>& basis() const { return basis_; }

  const UPolyElement& product(const PBWMonomial& a, const PBWMonomial& b) const;
  UElement pi(int order, const PBWMonomial& a, const PBWMonomial& b) const;
  UElement pi_linear(int order, const UElement& u, const UElement& v) const;

  /// The order-r table as a degree-e Hochschild 2-cochain on the matching
  /// truncated view.
  HCochain pi_as_hcochain(int order) const;

  void set_product(const PBWMonomial& a, const PBWMonomial& b, UPolyElement value);

 private:
  const ColorLieAlgebra* L_;
  int cutoff_;
  int trunc_;
  std::vector<PBWMonomial> basis_;
  std::map<std::pair<PBWMonomial, PBWMonomial>, UPolyElement> table_;
};

/// Thm-2.1-style pipeline: rewrites with t-polynomial structure constants
/// c(t) = c + sum_r t^r mu_r and tabulates pi_r. Requires empty Jacobi
/// defects mod t^{N+1}.
DeformedMultiplication extend_deformation_to_u(const ColorLieAlgebra& L, const DeformedBracket& mu,
                                               int cutoff, int trunc);

/// Thm-2.2-style pipeline: realizes U_{t omega}(g)/(c' = 1) by injecting
/// t * omega(x_a, x_b) directly into the reordering relations.
DeformedMultiplication central_extension_deformation(const ColorLieAlgebra& L,
                                                     const Cochain& omega, int cutoff, int trunc);

struct AssociativityDefect {
  int order = 0;
  PBWMonomial a, b, c;
  UElement defect;
};

/// sum_s pi_s(pi_{r-s}(u,v), w) - pi_s(u, pi_{r-s}(v,w)) over tabulated
/// triples, per order. Empty = the tabulated family is associative.
std::vector<AssociativityDefect> order_associativity_defects(const DeformedMultiplication& dm);

struct PairDefect {
  int left = 0, right = 0;
  UElement defect;
};

/// Thm 2.1 identity: mu_1(X,Y) = pi_1(X,Y) - eps(X,Y) pi_1(Y,X) on g x g.
std::vector<PairDefect> antisymmetrization_defects(const DeformedMultiplication& dm,
                                                   const Cochain& mu1);

/// Thm 2.2 identity: omega(X,Y) 1 = pi_1(X,Y) - eps(X,Y) pi_1(Y,X).
std::vector<PairDefect> central_identity_defects(const DeformedMultiplication& dm,
                                                 const Cochain& omega);

/// Order-1 triviality of the tabulated deformation on the matching view.
bool order1_trivial(const TruncatedUView& view, const DeformedMultiplication& dm);

}  // namespace colorlie
