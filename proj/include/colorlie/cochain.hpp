#pragma once

#include <utility>
#include <vector>

#include "colorlie/color_lie.hpp"
#include "colorlie/linalg.hpp"

namespace colorlie {

using IndexTuple = std::vector<int>;

/// eps-skew n-cochain of homogeneous degree `degree`, values in a module.
/// Values are stored on admissible tuples only (nondecreasing, strictly
/// increasing at indices whose eps(g,g) = 1); everything else follows by
/// skew symmetry.
struct Cochain {
  int arity = 0;
  GroupElement degree;
  std::map<IndexTuple, SparseVec> values;

  bool is_zero() const { return values.empty(); }
};

/// Sorts an index tuple by adjacent transpositions, accumulating the factor
/// -eps(g_a, g_b) per swap. Returns scale zero when the tuple repeats an
/// index with eps(g,g) = 1.
std::pair<IndexTuple, Scalar> skew_normalize(const ColorLieAlgebra& L, IndexTuple tuple);

/// True when the sorted tuple is its own skew representative.
bool tuple_admissible(const ColorLieAlgebra& L, const IndexTuple& tuple);

/// All admissible tuples of the given arity, ascending.
std::vector<IndexTuple> admissible_tuples(const ColorLieAlgebra& L, int arity);

/// Enumerated basis of the cochain slice C^n(L, M)_gamma: one slot per
/// admissible tuple and module basis vector of the forced degree.
struct CochainBasis {
  int arity = 0;
  GroupElement degree;
  std::vector<std::pair<IndexTuple, int>> slots;  // (tuple, module index)

  std::size_t dim() const { return slots.size(); }
  long index_of(const IndexTuple& tuple, int module_index) const;  // -1 if absent
};

CochainBasis cochain_tuple_basis(const ColorLieAlgebra& L, const Module& M, int arity,
                                 const GroupElement& gamma);

/// Cochain value on an arbitrary tuple (skew lookup).
SparseVec evaluate(const ColorLieAlgebra& L, const Cochain& f, const IndexTuple& tuple);

/// Adds value to the stored slot of the skew representative of `tuple`.
void accumulate(const ColorLieAlgebra& L, Cochain& f, const IndexTuple& tuple,
                const SparseVec& value);

/// Validates storage: admissible keys, consistent value degrees.
VerificationReport check_cochain(const ColorLieAlgebra& L, const Module& M, const Cochain& f);

/// Graded Chevalley-Eilenberg coboundary. Satisfies delta(delta(f)) = 0
/// exactly; the property suite pins the sign convention.
Cochain delta_ce(const ColorLieAlgebra& L, const Module& M, const Cochain& f);

/// Matrix of delta^n restricted to the degree-gamma slice, in the enumerated
/// bases (rows: arity n+1 slots, columns: arity n slots).
QMatrix delta_matrix(const ColorLieAlgebra& L, const Module& M, int arity,
                     const GroupElement& gamma);

struct CohomologyDims {
  long dim_cochains = 0;
  long dim_cocycles = 0;
  long dim_coboundaries = 0;
  long dim_cohomology = 0;
};

/// Exact dimensions of Z^n, B^n, H^n in degree gamma. For n = 0 only the
/// kernel of delta^0 is reported (no coboundaries).
CohomologyDims cohomology_dims(const ColorLieAlgebra& L, const Module& M, int arity,
                               const GroupElement& gamma);

/// Basis of the cocycle space Z^n(L, M)_gamma as cochains.
std::vector<Cochain> cocycle_basis(const ColorLieAlgebra& L, const Module& M, int arity,
                                   const GroupElement& gamma);

/// Representatives of a basis of H^n(L, M)_gamma: cocycles extending a basis
/// of the coboundary space.
std::vector<Cochain> cohomology_witnesses(const ColorLieAlgebra& L, const Module& M, int arity,
                                          const GroupElement& gamma);

/// Coordinates of the class [f] against the witness basis, solved exactly.
/// Throws when f is not a cocycle of the slice.
std::vector<Scalar> class_coordinates(const ColorLieAlgebra& L, const Module& M, const Cochain& f);

struct RigidityResult {
  bool rigid = false;
  std::vector<Cochain> witnesses;  // H^2(L, L)_e representatives when not rigid
};

/// Graded rigidity test: H^2(L, adjoint)_e = 0.
RigidityResult is_graded_rigid(const ColorLieAlgebra& L);

/// All degrees gamma with a nonzero slice C^n(L, M)_gamma.
std::vector<GroupElement> occurring_degrees(const ColorLieAlgebra& L, const Module& M, int arity);

}  // namespace colorlie
