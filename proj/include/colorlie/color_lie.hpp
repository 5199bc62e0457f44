#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorlie/error.hpp"
#include "colorlie/grading.hpp"
#include "colorlie/report.hpp"
#include "colorlie/sparse.hpp"

namespace colorlie {

/// Thrown when an input object fails validation; carries the located defects.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, VerificationReport report)
      : Error(what + "\n" + report.str()), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// One bracket entry as written in a definition: [left, right] = sum of terms.
struct BracketEntry {
  int left = 0;
  int right = 0;
  SparseVec terms;

  bool operator==(const BracketEntry&) const = default;
};

/// Finite-dimensional color Lie algebra over Q(zeta_m): homogeneous basis,
/// sparse structure constants, attached bicharacter.
///
/// Structure constants are kept exactly as declared (any index order); the
/// transposed bracket is derived through eps-antisymmetry when it was not
/// declared itself. Construction enforces shape and the grading rule
/// [L_g, L_h] in L_{gh}; the axiom checks are separate so that defective
/// inputs can be loaded and reported on.
class ColorLieAlgebra {
 public:
  ColorLieAlgebra(std::vector<std::string> basis_names, std::vector<GroupElement> degrees,
                  Bicharacter bicharacter, std::vector<BracketEntry> brackets);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;  // throws on unknown name
  const GroupElement& degree(int i) const { return degrees_.at(i); }
  const GradingGroup& group() const { return bichar_.group(); }
  const Bicharacter& bicharacter() const { return bichar_; }
  unsigned conductor() const { return bichar_.conductor(); }

  /// Cached eps(|x_i|, |x_j|) on basis degrees.
  const Scalar& eps(int i, int j) const { return eps_table_[i][j]; }

  const std::vector<BracketEntry>& declared_brackets() const { return declared_; }

  /// [x_i, x_j] as declared, or derived via eps-antisymmetry, or zero.
  SparseVec bracket_basis(int i, int j) const;

  /// Bilinear extension to arbitrary vectors.
  SparseVec bracket(const SparseVec& a, const SparseVec& b) const;

  /// Degree of a homogeneous vector (identity for zero), or nullopt.
  std::optional<GroupElement> homogeneous_degree(const SparseVec& v) const;

  VerificationReport verify_antisymmetry() const;
  VerificationReport verify_jacobi(int threads = 1) const;

  std::string vector_str(const SparseVec& v) const;

 private:
  const SparseVec* declared_entry(int i, int j) const;

  std::vector<std::string> names_;
  std::vector<GroupElement> degrees_;
  Bicharacter bichar_;
  std::vector<BracketEntry> declared_;
  std::vector<std::vector<Scalar>> eps_table_;
};

/// Graded L-module on a finite homogeneous basis: trivial, adjoint, or an
/// explicitly given action (verified to be a representation).
class Module {
 public:
  enum class Kind { Trivial, Adjoint, Explicit };

  static Module trivial(const ColorLieAlgebra& algebra);
  static Module adjoint(const ColorLieAlgebra& algebra);
  static Module explicit_action(const ColorLieAlgebra& algebra, std::vector<std::string> names,
                                std::vector<GroupElement> degrees,
                                std::vector<std::vector<SparseVec>> action);

  Kind kind() const { return kind_; }
  const ColorLieAlgebra& algebra() const { return *algebra_; }
  int dim() const { return static_cast<int>(degrees_.size()); }
  const std::string& name(int j) const { return names_.at(j); }
  const GroupElement& degree(int j) const { return degrees_.at(j); }

  /// rho(x_i) applied to the j-th module basis vector.
  SparseVec act(int i, int j) const;

  /// Bilinear extension: X in L, v in M.
  SparseVec act(const SparseVec& X, const SparseVec& v) const;

  std::string vector_str(const SparseVec& v) const;

 private:
  Module(Kind kind, const ColorLieAlgebra& algebra) : kind_(kind), algebra_(&algebra) {}

  Kind kind_;
  const ColorLieAlgebra* algebra_;
  std::vector<std::string> names_;
  std::vector<GroupElement> degrees_;
  std::vector<std::vector<SparseVec>> action_;  // explicit only
};

}  // namespace colorlie
