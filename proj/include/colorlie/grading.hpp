#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/report.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie {

/// Element of a finitely generated abelian group, stored as one exponent
/// vector (free exponents first, then torsion residues, already reduced).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<long> exps) : e_(std::move(exps)) {}

  const std::vector<long>& exps() const { return e_; }
  bool is_identity() const {
    for (long v : e_)
      if (v != 0) return false;
    return true;
  }

  auto operator<=>(const GroupElement&) const = default;

 private:
  std::vector<long> e_;
};

/// Z^r x Z/n_1 x ... x Z/n_s in invariant-factor presentation.
struct GradingGroup {
  int free_rank = 0;
  std::vector<long> torsion;  // each >= 2

  int generators() const { return free_rank + static_cast<int>(torsion.size()); }
  bool operator==(const GradingGroup&) const = default;

  void validate() const;

  GroupElement identity() const;
  GroupElement element(std::vector<long> exps) const;  // reduces residues
  GroupElement compose(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  /// "e" for the identity, otherwise comma-separated exponents.
  GroupElement parse(const std::string& text) const;
  std::string str(const GroupElement& a) const;

  /// Smallest conductor containing all torsion bicharacter values.
  unsigned default_conductor() const;
};

/// Antisymmetric bicharacter given on generator pairs; values on arbitrary
/// elements follow by bimultiplicativity. Omitted table entries default to
/// the inverse of the transposed entry (or 1 when both are omitted).
class Bicharacter {
 public:
  Bicharacter(GradingGroup group, unsigned conductor,
              std::vector<std::vector<std::optional<Scalar>>> table);

  static Bicharacter trivial(GradingGroup group, unsigned conductor = 1);

  const GradingGroup& group() const { return group_; }
  unsigned conductor() const { return conductor_; }
  const Scalar& entry(int i, int j) const { return table_[i][j]; }

  Scalar eval(const GroupElement& g, const GroupElement& h) const;

  /// Antisymmetry and torsion-compatibility of the generator table.
  VerificationReport verify() const;

 private:
  GradingGroup group_;
  unsigned conductor_;
  std::vector<std::vector<Scalar>> table_;
};

}  // namespace colorlie
