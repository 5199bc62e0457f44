#include "colorlie/grading.hpp"

#include <numeric>
#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

void GradingGroup::validate() const {
  if (free_rank < 0) throw Error("free rank must be nonnegative");
  for (long n : torsion)
    if (n < 2) throw Error("torsion orders must be >= 2");
}

GroupElement GradingGroup::identity() const {
  return GroupElement(std::vector<long>(generators(), 0));
}

GroupElement GradingGroup::element(std::vector<long> exps) const {
  if (static_cast<int>(exps.size()) != generators())
    throw Error("group element has wrong number of exponents");
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    long n = torsion[k];
    long& r = exps[free_rank + k];
    r %= n;
    if (r < 0) r += n;
  }
  return GroupElement(std::move(exps));
}

GroupElement GradingGroup::compose(const GroupElement& a, const GroupElement& b) const {
  if (a.exps().size() != b.exps().size() || static_cast<int>(a.exps().size()) != generators())
    throw Error("group element shape mismatch");
  std::vector<long> sum(a.exps());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.exps()[i];
  return element(std::move(sum));
}

GroupElement GradingGroup::inverse(const GroupElement& a) const {
  std::vector<long> neg(a.exps());
  for (long& v : neg) v = -v;
  return element(std::move(neg));
}

GroupElement GradingGroup::parse(const std::string& text) const {
  if (text == "e" || text.empty()) return identity();
  std::vector<long> exps;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      exps.push_back(std::stol(part));
    } catch (const std::exception&) {
      throw Error("bad group element '" + text + "'");
    }
  }
  return element(std::move(exps));
}

std::string GradingGroup::str(const GroupElement& a) const {
  if (a.exps().empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.exps().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.exps()[i]);
  }
  return out;
}

unsigned GradingGroup::default_conductor() const {
  unsigned m = 1;
  for (long n : torsion) m = static_cast<unsigned>(std::lcm<long>(m, n));
  return m;
}

Bicharacter::Bicharacter(GradingGroup group, unsigned conductor,
                         std::vector<std::vector<std::optional<Scalar>>> table)
    : group_(std::move(group)), conductor_(conductor) {
  group_.validate();
  std::size_t n = static_cast<std::size_t>(group_.generators());
  if (table.size() != n) throw Error("bicharacter table has wrong shape");
  for (const auto& row : table)
    if (row.size() != n) throw Error("bicharacter table has wrong shape");

  table_.assign(n, std::vector<Scalar>(n, Scalar(1L)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& fwd = table[i][j];
      const auto& bwd = table[j][i];
      Scalar vij(1L), vji(1L);
      if (fwd && (*fwd).is_zero()) throw Error("bicharacter entries must be nonzero");
      if (bwd && (*bwd).is_zero()) throw Error("bicharacter entries must be nonzero");
      if (i == j) {
        vij = fwd ? *fwd : Scalar(1L);
        vji = vij;
      } else if (fwd && bwd) {
        vij = *fwd;
        vji = *bwd;
      } else if (fwd) {
        vij = *fwd;
        vji = fwd->inverse();
      } else if (bwd) {
        vji = *bwd;
        vij = bwd->inverse();
      }
      if (conductor_ % vij.conductor() != 0 || conductor_ % vji.conductor() != 0)
        throw Error("bicharacter entry conductor does not divide the session conductor");
      table_[i][j] = vij.promoted(conductor_);
      table_[j][i] = vji.promoted(conductor_);
    }
  }
}

Bicharacter Bicharacter::trivial(GradingGroup group, unsigned conductor) {
  std::size_t n = static_cast<std::size_t>(group.generators());
  std::vector<std::vector<std::optional<Scalar>>> table(
      n, std::vector<std::optional<Scalar>>(n, std::nullopt));
  return Bicharacter(std::move(group), conductor, std::move(table));
}

Scalar Bicharacter::eval(const GroupElement& g, const GroupElement& h) const {
  if (static_cast<int>(g.exps().size()) != group_.generators() ||
      static_cast<int>(h.exps().size()) != group_.generators())
    throw Error("bicharacter evaluated on foreign group elements");
  Scalar out(1L);
  for (std::size_t i = 0; i < g.exps().size(); ++i) {
    long gi = g.exps()[i];
    if (gi == 0) continue;
    for (std::size_t j = 0; j < h.exps().size(); ++j) {
      long hj = h.exps()[j];
      if (hj == 0) continue;
      out *= table_[i][j].pow(gi * hj);
    }
  }
  return out;
}

VerificationReport Bicharacter::verify() const {
  VerificationReport report;
  int n = group_.generators();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Scalar prod = table_[i][j] * table_[j][i];
      if (!prod.is_one()) {
        std::string where = "B[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        report.add("antisymmetry", where,
                   "B[i][j]*B[j][i] = " + prod.str() + " != 1");
      }
    }
  }
  for (std::size_t k = 0; k < group_.torsion.size(); ++k) {
    int j = group_.free_rank + static_cast<int>(k);
    long order = group_.torsion[k];
    for (int i = 0; i < n; ++i) {
      if (!table_[i][j].pow(order).is_one())
        report.add("torsion", "B[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                   table_[i][j].str() + "^" + std::to_string(order) + " != 1");
      if (!table_[j][i].pow(order).is_one())
        report.add("torsion", "B[" + std::to_string(j) + "][" + std::to_string(i) + "]",
                   table_[j][i].str() + "^" + std::to_string(order) + " != 1");
    }
  }
  report.notes.push_back("bimultiplicativity holds by construction");
  return report;
}

}  // namespace colorlie
