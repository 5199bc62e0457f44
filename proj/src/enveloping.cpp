#include "colorlie/enveloping.hpp"

namespace colorlie {

bool monomial_admissible(const ColorLieAlgebra& L, const PBWMonomial& m) {
  const auto& l = m.letters();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 0 || l[i] >= L.dim()) return false;
    if (i == 0) continue;
    if (l[i - 1] > l[i]) return false;
    if (l[i - 1] == l[i] && !L.eps(l[i], l[i]).is_one()) return false;
  }
  return true;
}

GroupElement monomial_degree(const ColorLieAlgebra& L, const PBWMonomial& m) {
  GroupElement d = L.group().identity();
  for (int i : m.letters()) d = L.group().compose(d, L.degree(i));
  return d;
}

std::string monomial_str(const ColorLieAlgebra& L, const PBWMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& l = m.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t run = i;
    while (run < l.size() && l[run] == l[i]) ++run;
    if (!out.empty()) out += "*";
    out += L.name(l[i]);
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
  return out;
}

namespace {
void enumerate_monomials(const ColorLieAlgebra& L, int remaining, int from, std::vector<int>& cur,
                         std::vector<PBWMonomial>& out) {
  out.emplace_back(cur);
  if (remaining == 0) return;
  for (int i = from; i < L.dim(); ++i) {
    cur.push_back(i);
    bool repeatable = L.eps(i, i).is_one();
    enumerate_monomials(L, remaining - 1, repeatable ? i : i + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<PBWMonomial> pbw_basis_enumerate(const ColorLieAlgebra& L, int max_length) {
  if (max_length < 0) throw Error("negative filtration bound");
  std::vector<PBWMonomial> out;
  std::vector<int> cur;
  enumerate_monomials(L, max_length, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

TPoly TPoly::t_term(int order, const Scalar& s) {
  TPoly p;
  if (order < 0) throw Error("negative t power");
  if (!s.is_zero()) {
    p.c_.resize(order + 1, Scalar(0));
    p.c_[order] = s;
  }
  return p;
}

Scalar TPoly::coeff(int order) const {
  if (order < 0 || order >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[order];
}

void TPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly& TPoly::add(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

TPoly TPoly::mul(const TPoly& o, int trunc) const {
  TPoly out;
  if (is_zero() || o.is_zero()) return out;
  int top = std::min<int>(trunc, degree() + o.degree());
  if (top < 0) return out;
  out.c_.assign(top + 1, Scalar(0));
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j <= o.degree() && i + j <= top; ++j) out.c_[i + j] += c_[i] * o.c_[j];
  }
  out.normalize();
  return out;
}

TPoly TPoly::scaled(const Scalar& s) const {
  TPoly out;
  if (s.is_zero()) return out;
  out.c_ = c_;
  for (auto& c : out.c_) c *= s;
  out.normalize();
  return out;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int r = 0; r <= degree(); ++r) {
    if (c_[r].is_zero()) continue;
    if (r == 0) {
      out += c_[r].str();
      first = false;
      continue;
    }
    std::string term = "t";
    if (r > 1) term += "^" + std::to_string(r);
    out += scalar_product_prefix(c_[r], !first) + term;
    first = false;
  }
  return out;
}

std::optional<GroupElement> u_homogeneous_degree(const ColorLieAlgebra& L, const UElement& u) {
  if (u.empty()) return L.group().identity();
  std::optional<GroupElement> deg;
  for (const auto& [m, c] : u) {
    GroupElement d = monomial_degree(L, m);
    if (!deg)
      deg = d;
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

std::string u_str(const ColorLieAlgebra& L, const UElement& u) {
  if (u.empty()) return "0";
  std::string out;
  bool first = true;
  // highest monomial first
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    const auto& [m, c] = *it;
    if (m.is_unit()) {
      // constant term: render the scalar itself
      auto rat = c.as_rational();
      if (first) {
        out += rat ? c.str() : "(" + c.str() + ")";
      } else {
        if (rat) {
          mpq_class q = *rat;
          out += q < 0 ? " - " + mpq_class(-q).get_str() : " + " + q.get_str();
        } else {
          out += " + (" + c.str() + ")";
        }
      }
    } else {
      out += scalar_product_prefix(c, !first) + monomial_str(L, m);
    }
    first = false;
  }
  return out;
}

std::string u_poly_str(const ColorLieAlgebra& L, const UPolyElement& u) {
  if (u.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    const auto& [m, p] = *it;
    if (!first) out += " + ";
    bool simple = p.degree() <= 0;
    std::string coeff = p.str();
    if (m.is_unit()) {
      out += simple ? coeff : "(" + coeff + ")";
    } else if (simple && p.coeff(0).is_one()) {
      out += monomial_str(L, m);
    } else {
      out += "(" + coeff + ")*" + monomial_str(L, m);
    }
    first = false;
  }
  return out;
}

UElement t_coefficient(const UPolyElement& u, int order) {
  UElement out;
  for (const auto& [m, p] : u) {
    Scalar c = p.coeff(order);
    if (!c.is_zero()) out.emplace(m, c);
  }
  return out;
}

}  // namespace colorlie
