#include "colorlie/poisson_star.hpp"

#include <random>

namespace colorlie {

void sym_add_term(SymElement& acc, const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.terms.find(m);
  if (it == acc.terms.end()) {
    acc.terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.terms.erase(it);
}

void sym_axpy(SymElement& acc, const Scalar& f, const SymElement& v) {
  if (f.is_zero()) return;
  for (const auto& [m, c] : v.terms) sym_add_term(acc, m, f * c);
}

std::map<int, SymElement> sym_components(const SymElement& s) {
  std::map<int, SymElement> out;
  for (const auto& [m, c] : s.terms) out[m.length()].terms.emplace(m, c);
  return out;
}

std::optional<int> sym_gr_degree(const SymElement& s) {
  if (s.is_zero()) return 0;
  int deg = s.terms.begin()->first.length();
  for (const auto& [m, c] : s.terms)
    if (m.length() != deg) return std::nullopt;
  return deg;
}

std::optional<GroupElement> sym_g_degree(const ColorLieAlgebra& L, const SymElement& s) {
  if (s.is_zero()) return L.group().identity();
  std::optional<GroupElement> deg;
  for (const auto& [m, c] : s.terms) {
    GroupElement d = monomial_degree(L, m);
    if (!deg)
      deg = d;
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

std::string sym_str(const ColorLieAlgebra& L, const SymElement& s) {
  UElement u(s.terms.begin(), s.terms.end());
  return u_str(L, u);
}

SymElement gr_project(const ColorLieAlgebra& L, const UElement& u, int level) {
  int top = u_filtration_degree<ScalarRing>(u);
  if (top > level) throw Error("gr projection below the filtration degree");
  SymElement out;
  for (const auto& [m, c] : u)
    if (m.length() == level) out.terms.emplace(m, c);
  return out;
}

UElement sym_lift(const SymElement& s) { return UElement(s.terms.begin(), s.terms.end()); }

SymElement sym_multiply(const ColorLieAlgebra& L, const SymElement& a, const SymElement& b) {
  SymElement out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      // merge the words with the chi cost per transposition; squares at
      // strict letters are lower filtration, hence zero here
      std::vector<int> word = ma.letters();
      word.insert(word.end(), mb.letters().begin(), mb.letters().end());
      Scalar sign(1);
      bool dead = false;
      for (std::size_t i = 1; i < word.size() && !dead; ++i) {
        for (std::size_t k = i; k > 0 && word[k - 1] >= word[k]; --k) {
          if (word[k - 1] == word[k]) {
            if (L.eps(word[k], word[k]).is_one()) break;
            dead = true;
            break;
          }
          sign *= L.eps(word[k - 1], word[k]);
          std::swap(word[k - 1], word[k]);
        }
      }
      if (dead) continue;
      sym_add_term(out, PBWMonomial(std::move(word)), ca * cb * sign);
    }
  }
  return out;
}

SymElement poisson_bracket(const ColorLieAlgebra& L, const SymElement& a, const SymElement& b) {
  auto pa = sym_gr_degree(a), pb = sym_gr_degree(b);
  auto ga = sym_g_degree(L, a), gb = sym_g_degree(L, b);
  if (!pa || !pb || !ga || !gb)
    throw Error("poisson bracket needs gr- and G-homogeneous arguments");
  if (a.is_zero() || b.is_zero()) return {};
  int p = *pa, q = *pb;
  Scalar chi = L.bicharacter().eval(*ga, *gb);

  EnvelopingAlgebra U(L, ScalarRing{});
  UElement w = U.multiply(sym_lift(a), sym_lift(b));
  ScalarRing ring;
  u_axpy(ring, w, -chi, U.multiply(sym_lift(b), sym_lift(a)));
  if (p + q == 0) return {};
  // the top levels cancel by eps-commutativity of gr
  if (u_filtration_degree<ScalarRing>(w) > p + q - 1)
    throw Error("poisson bracket lost eps-commutativity of the graded algebra");
  return gr_project(L, w, p + q - 1);
}

VerificationReport verify_color_poisson(const ColorLieAlgebra& L, int random_trials,
                                        unsigned long long seed) {
  VerificationReport report;
  auto chi = [&](const SymElement& a, const SymElement& b) {
    return L.bicharacter().eval(*sym_g_degree(L, a), *sym_g_degree(L, b));
  };
  auto check_triple = [&](const SymElement& u, const SymElement& v, const SymElement& w,
                          const std::string& where) {
    // antisymmetry
    SymElement anti = poisson_bracket(L, u, v);
    sym_axpy(anti, chi(u, v), poisson_bracket(L, v, u));
    if (!anti.is_zero()) report.add("poisson-antisymmetry", where, sym_str(L, anti));
    // jacobi
    SymElement jac;
    sym_axpy(jac, chi(w, u), poisson_bracket(L, u, poisson_bracket(L, v, w)));
    sym_axpy(jac, chi(u, v), poisson_bracket(L, v, poisson_bracket(L, w, u)));
    sym_axpy(jac, chi(v, w), poisson_bracket(L, w, poisson_bracket(L, u, v)));
    if (!jac.is_zero()) report.add("poisson-jacobi", where, sym_str(L, jac));
    // leibniz: {u, v w} = {u,v} w + chi(u,v) v {u,w}
    SymElement lhs = poisson_bracket(L, u, sym_multiply(L, v, w));
    SymElement rhs = sym_multiply(L, poisson_bracket(L, u, v), w);
    sym_axpy(rhs, chi(u, v), sym_multiply(L, v, poisson_bracket(L, u, w)));
    sym_axpy(lhs, Scalar(-1), rhs);
    if (!lhs.is_zero()) report.add("poisson-leibniz", where, sym_str(L, lhs));
  };

  auto gen = [&](int i) {
    SymElement s;
    s.terms.emplace(PBWMonomial({i}), Scalar(1));
    return s;
  };
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j)
      for (int k = 0; k < L.dim(); ++k)
        check_triple(gen(i), gen(j), gen(k),
                     "(" + L.name(i) + "," + L.name(j) + "," + L.name(k) + ")");

  std::mt19937_64 rng(seed);
  auto monomials = pbw_basis_enumerate(L, 3);
  std::uniform_int_distribution<std::size_t> pick(1, monomials.size() - 1);  // skip the unit
  std::uniform_int_distribution<long> coeff(1, 4);
  auto random_monomial = [&] {
    SymElement s;
    s.terms.emplace(monomials[pick(rng)], Scalar(coeff(rng)));
    return s;
  };
  for (int trial = 0; trial < random_trials; ++trial)
    check_triple(random_monomial(), random_monomial(), random_monomial(),
                 "random trial " + std::to_string(trial));
  return report;
}

UElement symmetrize(const ColorLieAlgebra& L, const SymElement& s) {
  EnvelopingAlgebra U(L, ScalarRing{});
  ScalarRing ring;
  UElement out;
  for (const auto& [m, c] : s.terms) {
    const auto& letters = m.letters();
    int p = m.length();
    // 1/p!
    Scalar norm(1);
    for (int k = 2; k <= p; ++k) norm /= Scalar(k);
    norm *= c;

    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = i;
    do {
      // chi over inversion pairs (r < s placed in reverse order)
      Scalar sign(1);
      for (int r = 0; r < p; ++r)
        for (int t = r + 1; t < p; ++t) {
          // positions of original slots r, t inside the permuted word
          int pr = 0, pt = 0;
          for (int k = 0; k < p; ++k) {
            if (perm[k] == r) pr = k;
            if (perm[k] == t) pt = k;
          }
          if (pr > pt) sign *= L.eps(letters[r], letters[t]);
        }
      std::vector<int> word(p);
      for (int k = 0; k < p; ++k) word[k] = letters[perm[k]];
      u_axpy(ring, out, Scalar(1), U.normal_form(std::move(word), norm * sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::map<int, SymElement> symmetrize_inverse(const ColorLieAlgebra& L, const UElement& u) {
  std::map<int, SymElement> out;
  ScalarRing ring;
  UElement rest = u;
  while (!rest.empty()) {
    int top = u_filtration_degree<ScalarRing>(rest);
    SymElement s = gr_project(L, rest, top);
    u_axpy(ring, rest, Scalar(-1), symmetrize(L, s));
    if (u_filtration_degree<ScalarRing>(rest) >= top && !rest.empty())
      throw Error("symmetrize is not a section of the gr projection");
    out.emplace(top, std::move(s));
  }
  return out;
}

const SymElement& StarSeries::at(int n) const {
  static const SymElement zero;
  if (n < 0 || n >= static_cast<int>(comp.size())) return zero;
  return comp[n];
}

StarSeries star_product(const ColorLieAlgebra& L, const SymElement& u, const SymElement& v,
                        int trunc) {
  if (trunc < 0) throw Error("negative star truncation");
  StarSeries out;
  out.trunc = trunc;
  out.comp.assign(trunc + 1, SymElement{});
  EnvelopingAlgebra U(L, ScalarRing{});
  for (const auto& [p, up] : sym_components(u)) {
    for (const auto& [q, vq] : sym_components(v)) {
      UElement w = U.multiply(symmetrize(L, up), symmetrize(L, vq));
      for (const auto& [j, s] : symmetrize_inverse(L, w)) {
        int n = p + q - j;
        if (n < 0) throw Error("star component above the expected filtration");
        if (n <= trunc) sym_axpy(out.comp[n], Scalar(1), s);
      }
    }
  }
  return out;
}

std::string star_series_str(const ColorLieAlgebra& L, const StarSeries& s) {
  std::string out;
  bool first = true;
  for (int n = 0; n <= s.trunc; ++n) {
    if (s.comp[n].is_zero()) continue;
    std::string tp = n == 0 ? "" : (n == 1 ? "t*" : "t^" + std::to_string(n) + "*");
    for (auto it = s.comp[n].terms.rbegin(); it != s.comp[n].terms.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string body = tp + monomial_str(L, m);
      if (m.is_unit()) body = n == 0 ? "1" : (n == 1 ? "t" : "t^" + std::to_string(n));
      out += scalar_product_prefix(c, !first) + body;
      first = false;
    }
  }
  return first ? "0" : out;
}

}  // namespace colorlie
