#include "colorlie/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace colorlie {

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending degree, no trailing zeros

ZPoly trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Exact division of integer polynomials, divisor monic.
ZPoly divide_monic(ZPoly num, const ZPoly& den) {
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpz_class c = num[i + den.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  num = trim(std::move(num));
  if (!num.empty()) throw Error("cyclotomic polynomial division not exact");
  return quot;
}

// Phi_m by the recursion Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
ZPoly cyclotomic(unsigned m, std::map<unsigned, ZPoly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  ZPoly num(m + 1, mpz_class(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = divide_monic(std::move(num), cyclotomic(d, memo));
  memo[m] = num;
  return num;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned m) : m_(m) {
  if (m == 0) throw Error("conductor must be positive");
  std::map<unsigned, ZPoly> memo;
  phi_ = cyclotomic(m, memo);
  degree_ = phi_.size() - 1;

  // Power table zeta^k for k up to max(2*deg - 2, m): products of reduced
  // elements need 2*deg - 2, conductor-promotion needs exponents below m.
  std::size_t top = std::max<std::size_t>(2 * degree_ >= 2 ? 2 * degree_ - 2 : 0, m);
  powers_.reserve(top + 1);
  std::vector<mpq_class> cur(degree_, mpq_class(0));
  cur[0] = 1;
  powers_.push_back(cur);
  for (std::size_t k = 1; k <= top; ++k) {
    // multiply by x, then fold the overflowing degree back with Phi
    mpq_class lead = cur.back();
    for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (lead != 0)
      for (std::size_t i = 0; i < degree_; ++i) cur[i] -= lead * mpq_class(phi_[i]);
    powers_.push_back(cur);
  }
}

const CyclotomicField& CyclotomicField::get(unsigned conductor) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

const std::vector<mpq_class>& CyclotomicField::power(std::size_t k) const {
  if (k >= powers_.size()) throw Error("cyclotomic power table exceeded");
  return powers_[k];
}

void Scalar::reduce_inplace(std::vector<mpq_class>& raw) const {
  const auto& field = CyclotomicField::get(m_);
  std::vector<mpq_class> out(field.degree(), mpq_class(0));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& pk = field.power(k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += raw[k] * pk[i];
  }
  raw = std::move(out);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.c_[0] = q;
  return s;
}

Scalar Scalar::zeta(unsigned conductor, long k) {
  const auto& field = CyclotomicField::get(conductor);
  long r = k % static_cast<long>(conductor);
  if (r < 0) r += conductor;
  std::vector<mpq_class> c = field.power(static_cast<std::size_t>(r));
  return Scalar(conductor, std::move(c));
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return q == 0; });
}

std::optional<mpq_class> Scalar::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

Scalar Scalar::promoted(unsigned conductor) const {
  if (conductor == m_) return *this;
  if (conductor % m_ != 0) throw Error("conductor promotion requires divisibility");
  const auto& field = CyclotomicField::get(conductor);
  std::size_t step = conductor / m_;
  std::vector<mpq_class> out(field.degree(), mpq_class(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pk = field.power(k * step);  // zeta_m^k = zeta_M^{k*M/m}
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c_[k] * pk[i];
  }
  return Scalar(conductor, std::move(out));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  unsigned m = lcm_u(m_, o.m_);
  if (m != m_) *this = promoted(m);
  Scalar rhs = o.conductor() == m ? o : o.promoted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& q : s.c_) q = -q;
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  unsigned m = lcm_u(m_, o.m_);
  if (m != m_) *this = promoted(m);
  Scalar rhs = o.conductor() == m ? o : o.promoted(m);
  std::vector<mpq_class> raw(2 * c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      raw[i + j] += c_[i] * rhs.c_[j];
    }
  }
  reduce_inplace(raw);
  c_ = std::move(raw);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inversion of zero scalar");
  // Extended Euclid in Q[x] against Phi_m: s*a + t*Phi = 1.
  using QPoly = std::vector<mpq_class>;
  auto deg = [](const QPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  const auto& field = CyclotomicField::get(m_);
  QPoly r0;
  for (const auto& z : field.cyclotomic_polynomial()) r0.push_back(mpq_class(z));
  QPoly r1 = c_;
  QPoly s0(1, mpq_class(0)), s1(1, mpq_class(1));  // coefficients of a
  while (deg(r1) > 0) {
    long d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    mpq_class factor = r0[d0] / r1[d1];
    long shift = d0 - d1;
    auto submul = [&](QPoly& a, const QPoly& b) {
      if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpq_class(0));
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) a[i + shift] -= factor * b[i];
    };
    submul(r0, r1);
    submul(s0, s1);
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  if (deg(r1) != 0) throw Error("scalar not invertible");  // cannot happen: Phi_m irreducible
  mpq_class unit = r1[0];
  std::vector<mpq_class> raw(s1.size(), mpq_class(0));
  for (std::size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / unit;
  raw.resize(std::max(raw.size(), field.degree()), mpq_class(0));
  reduce_inplace(raw);
  return Scalar(m_, std::move(raw));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(1L);
  Scalar base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base = (n >>= 1UL) ? base * base : base;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  unsigned m = lcm_u(m_, o.m_);
  return promoted(m).c_ == o.promoted(m).c_;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class q = c_[k];
    bool neg = q < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = q.get_str();
    if (k == 0) {
      out += mag;
    } else {
      if (q != 1) out += mag + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Scalar Scalar::parse(const std::string& text, unsigned conductor) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> mpz_class {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw Error("scalar parse error: expected integer in '" + text + "'");
    return mpz_class(text.substr(start, pos - start));
  };

  Scalar total;
  bool expect_term = true;
  int sign = 1;
  skip_ws();
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '-') {
        sign = -sign;
        ++pos;
        continue;
      }
      if (expect_term) {
        ++pos;
        continue;
      }
      sign = (ch == '-') ? -1 : 1;
      ++pos;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("scalar parse error: unexpected '" + std::string(1, ch) + "' in '" + text + "'");

    mpq_class coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = parse_int();
      mpz_class den(1);
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int();
        if (den == 0) throw Error("scalar parse error: zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    long zexp = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      zexp = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        zexp = static_cast<long>(parse_int().get_si());
      }
    } else if (!have_coeff) {
      throw Error("scalar parse error: expected term in '" + text + "'");
    }
    Scalar term = Scalar::rational(coeff);
    if (sign < 0) term = -term;
    if (zexp != 0) term *= Scalar::zeta(conductor, zexp);
    if (zexp == 0 && conductor > 1) term = term.promoted(conductor);
    total += term;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw Error("scalar parse error: empty or dangling expression '" + text + "'");
  if (total.conductor() != conductor && conductor % total.conductor() == 0)
    total = total.promoted(conductor);
  return total;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::string scalar_product_prefix(const Scalar& c, bool separator) {
  auto rat = c.as_rational();
  if (rat) {
    mpq_class q = *rat;
    bool neg = q < 0;
    if (neg) q = -q;
    std::string sign = separator ? (neg ? " - " : " + ") : (neg ? "-" : "");
    if (q == 1) return sign;
    return sign + q.get_str() + "*";
  }
  return (separator ? " + (" : "(") + c.str() + ")*";
}

}  // namespace colorlie
