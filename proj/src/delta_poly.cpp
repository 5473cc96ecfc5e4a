#include "naryd/delta_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace naryd {

DeltaPoly::DeltaPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

DeltaPoly::DeltaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

DeltaPoly DeltaPoly::delta() { return DeltaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

DeltaPoly DeltaPoly::linear(const Rational& a, const Rational& b) { return DeltaPoly(std::vector<Rational>{a, b}); }

DeltaPoly DeltaPoly::from_wire(const std::vector<std::string>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (const auto& s : coefficients) c.push_back(Rational::parse(s));
  return DeltaPoly(std::move(c));
}

std::vector<std::string> DeltaPoly::to_wire() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

std::string DeltaPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.abs();
    if (k == 0 || a != Rational(1)) os << a;
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

Rational DeltaPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational DeltaPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

DeltaPoly DeltaPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return DeltaPoly(std::move(d));
}

DeltaPoly DeltaPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DeltaPoly(std::move(out));
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& o) { return *this = *this * o; }

DeltaPoly& DeltaPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DeltaPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead_inv = b.leading().inverse();
  const std::size_t nb = b.coeffs_.size();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + nb - 1];
    if (top.is_zero()) continue;
    const Rational q = top * lead_inv;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= q * b.coeffs_[j];
    quot[k] = q;
  }
  return {DeltaPoly(std::move(quot)), DeltaPoly(std::move(rem))};
}

DeltaPoly divexact(const DeltaPoly& a, const DeltaPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

DeltaPoly gcd(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly x = a;
  DeltaPoly y = b;
  while (!y.is_zero()) {
    DeltaPoly r = divmod(x, y).second;
    // Normalizing keeps coefficient growth in check.
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

void DeltaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DeltaPoly squarefree_part(const DeltaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no squarefree part");
  if (p.degree() == 0) return DeltaPoly(Rational(1));
  return divexact(p, gcd(p, p.derivative())).monic();
}

namespace {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

IntPoly primitive_integer(const DeltaPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, c.denominator());
  IntPoly out;
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    g = gcd(g, v);
    out.push_back(v);
  }
  for (auto& v : out) v /= g;
  if (out.back() < 0) {
    for (auto& v : out) v = -v;
  }
  return out;
}

// In-place p(t) -> p(t + 1).
void taylor_shift_one(IntPoly& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) p[j] += p[j + 1];
  }
}

int sign_variations(const IntPoly& p) {
  int count = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Upper bound on the number of roots of q in the open interval (0, 1).
int descartes_unit_interval(const IntPoly& q) {
  IntPoly r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

mpz_class eval_int(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  // Homogenized evaluation: den^deg * p(num/den).
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  std::vector<mpz_class> powers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    powers[i] = den_pow;
    den_pow *= den;
  }
  mpz_class num_pow = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i] * num_pow * powers[p.size() - 1 - i];
    num_pow *= num;
  }
  return acc;
}

struct PositiveRootSearch {
  const IntPoly& p;   // squarefree, primitive, p(0) ≠ 0
  mpz_class bound;    // power of two exceeding every positive root
  mpz_class lead;     // |leading coefficient|
  std::vector<Rational> roots;

  // q(t) = 2^{k·n} p(bound·(c + t)/2^k), describing the interval (c/2^k, (c+1)/2^k)·bound.
  void search(const IntPoly& q, const mpz_class& c, unsigned long k) {
    const int v = descartes_unit_interval(q);
    if (v == 0) return;
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
    // width·lead < 1  <=>  bound·lead < 2^k: at most one candidate k'/lead inside.
    if (v == 1 && bound * lead < scale) {
      check_lattice_point(c, scale);
      return;
    }
    const std::size_t n = q.size() - 1;
    IntPoly left(q.size());
    for (std::size_t i = 0; i <= n; ++i) {
      left[i] = q[i];
      mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), n - i);
    }
    IntPoly right = left;
    taylor_shift_one(right);
    if (right[0] == 0) {
      // The midpoint (2c+1)/2^{k+1}·bound is an exact root.
      roots.emplace_back(bound * (2 * c + 1), scale * 2);
    }
    search(left, 2 * c, k + 1);
    search(right, 2 * c + 1, k + 1);
  }

  void check_lattice_point(const mpz_class& c, const mpz_class& scale) {
    // Open interval (c·bound/scale, (c+1)·bound/scale); look for m/lead inside.
    mpz_class lo_num = c * bound * lead;
    mpz_class hi_num = (c + 1) * bound * lead;
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), lo_num.get_mpz_t(), scale.get_mpz_t());
    m += 1;
    if (m * scale >= hi_num) return;
    if (eval_int(p, m, lead) == 0) roots.emplace_back(m, lead);
  }
};

std::vector<Rational> positive_roots(const IntPoly& p) {
  const mpz_class lead = abs(p.back());
  // Cauchy bound: every root satisfies |x| < 1 + max|a_i|/|a_n|.
  mpz_class max_c = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) max_c = std::max(max_c, mpz_class(abs(p[i])));
  mpz_class ratio = max_c / lead + 2;
  mpz_class bound = 1;
  while (bound < ratio) bound *= 2;

  IntPoly q(p.size());
  mpz_class bpow = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = p[i] * bpow;
    bpow *= bound;
  }
  PositiveRootSearch s{p, bound, lead, {}};
  s.search(q, 0, 0);
  return std::move(s.roots);
}

}  // namespace

std::vector<Rational> rational_roots(const DeltaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has all roots");
  if (p.degree() == 0) return {};
  DeltaPoly sf = squarefree_part(p);
  std::vector<Rational> roots;
  if (sf.coefficient(0).is_zero()) {
    roots.emplace_back(0);
    sf = divexact(sf, DeltaPoly::delta());
  }
  if (sf.degree() >= 1) {
    IntPoly ip = primitive_integer(sf);
    for (auto& r : positive_roots(ip)) roots.push_back(r);
    IntPoly neg = ip;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    if (neg.back() < 0) {
      for (auto& v : neg) v = -v;
    }
    for (auto& r : positive_roots(neg)) roots.push_back(-r);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

DeltaPoly irrational_part(const DeltaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has all roots");
  DeltaPoly sf = squarefree_part(p);
  for (const auto& r : rational_roots(sf)) sf = divexact(sf, DeltaPoly::linear(-r, Rational(1)));
  return sf.monic();
}

}  // namespace naryd
