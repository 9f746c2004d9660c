#include "nilsol/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilsol {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = x.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * x[j];
      }
      basis = std::move(next);
      denom *= x[i] - x[j];
    }
    if (sgn(denom) == 0) throw std::invalid_argument("interpolate: repeated node");
    const Rational f = y[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * f;
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::rem(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  const Rational& lead = d.c_.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    const Rational f = r[k] / lead;
    for (int t = 0; t <= dd; ++t) r[k - dd + t] -= f * d.c_[t];
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(dd)));
  return Polynomial(std::move(r));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    Polynomial r = seq[seq.size() - 2].rem(d);
    std::vector<Rational> neg = r.coeffs();
    for (auto& x : neg) x = -x;
    d = Polynomial(std::move(neg));
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<Polynomial>& sturm, const Rational& a,
                        const Rational& b) {
  if (sturm.empty()) return 0;
  const std::size_t va = sign_changes(sturm, a);
  const std::size_t vb = sign_changes(sturm, b);
  return va > vb ? va - vb : 0;
}

Rational root_bound(const Polynomial& p) {
  Rational m = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational r = abs(c[k] / c.back());
    if (r > m) m = r;
  }
  return m + 1;
}

std::size_t count_real_roots(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  const Rational r = root_bound(p);
  return count_roots(sturm_sequence(p), -r, r);
}

std::optional<std::pair<Rational, Rational>> isolate_root(const Polynomial& p,
                                                          const Rational& width) {
  if (p.degree() < 1) return std::nullopt;
  const auto seq = sturm_sequence(p);
  Rational a = -root_bound(p);
  Rational b = -a;
  if (count_roots(seq, a, b) == 0) return std::nullopt;
  while (b - a > width) {
    const Rational mid = (a + b) / 2;
    if (sgn(p.eval(mid)) == 0) return std::make_pair(mid, mid);
    if (count_roots(seq, a, mid) > 0) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return std::make_pair(a, b);
}

std::vector<Rational> rational_roots(const Polynomial& p, unsigned long limit) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& c : p.coeffs()) z.push_back(Integer(c * lcm));
  std::size_t shift = 0;
  while (z[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  const Integer a0 = abs(z[shift]);
  const Integer an = abs(z.back());
  if (a0 > limit || an > limit) return roots;
  auto divisors = [](unsigned long v) {
    std::vector<unsigned long> d;
    for (unsigned long k = 1; k <= v; ++k) {
      if (v % k == 0) d.push_back(k);
    }
    return d;
  };
  for (auto num : divisors(a0.get_ui())) {
    for (auto den : divisors(an.get_ui())) {
      for (int s : {1, -1}) {
        Rational r(static_cast<long>(num) * s, static_cast<long>(den));
        r.canonicalize();
        if (sgn(p.eval(r)) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace nilsol
