#include "nilsol/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace nilsol {

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw std::overflow_error("radicand product exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(p);
}

// sqrt(a) * sqrt(b) = g * sqrt((a/g) * (b/g)) for square-free a, b.
std::pair<std::uint64_t, std::uint64_t> radical_product(std::uint64_t a,
                                                        std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  return {checked_product(a / g, b / g), g};
}

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

// Solves a small dense rational system M x = rhs (M square, invertible).
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                     std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("division by zero");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Scalar parse_all() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty literal");
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed scalar literal '" + std::string(text_) +
                     "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  Scalar expr() {
    Scalar acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Scalar t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }
  Scalar term() {
    Scalar v = factor();
    while (accept('*')) v *= factor();
    return v;
  }
  Scalar factor() {
    skip_ws();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      const bool negative = accept('-');
      Integer r = integer();
      if (!accept(')')) fail("expected ')'");
      if (negative || r <= 0) fail("nonpositive radicand");
      if (!r.fits_ulong_p()) fail("radicand too large");
      return Scalar::sqrt_of(r.get_ui());
    }
    Integer num = integer();
    if (accept('/')) {
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    return Scalar(Rational(num));
  }
};

// Rational enclosure lo <= sqrt(s) <= hi with denominator 2^bits.
std::pair<Rational, Rational> sqrt_enclosure(std::uint64_t s, unsigned bits) {
  if (s == 1) return {Rational(1), Rational(1)};
  Integer scaled = to_integer(s);
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational lo(root, den);
  Rational hi(Integer(root + 1), den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("radicand must be positive");
  std::uint64_t root = 1;
  std::uint64_t rest = r;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {rest, root};
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({1, Rational(value)});
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) terms_.push_back({1, value});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::sqrt_of(std::uint64_t r) {
  const auto [s, k] = square_free_split(r);
  Scalar out;
  out.terms_.push_back({s, Rational(to_integer(k))});
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  return LiteralParser(text).parse_all();
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].coeff == 1;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) {
    throw std::domain_error("scalar " + str() + " is not rational");
  }
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational Scalar::rational_part() const {
  if (!terms_.empty() && terms_[0].radicand == 1) return terms_[0].coeff;
  return Rational(0);
}

void Scalar::add_term(std::uint64_t radicand, const Rational& coeff) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), radicand,
      [](const Term& t, std::uint64_t r) { return t.radicand < r; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else if (coeff != 0) {
    terms_.insert(it, Term{radicand, coeff});
  }
}

void Scalar::canonicalize() {
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.terms_.size() == 1) {
    add_term(other.terms_[0].radicand, other.terms_[0].coeff);
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->radicand, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto [r, g] = radical_product(a.terms_[0].radicand,
                                        b.terms_[0].radicand);
    Rational c = a.terms_[0].coeff * b.terms_[0].coeff;
    if (g != 1) c *= Rational(to_integer(g));
    out.terms_.push_back({r, std::move(c)});
    return out;
  }
  std::map<std::uint64_t, Rational> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const auto [r, g] = radical_product(x.radicand, y.radicand);
      Rational c = x.coeff * y.coeff;
      if (g != 1) c *= Rational(to_integer(g));
      acc[r] += c;
    }
  }
  for (auto& [r, c] : acc) {
    if (c != 0) out.terms_.push_back({r, std::move(c)});
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

// Division solves b * x = a on the radical basis generated by the radicands
// of a and b: the set is closed under sqrt(s)*sqrt(t) and spans a field
// containing both, so multiplication by b is an invertible operator there.
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (b.is_rational()) {
    Scalar out = a;
    const Rational inv = 1 / b.terms_[0].coeff;
    for (auto& t : out.terms_) t.coeff *= inv;
    return out;
  }
  std::set<std::uint64_t> basis{1};
  for (const auto& t : a.terms_) basis.insert(t.radicand);
  for (const auto& t : b.terms_) basis.insert(t.radicand);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint64_t> cur(basis.begin(), basis.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i; j < cur.size(); ++j) {
        if (basis.insert(radical_product(cur[i], cur[j]).first).second) {
          grew = true;
        }
      }
    }
  }
  const std::vector<std::uint64_t> rad(basis.begin(), basis.end());
  const std::size_t n = rad.size();
  auto index_of = [&](std::uint64_t r) {
    return static_cast<std::size_t>(
        std::lower_bound(rad.begin(), rad.end(), r) - rad.begin());
  };
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& t : b.terms_) {
      const auto [r, g] = radical_product(rad[col], t.radicand);
      m[index_of(r)][col] += t.coeff * Rational(to_integer(g));
    }
  }
  std::vector<Rational> rhs(n);
  for (const auto& t : a.terms_) rhs[index_of(t.radicand)] = t.coeff;
  const std::vector<Rational> x = solve_rational(std::move(m), std::move(rhs));
  Scalar out;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0) out.terms_.push_back({rad[i], x[i]});
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  *this = *this / other;
  return *this;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].radicand != b.terms_[i].radicand ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Nonzero canonical values are provably nonzero (distinct square-free
// radicals are linearly independent), so refinement terminates.
int Scalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].coeff);
  for (unsigned bits = 16;; bits *= 2) {
    Rational lo = 0;
    Rational hi = 0;
    for (const auto& t : terms_) {
      const auto [l, h] = sqrt_enclosure(t.radicand, bits);
      if (t.coeff > 0) {
        lo += t.coeff * l;
        hi += t.coeff * h;
      } else {
        lo += t.coeff * h;
        hi += t.coeff * l;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double Scalar::to_double() const {
  double v = 0;
  for (const auto& t : terms_) {
    v += t.coeff.get_d() * std::sqrt(static_cast<double>(t.radicand));
  }
  return v;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.radicand == 1) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << '*';
      os << "sqrt(" << t.radicand << ')';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace nilsol
