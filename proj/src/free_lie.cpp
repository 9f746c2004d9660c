#include "nilsol/free_lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilsol {

namespace {

using Word = std::vector<int>;
using AssocPoly = std::map<Word, Integer>;

// Duval's algorithm: Lyndon words of length <= n in lexicographic order.
std::vector<Word> lyndon_words(int m, std::size_t n) {
  std::vector<Word> out;
  Word w{-1};
  while (!w.empty()) {
    ++w.back();
    out.push_back(w);
    const std::size_t len = w.size();
    while (w.size() < n) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) {
      return false;
    }
  }
  return true;
}

AssocPoly product(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, x] : a) {
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += x * y;
    }
  }
  return out;
}

void add_scaled(AssocPoly& acc, const AssocPoly& a, const Integer& f) {
  for (const auto& [w, x] : a) {
    auto& slot = acc[w];
    slot += f * x;
    if (slot == 0) acc.erase(w);
  }
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out = product(a, b);
  add_scaled(out, product(b, a), Integer(-1));
  return out;
}

}  // namespace

std::size_t witt_dimension(std::size_t m, std::size_t k) {
  auto mobius = [](std::size_t d) {
    int s = 1;
    for (std::size_t f = 2; f * f <= d; ++f) {
      if (d % f == 0) {
        d /= f;
        if (d % f == 0) return 0;
        s = -s;
      }
    }
    return d > 1 ? -s : s;
  };
  Integer sum = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), m, k / d);
    sum += mobius(d) * pw;
  }
  return Integer(sum / static_cast<unsigned long>(k)).get_ui();
}

Matrix HallBasis::canonical_derivation() const {
  Vector d;
  for (auto k : degrees) d.push_back(Scalar(static_cast<long>(k)));
  return Matrix::diagonal(d);
}

Scalar HallBasis::c_hat() const {
  long tr = 0;
  long tr2 = 0;
  for (auto k : degrees) {
    tr += static_cast<long>(k);
    tr2 += static_cast<long>(k * k);
  }
  return Scalar::rational(tr, tr2);
}

FreeNilpotent free_nilpotent(std::size_t m, std::size_t p) {
  if (m < 2 || p < 1) throw std::invalid_argument("free_nilpotent needs m >= 2, p >= 1");
  std::size_t total = 0;
  for (std::size_t k = 1; k <= p; ++k) {
    total += witt_dimension(m, k);
    if (total > 200) throw std::invalid_argument("free nilpotent algebra exceeds dim 200");
  }

  FreeNilpotent out;
  HallBasis& h = out.hall;
  h.m = m;
  h.p = p;
  h.words = lyndon_words(static_cast<int>(m), p);
  std::stable_sort(h.words.begin(), h.words.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < h.words.size(); ++i) {
    index[h.words[i]] = i;
    h.degrees.push_back(h.words[i].size());
  }
  h.degree_dims.assign(p, 0);
  for (auto k : h.degrees) ++h.degree_dims[k - 1];

  // Standard bracketing: w = uv with v the longest proper Lyndon suffix.
  std::vector<AssocPoly> expansion(h.words.size());
  for (std::size_t i = 0; i < h.words.size(); ++i) {
    const Word& w = h.words[i];
    if (w.size() == 1) {
      expansion[i][w] = 1;
      continue;
    }
    for (std::size_t s = 1; s < w.size(); ++s) {
      const Word v(w.begin() + s, w.end());
      if (!is_lyndon(v)) continue;
      const Word u(w.begin(), w.begin() + s);
      expansion[i] = commutator(expansion[index.at(u)], expansion[index.at(v)]);
      break;
    }
  }

  // The smallest word of a Lie polynomial is Lyndon, and P_w has smallest
  // word w, so peeling off minimal words decomposes in the basis.
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < h.words.size(); ++i) {
    for (std::size_t j = i + 1; j < h.words.size(); ++j) {
      if (h.degrees[i] + h.degrees[j] > p) continue;
      AssocPoly poly = commutator(expansion[i], expansion[j]);
      while (!poly.empty()) {
        const auto [w, c] = *poly.begin();
        const auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("minimal word is not Lyndon");
        entries.push_back({i, j, it->second, Scalar(Rational(c))});
        add_scaled(poly, expansion[it->second], Integer(-c));
      }
    }
  }

  std::vector<std::string> labels;
  for (const auto& w : h.words) {
    std::string s = "x";
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (m > 9 && t > 0) s += "_";
      s += std::to_string(w[t] + 1);
    }
    labels.push_back(s);
  }
  out.algebra = LieAlgebra::build(h.words.size(), entries, labels, true);
  return out;
}

}  // namespace nilsol
