#pragma once

#include "spin7/matrix.hpp"

#include <map>
#include <vector>

namespace spin7 {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  const Rational &leading() const { return coeffs_.back(); }

  Rational operator()(const Rational &x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Synthetic division by (x - root); the remainder must be zero.
  Polynomial deflate(const Rational &root) const {
    if (degree() < 1) throw Error("cannot deflate a constant polynomial");
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry;
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
      carry = coeffs_[k + 1] + carry * root;
      q[k] = carry;
    }
    if (!(coeffs_[0] + carry * root).is_zero()) throw Error("deflation by a non-root");
    return Polynomial(std::move(q));
  }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among I, M, M^2, ... (vectorized).
inline Polynomial minimal_polynomial(const RatMatrix &m) {
  if (!m.is_square()) throw Error("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  auto flatten = [n](const RatMatrix &a) {
    RatVector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a(i, j);
    return v;
  };
  std::vector<RatVector> powers{flatten(RatMatrix::identity(n))};
  RatMatrix current = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    powers.push_back(flatten(current));
    auto kernel = kernel_basis(RatMatrix::from_columns(powers, n * n));
    if (kernel.empty()) continue;
    // The first dependency is unique up to scale and has a nonzero top coefficient.
    const RatVector &c = kernel.front();
    std::vector<Rational> coeffs(c.entries().begin(), c.entries().end());
    const Rational lead = coeffs.back();
    for (auto &x : coeffs) x /= lead;
    return Polynomial(std::move(coeffs));
  }
  throw Error("minimal polynomial search exceeded the matrix dimension");
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace detail

/// All rational roots with multiplicity, by the rational root theorem on the
/// integer-scaled polynomial and repeated deflation. Sorted ascending.
inline std::map<Rational, int> rational_roots(Polynomial p) {
  std::map<Rational, int> roots;
  if (p.degree() < 0) throw Error("rational roots of the zero polynomial");
  while (p.degree() >= 1 && p.coefficients().front().is_zero()) {
    ++roots[Rational(0)];
    p = p.deflate(0);
  }
  while (p.degree() >= 1) {
    mpz_class lcm = 1;
    for (const auto &c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class a0 = (p.coefficients().front() * Rational(lcm, 1)).numerator();
    const mpz_class an = (p.leading() * Rational(lcm, 1)).numerator();
    bool found = false;
    for (const auto &num : detail::positive_divisors(a0)) {
      for (const auto &den : detail::positive_divisors(an)) {
        for (int s : {-1, 1}) {
          Rational cand(mpz_class(num * s), den);
          if (p(cand).is_zero()) {
            ++roots[cand];
            p = p.deflate(cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

struct Eigenvalue {
  Rational value;
  std::size_t multiplicity; ///< geometric multiplicity
  std::vector<RatVector> basis;
};

/// Rational eigen-decomposition of a square matrix. Throws when the
/// eigenvectors for rational eigenvalues do not span the whole space (an
/// irrational eigenvalue or a non-diagonalizable matrix).
inline std::vector<Eigenvalue> rational_eigendecomposition(const RatMatrix &m) {
  std::vector<Eigenvalue> out;
  std::size_t total = 0;
  for (const auto &[root, mult] : rational_roots(minimal_polynomial(m))) {
    (void)mult;
    auto basis = eigenspace(m, root);
    total += basis.size();
    out.push_back({root, basis.size(), std::move(basis)});
  }
  if (total != m.rows()) throw Error("rational eigenvalues do not exhaust the space");
  return out;
}

} // namespace spin7
