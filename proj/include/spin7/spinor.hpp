#pragma once

#include "spin7/cayley.hpp"
#include "spin7/clifford.hpp"
#include "spin7/polynomial.hpp"

#include <optional>

namespace spin7 {

struct EigenMultiplicity {
  Rational eigenvalue;
  std::size_t multiplicity;
  friend bool operator==(const EigenMultiplicity &, const EigenMultiplicity &) = default;
};

/// Spectrum of the Cayley form's Clifford action on each half-spinor space.
struct SpectrumReport {
  std::vector<EigenMultiplicity> positive; ///< on S+, eigenvalues ascending
  std::vector<EigenMultiplicity> negative; ///< on S-
  /// 1 / mu, rescaling the action so the singlet eigenvalue becomes +1.
  Rational normalization;

  const std::vector<EigenMultiplicity> &on(Chirality c) const {
    return c == Chirality::positive ? positive : negative;
  }
};

namespace detail {

inline std::vector<EigenMultiplicity> half_spectrum(const SpinorEndo &op, const GammaRep &rep, Chirality c) {
  const RatMatrix block = restrict_to(op.matrix(), half_spinor_basis(rep, c));
  std::vector<EigenMultiplicity> out;
  for (const auto &e : rational_eigendecomposition(block)) out.push_back({e.value, e.multiplicity});
  return out;
}

/// The unique multiplicity-1 eigenvalue across both halves, if any.
inline std::optional<std::pair<Chirality, Rational>> singlet_eigenvalue(const std::vector<EigenMultiplicity> &pos,
                                                                        const std::vector<EigenMultiplicity> &neg) {
  std::optional<std::pair<Chirality, Rational>> found;
  int count = 0;
  for (const auto &e : pos)
    if (e.multiplicity == 1) found = {Chirality::positive, e.eigenvalue}, ++count;
  for (const auto &e : neg)
    if (e.multiplicity == 1) found = {Chirality::negative, e.eigenvalue}, ++count;
  if (count != 1) return std::nullopt;
  return found;
}

} // namespace detail

/// Exact eigen-decomposition of the Cayley form's action restricted to S+ and
/// S-. Throws if the rational eigenvalues fail to exhaust either half, or if
/// no unique multiplicity-1 eigenvalue exists to normalize against.
inline SpectrumReport phi_spectrum(const GammaRep &rep) {
  const SpinorEndo phi = clifford_action(cayley_form(), rep);
  SpectrumReport r;
  r.positive = detail::half_spectrum(phi, rep, Chirality::positive);
  r.negative = detail::half_spectrum(phi, rep, Chirality::negative);
  auto singlet = detail::singlet_eigenvalue(r.positive, r.negative);
  if (!singlet || singlet->second.is_zero()) throw Error("Cayley action has no unique nonzero singlet eigenvalue");
  r.normalization = Rational(1) / singlet->second;
  return r;
}

/// The Spin(7)-invariant spinor.
struct SingletData {
  Spinor epsilon;      ///< first nonzero coordinate is 1
  Chirality chirality;
  Rational mu;         ///< clifford_action(Phi) epsilon = mu epsilon
};

inline SingletData extract_singlet(const GammaRep &rep) {
  const SpectrumReport spec = phi_spectrum(rep);
  auto singlet = detail::singlet_eigenvalue(spec.positive, spec.negative);
  if (!singlet) throw Error("no multiplicity-1 eigenvalue in the Cayley spectrum");
  const auto [chir, mu] = *singlet;
  const auto basis = half_spinor_basis(rep, chir);
  const SpinorEndo phi = clifford_action(cayley_form(), rep);
  const auto coeffs = eigenspace(restrict_to(phi.matrix(), basis), mu);
  if (coeffs.size() != 1) throw Error("singlet eigenspace is not one-dimensional");
  RatVector v(kSpinorDim);
  for (std::size_t k = 0; k < basis.size(); ++k) v += coeffs.front()[k] * basis[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      v *= Rational(1) / v[i];
      break;
    }
  return {Spinor(std::move(v)), chir, mu};
}

/// a . epsilon for a 1-form a; lands in the half-space opposite to epsilon.
inline Spinor triality(const KForm &a, const SingletData &singlet, const GammaRep &rep) {
  if (a.grade() != 1) throw Error("triality expects a 1-form");
  return clifford_action(a, rep) * singlet.epsilon;
}

struct InstantonCheck {
  bool pi7_vanishes;
  bool spinor_annihilates;
};

/// Evaluates the projection and the spinorial forms of the instanton
/// condition independently.
inline InstantonCheck instanton_check(const KForm &F, const SingletData &singlet, const GammaRep &rep) {
  if (F.grade() != 2) throw Error("instanton_check expects a 2-form");
  return {project2(F, Lambda2Part::seven).is_zero(), (clifford_action(F, rep) * singlet.epsilon).is_zero()};
}

/// 16x28 matrix of F -> F . epsilon on 2-forms (lexicographic basis).
inline RatMatrix two_form_spinor_map(const SingletData &singlet, const GammaRep &rep) {
  const auto blades = basis_blades(2);
  std::vector<RatVector> cols;
  for (const auto &b : blades) cols.push_back((rep.blade(b) * singlet.epsilon).coords());
  return RatMatrix::from_columns(cols, kSpinorDim);
}

/// c_p with sum_j gamma_j (omega .) gamma_j = c_p (omega .) for every basis
/// blade omega of grade p. Throws when some blade gives a different constant.
inline Rational weitzenbock_constant(int p, const GammaRep &rep) {
  if (p < 0 || p > 4) throw Error("weitzenbock_constant expects 0 <= p <= 4");
  std::optional<Rational> c;
  for (const auto &b : basis_blades(p)) {
    const SpinorEndo &w = rep.blade(b);
    SpinorEndo sum;
    for (const auto &g : rep.generators()) sum += g * w * g;
    auto ratio = proportionality(sum.matrix(), w.matrix());
    if (!ratio) throw Error("Clifford contraction is not a multiple of the blade");
    if (c && *c != *ratio) throw Error("Clifford contraction constant depends on the blade");
    c = ratio;
  }
  return *c;
}

/// Results of the Cayley contraction identities on the singlet.
struct AppendixReport {
  /// N with sum_{b,c,d} Phi_abcd gamma_b gamma_c gamma_d = 3 N [gamma_a, Phi.]
  /// for every a (full antisymmetric sum).
  Rational contraction_normalization;
  bool contraction_residual_zero = false;
  /// kappa with sum_{b,c,d} Phi_abcd gamma_b gamma_c gamma_d epsilon = kappa gamma_a epsilon.
  Rational kappa;
  Rational kappa_over_mu;
  /// Eigenvalue of Phi. on the 7-dimensional complement of epsilon inside
  /// its own half-spinor space, raw and rescaled by 1/mu.
  Rational seven_eigenvalue_raw;
  Rational seven_eigenvalue_normalized;
  /// Eigenvalue of Phi. on gamma_a epsilon (opposite half), raw and rescaled.
  Rational gamma_eps_eigenvalue_raw;
  Rational gamma_eps_eigenvalue_normalized;
  /// 3 (x - y) with the literal inputs x = 1, y = -1/7.
  Rational chain_value;
  /// 3 (x - y) with x = 1 and y the measured normalized eigenvalue on gamma_a epsilon.
  Rational chain_value_measured;
};

namespace detail {

/// Fully antisymmetric component Phi_abcd (indices 1..8).
inline Rational phi_component(int a, int b, int c, int d) {
  std::vector<int> idx{a, b, c, d};
  int sign = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return Rational();
      if (idx[i] > idx[j]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  return Rational(sign) * cayley_form().coefficient(idx);
}

/// Eigenvalue of op on v when v is an eigenvector; nullopt otherwise.
inline std::optional<Rational> eigenvalue_on(const SpinorEndo &op, const Spinor &v) {
  return proportionality((op * v).coords(), v.coords());
}

} // namespace detail

inline AppendixReport appendix_identity_suite(const SingletData &singlet, const GammaRep &rep) {
  AppendixReport r;
  const SpinorEndo phi = clifford_action(cayley_form(), rep);

  std::vector<SpinorEndo> contraction(kDim);
  for (int a = 1; a <= kDim; ++a)
    for (int b = 1; b <= kDim; ++b)
      for (int c = 1; c <= kDim; ++c)
        for (int d = 1; d <= kDim; ++d) {
          const Rational coeff = detail::phi_component(a, b, c, d);
          if (!coeff.is_zero())
            contraction[static_cast<std::size_t>(a - 1)] += coeff * (rep.gamma(b) * rep.gamma(c) * rep.gamma(d));
        }

  // N is read off at a = 1 and then checked as an exact residual for every a.
  const auto norm = proportionality(contraction[0].matrix(), (Rational(3) * commutator(rep.gamma(1), phi)).matrix());
  bool residual_zero = norm.has_value();
  std::optional<Rational> kappa, gamma_eig;
  for (int a = 1; a <= kDim; ++a) {
    const SpinorEndo &lhs = contraction[static_cast<std::size_t>(a - 1)];
    if (norm) residual_zero = residual_zero && (lhs - (Rational(3) * *norm) * commutator(rep.gamma(a), phi)).is_zero();

    const Spinor gamma_eps = rep.gamma(a) * singlet.epsilon;
    auto k = proportionality((lhs * singlet.epsilon).coords(), gamma_eps.coords());
    if (!k) throw Error("contraction applied to the singlet is not proportional to gamma_a epsilon");
    if (kappa && *kappa != *k) throw Error("contraction constant kappa depends on the index a");
    kappa = k;

    auto g = detail::eigenvalue_on(phi, gamma_eps);
    if (!g) throw Error("gamma_a epsilon is not an eigenvector of the Cayley action");
    if (gamma_eig && *gamma_eig != *g) throw Error("Cayley eigenvalue on gamma_a epsilon depends on a");
    gamma_eig = g;
  }
  r.contraction_normalization = norm.value_or(Rational());
  r.contraction_residual_zero = residual_zero;
  r.kappa = *kappa;
  r.kappa_over_mu = *kappa / singlet.mu;

  const SpectrumReport spec = phi_spectrum(rep);
  std::optional<Rational> seven;
  for (const auto &e : spec.on(singlet.chirality))
    if (e.multiplicity == 7) seven = e.eigenvalue;
  if (!seven) throw Error("no 7-dimensional eigenspace beside the singlet");
  r.seven_eigenvalue_raw = *seven;
  r.seven_eigenvalue_normalized = *seven * spec.normalization;
  r.gamma_eps_eigenvalue_raw = *gamma_eig;
  r.gamma_eps_eigenvalue_normalized = *gamma_eig * spec.normalization;

  auto chain = [](const Rational &x, const Rational &y) { return Rational(3) * (x - y); };
  r.chain_value = chain(1, Rational(-1, 7));
  r.chain_value_measured = chain(1, r.gamma_eps_eigenvalue_normalized);
  return r;
}

} // namespace spin7
