#pragma once

#include "spin7/spinor.hpp"

namespace spin7 {

/// Lee form of a locally conformal structure (d Phi = theta ^ Phi).
class LeeForm {
public:
  LeeForm() : theta_(1) {}
  explicit LeeForm(KForm theta) : theta_(std::move(theta)) {
    if (theta_.grade() != 1) throw Error("Lee form must be a 1-form");
  }
  const KForm &form() const { return theta_; }
  bool is_zero() const { return theta_.is_zero(); }

private:
  KForm theta_;
};

enum class TorsionSource { puhle_formula, ivanov_combiner };

struct TorsionData {
  KForm T{3};
  TorsionSource source;
  LeeForm lee;
};

/// T = -(7/6) *(theta ^ Phi).
inline TorsionData torsion_from_lee(const LeeForm &theta) {
  KForm T = Rational(-7, 6) * hodge_star(wedge(theta.form(), cayley_form()));
  return {std::move(T), TorsionSource::puhle_formula, theta};
}

/// T = -deltaPhi - (7/6) *(theta ^ Phi), with deltaPhi supplied by the caller.
inline TorsionData ivanov_torsion(const KForm &delta_phi, const LeeForm &theta) {
  if (delta_phi.grade() != 3) throw Error("ivanov_torsion expects deltaPhi of grade 3");
  KForm T = -delta_phi - Rational(7, 6) * hodge_star(wedge(theta.form(), cayley_form()));
  return {std::move(T), TorsionSource::ivanov_combiner, theta};
}

/// theta = (1/7) *(deltaPhi ^ Phi).
inline LeeForm lee_from_deltaPhi(const KForm &delta_phi) {
  if (delta_phi.grade() != 3) throw Error("lee_from_deltaPhi expects a 3-form");
  return LeeForm(Rational(1, 7) * hodge_star(wedge(delta_phi, cayley_form())));
}

/// Clifford action of the torsion on the singlet compared with theta . epsilon.
struct TorsionCliffordReport {
  bool proportional = false;   ///< T.eps = r theta.eps for some rational r
  Rational ratio;              ///< r (valid when proportional)
  Rational expected{-7, 6};
  bool conforms = false;       ///< r == expected
  Spinor torsion_side;         ///< T . eps
  Spinor reference_side;       ///< -(7/6) theta . eps
};

inline TorsionCliffordReport torsion_clifford_check(const LeeForm &theta, const SingletData &singlet,
                                                    const GammaRep &rep) {
  TorsionCliffordReport r;
  const TorsionData t = torsion_from_lee(theta);
  const Spinor theta_eps = clifford_action(theta.form(), rep) * singlet.epsilon;
  r.torsion_side = clifford_action(t.T, rep) * singlet.epsilon;
  r.reference_side = r.expected * theta_eps;
  if (theta_eps.is_zero()) {
    r.proportional = r.torsion_side.is_zero();
    r.conforms = r.proportional;
    return r;
  }
  if (auto c = proportionality(r.torsion_side.coords(), theta_eps.coords())) {
    r.proportional = true;
    r.ratio = *c;
    r.conforms = *c == r.expected;
  }
  return r;
}

/// Zeroth-order data of the t-family of twisted Dirac operators.
struct DiracZeroOrderSymbol {
  Rational t;
  SpinorEndo torsion_part; ///< -(7t/24) theta.
  SpinorEndo eigen_shift;  ///< -3 I - (7t/24) theta.
};

inline DiracZeroOrderSymbol torsion_operator(const LeeForm &theta, const Rational &t, const GammaRep &rep) {
  SpinorEndo torsion_part = (Rational(-7, 24) * t) * clifford_action(theta.form(), rep);
  SpinorEndo eigen_shift = Rational(-3) * SpinorEndo::identity() + torsion_part;
  return {t, std::move(torsion_part), std::move(eigen_shift)};
}

/// Checks that the t-dependent terms drop out of D_t - lambda(t).
///
/// Two residuals per t, both required to vanish:
///  - torsion_part - (eigen_shift + 3I) from a single torsion_operator call;
///  - [D_t - lambda(t)]_0 - 3I where the Dirac side is t * (1/4) * (-7/6) theta.
///    (torsion coupling times the Clifford constant of T on the parallel spinor)
///    and lambda(t) = -3I - (7t/24) theta. is assembled separately.
/// The Levi-Civita part has zero symbol on the flat model.
inline bool cancellation_check(const LeeForm &theta, std::span<const Rational> ts, const GammaRep &rep) {
  const SpinorEndo id = SpinorEndo::identity();
  const SpinorEndo theta_action = clifford_action(theta.form(), rep);
  const SpinorEndo levi_civita_symbol; // zero
  for (const auto &t : ts) {
    const DiracZeroOrderSymbol sym = torsion_operator(theta, t, rep);
    if (!(sym.torsion_part - (sym.eigen_shift + Rational(3) * id)).is_zero()) return false;

    const SpinorEndo dirac = levi_civita_symbol + t * (Rational(1, 4) * (Rational(-7, 6) * theta_action));
    const SpinorEndo lambda = Rational(-3) * id - (Rational(7, 24) * t) * theta_action;
    if (!((dirac - lambda) - Rational(3) * id).is_zero()) return false;
  }
  return true;
}

} // namespace spin7
