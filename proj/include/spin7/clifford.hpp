#pragma once

#include "spin7/kform.hpp"

#include <array>
#include <string_view>
#include <utility>

namespace spin7 {

inline constexpr std::size_t kSpinorDim = 16;

/// Element of the 16-dimensional real spinor space S = S+ (+) S-.
class Spinor {
public:
  Spinor() : coords_(kSpinorDim) {}
  explicit Spinor(RatVector coords) : coords_(std::move(coords)) {
    if (coords_.size() != kSpinorDim) throw Error("spinor must have 16 coordinates");
  }
  const RatVector &coords() const { return coords_; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return coords_.is_zero(); }
  Rational norm_sq() const { return coords_.norm_sq(); }

  Spinor &operator+=(const Spinor &o) { coords_ += o.coords_; return *this; }
  Spinor &operator-=(const Spinor &o) { coords_ -= o.coords_; return *this; }
  friend Spinor operator+(Spinor a, const Spinor &b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor &b) { return a -= b; }
  friend Spinor operator*(const Rational &c, const Spinor &s) { return Spinor(c * s.coords_); }
  friend bool operator==(const Spinor &, const Spinor &) = default;

private:
  RatVector coords_;
};

/// Exact 16x16 endomorphism of the spinor space.
class SpinorEndo {
public:
  SpinorEndo() : m_(kSpinorDim, kSpinorDim) {}
  explicit SpinorEndo(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() != kSpinorDim || m_.cols() != kSpinorDim) throw Error("spinor endomorphism must be 16x16");
  }
  static SpinorEndo identity() { return SpinorEndo(RatMatrix::identity(kSpinorDim)); }

  const RatMatrix &matrix() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }
  Rational trace() const { return m_.trace(); }

  SpinorEndo &operator+=(const SpinorEndo &o) { m_ += o.m_; return *this; }
  SpinorEndo &operator-=(const SpinorEndo &o) { m_ -= o.m_; return *this; }
  friend SpinorEndo operator+(SpinorEndo a, const SpinorEndo &b) { return a += b; }
  friend SpinorEndo operator-(SpinorEndo a, const SpinorEndo &b) { return a -= b; }
  friend SpinorEndo operator*(const Rational &c, SpinorEndo a) { return SpinorEndo(c * std::move(a.m_)); }
  friend SpinorEndo operator*(const SpinorEndo &a, const SpinorEndo &b) { return SpinorEndo(a.m_ * b.m_); }
  friend Spinor operator*(const SpinorEndo &a, const Spinor &s) { return Spinor(a.m_ * s.coords()); }
  friend bool operator==(const SpinorEndo &, const SpinorEndo &) = default;

private:
  RatMatrix m_;
};

inline SpinorEndo commutator(const SpinorEndo &a, const SpinorEndo &b) { return a * b - b * a; }
inline SpinorEndo anticommutator(const SpinorEndo &a, const SpinorEndo &b) { return a * b + b * a; }

namespace detail {

// Real 2x2 building blocks: 1 = identity, x = sigma_1, z = sigma_3,
// e = [[0, 1], [-1, 0]] (antisymmetric, e^2 = -1).
inline std::array<int, 4> pauli_block(char c) {
  switch (c) {
  case '1': return {1, 0, 0, 1};
  case 'x': return {0, 1, 1, 0};
  case 'z': return {1, 0, 0, -1};
  case 'e': return {0, 1, -1, 0};
  }
  throw Error("unknown tensor factor");
}

/// Kronecker product of four 2x2 blocks, first letter outermost.
inline RatMatrix tensor_word(std::string_view word, int sign = 1) {
  RatMatrix m(kSpinorDim, kSpinorDim);
  for (std::size_t r = 0; r < kSpinorDim; ++r)
    for (std::size_t c = 0; c < kSpinorDim; ++c) {
      int v = sign;
      for (std::size_t k = 0; k < 4 && v; ++k) {
        const std::size_t shift = 3 - k;
        const auto blk = pauli_block(word[k]);
        v *= blk[((r >> shift) & 1) * 2 + ((c >> shift) & 1)];
      }
      if (v) m(r, c) = v;
    }
  return m;
}

} // namespace detail

/// Real Clifford algebra Cl(8) with gamma_a^2 = +1, realized on R^16.
///
/// Generators come from iterated 2x2 tensor doubling. gamma_1..gamma_7 are
/// e (x) A_a, where the A_a are seven mutually anticommuting antisymmetric
/// 8x8 words with A_a^2 = -1; gamma_8 = -(x (x) 1 (x) 1 (x) 1):
///
///   a : 1     2     3     4     5     6     7     8
///       e11e  e1ex  exez  ezez  ee1z  eexx  eezx  -x111
///
/// Every generator is a symmetric signed permutation matrix. The chirality
/// gamma_1 ... gamma_8 is diag(+1 x 8, -1 x 8), so S+ is coordinates 0..7.
class GammaRep {
public:
  static constexpr std::array<std::string_view, 8> kGeneratorWords{"e11e", "e1ex", "exez", "ezez",
                                                                   "ee1z", "eexx", "eezx", "x111"};
  static constexpr std::array<int, 8> kGeneratorSigns{1, 1, 1, 1, 1, 1, 1, -1};

  GammaRep() {
    for (std::size_t a = 0; a < 8; ++a)
      generators_[a] = SpinorEndo(detail::tensor_word(kGeneratorWords[a], kGeneratorSigns[a]));
    for (unsigned mask = 0; mask < 256; ++mask) {
      SpinorEndo p = SpinorEndo::identity();
      for (int i = 0; i < kDim; ++i)
        if (mask & (1u << i)) p = p * generators_[static_cast<std::size_t>(i)];
      blades_[mask] = std::move(p);
    }
    chirality_ = blades_[255];
  }

  /// gamma_a for a in 1..8.
  const SpinorEndo &gamma(int a) const {
    if (a < 1 || a > kDim) throw Error("gamma index out of range");
    return generators_[static_cast<std::size_t>(a - 1)];
  }
  const std::array<SpinorEndo, 8> &generators() const { return generators_; }
  /// gamma_9 = gamma_1 ... gamma_8.
  const SpinorEndo &chirality() const { return chirality_; }
  /// gamma_{i1} ... gamma_{ik} for the blade's increasing index tuple.
  const SpinorEndo &blade(const Blade &b) const { return blades_[b.mask()]; }
  /// Clifford square of each generator (+1 here).
  static constexpr int square_sign() { return 1; }

private:
  std::array<SpinorEndo, 8> generators_;
  std::array<SpinorEndo, 256> blades_;
  SpinorEndo chirality_;
};

inline GammaRep build_gamma_rep() { return GammaRep(); }

/// Clifford action of a homogeneous form: sum over increasing tuples of
/// coefficient * gamma_{i1} ... gamma_{ik}.
inline SpinorEndo clifford_action(const KForm &omega, const GammaRep &rep) {
  if (omega.grade() < 0 || omega.grade() > kDim) throw Error("grade out of range for Clifford action");
  RatMatrix acc(kSpinorDim, kSpinorDim);
  for (const auto &[b, c] : omega.components()) {
    const RatMatrix &g = rep.blade(b).matrix();
    for (std::size_t i = 0; i < kSpinorDim; ++i)
      for (std::size_t j = 0; j < kSpinorDim; ++j)
        if (!g(i, j).is_zero()) acc(i, j) += c * g(i, j);
  }
  return SpinorEndo(std::move(acc));
}

/// (P+, P-) with P(+/-) = (I +/- gamma_9) / 2.
inline std::pair<SpinorEndo, SpinorEndo> chirality_projectors(const GammaRep &rep) {
  const SpinorEndo id = SpinorEndo::identity();
  const Rational half(1, 2);
  return {half * (id + rep.chirality()), half * (id - rep.chirality())};
}

enum class Chirality { positive, negative };

inline char chirality_symbol(Chirality c) { return c == Chirality::positive ? '+' : '-'; }

/// Basis of S+ or S-, as the +1 / -1 eigenvectors of gamma_9.
inline std::vector<RatVector> half_spinor_basis(const GammaRep &rep, Chirality c) {
  return eigenspace(rep.chirality().matrix(), c == Chirality::positive ? Rational(1) : Rational(-1));
}

/// Matrix of an endomorphism preserving a subspace, written in the given
/// basis of that subspace. Throws when the subspace is not invariant.
inline RatMatrix restrict_to(const RatMatrix &m, const std::vector<RatVector> &basis) {
  const RatMatrix b = RatMatrix::from_columns(basis, m.rows());
  const RatMatrix bt = b.transpose();
  const RatMatrix r = inverse(bt * b) * (bt * (m * b));
  if (!(b * r == m * b)) throw Error("subspace is not invariant under the endomorphism");
  return r;
}

} // namespace spin7
