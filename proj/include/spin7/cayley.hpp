#pragma once

#include "spin7/kform.hpp"

namespace spin7 {

/// The Cayley 4-form on R^8:
///   dx1234 + dx1256 + dx1278 + dx1357 - dx1368 - dx1458 - dx1467
/// - dx2358 - dx2367 - dx2457 + dx2468 + dx3456 + dx3478 + dx5678
inline const KForm &cayley_form() {
  static const KForm phi = [] {
    static const struct {
      std::vector<int> idx;
      int sign;
    } terms[] = {
        {{1, 2, 3, 4}, 1},  {{1, 2, 5, 6}, 1},  {{1, 2, 7, 8}, 1},  {{1, 3, 5, 7}, 1},  {{1, 3, 6, 8}, -1},
        {{1, 4, 5, 8}, -1}, {{1, 4, 6, 7}, -1}, {{2, 3, 5, 8}, -1}, {{2, 3, 6, 7}, -1}, {{2, 4, 5, 7}, -1},
        {{2, 4, 6, 8}, 1},  {{3, 4, 5, 6}, 1},  {{3, 4, 7, 8}, 1},  {{5, 6, 7, 8}, 1},
    };
    KForm f(4);
    for (const auto &t : terms) f += KForm::blade(t.idx, t.sign);
    return f;
  }();
  return phi;
}

/// L(a) = *(a ^ Phi) on 2-forms.
inline KForm lambda2_operator(const KForm &alpha) {
  if (alpha.grade() != 2) throw Error("lambda2_operator expects a 2-form");
  return hodge_star(wedge(alpha, cayley_form()));
}

/// J(theta) = *(theta ^ Phi), the embedding of 1-forms into 3-forms.
inline KForm lambda3_embedding(const KForm &theta) {
  if (theta.grade() != 1) throw Error("lambda3_embedding expects a 1-form");
  return hodge_star(wedge(theta, cayley_form()));
}

enum class Lambda2Part { seven = 7, twenty_one = 21 };
enum class Lambda3Part { eight = 8, forty_eight = 48 };

/// Spectral splitting of 2-forms by L, with eigenvalues +3 on the 7-dimensional
/// part and -1 on the 21-dimensional part. Matrices are in the lexicographic
/// blade basis of grade 2 (28x28).
struct Lambda2Split {
  RatMatrix L;
  RatMatrix pi7;  ///< (L + I) / 4
  RatMatrix pi21; ///< (3I - L) / 4
  Rational seven_eigenvalue{3};
  Rational twenty_one_eigenvalue{-1};

  static Lambda2Split build() {
    Lambda2Split s;
    s.L = linear_map_matrix(2, 2, lambda2_operator);
    const RatMatrix id = RatMatrix::identity(s.L.rows());
    const Rational quarter(1, 4);
    s.pi7 = quarter * (s.L + id);
    s.pi21 = quarter * (Rational(3) * id - s.L);
    return s;
  }
};

inline const Lambda2Split &lambda2_projectors() {
  static const Lambda2Split split = Lambda2Split::build();
  return split;
}

inline KForm project2(const KForm &alpha, Lambda2Part which) {
  if (alpha.grade() != 2) throw Error("project2 expects a 2-form");
  const auto &s = lambda2_projectors();
  const RatMatrix &p = which == Lambda2Part::seven ? s.pi7 : s.pi21;
  return KForm::from_vector(2, p * alpha.to_vector());
}

/// Orthogonal splitting of 3-forms into the image of J (8-dimensional) and
/// its complement (48-dimensional). Matrices are 56x56 in the lexicographic
/// grade-3 basis; `J` is 56x8.
struct Lambda3Split {
  RatMatrix J;
  RatMatrix gram;       ///< J^T J, computed
  Rational gram_scalar; ///< c with J^T J = c I
  RatMatrix pi8;        ///< J (J^T J)^{-1} J^T
  RatMatrix pi48;       ///< I - pi8

  static Lambda3Split build() {
    Lambda3Split s;
    s.J = linear_map_matrix(1, 3, lambda3_embedding);
    const RatMatrix jt = s.J.transpose();
    s.gram = jt * s.J;
    auto c = proportionality(s.gram, RatMatrix::identity(s.gram.rows()));
    if (!c || c->sign() <= 0) throw Error("J^T J is not a positive multiple of the identity");
    s.gram_scalar = *c;
    s.pi8 = s.J * (inverse(s.gram) * jt);
    s.pi48 = RatMatrix::identity(s.pi8.rows()) - s.pi8;
    return s;
  }
};

inline const Lambda3Split &lambda3_projectors() {
  static const Lambda3Split split = Lambda3Split::build();
  return split;
}

inline KForm project3(const KForm &beta, Lambda3Part which) {
  if (beta.grade() != 3) throw Error("project3 expects a 3-form");
  const auto &s = lambda3_projectors();
  const RatMatrix &p = which == Lambda3Part::eight ? s.pi8 : s.pi48;
  return KForm::from_vector(3, p * beta.to_vector());
}

} // namespace spin7
