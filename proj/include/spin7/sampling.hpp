#pragma once

#include "spin7/kform.hpp"

#include <cstdint>
#include <random>

namespace spin7 {

/// Deterministic source of small random rationals and forms. Uses only the
/// raw mt19937_64 stream (no std distributions), so the sequence is the same
/// on every standard library.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 5, long max_den = 4) {
    const long p = static_cast<long>(next(static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
    const long q = static_cast<long>(next(static_cast<std::uint64_t>(max_den))) + 1;
    return Rational(p, q);
  }

  Rational nonzero_rational(long max_num = 5, long max_den = 4) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Form of the given grade; each blade is populated with probability
  /// `density_percent` / 100.
  KForm form(int grade, unsigned density_percent = 50) {
    KForm f(grade);
    for (const auto &b : basis_blades(grade))
      if (next(100) < density_percent) f.add(b, rational());
    return f;
  }

  KForm nonzero_form(int grade, unsigned density_percent = 50) {
    for (;;) {
      KForm f = form(grade, density_percent);
      if (!f.is_zero()) return f;
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace spin7
