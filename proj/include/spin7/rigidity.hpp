#pragma once

#include "spin7/kform.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace spin7 {

/// Homogeneous example described by its pointwise invariants.
struct GeometryRecord {
  std::string name;
  Rational theta_norm_sq;  ///< |theta|^2
  Rational torsion_norm_sq; ///< |T|^2
  Rational delta_theta;
  std::optional<Rational> expected_scal;
};

struct RigidityVerdict {
  Rational scal;
  Rational lambda_L;
  Rational threshold; ///< 9 - scal / 4
  Rational margin;    ///< lambda_L - threshold
  bool rigid;         ///< margin > 0
};

struct CharClassData {
  long p1_sq;
  long p2;
  long euler;
};

/// Scal = (49/18)|theta|^2 - (1/12)|T|^2 + (7/2) delta theta.
inline Rational scalar_curvature(const Rational &theta_sq, const Rational &torsion_sq, const Rational &delta_theta) {
  if (theta_sq.sign() < 0 || torsion_sq.sign() < 0) throw Error("squared norms must be non-negative");
  return Rational(49, 18) * theta_sq - Rational(1, 12) * torsion_sq + Rational(7, 2) * delta_theta;
}

/// Rigid iff lambda_L > 9 - Scal/4, strictly.
inline RigidityVerdict rigidity_verdict(const Rational &lambda_L, const Rational &scal) {
  const Rational threshold = Rational(9) - scal / Rational(4);
  const Rational margin = lambda_L - threshold;
  return {scal, lambda_L, threshold, margin, margin.sign() > 0};
}

/// Scalar curvature above which the flat connection (lambda_L = 0) is rigid.
inline Rational flat_instanton_threshold() {
  // 0 > 9 - s/4  <=>  s > 36
  const Rational s = Rational(4) * Rational(9);
  if (rigidity_verdict(0, s).rigid || !rigidity_verdict(0, s + Rational(1, 1000)).rigid)
    throw Error("flat threshold inconsistent with rigidity_verdict");
  return s;
}

inline std::vector<GeometryRecord> catalog() {
  return {
      {"SU(3)", 6, 42, 0, Rational(77, 6)},
      {"Sp(2)/T^2", 6, 24, 0, Rational(43, 3)},
  };
}

inline RigidityVerdict flat_verdict(const GeometryRecord &g) {
  return rigidity_verdict(0, scalar_curvature(g.theta_norm_sq, g.torsion_norm_sq, g.delta_theta));
}

enum class OrientationSign { plus, minus };

/// p1^2 - 4 p2 (+/-) 8 chi == 0
inline bool admissibility(const CharClassData &c, OrientationSign sign) {
  const long s = sign == OrientationSign::plus ? 1 : -1;
  return c.p1_sq - 4 * c.p2 + s * 8 * c.euler == 0;
}

/// One record per line: `name theta_sq torsion_sq delta_theta [expected_scal]`.
/// '#' comments and blank lines are skipped.
inline std::vector<GeometryRecord> parse_catalog(std::istream &in) {
  std::vector<GeometryRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.size() != 4 && tok.size() != 5) throw ParseError(lineno, "expected 'name theta_sq torsion_sq delta_theta [expected_scal]'");
    try {
      GeometryRecord g{tok[0], Rational::parse(tok[1]), Rational::parse(tok[2]), Rational::parse(tok[3]), std::nullopt};
      if (tok.size() == 5) g.expected_scal = Rational::parse(tok[4]);
      if (g.theta_norm_sq.sign() < 0 || g.torsion_norm_sq.sign() < 0)
        throw Error("squared norms must be non-negative");
      out.push_back(std::move(g));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

} // namespace spin7
