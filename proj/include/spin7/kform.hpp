#pragma once

#include "spin7/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace spin7 {

inline constexpr int kDim = 8;

/// Basis blade dx^{i1} ^ ... ^ dx^{ik} on R^8, 1 <= i1 < ... < ik <= 8,
/// stored as a bitmask (bit i-1 set for index i).
class Blade {
public:
  constexpr Blade() = default;
  explicit constexpr Blade(std::uint16_t mask) : mask_(mask) {
    if (mask >= (1u << kDim)) throw Error("blade index out of range");
  }
  /// From indices in 1..8; they must be strictly increasing.
  static Blade from_indices(const std::vector<int> &idx) {
    std::uint16_t m = 0;
    int prev = 0;
    for (int i : idx) {
      if (i < 1 || i > kDim) throw Error("blade index " + std::to_string(i) + " out of range 1..8");
      if (i <= prev) throw Error("blade indices must be strictly increasing");
      m |= static_cast<std::uint16_t>(1u << (i - 1));
      prev = i;
    }
    return Blade(m);
  }

  constexpr std::uint16_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  std::vector<int> indices() const {
    std::vector<int> r;
    for (int i = 0; i < kDim; ++i)
      if (mask_ & (1u << i)) r.push_back(i + 1);
    return r;
  }
  Blade complement() const { return Blade(static_cast<std::uint16_t>(~mask_ & 0xFF)); }

  /// Lexicographic on the index tuple, so serialized forms list components
  /// in dictionary order.
  friend bool operator<(const Blade &a, const Blade &b) { return a.indices() < b.indices(); }
  friend bool operator==(const Blade &, const Blade &) = default;

private:
  std::uint16_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation a ++ b of two disjoint
/// blades: (-1)^{#{(i, j) : i in a, j in b, i > j}}.
inline int concat_sign(Blade a, Blade b) {
  int inversions = 0;
  for (int j : b.indices())
    inversions += std::popcount(static_cast<unsigned>(a.mask() >> j));
  return inversions % 2 ? -1 : 1;
}

/// All blades of grade k in lexicographic order; this order fixes the
/// coordinates of a k-form as a vector.
inline std::vector<Blade> basis_blades(int k) {
  if (k < 0 || k > kDim) throw Error("grade out of range");
  std::vector<Blade> out;
  for (unsigned m = 0; m < (1u << kDim); ++m)
    if (std::popcount(m) == k) out.emplace_back(static_cast<std::uint16_t>(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t binomial8(int k) { return basis_blades(k).size(); }

/// Homogeneous exterior form of a fixed grade with rational coefficients.
/// Zero coefficients are never stored.
class KForm {
public:
  explicit KForm(int grade = 0) : grade_(grade) {
    if (grade < 0 || grade > kDim) throw Error("grade " + std::to_string(grade) + " out of range 0..8");
  }

  static KForm scalar(const Rational &c) {
    KForm f(0);
    f.add(Blade(), c);
    return f;
  }
  static KForm blade(const std::vector<int> &idx, const Rational &c = 1) {
    Blade b = Blade::from_indices(idx);
    KForm f(b.grade());
    f.add(b, c);
    return f;
  }
  /// dx^i
  static KForm dx(int i) { return blade({i}); }
  static KForm volume() { return blade({1, 2, 3, 4, 5, 6, 7, 8}); }

  static KForm from_vector(int grade, const RatVector &v) {
    auto blades = basis_blades(grade);
    if (v.size() != blades.size()) throw Error("coordinate vector has wrong length for grade");
    KForm f(grade);
    for (std::size_t i = 0; i < blades.size(); ++i) f.add(blades[i], v[i]);
    return f;
  }

  int grade() const { return grade_; }
  const std::map<Blade, Rational> &components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool is_zero() const { return components_.empty(); }

  Rational coefficient(const Blade &b) const {
    auto it = components_.find(b);
    return it == components_.end() ? Rational() : it->second;
  }
  Rational coefficient(const std::vector<int> &idx) const { return coefficient(Blade::from_indices(idx)); }

  /// Accumulates c into the coefficient of b.
  void add(const Blade &b, const Rational &c) {
    if (b.grade() != grade_) throw Error("blade grade does not match form grade");
    if (c.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  RatVector to_vector() const {
    auto blades = basis_blades(grade_);
    RatVector v(blades.size());
    for (std::size_t i = 0; i < blades.size(); ++i) v[i] = coefficient(blades[i]);
    return v;
  }

  /// Euclidean inner product with orthonormal blades.
  Rational inner(const KForm &o) const {
    if (o.grade_ != grade_) return Rational();
    Rational s;
    for (const auto &[b, c] : components_) s += c * o.coefficient(b);
    return s;
  }
  Rational norm_sq() const { return inner(*this); }

  KForm &operator+=(const KForm &o) {
    require_grade(o);
    for (const auto &[b, c] : o.components_) add(b, c);
    return *this;
  }
  KForm &operator-=(const KForm &o) {
    require_grade(o);
    for (const auto &[b, c] : o.components_) add(b, -c);
    return *this;
  }
  KForm &operator*=(const Rational &c) {
    if (c.is_zero()) {
      components_.clear();
      return *this;
    }
    for (auto &[b, x] : components_) x *= c;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm &b) { return a += b; }
  friend KForm operator-(KForm a, const KForm &b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= Rational(-1); }
  friend KForm operator*(const Rational &c, KForm a) { return a *= c; }
  friend bool operator==(const KForm &, const KForm &) = default;

private:
  void require_grade(const KForm &o) const {
    if (o.grade_ != grade_) throw Error("grade mismatch in form arithmetic");
  }
  int grade_;
  std::map<Blade, Rational> components_;
};

inline KForm wedge(const KForm &a, const KForm &b) {
  if (a.grade() + b.grade() > kDim) throw Error("wedge product exceeds grade 8");
  KForm out(a.grade() + b.grade());
  for (const auto &[ba, ca] : a.components())
    for (const auto &[bb, cb] : b.components()) {
      if (ba.mask() & bb.mask()) continue;
      Blade joined(static_cast<std::uint16_t>(ba.mask() | bb.mask()));
      out.add(joined, Rational(concat_sign(ba, bb)) * ca * cb);
    }
  return out;
}

/// Euclidean Hodge star for orientation dx^1 ^ ... ^ dx^8, defined by
/// a ^ *b = <a, b> vol.
inline KForm hodge_star(const KForm &f) {
  KForm out(kDim - f.grade());
  for (const auto &[b, c] : f.components()) {
    Blade comp = b.complement();
    out.add(comp, Rational(concat_sign(b, comp)) * c);
  }
  return out;
}

/// Matrix of a linear map between graded form spaces in the lexicographic
/// blade bases; column j is the image of the j-th basis blade.
template <class Map>
RatMatrix linear_map_matrix(int from_grade, int to_grade, Map &&map) {
  auto src = basis_blades(from_grade);
  auto dst = basis_blades(to_grade);
  RatMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    KForm e(from_grade);
    e.add(src[j], 1);
    KForm img = map(e);
    if (img.grade() != to_grade) throw Error("linear map produced unexpected grade");
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = img.coefficient(dst[i]);
  }
  return m;
}

// Text format:
//   grade k
//   i1 i2 ... ik  p/q
// Lines starting with '#' and blank lines are ignored.

inline std::string format_kform(const KForm &f) {
  std::ostringstream os;
  os << "grade " << f.grade() << "\n";
  for (const auto &[b, c] : f.components()) {
    auto idx = b.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
    os << (idx.empty() ? "" : "  ") << c.str() << "\n";
  }
  return os.str();
}

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

inline KForm parse_kform(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<KForm> form;
  std::set<std::uint16_t> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!form) {
      if (tokens.size() != 2 || tokens[0] != "grade") throw ParseError(lineno, "expected 'grade k' header");
      int k = -1;
      try {
        std::size_t used = 0;
        k = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) k = -1;
      } catch (const std::exception &) {
        k = -1;
      }
      if (k < 0 || k > kDim) throw ParseError(lineno, "grade must be an integer in 0..8");
      form.emplace(k);
      continue;
    }
    const int k = form->grade();
    if (tokens.size() != static_cast<std::size_t>(k) + 1)
      throw ParseError(lineno, "expected " + std::to_string(k) + " indices and a coefficient");
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) {
      const auto &t = tokens[static_cast<std::size_t>(i)];
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, "malformed index '" + t + "'");
      idx.push_back(std::stoi(t));
    }
    try {
      Blade b = Blade::from_indices(idx);
      if (!seen.insert(b.mask()).second) throw ParseError(lineno, "duplicate component");
      form->add(b, Rational::parse(tokens.back()));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!form) throw ParseError(lineno, "missing 'grade k' header");
  return *form;
}

inline KForm parse_kform(const std::string &text) {
  std::istringstream in(text);
  return parse_kform(in);
}

} // namespace spin7
