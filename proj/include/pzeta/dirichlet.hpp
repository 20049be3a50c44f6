#ifndef PZETA_DIRICHLET_HPP
#define PZETA_DIRICHLET_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pzeta/arith.hpp"

namespace pzeta
{

// A finitely supported formal Dirichlet series  sum_n a_n / n^s  with exact
// integer coefficients. Terms are kept in a sorted map with zero
// coefficients removed, so structural equality is mathematical equality.
class DirichletPolynomial
{
public:
  using Terms = std::map<Index, Integer>;

  DirichletPolynomial() = default;

  // Duplicate indices are summed; zero coefficients are dropped. Throws
  // InvalidParameter on an index < 1.
  DirichletPolynomial(std::initializer_list<std::pair<Index, Integer>> terms);
  explicit DirichletPolynomial(Terms terms);

  static DirichletPolynomial one();
  static DirichletPolynomial constant(Integer c);
  static DirichletPolynomial monomial(Index n, Integer c);

  Terms const &terms() const { return terms_; }
  Integer coeff(Index const &n) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  // Smallest / largest index with a nonzero coefficient. Zero polynomial has
  // neither.
  std::optional<Index> min_index() const;
  std::optional<Index> max_index() const;

  // Exact value of the series at the integer point s = k.
  Rational evaluate(unsigned k) const;

  // Text rendering, e.g. "1 - 1/2^s - 3/3^s + 3/6^s".
  std::string to_string() const;

  DirichletPolynomial operator-() const;

  friend bool operator==(DirichletPolynomial const &, DirichletPolynomial const &) = default;

private:
  void canonicalize();

  Terms terms_;
};

DirichletPolynomial add(DirichletPolynomial const &p, DirichletPolynomial const &q);
DirichletPolynomial sub(DirichletPolynomial const &p, DirichletPolynomial const &q);

// Dirichlet convolution: (pq)_n = sum_{de = n} p_d q_e.
DirichletPolynomial mul(DirichletPolynomial const &p, DirichletPolynomial const &q);

DirichletPolynomial operator+(DirichletPolynomial const &p, DirichletPolynomial const &q);
DirichletPolynomial operator-(DirichletPolynomial const &p, DirichletPolynomial const &q);
DirichletPolynomial operator*(DirichletPolynomial const &p, DirichletPolynomial const &q);

// Exact quotient q with d*q == p, found by ascending-index elimination. The
// quotient's support is limited to indices <= support_bound (default: the
// largest index of p). Throws ZeroDivisor for d == 0 and NotDivisible when no
// quotient exists under the bound.
DirichletPolynomial divide_exact(DirichletPolynomial const &p, DirichletPolynomial const &d,
                                 std::optional<Index> support_bound = std::nullopt);

// Drops every term whose index is divisible by a prime in pi. A ring
// endomorphism.
DirichletPolynomial project_pi(DirichletPolynomial const &p, PrimeSet const &pi);

// Substitution s -> r*s - r + 1: a_m/m^s becomes (a_m m^(r-1)) / (m^r)^s.
DirichletPolynomial shift_r(DirichletPolynomial const &p, unsigned r);

// Parses the rendering produced by to_string(); whitespace is ignored and a
// bare integer is a constant. Throws ParseError.
DirichletPolynomial parse_dirichlet(std::string_view text);

// Window onto a formal Dirichlet series: coefficients for indices 1..bound,
// every one of them exact.
class TruncatedSeries
{
public:
  using Terms = std::map<std::uint64_t, Integer>;

  explicit TruncatedSeries(std::uint64_t bound);
  TruncatedSeries(std::uint64_t bound, DirichletPolynomial const &p);

  std::uint64_t bound() const { return bound_; }
  Terms const &terms() const { return terms_; }

  // Throws InvalidParameter for n outside [1, bound].
  Integer coeff(std::uint64_t n) const;
  void set(std::uint64_t n, Integer c);

  DirichletPolynomial to_polynomial() const;
  std::string to_string() const;

  friend bool operator==(TruncatedSeries const &, TruncatedSeries const &) = default;

private:
  std::uint64_t bound_;
  Terms terms_;
};

// Both operands must share a bound.
TruncatedSeries mul(TruncatedSeries const &a, TruncatedSeries const &b);

// Exact coefficients of the product for indices <= bound. Throws
// FactorNotUnital if a factor's constant term is not 1.
TruncatedSeries product_truncated(std::vector<DirichletPolynomial> const &factors,
                                  std::uint64_t bound);

// Numerator over denominator, kept as a formal pair.
struct RationalSeries
{
  DirichletPolynomial numerator;
  DirichletPolynomial denominator;

  friend bool operator==(RationalSeries const &, RationalSeries const &) = default;
};

// Integer expansion of num/den up to bound by back substitution. Throws
// NonUnitDenominator unless den's constant term is +1 or -1.
TruncatedSeries expand_rational(RationalSeries const &f, std::uint64_t bound);

} // namespace pzeta

#endif // PZETA_DIRICHLET_HPP
