#ifndef PZETA_RATIONALITY_HPP
#define PZETA_RATIONALITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/groups.hpp"

namespace pzeta
{

// q-adic valuation.
unsigned v_q(Index const &n, std::uint64_t q);

enum class FactorKind
{
  Cyclic,
  Psl2
};

// Symbolic datum for one chief factor: the simple type (C_q or PSL(2,q)),
// the multiplicity r and the nonconstant coefficients b_n of its factor
// polynomial (constant term 1 implied).
struct FactorDescriptor
{
  std::int64_t id = 0;
  FactorKind kind = FactorKind::Cyclic;
  std::uint64_t q = 2;
  Psl2Variant variant = Psl2Variant::PSL;
  unsigned r = 1;
  std::map<Index, Integer> coeffs;

  // Throws InvalidParameter on a malformed descriptor: cyclic factors carry
  // at most one coefficient, negative, at q^r; PSL2 factors carry
  // coefficients at odd indices only on r-th powers.
  void validate() const;

  Integer b(Index const &n) const;
  DirichletPolynomial polynomial() const;
  std::string label() const;
};

// One component of an exponent sequence r_i.
struct ExponentFamily
{
  enum class Kind
  {
    Window,    // explicit finite window of an infinite family
    Constant,  // r repeated infinitely often
    Linear,    // r_i = a*i + b, i >= 1
    Geometric  // r_i = c * base^i, i >= 1
  };

  Kind kind = Kind::Window;
  std::vector<std::uint64_t> values; // Window
  std::uint64_t a = 0, b = 0;        // Constant uses a; Linear uses a, b
  std::uint64_t c = 1, base = 2;     // Geometric

  static ExponentFamily window(std::vector<std::uint64_t> values);
  static ExponentFamily constant(std::uint64_t r);
  static ExponentFamily linear(std::uint64_t a, std::uint64_t b);
  static ExponentFamily geometric(std::uint64_t c, std::uint64_t base);

  std::string describe() const;
};

// Verdict on the two finiteness hypotheses for a product of
// (1 - c_i / (q^r_i)^s):
//   (i)  every n is divisible by only finitely many r_i;
//   (ii) some prime t divides no r_i.
// Windows are read as samples of an infinite family, so a value repeated
// inside a window counts as repeated infinitely often; such verdicts are
// flagged window_relative.
struct SmlVerdict
{
  bool condition_i = true;
  std::optional<std::uint64_t> violated_at;
  bool condition_ii = false;
  std::optional<std::uint64_t> witness_t;
  bool window_relative = false;
  // Largest #{i : r_i | n} over window entries and n <= probe bound.
  std::uint64_t max_divisor_count = 0;
  std::uint64_t max_divisor_count_at = 1;
};

SmlVerdict sml_conditions(std::vector<ExponentFamily> const &families, std::uint64_t probe_bound = 1000);

enum class LambdaVariant
{
  Multiples,              // positive integers divisible by q
  OddMultiples,           // odd integers divisible by q
  OddMultiplesBoundedPrime // ... and no prime divisor larger than q
};

std::string to_string(LambdaVariant v);

bool in_lambda(Index const &n, std::uint64_t q, LambdaVariant variant);

struct ProductExperiment
{
  std::vector<FactorDescriptor> factors;
  std::uint64_t q = 2;
  LambdaVariant lambda = LambdaVariant::Multiples;
};

struct WExtraction
{
  Index w;
  std::vector<std::int64_t> i_star;
  // 1 + b_{i, w^r_i} / (w^r_i)^s for i in i_star, in factor order.
  std::vector<DirichletPolynomial> f_star;
};

// Throws HypothesisViolated when some b_{i,n} != 0 with n in Lambda is not
// an r_i-th power of valuation r_i, NoWitness when no coefficient lies in
// Lambda, InvalidParameter when q is not prime.
WExtraction extract_w(ProductExperiment const &exp);

struct ReplayReport
{
  std::uint64_t q = 0;
  std::optional<unsigned> r; // min r_i over PSL(2,q) factors

  // Finiteness-lemma quantities (Lambda: odd, divisible by q, no prime > q).
  std::vector<std::int64_t> lemma_i_star;
  std::optional<std::uint64_t> lemma_w;
  std::optional<Index> beta;
  std::optional<Integer> c_beta;
  bool beta_is_w_pow_r = false;

  // Theorem quantities (Lambda: odd, divisible by q), on the 2-projected
  // factors.
  std::optional<Index> w;
  std::vector<std::int64_t> i_star;
  std::vector<DirichletPolynomial> h_factors;
  // Coefficient of H(s) at w^(min r_i over I*), when within the bound.
  std::optional<Integer> h_leading;
  std::optional<Index> h_leading_index;
  bool characterization_holds = false;
  bool all_h_coefficients_negative = false;

  SmlVerdict sml;
  std::uint64_t bound = 0;
};

// Throws EmptyInput on an empty list, HypothesisViolated when the data does
// not have the shape required by the w-extraction.
ReplayReport replay_extraction(std::vector<FactorDescriptor> const &factors, std::uint64_t bound = 1'000'000);

struct PrimeSupport
{
  PrimeSet primes;
  bool lower_bound = false; // true for truncated input
};

PrimeSupport pi_of_series(DirichletPolynomial const &p);
PrimeSupport pi_of_series(TruncatedSeries const &s);

// Primes dividing |G| (the primes dividing the index of some subgroup).
PrimeSet pi_of_group(std::size_t order);

} // namespace pzeta

#endif // PZETA_RATIONALITY_HPP
