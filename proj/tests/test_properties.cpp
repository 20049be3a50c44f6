#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/io.hpp"
#include "pzeta/rationality.hpp"

using namespace pzeta;

namespace
{

constexpr int cases = 1000;

PrimeSet random_primes(std::mt19937_64 &rng)
{
  static constexpr std::uint64_t pool[] = {2, 3, 5, 7, 11, 13};
  PrimeSet out;
  for (auto p : pool)
    if (rng() % 3 == 0)
      out.insert(p);
  return out;
}

bool subset(PrimeSet const &a, PrimeSet const &b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace

TEST_CASE("pi projection is a ring endomorphism")
{
  std::mt19937_64 rng(101);
  for (int i = 0; i < cases; ++i) {
    auto const p = oracle::random_polynomial(rng, 8, 60, 20, false);
    auto const q = oracle::random_polynomial(rng, 8, 60, 20, false);
    auto const pi = random_primes(rng);
    REQUIRE(project_pi(p * q, pi) == project_pi(p, pi) * project_pi(q, pi));
    REQUIRE(project_pi(p + q, pi) == project_pi(p, pi) + project_pi(q, pi));
    REQUIRE(project_pi(project_pi(p, pi), pi) == project_pi(p, pi));
  }
}

TEST_CASE("shift is a ring endomorphism")
{
  std::mt19937_64 rng(202);
  for (int i = 0; i < cases; ++i) {
    auto const p = oracle::random_polynomial(rng, 6, 50, 20, false);
    auto const q = oracle::random_polynomial(rng, 6, 50, 20, false);
    unsigned const r = 1 + rng() % 4;
    REQUIRE(shift_r(p * q, r) == shift_r(p, r) * shift_r(q, r));
    REQUIRE(shift_r(p + q, r) == shift_r(p, r) + shift_r(q, r));
    auto const pi = random_primes(rng);
    REQUIRE(project_pi(shift_r(p, r), pi) == shift_r(project_pi(p, pi), r));
  }
}

TEST_CASE("truncated products do not depend on factor order")
{
  std::mt19937_64 rng(303);
  for (int i = 0; i < cases; ++i) {
    std::vector<DirichletPolynomial> fs;
    for (std::size_t k = rng() % 6; k > 0; --k)
      fs.push_back(oracle::random_polynomial(rng, 4, 40, 9, true));
    std::uint64_t const bound = 1 + rng() % 400;
    auto const a = product_truncated(fs, bound);
    auto shuffled = fs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(product_truncated(shuffled, bound) == a);

    DirichletPolynomial full = DirichletPolynomial::one();
    for (auto const &f : fs)
      full = full * f;
    REQUIRE(a == TruncatedSeries(bound, full));
    auto const naive = oracle::naive_product(fs, bound);
    REQUIRE(a.terms() == TruncatedSeries::Terms(naive.begin(), naive.end()));
  }
}

TEST_CASE("exact division undoes multiplication")
{
  std::mt19937_64 rng(404);
  for (int i = 0; i < cases; ++i) {
    auto const p = oracle::random_polynomial(rng, 6, 50, 20, false);
    auto d = oracle::random_polynomial(rng, 5, 50, 20, false);
    if (d.is_zero())
      d = DirichletPolynomial::monomial(1 + rng() % 9, 1 + static_cast<int>(rng() % 5));
    REQUIRE(divide_exact(p * d, d) == p);
  }
}

TEST_CASE("rational expansion inverts multiplication by a unit series")
{
  std::mt19937_64 rng(505);
  for (int i = 0; i < cases; ++i) {
    auto const p = oracle::random_polynomial(rng, 6, 40, 20, false);
    auto d = oracle::random_polynomial(rng, 4, 40, 9, true);
    if (rng() % 2)
      d = -d;
    std::uint64_t const bound = 1 + rng() % 200;
    REQUIRE(expand_rational({p * d, d}, bound) == TruncatedSeries(bound, p));
  }
}

TEST_CASE("prime support of a product")
{
  std::mt19937_64 rng(606);
  for (int i = 0; i < cases; ++i) {
    auto const p = oracle::random_polynomial(rng, 6, 80, 9, true);
    auto const q = oracle::random_polynomial(rng, 6, 80, 9, true);
    PrimeSet both = pi_of_series(p).primes;
    auto const pq = pi_of_series(q).primes;
    both.insert(pq.begin(), pq.end());
    REQUIRE(subset(pi_of_series(p * q).primes, both));
  }
}

TEST_CASE("leading coefficient of F* at w^(min r)")
{
  std::mt19937_64 rng(707);
  static constexpr std::uint64_t qs[] = {3, 5, 7};
  int extracted = 0;
  for (int i = 0; i < cases; ++i) {
    std::uint64_t const q = qs[rng() % 3];
    ProductExperiment exp;
    exp.q = q;
    exp.lambda = rng() % 2 ? LambdaVariant::OddMultiples : LambdaVariant::Multiples;
    for (std::int64_t id = 1, k = 1 + rng() % 5; id <= k; ++id) {
      FactorDescriptor f;
      f.id = id;
      f.kind = FactorKind::Psl2;
      f.q = 5;
      f.r = 1 + rng() % 3;
      for (std::size_t t = rng() % 4; t > 0; --t) {
        std::uint64_t u = 1 + rng() % 8;
        if (exp.lambda != LambdaVariant::Multiples)
          u = 2 * u - 1;
        if (u % q == 0)
          continue;
        int const b = static_cast<int>(rng() % 11) - 5;
        if (b != 0)
          f.coeffs[ipow(Index(q * u), f.r)] = b;
      }
      // indices outside Lambda are unconstrained
      if (rng() % 2)
        f.coeffs[2 + rng() % 20 * (q + 1)] = 1 + static_cast<int>(rng() % 3);
      exp.factors.push_back(f);
    }
    WExtraction w;
    try {
      w = extract_w(exp);
    } catch (NoWitness const &) {
      continue;
    } catch (HypothesisViolated const &) {
      // a stray unconstrained index landed in Lambda
      continue;
    }
    ++extracted;
    unsigned r_min = ~0u;
    for (auto const &f : exp.factors)
      if (std::find(w.i_star.begin(), w.i_star.end(), f.id) != w.i_star.end())
        r_min = std::min(r_min, f.r);
    Index const lead = ipow(w.w, r_min);
    Integer expect = 0;
    for (auto const &f : exp.factors)
      if (f.r == r_min)
        expect += f.b(lead);
    auto const t = product_truncated(w.f_star, lead.convert_to<std::uint64_t>());
    REQUIRE(t.coeff(lead.convert_to<std::uint64_t>()) == expect);
    // nothing between 1 and the leading index
    REQUIRE(t.terms().begin()->first == 1);
    REQUIRE((t.terms().size() == 1 || std::next(t.terms().begin())->first == lead));
    REQUIRE(valuation(w.w, q) == 1);
  }
  CHECK(extracted > cases / 2);
}

TEST_CASE("polynomial JSON round trip")
{
  std::mt19937_64 rng(808);
  for (int i = 0; i < cases; ++i) {
    auto p = oracle::random_polynomial(rng, 8, 1000, 1000000, false);
    if (rng() % 4 == 0)
      p = shift_r(p, 1 + rng() % 12);
    REQUIRE(polynomial_from_json(Json::parse(to_json(p).dump())) == p);
    REQUIRE(parse_dirichlet(p.to_string()) == p);
  }
}
