#include "pzeta/arith.hpp"

#include <limits>

#include <boost/multiprecision/miller_rabin.hpp>

#include "pzeta/errors.hpp"

namespace pzeta
{

namespace
{

constexpr std::uint64_t trial_limit = 1'000'000;

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0)
    return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0)
      return false;
  }
  return true;
}

bool is_prime(Index const &n)
{
  if (auto small = to_u64(n); small && *small < trial_limit * trial_limit)
    return is_prime(*small);
  return boost::multiprecision::miller_rabin_test(n, 40);
}

std::vector<Index> prime_divisors(Index const &n)
{
  if (n <= 0)
    throw InvalidParameter("prime_divisors: argument must be positive");

  std::vector<Index> primes;
  Index rest = n;
  for (std::uint64_t d = 2; d <= trial_limit; d += (d == 2 ? 1 : 2)) {
    if (Index(d) * d > rest)
      break;
    if (rest % d == 0) {
      primes.emplace_back(d);
      while (rest % d == 0)
        rest /= d;
    }
  }
  if (rest > 1) {
    // Every factor up to trial_limit has been removed, so a cofactor below
    // trial_limit^2 is prime.
    if (rest < Index(trial_limit) * trial_limit || is_prime(rest))
      primes.push_back(rest);
    else
      throw InvalidParameter("prime_divisors: cannot factor " + n.str());
  }
  return primes;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  if (n == 0)
    throw InvalidParameter("prime_divisors: argument must be positive");

  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

unsigned valuation(Index n, std::uint64_t q)
{
  if (q < 2)
    throw InvalidParameter("valuation: base must be at least 2");
  if (n <= 0)
    throw InvalidParameter("valuation: argument must be positive");
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

Index ipow(Index base, unsigned exp)
{
  return boost::multiprecision::pow(base, exp);
}

std::optional<Index> exact_root(Index const &n, unsigned r)
{
  if (r == 0 || n < 0)
    return std::nullopt;
  if (r == 1 || n < 2)
    return n;

  // Binary search on [1, 2^(bits/r + 1)].
  unsigned const bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  Index lo = 1;
  Index hi = Index(1) << (bits / r + 1);
  while (lo < hi) {
    Index mid = (lo + hi + 1) / 2;
    if (ipow(mid, r) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (ipow(lo, r) == n)
    return lo;
  return std::nullopt;
}

std::optional<std::uint64_t> to_u64(Index const &n)
{
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    return std::nullopt;
  return n.convert_to<std::uint64_t>();
}

} // namespace pzeta
