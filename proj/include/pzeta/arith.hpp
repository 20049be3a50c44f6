#ifndef PZETA_ARITH_HPP
#define PZETA_ARITH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pzeta
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dirichlet indices can outgrow 64 bits once factor polynomials are shifted
// (21^20 already does), so they share the big-integer representation.
using Index = Integer;

using PrimeSet = std::set<std::uint64_t>;

bool is_prime(std::uint64_t n);
bool is_prime(Index const &n);

// Distinct prime divisors in ascending order. Throws InvalidParameter when n
// is zero or has a composite cofactor beyond trial-division reach.
std::vector<Index> prime_divisors(Index const &n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest e with q^e | n.
unsigned valuation(Index n, std::uint64_t q);

// Exact integer r-th root if n is a perfect r-th power.
std::optional<Index> exact_root(Index const &n, unsigned r);

Index ipow(Index base, unsigned exp);

std::optional<std::uint64_t> to_u64(Index const &n);

} // namespace pzeta

#endif // PZETA_ARITH_HPP
