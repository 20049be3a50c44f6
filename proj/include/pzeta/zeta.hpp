#ifndef PZETA_ZETA_HPP
#define PZETA_ZETA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/groups.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/structure.hpp"

namespace pzeta
{

// P_G(s) = sum_H mu(H) / |G:H|^s over all subgroups.
DirichletPolynomial p_g(SubgroupLattice const &lattice);
DirichletPolynomial p_g(PermGroup group, LatticeBudget const &budget = {});

// P_{G/N}(s) read off the interval [N, G] of G's lattice.
DirichletPolynomial p_g_over(SubgroupLattice const &lattice, NodeId normal);

struct ZetaReport
{
  std::string group_id;
  std::size_t order = 0;
  DirichletPolynomial p_g;
  std::size_t subgroups = 0;
  std::size_t classes = 0;
  double seconds = 0;
};

ZetaReport zeta_report(std::string group_id, PermGroup group, LatticeBudget const &budget = {});

// Exact probability that k uniformly random elements generate the group, by
// direct enumeration of k-tuples (memoised on the subgroup generated by the
// first entries). Throws BudgetExceeded if order^k exceeds max_tuples.
Rational generating_probability(PermGroup const &group, unsigned k, Integer const &max_tuples = Integer(1) << 40);

// X with its lattice and the lattice node of its socle.
struct AlmostSimpleContext
{
  std::string name;
  SubgroupLattice lattice;
  NodeId socle;

  // Validates the spec before building the lattice.
  static AlmostSimpleContext build(AlmostSimpleSpec const &spec, LatticeBudget const &budget = {});
};

// Subgroups H with H * soc(X) = X.
std::vector<NodeId> socle_supplements(AlmostSimpleContext const &ctx);

// P_{X,S}(s) = sum over supplements H of mu_X(H) / |X:H|^s.
DirichletPolynomial p_xs(AlmostSimpleContext const &ctx);

struct OmegaResult
{
  std::string name;
  std::vector<std::uint64_t> omega; // ascending
  std::optional<std::uint64_t> w;
  bool odd_only = true;
};

// Indices m > 1 such that supplements of index m exist and all of them are
// maximal. Only odd m unless include_even is set.
OmegaResult omega_set(AlmostSimpleContext const &ctx, bool include_even = false);

// Closed-form / exceptional value of w(X) for X = PSL(2,q) or PGL(2,q).
std::uint64_t predicted_w(std::uint64_t q, Psl2Variant variant);

enum class RowStatus
{
  Match,
  Mismatch,
  Skipped
};

std::string to_string(RowStatus s);

struct WTableRow
{
  std::uint64_t q = 0;
  Psl2Variant variant = Psl2Variant::PSL;
  std::optional<std::uint64_t> computed;
  std::uint64_t predicted = 0;
  RowStatus status = RowStatus::Skipped;
  std::size_t subgroups = 0;
  double seconds = 0;
  std::string note;
};

WTableRow w_table_row(std::uint64_t q, Psl2Variant variant, LatticeBudget const &budget = {});

// One row per (q, variant); rows are computed concurrently on up to
// `threads` workers (0 = hardware concurrency).
std::vector<WTableRow> w_table(std::vector<std::uint64_t> const &qs, std::vector<Psl2Variant> const &variants,
                               LatticeBudget const &budget = {}, unsigned threads = 1);

struct FactorPolynomial
{
  ChiefFactor factor;
  DirichletPolynomial poly;
  bool frattini = false;
  // Abelian factors: number of complements of the factor in G/lower.
  std::optional<Integer> complements;
};

struct ChiefFactorization
{
  std::vector<FactorPolynomial> factors;
  DirichletPolynomial p_g;
  bool product_matches = false;
};

// Complements of upper/lower in G/lower, counted in the lattice of G.
Integer count_complements(SubgroupLattice const &lattice, NodeId upper, NodeId lower);

// P_i = P_{G/N_{i+1}} / P_{G/N_i} along a chief series. Throws NotDivisible
// if a quotient is inexact, and Error if a Frattini factor polynomial is not
// 1 or an abelian factor disagrees with its complement count.
ChiefFactorization chief_factorization(SubgroupLattice const &lattice, SeriesChoice choice = SeriesChoice::First);

// Checks that project_pi(shift_r(P_{X,S}, r), pi) carries c_m m^(r-1) at m^r
// for every m surviving the projection, and nothing else. Throws
// InvalidParameter unless pi holds a prime divisor of |soc X|.
bool verify_paz(AlmostSimpleContext const &ctx, unsigned r, PrimeSet const &pi);

} // namespace pzeta

#endif // PZETA_ZETA_HPP
