// Independent reference computations used only by the tests. Nothing here
// calls into the lattice code paths it is checked against.
#ifndef PZETA_TESTS_ORACLES_HPP
#define PZETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/permgroup.hpp"

namespace oracle
{

using pzeta::ElementId;
using pzeta::Integer;
using pzeta::PermGroup;
using pzeta::Rational;

// Subgroup generated by a set of element ids, by plain orbit closure.
inline std::vector<bool> closure(PermGroup const &g, std::vector<ElementId> const &gens)
{
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> todo{0};
  in[0] = true;
  while (!todo.empty()) {
    ElementId x = todo.back();
    todo.pop_back();
    for (ElementId s : gens) {
      ElementId y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        todo.push_back(y);
      }
    }
  }
  return in;
}

inline std::size_t closure_size(PermGroup const &g, std::vector<ElementId> const &gens)
{
  auto in = closure(g, gens);
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
}

// #{(g_1..g_k) : <g_1..g_k> = G} by walking every tuple.
inline Integer generating_tuples(PermGroup const &g, unsigned k)
{
  std::size_t const n = g.order();
  std::vector<ElementId> tuple(k, 0);
  Integer count = 0;
  for (;;) {
    if (closure_size(g, tuple) == n)
      ++count;
    std::size_t i = 0;
    while (i < k && ++tuple[i] == n)
      tuple[i++] = 0;
    if (i == k)
      break;
  }
  return k == 0 ? Integer(n == 1 ? 1 : 0) : count;
}

inline Rational generation_probability(PermGroup const &g, unsigned k)
{
  Integer total = 1;
  for (unsigned i = 0; i < k; ++i)
    total *= g.order();
  return Rational(generating_tuples(g, k), total);
}

inline bool subset(std::vector<ElementId> const &a, std::vector<ElementId> const &b)
{
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// mu(H, G) for every node, by inverting the zeta matrix of the inclusion
// order (element-list containment), column G.
inline std::vector<Integer> moebius_by_inversion(pzeta::SubgroupLattice const &lat)
{
  std::size_t const m = lat.size();
  std::vector<std::vector<int>> zeta(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      zeta[i][j] = subset(lat.node(i).elements, lat.node(j).elements) ? 1 : 0;
  // zeta is unitriangular in node order (sorted by order); solve zeta * x = e_top.
  std::vector<Integer> x(m, 0);
  for (std::size_t ii = m; ii-- > 0;) {
    Integer rhs = ii == m - 1 ? 1 : 0;
    for (std::size_t j = ii + 1; j < m; ++j)
      if (zeta[ii][j])
        rhs -= x[j];
    x[ii] = rhs;
  }
  return x;
}

// Plain double loop over both supports.
inline std::map<pzeta::Index, Integer> naive_mul(pzeta::DirichletPolynomial const &p,
                                                 pzeta::DirichletPolynomial const &q)
{
  std::map<pzeta::Index, Integer> out;
  for (auto const &[a, x] : p.terms())
    for (auto const &[b, y] : q.terms())
      out[a * b] += x * y;
  std::erase_if(out, [](auto const &kv) { return kv.second == 0; });
  return out;
}

// Expands prod f_i one index at a time: the coefficient at n sums over all
// ordered factorizations n = n_1 * ... * n_k with n_i in supp(f_i).
inline std::map<std::uint64_t, Integer> naive_product(std::vector<pzeta::DirichletPolynomial> const &fs,
                                                      std::uint64_t bound)
{
  std::map<std::uint64_t, Integer> acc{{1, 1}};
  for (auto const &f : fs) {
    std::map<std::uint64_t, Integer> next;
    for (auto const &[a, x] : acc)
      for (auto const &[b, y] : f.terms())
        if (b <= bound && a * b.convert_to<std::uint64_t>() <= bound)
          next[a * b.convert_to<std::uint64_t>()] += x * y;
    acc = std::move(next);
  }
  std::erase_if(acc, [](auto const &kv) { return kv.second == 0; });
  return acc;
}

inline pzeta::DirichletPolynomial random_polynomial(std::mt19937_64 &rng, std::size_t max_terms, std::uint64_t max_index,
                                                    int max_coeff, bool unital)
{
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint64_t> idx(unital ? 2 : 1, max_index);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  pzeta::DirichletPolynomial::Terms t;
  if (unital)
    t[1] = 1;
  for (std::size_t i = nterms(rng); i > 0; --i)
    t[idx(rng)] += coef(rng);
  return pzeta::DirichletPolynomial(std::move(t));
}

} // namespace oracle

#endif
