#include "pzeta/zeta.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <unordered_map>

#include "pzeta/errors.hpp"

namespace pzeta
{

DirichletPolynomial p_g(SubgroupLattice const &lattice) { return p_g_over(lattice, lattice.bottom()); }

DirichletPolynomial p_g(PermGroup group, LatticeBudget const &budget)
{
  return p_g(SubgroupLattice::build(std::move(group), budget));
}

DirichletPolynomial p_g_over(SubgroupLattice const &lattice, NodeId normal)
{
  DirichletPolynomial::Terms terms;
  for (auto const &cls : lattice.classes()) {
    NodeId const h = cls.front();
    if (lattice.moebius(h) == 0)
      continue;
    for (NodeId member : cls)
      if (lattice.leq(normal, member))
        terms[lattice.index(member)] += lattice.moebius(member);
  }
  return DirichletPolynomial(std::move(terms));
}

ZetaReport zeta_report(std::string group_id, PermGroup group, LatticeBudget const &budget)
{
  ZetaReport report;
  report.group_id = std::move(group_id);
  report.order = group.order();
  auto const lattice = SubgroupLattice::build(std::move(group), budget);
  report.p_g = p_g(lattice);
  report.subgroups = lattice.size();
  report.classes = lattice.classes().size();
  report.seconds = lattice.stats().seconds;
  return report;
}

namespace
{

class TupleCounter
{
public:
  TupleCounter(PermGroup const &g, unsigned k) : g_(g), k_(k) {}

  // Number of ways to choose the remaining k - depth entries so that together
  // with h they generate G.
  Integer count(unsigned depth, Subgroup const &h)
  {
    std::size_t const n = g_.order();
    if (h.order() == n)
      return ipow(Integer(n), k_ - depth);
    if (depth == k_)
      return 0;

    auto &bucket = memo_[depth][h.members.hash()];
    for (auto const &[members, value] : bucket)
      if (members == h.members)
        return value;

    Integer total = 0;
    Integer stay; // entries already inside h
    bool stay_known = false;
    for (ElementId x = 0; x < n; ++x) {
      if (h.contains(x)) {
        if (!stay_known) {
          stay = count(depth + 1, h);
          stay_known = true;
        }
        total += stay;
        continue;
      }
      std::vector<ElementId> gens = h.generators;
      gens.push_back(x);
      total += count(depth + 1, generate_subgroup(g_, gens));
    }
    memo_[depth][h.members.hash()].emplace_back(h.members, total);
    return total;
  }

private:
  PermGroup const &g_;
  unsigned k_;
  std::map<unsigned, std::unordered_map<std::uint64_t, std::vector<std::pair<ElementSet, Integer>>>> memo_;
};

} // namespace

Rational generating_probability(PermGroup const &group, unsigned k, Integer const &max_tuples)
{
  if (k == 0)
    return group.order() == 1 ? Rational(1) : Rational(0);
  Integer const tuples = ipow(Integer(group.order()), k);
  if (tuples > max_tuples)
    throw BudgetExceeded("generating_probability: " + tuples.str() + " tuples exceed budget", group.order(), 0);
  TupleCounter counter(group, k);
  Subgroup trivial = generate_subgroup(group, {});
  return Rational(counter.count(0, trivial), tuples);
}

AlmostSimpleContext AlmostSimpleContext::build(AlmostSimpleSpec const &spec, LatticeBudget const &budget)
{
  if (spec.group.order() > budget.max_order)
    throw BudgetExceeded(spec.name + ": order " + std::to_string(spec.group.order()) + " exceeds lattice bound",
                         spec.group.order(), 0);
  validate_almost_simple(spec);
  std::vector<ElementId> socle_ids;
  for (auto const &gen : spec.socle.generators())
    socle_ids.push_back(spec.group.id_of(gen));
  auto lattice = SubgroupLattice::build(spec.group, budget);
  NodeId const socle = lattice.generated_by(socle_ids);
  return AlmostSimpleContext{spec.name, std::move(lattice), socle};
}

std::vector<NodeId> socle_supplements(AlmostSimpleContext const &ctx)
{
  auto const &lat = ctx.lattice;
  auto const &socle = lat.node(ctx.socle);
  std::size_t const n = lat.group().order();
  std::vector<NodeId> out;
  for (NodeId h = 0; h < lat.size(); ++h) {
    std::size_t const meet = lat.node(h).members.intersection_count(socle.members);
    if (lat.order(h) * socle.order() == n * meet)
      out.push_back(h);
  }
  return out;
}

DirichletPolynomial p_xs(AlmostSimpleContext const &ctx)
{
  DirichletPolynomial::Terms terms;
  for (NodeId h : socle_supplements(ctx))
    terms[ctx.lattice.index(h)] += ctx.lattice.moebius(h);
  return DirichletPolynomial(std::move(terms));
}

OmegaResult omega_set(AlmostSimpleContext const &ctx, bool include_even)
{
  // index -> all supplements of that index maximal?
  std::map<std::uint64_t, bool> all_maximal;
  for (NodeId h : socle_supplements(ctx)) {
    std::uint64_t const m = ctx.lattice.index(h);
    if (m == 1 || (!include_even && m % 2 == 0))
      continue;
    auto [it, inserted] = all_maximal.emplace(m, true);
    it->second = it->second && ctx.lattice.is_maximal(h);
  }
  OmegaResult result;
  result.name = ctx.name;
  result.odd_only = !include_even;
  for (auto const &[m, ok] : all_maximal)
    if (ok)
      result.omega.push_back(m);
  if (!result.omega.empty())
    result.w = result.omega.front();
  return result;
}

std::uint64_t predicted_w(std::uint64_t q, Psl2Variant variant)
{
  bool const psl = variant == Psl2Variant::PSL;
  switch (q) {
  case 5:
    return 5;
  case 7:
    return psl ? 7 : 3 * 7;
  case 11:
    return psl ? 11 : 11 * 5;
  case 19:
    return psl ? 19 * 3 : 19 * 9;
  case 29:
    return psl ? 29 * 7 : 29 * 3 * 5;
  default:
    break;
  }
  if (q < 5 || !is_prime(q))
    throw InvalidParameter("predicted_w: q must be a prime >= 5");
  return q % 4 == 3 ? q * (q - 1) / 2 : q * (q + 1) / 2;
}

std::string to_string(RowStatus s)
{
  switch (s) {
  case RowStatus::Match:
    return "MATCH";
  case RowStatus::Mismatch:
    return "MISMATCH";
  default:
    return "SKIPPED";
  }
}

WTableRow w_table_row(std::uint64_t q, Psl2Variant variant, LatticeBudget const &budget)
{
  WTableRow row;
  row.q = q;
  row.variant = variant;
  row.predicted = predicted_w(q, variant);
  try {
    auto ctx = AlmostSimpleContext::build(make_psl2(q, variant, std::numeric_limits<std::uint64_t>::max()), budget);
    auto const omega = omega_set(ctx);
    row.computed = omega.w;
    row.subgroups = ctx.lattice.size();
    row.seconds = ctx.lattice.stats().seconds;
    row.status = omega.w == row.predicted ? RowStatus::Match : RowStatus::Mismatch;
  } catch (BudgetExceeded const &e) {
    row.status = RowStatus::Skipped;
    row.note = e.what();
  }
  return row;
}

std::vector<WTableRow> w_table(std::vector<std::uint64_t> const &qs, std::vector<Psl2Variant> const &variants,
                               LatticeBudget const &budget, unsigned threads)
{
  std::vector<std::pair<std::uint64_t, Psl2Variant>> jobs;
  for (auto q : qs)
    for (auto v : variants)
      jobs.emplace_back(q, v);

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<WTableRow> rows(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += threads) {
    std::vector<std::future<WTableRow>> batch;
    for (std::size_t i = start; i < std::min(jobs.size(), start + threads); ++i)
      batch.push_back(std::async(std::launch::async, [&, i] { return w_table_row(jobs[i].first, jobs[i].second, budget); }));
    for (std::size_t i = 0; i < batch.size(); ++i)
      rows[start + i] = batch[i].get();
  }
  return rows;
}

Integer count_complements(SubgroupLattice const &lattice, NodeId upper, NodeId lower)
{
  std::size_t const n = lattice.group().order();
  std::size_t const factor = lattice.order(upper) / lattice.order(lower);
  auto const &up = lattice.node(upper);
  Integer count = 0;
  for (NodeId h = 0; h < lattice.size(); ++h) {
    if (lattice.order(h) * factor != n || !lattice.leq(lower, h))
      continue;
    if (lattice.node(h).members.intersection_count(up.members) == lattice.order(lower))
      ++count;
  }
  return count;
}

ChiefFactorization chief_factorization(SubgroupLattice const &lattice, SeriesChoice choice)
{
  auto const series = chief_series(lattice, choice);
  ChiefFactorization out;
  out.p_g = p_g(lattice);

  DirichletPolynomial product = DirichletPolynomial::one();
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    auto const &f = series.factors[i];
    FactorPolynomial fp;
    fp.factor = f;
    fp.poly = divide_exact(p_g_over(lattice, f.lower), p_g_over(lattice, f.upper));
    fp.frattini = lattice.leq(f.upper, frattini_over(lattice, f.lower));
    if (fp.frattini && !fp.poly.is_one())
      throw Error("chief_factorization: Frattini factor " + f.label + " has polynomial " + fp.poly.to_string());
    if (f.abelian) {
      fp.complements = count_complements(lattice, f.upper, f.lower);
      auto const expected =
          DirichletPolynomial::one() - DirichletPolynomial::monomial(Index(f.order), *fp.complements);
      if (fp.poly != expected)
        throw Error("chief_factorization: factor " + f.label + " polynomial " + fp.poly.to_string() +
                    " disagrees with complement count " + fp.complements->str());
    }
    product = product * fp.poly;
    out.factors.push_back(std::move(fp));
  }
  out.product_matches = product == out.p_g;
  return out;
}

bool verify_paz(AlmostSimpleContext const &ctx, unsigned r, PrimeSet const &pi)
{
  std::size_t const socle_order = ctx.lattice.order(ctx.socle);
  bool const hits = std::any_of(pi.begin(), pi.end(), [&](std::uint64_t p) { return socle_order % p == 0; });
  if (!hits)
    throw InvalidParameter("verify_paz: pi must contain a prime divisor of |soc X|");

  auto const c = p_xs(ctx);
  auto const lhs = project_pi(shift_r(c, r), pi);
  auto const surviving = project_pi(c, pi);
  if (lhs.size() != surviving.size())
    return false;
  for (auto const &[m, cm] : surviving.terms())
    if (lhs.coeff(ipow(m, r)) != cm * ipow(m, r - 1))
      return false;
  return true;
}

} // namespace pzeta
