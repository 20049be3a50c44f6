// Acceptance run: one PASS/FAIL line per criterion. With --extended the
// w-table also covers q = 17 and q = 19.
#include <algorithm>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/rationality.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

namespace
{

struct Outcome
{
  bool ok = true;
  std::ostringstream detail;

  void fail(std::string const &what)
  {
    if (!ok)
      detail << "; ";
    else
      detail.str("");
    ok = false;
    detail << what;
  }
};

bool run(int number, std::string const &title, std::function<void(Outcome &)> const &body)
{
  Outcome out;
  try {
    body(out);
  } catch (std::exception const &e) {
    out.fail(std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << number << ": " << (out.ok ? "PASS" : "FAIL") << "  " << title;
  if (!out.detail.str().empty())
    std::cout << "  [" << out.detail.str() << "]";
  std::cout << std::endl;
  return out.ok;
}

std::vector<std::string> const corpus = {"C2", "C3", "C4", "C5",  "C6", "C7", "C8", "C9", "C10", "C11", "C12",
                                         "S3", "S4", "A4", "A5",  "D8", "Q8", "V4", "PSL(2,5)"};

void w_table_check(Outcome &out, bool extended)
{
  std::vector<std::pair<std::uint64_t, Psl2Variant>> cells;
  for (std::uint64_t q : {5, 7, 11, 13})
    for (auto v : {Psl2Variant::PSL, Psl2Variant::PGL})
      cells.emplace_back(q, v);
  if (extended) {
    cells.emplace_back(17, Psl2Variant::PSL);
    cells.emplace_back(19, Psl2Variant::PSL);
    cells.emplace_back(19, Psl2Variant::PGL);
  }
  std::size_t matched = 0;
  for (auto [q, v] : cells) {
    auto const row = w_table_row(q, v);
    if (row.status == RowStatus::Match)
      ++matched;
    else
      out.fail(to_string(v) + "(2," + std::to_string(q) + ") " + to_string(row.status));
  }
  if (out.ok)
    out.detail << matched << " rows match";
}

void hall_check(Outcome &out)
{
  std::size_t checks = 0;
  for (auto const &name : corpus) {
    auto const g = builtin_group(name);
    auto const p = p_g(g);
    for (unsigned k = 1; k <= (g.order() <= 60 ? 3u : 2u); ++k) {
      ++checks;
      if (p.evaluate(k) != oracle::generation_probability(g, k))
        out.fail(name + " k=" + std::to_string(k));
    }
  }
  if (out.ok)
    out.detail << checks << " evaluations agree";
}

std::size_t complements_by_elements(SubgroupLattice const &lat, NodeId upper, NodeId lower)
{
  auto const &up = lat.node(upper).elements;
  auto const &lo = lat.node(lower).elements;
  std::size_t const factor = up.size() / lo.size();
  std::size_t count = 0;
  for (NodeId h = 0; h < lat.size(); ++h) {
    auto const &el = lat.node(h).elements;
    if (el.size() * factor != lat.group().order() || !oracle::subset(lo, el))
      continue;
    std::vector<ElementId> meet;
    std::set_intersection(el.begin(), el.end(), up.begin(), up.end(), std::back_inserter(meet));
    if (meet == lo)
      ++count;
  }
  return count;
}

std::multiset<std::string> factor_multiset(ChiefFactorization const &f)
{
  std::multiset<std::string> out;
  for (auto const &fp : f.factors)
    out.insert(fp.factor.label + ": " + fp.poly.to_string());
  return out;
}

void factorization_check(Outcome &out)
{
  for (auto const &name : corpus) {
    auto const lat = SubgroupLattice::build(builtin_group(name));
    auto const f = chief_factorization(lat);
    if (!f.product_matches)
      out.fail(name + " product");
    DirichletPolynomial prod = DirichletPolynomial::one();
    for (auto const &fp : f.factors) {
      prod = prod * fp.poly;
      if (fp.frattini && !fp.poly.is_one())
        out.fail(name + " Frattini factor " + fp.poly.to_string());
      if (!fp.factor.abelian)
        continue;
      auto const expect = complements_by_elements(lat, fp.factor.upper, fp.factor.lower);
      if (!fp.complements || *fp.complements != expect)
        out.fail(name + " complements of " + fp.factor.label);
      if (fp.poly != DirichletPolynomial::one() - DirichletPolynomial::monomial(fp.factor.order, Integer(expect)))
        out.fail(name + " abelian factor polynomial");
    }
    if (prod != p_g(lat))
      out.fail(name + " product of factors");
  }
  for (auto const *name : {"A5xC2", "S4"}) {
    auto const lat = SubgroupLattice::build(builtin_group(name));
    auto const first = chief_factorization(lat, SeriesChoice::First);
    auto const last = chief_factorization(lat, SeriesChoice::Last);
    if (!first.product_matches || !last.product_matches || factor_multiset(first) != factor_multiset(last))
      out.fail(std::string(name) + " first/last series disagree");
  }
  if (out.ok)
    out.detail << corpus.size() << " groups, plus A5xC2 and S4 along two series";
}

template <class Body> std::size_t repeat(Outcome &out, char const *label, std::uint64_t seed, Body body)
{
  std::mt19937_64 rng(seed);
  std::size_t passed = 0;
  for (int i = 0; i < 1000; ++i) {
    if (body(rng))
      ++passed;
    else {
      out.fail(std::string(label) + " case " + std::to_string(i));
      break;
    }
  }
  return passed;
}

void property_check(Outcome &out)
{
  auto const primes = [](std::mt19937_64 &rng) {
    PrimeSet pi;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
      if (rng() % 3 == 0)
        pi.insert(p);
    return pi;
  };
  std::size_t total = 0, suites = 0;
  auto suite = [&](char const *label, std::uint64_t seed, auto body) {
    auto const n = repeat(out, label, seed, body);
    total += n;
    ++suites;
  };

  suite("pi homomorphism", 11, [&](std::mt19937_64 &rng) {
    auto const p = oracle::random_polynomial(rng, 8, 60, 20, false);
    auto const q = oracle::random_polynomial(rng, 8, 60, 20, false);
    auto const pi = primes(rng);
    return project_pi(p * q, pi) == project_pi(p, pi) * project_pi(q, pi);
  });
  suite("shift homomorphism", 12, [&](std::mt19937_64 &rng) {
    auto const p = oracle::random_polynomial(rng, 6, 50, 20, false);
    auto const q = oracle::random_polynomial(rng, 6, 50, 20, false);
    unsigned const r = 1 + rng() % 4;
    return shift_r(p * q, r) == shift_r(p, r) * shift_r(q, r);
  });
  suite("product order", 13, [&](std::mt19937_64 &rng) {
    std::vector<DirichletPolynomial> fs;
    for (std::size_t k = rng() % 6; k > 0; --k)
      fs.push_back(oracle::random_polynomial(rng, 4, 40, 9, true));
    std::uint64_t const bound = 1 + rng() % 400;
    auto shuffled = fs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto const naive = oracle::naive_product(fs, bound);
    auto const a = product_truncated(fs, bound);
    return a == product_truncated(shuffled, bound) && a.terms() == TruncatedSeries::Terms(naive.begin(), naive.end());
  });
  suite("exact division", 14, [&](std::mt19937_64 &rng) {
    auto const p = oracle::random_polynomial(rng, 6, 50, 20, false);
    auto d = oracle::random_polynomial(rng, 5, 50, 20, false);
    if (d.is_zero())
      d = DirichletPolynomial::one();
    return divide_exact(p * d, d) == p;
  });
  if (out.ok)
    out.detail << suites << " suites, " << total << " random cases";
}

std::vector<FactorDescriptor> family(std::uint64_t q, Psl2Variant v, unsigned count, std::int64_t first_id)
{
  auto const pxs = p_xs(AlmostSimpleContext::build(make_psl2(q, v)));
  std::vector<FactorDescriptor> out;
  for (unsigned i = 1; i <= count; ++i) {
    FactorDescriptor f;
    f.id = first_id + i - 1;
    f.kind = FactorKind::Psl2;
    f.q = q;
    f.variant = v;
    f.r = i;
    f.coeffs = shift_r(pxs, i).terms();
    f.coeffs.erase(1);
    out.push_back(std::move(f));
  }
  return out;
}

void replay_check(Outcome &out)
{
  using Set = std::vector<std::pair<Psl2Variant, unsigned>>;
  struct Case
  {
    std::string name;
    std::uint64_t q;
    Set members;
  };
  std::vector<Case> const cases = {
      {"PGL(2,7) r=1..20", 7, {{Psl2Variant::PGL, 20}}},
      {"PSL(2,11) r=1..20", 11, {{Psl2Variant::PSL, 20}}},
      {"PSL(2,7)+PGL(2,7)", 7, {{Psl2Variant::PSL, 6}, {Psl2Variant::PGL, 6}}},
      {"PGL(2,11)+PSL(2,11)", 11, {{Psl2Variant::PGL, 5}, {Psl2Variant::PSL, 5}}},
  };
  for (auto const &c : cases) {
    std::vector<FactorDescriptor> fs;
    std::uint64_t expect_w = ~std::uint64_t(0);
    for (auto [v, count] : c.members) {
      auto part = family(c.q, v, count, static_cast<std::int64_t>(fs.size()) + 1);
      fs.insert(fs.end(), part.begin(), part.end());
      expect_w = std::min(expect_w, *omega_set(AlmostSimpleContext::build(make_psl2(c.q, v))).w);
    }
    std::vector<std::int64_t> expect_ids;
    for (auto const &f : fs)
      if (*omega_set(AlmostSimpleContext::build(make_psl2(f.q, f.variant))).w == expect_w)
        expect_ids.push_back(f.id);

    auto const rep = replay_extraction(fs);
    if (!rep.w || *rep.w != expect_w)
      out.fail(c.name + " w");
    if (rep.i_star != expect_ids)
      out.fail(c.name + " I*");
    if (!rep.c_beta || *rep.c_beta >= 0)
      out.fail(c.name + " c_beta sign");
    if (!rep.characterization_holds)
      out.fail(c.name + " characterization");
  }
  if (out.ok)
    out.detail << cases.size() << " families";
}

} // namespace

int main(int argc, char **argv)
{
  bool const extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
  bool ok = true;
  ok &= run(1, extended ? "w(X) table, q in {5,7,11,13,17,19}" : "w(X) table, q in {5,7,11,13}",
            [&](Outcome &o) { w_table_check(o, extended); });
  ok &= run(2, "P_G(k) against generation probability", hall_check);
  ok &= run(3, "chief-factor factorization", factorization_check);
  ok &= run(4, "ring property suites", property_check);
  ok &= run(5, "w-extraction replay", replay_check);
  return ok ? 0 : 1;
}
