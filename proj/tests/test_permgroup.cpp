#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/groups.hpp"
#include "pzeta/structure.hpp"

using namespace pzeta;

namespace
{

PermGroup from_cycles(std::size_t degree, std::vector<std::string> const &cycles)
{
  std::vector<Permutation> gens;
  for (auto const &c : cycles)
    gens.push_back(Permutation::from_cycles(degree, c));
  return PermGroup::close_generators(degree, gens);
}

// Distinct subgroups generated by at most two elements.
std::set<std::vector<ElementId>> two_generated(PermGroup const &g)
{
  std::set<std::vector<ElementId>> out;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = a; b < g.order(); ++b) {
      auto in = oracle::closure(g, {a, b});
      std::vector<ElementId> els;
      for (ElementId e = 0; e < g.order(); ++e)
        if (in[e])
          els.push_back(e);
      out.insert(els);
    }
  return out;
}

std::multiset<std::size_t> class_sizes(SubgroupLattice const &lat)
{
  std::multiset<std::size_t> s;
  for (auto const &c : lat.classes())
    s.insert(c.size());
  return s;
}

} // namespace

TEST_CASE("permutations")
{
  auto const a = Permutation::from_cycles(5, "(0 1 2 3 4)");
  auto const b = Permutation::from_cycles(5, "(0 1)");
  CHECK(a.to_cycles() == "(0 1 2 3 4)");
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::identity(4).to_cycles() == "()");
  // a first, then b
  CHECK((a * b)(0) == 0);
  CHECK((a * b)(4) == 1);
  CHECK(Permutation::from_cycles(6, "(0 1 2)(3 4)").to_cycles() == "(0 1 2)(3 4)");
  CHECK(Permutation::from_cycles(6, "(0,1,2)").to_cycles() == "(0 1 2)");
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 3)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1 0)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "0 1)"), ParseError);
}

TEST_CASE("closure of generators")
{
  CHECK(from_cycles(5, {"(0 1 2 3 4)", "(0 1 2)"}).order() == 60);
  CHECK(from_cycles(3, {}).order() == 1);
  CHECK(from_cycles(4, {"(0 1)", "(0 1 2 3)"}).order() == 24);
  CHECK_THROWS_AS(PermGroup::close_generators(4, {Permutation::from_cycles(4, "(0 1)"),
                                                  Permutation::from_cycles(4, "(0 1 2 3)")},
                                              10),
                  OrderBoundExceeded);
  CHECK_THROWS_AS(PermGroup::close_generators(4, {Permutation::from_cycles(5, "(0 1)")}), InvalidParameter);

  auto const g = symmetric_group(5);
  for (ElementId x = 0; x < g.order(); x += 7)
    for (ElementId y = 0; y < g.order(); y += 11) {
      CHECK(g.element(g.mul(x, y)) == g.element(x) * g.element(y));
      CHECK(g.mul(x, g.inv(x)) == 0);
    }
  CHECK(g.id_of(Permutation::identity(5)) == 0);
  CHECK_FALSE(alternating_group(5).contains(Permutation::from_cycles(5, "(0 1)")));
  CHECK(g.element_order(g.id_of(Permutation::from_cycles(5, "(0 1 2)(3 4)"))) == 6);
}

TEST_CASE("builtin groups")
{
  CHECK(builtin_group("C7").order() == 7);
  CHECK(builtin_group("S4").order() == 24);
  CHECK(builtin_group("A5").order() == 60);
  CHECK(builtin_group("D8").order() == 8);
  CHECK(builtin_group("Q8").order() == 8);
  CHECK(builtin_group("V4").order() == 4);
  CHECK(builtin_group("A5xC2").order() == 120);
  CHECK(builtin_group("PSL(2,7)").order() == 168);
  CHECK(builtin_group("PGL(2,7)").order() == 336);
  CHECK(builtin_group("V4").is_abelian());
  CHECK_FALSE(builtin_group("Q8").is_abelian());
  CHECK_THROWS_AS(builtin_group("Z9"), ParseError);

  auto const q8 = quaternion_group();
  std::multiset<std::uint32_t> orders;
  for (ElementId x = 0; x < q8.order(); ++x)
    orders.insert(q8.element_order(x));
  CHECK(orders == std::multiset<std::uint32_t>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("PSL(2,q) and PGL(2,q)")
{
  auto const p5 = make_psl2(5, Psl2Variant::PSL);
  CHECK(p5.group.order() == 60);
  CHECK(p5.group.degree() == 6);
  auto const g7 = make_psl2(7, Psl2Variant::PGL);
  CHECK(g7.group.order() == 336);
  CHECK(g7.group.degree() == 8);
  CHECK(g7.socle.order() == 168);
  CHECK(make_psl2(11, Psl2Variant::PSL).group.order() == 660);
  CHECK_THROWS_AS(make_psl2(4, Psl2Variant::PSL), InvalidParameter);
  CHECK_THROWS_AS(make_psl2(3, Psl2Variant::PSL), InvalidParameter);
  CHECK_THROWS_AS(make_psl2(9, Psl2Variant::PGL), InvalidParameter);
  CHECK(is_nonabelian_simple(p5.group));
  CHECK_FALSE(is_nonabelian_simple(g7.group));
  CHECK_NOTHROW(validate_almost_simple(g7));
  CHECK_THROWS_AS(validate_almost_simple(AlmostSimpleSpec{"bad", g7.group, g7.group}), InvalidParameter);
}

TEST_CASE("group files")
{
  std::istringstream in("# A5\ndegree 5\n(0 1 2 3 4)\n\n(0 1 2)\n");
  auto const g = parse_group_file(in);
  CHECK(g.order() == 60);
  std::istringstream again(format_group_file(g));
  CHECK(parse_group_file(again).order() == 60);
  std::istringstream bad("(0 1)\n");
  CHECK_THROWS_AS(parse_group_file(bad), ParseError);
  std::istringstream bad_point("degree 3\n(0 5)\n");
  CHECK_THROWS_AS(parse_group_file(bad_point), ParseError);
  CHECK_THROWS_AS(load_group_file("/nonexistent/file.grp"), ParseError);
}

TEST_CASE("S3 lattice by hand")
{
  auto const lat = SubgroupLattice::build(symmetric_group(3));
  REQUIRE(lat.size() == 6);
  // 1, three C2, C3, S3
  std::vector<std::size_t> orders;
  for (NodeId i = 0; i < lat.size(); ++i)
    orders.push_back(lat.order(i));
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  CHECK(lat.classes().size() == 4);
  CHECK(lat.moebius(lat.top()) == 1);
  CHECK(lat.moebius(4) == -1);
  for (NodeId i = 1; i <= 3; ++i) {
    CHECK(lat.moebius(i) == -1);
    CHECK(lat.is_maximal(i));
    CHECK_FALSE(lat.is_normal(i));
  }
  CHECK(lat.moebius(0) == 3);
  CHECK(lat.is_normal(4));
  CHECK(lat.hasse_edges().size() == 8);
}

TEST_CASE("lattice sizes against two-generator closure")
{
  for (auto const *name : {"S3", "S4", "A4", "A5", "D8", "Q8", "V4", "C12", "D12"}) {
    CAPTURE(name);
    auto const g = builtin_group(name);
    auto const lat = SubgroupLattice::build(g);
    CHECK(lat.size() == two_generated(g).size());
  }
  CHECK(SubgroupLattice::build(cyclic_group(7)).size() == 2);
  CHECK(SubgroupLattice::build(cyclic_group(12)).size() == 6);

  auto const a5 = SubgroupLattice::build(alternating_group(5));
  CHECK(a5.size() == 59);
  CHECK(a5.classes().size() == 9);
  CHECK(class_sizes(a5) == std::multiset<std::size_t>{1, 15, 10, 5, 6, 10, 6, 5, 1});
}

TEST_CASE("Moebius values against zeta-matrix inversion")
{
  for (auto const *name : {"S3", "S4", "A4", "A5", "D8", "Q8", "V4", "C12", "D10", "A5xC2", "PSL(2,7)", "C2xC2xC2"}) {
    CAPTURE(name);
    auto const lat = SubgroupLattice::build(builtin_group(name));
    CHECK(lat.moebius_values() == oracle::moebius_by_inversion(lat));
  }
  // mu(1) is the coefficient of P_G at |G|.
  CHECK(SubgroupLattice::build(alternating_group(5)).moebius(0) == -60);
  CHECK(SubgroupLattice::build(symmetric_group(4)).moebius(0) == -12);
}

TEST_CASE("lattice queries")
{
  auto const lat = SubgroupLattice::build(symmetric_group(4));
  CHECK(lat.size() == 30);
  CHECK(lat.classes().size() == 11);
  for (NodeId i = 0; i < lat.size(); ++i) {
    CHECK(lat.leq(0, i));
    CHECK(lat.leq(i, lat.top()));
    CHECK(lat.intersection(i, lat.top()) == i);
    CHECK(lat.find(lat.node(i).elements) == i);
    CHECK(lat.generated_by(lat.node(i).generators) == i);
  }
  std::size_t maximal = lat.maximal_nodes().size();
  CHECK(maximal == 8); // A4, three D8, four S3
  CHECK(lat.supergroups(lat.top()).empty());
  CHECK(lat.subgroups_of(0).empty());

  LatticeBudget tight;
  tight.max_subgroups = 10;
  CHECK_THROWS_AS(SubgroupLattice::build(symmetric_group(4), tight), BudgetExceeded);
  LatticeBudget small;
  small.max_order = 20;
  CHECK_THROWS_AS(SubgroupLattice::build(symmetric_group(4), small), BudgetExceeded);
}

TEST_CASE("normal subgroups")
{
  auto orders = [](char const *name) {
    auto const lat = SubgroupLattice::build(builtin_group(name));
    std::vector<std::size_t> out;
    for (NodeId n : normal_subgroups(lat))
      out.push_back(lat.order(n));
    return out;
  };
  CHECK(orders("S4") == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(orders("A5") == std::vector<std::size_t>{1, 60});
  CHECK(orders("V4").size() == 5);
}

TEST_CASE("quotients")
{
  auto const lat = SubgroupLattice::build(symmetric_group(4));
  auto const normals = normal_subgroups(lat);
  auto const v4 = normals[1], a4 = normals[2];
  auto const q = quotient(lat, v4);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  CHECK(quotient(lat, a4).group.order() == 2);
  CHECK(quotient(lat, 0).group.order() == 24);
  CHECK(quotient(lat, 0).group.degree() == 24);
  // image is a homomorphism
  auto const &g = lat.group();
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); y += 5)
      CHECK(q.image[g.mul(x, y)] == q.group.mul(q.image[x], q.image[y]));
  NodeId non_normal = 1;
  CHECK_THROWS_AS(quotient(lat, non_normal), NotNormal);
}

TEST_CASE("Frattini subgroups")
{
  auto fr = [](char const *name) {
    auto const lat = SubgroupLattice::build(builtin_group(name));
    return lat.order(frattini(lat));
  };
  CHECK(fr("S4") == 1);
  CHECK(fr("C4") == 2);
  CHECK(fr("V4") == 1);
  CHECK(fr("Q8") == 2);
  CHECK(fr("D8") == 2);
  CHECK(fr("C8") == 4);
}

TEST_CASE("chief series")
{
  auto labels = [](char const *name, SeriesChoice choice = SeriesChoice::First) {
    auto const lat = SubgroupLattice::build(builtin_group(name));
    auto const s = chief_series(lat, choice);
    std::vector<std::string> out;
    for (auto const &f : s.factors)
      out.push_back(f.label);
    return out;
  };
  CHECK(labels("S4") == std::vector<std::string>{"C2", "C3", "C2^2"});
  CHECK(labels("A5") == std::vector<std::string>{"A5"});
  auto c6 = labels("C6");
  std::sort(c6.begin(), c6.end());
  CHECK(c6 == std::vector<std::string>{"C2", "C3"});

  auto const lat = SubgroupLattice::build(builtin_group("A5xA5"), LatticeBudget{4000, 200000, 0});
  auto const s = chief_series(lat);
  REQUIRE(s.factors.size() == 2);
  for (auto const &f : s.factors) {
    CHECK_FALSE(f.abelian);
    CHECK(f.r == 1);
    CHECK(f.simple_order == 60);
  }

  auto const s4 = SubgroupLattice::build(symmetric_group(4));
  auto const series = chief_series(s4);
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    CHECK(series.factors[i].upper == series.nodes[i]);
    CHECK(series.factors[i].lower == series.nodes[i + 1]);
    CHECK(is_minimal_normal_section(s4, series.nodes[i], series.nodes[i + 1]));
  }
  CHECK(series.factors[2].r == 2);
  CHECK(series.factors[2].simple_order == 2);
}

TEST_CASE("monolithic primitive quotients")
{
  auto const s4 = SubgroupLattice::build(symmetric_group(4));
  auto const series = chief_series(s4);
  // series: S4 > A4 > V4 > 1
  CHECK(centralizer_quotient(s4, series.factors[2]).group.order() == 6); // V4: centralizer V4
  CHECK(s4.order(factor_centralizer(s4, series.factors[2])) == 4);
  CHECK(centralizer_quotient(s4, series.factors[1]).group.order() == 2); // A4/V4: centralizer A4
  CHECK(s4.order(factor_centralizer(s4, series.factors[1])) == 12);

  auto const a5 = SubgroupLattice::build(alternating_group(5));
  CHECK(centralizer_quotient(a5, chief_series(a5).factors[0]).group.order() == 60);

  auto const c6 = SubgroupLattice::build(cyclic_group(6));
  for (auto const &f : chief_series(c6).factors)
    CHECK(centralizer_quotient(c6, f).group.order() == 1);
}
