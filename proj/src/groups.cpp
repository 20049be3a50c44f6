#include "pzeta/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

#include "pzeta/arith.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/lattice.hpp"

namespace pzeta
{

namespace
{

Permutation cycle_perm(std::size_t degree, std::vector<std::size_t> const &cycle)
{
  auto images = Permutation::identity(degree).images();
  for (std::size_t i = 0; i < cycle.size(); ++i)
    images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
  return Permutation(std::move(images));
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i < hi; ++i)
    r.push_back(i);
  return r;
}

} // namespace

PermGroup cyclic_group(std::size_t n)
{
  if (n < 1)
    throw InvalidParameter("cyclic group needs n >= 1");
  if (n == 1)
    return PermGroup::close_generators(1, {});
  return PermGroup::close_generators(n, {cycle_perm(n, range(0, n))});
}

PermGroup symmetric_group(std::size_t n)
{
  if (n < 1)
    throw InvalidParameter("symmetric group needs n >= 1");
  if (n == 1)
    return PermGroup::close_generators(1, {});
  if (n == 2)
    return PermGroup::close_generators(2, {cycle_perm(2, {0, 1})});
  return PermGroup::close_generators(n, {cycle_perm(n, {0, 1}), cycle_perm(n, range(0, n))});
}

PermGroup alternating_group(std::size_t n)
{
  if (n < 1)
    throw InvalidParameter("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(cycle_perm(n, {0, 1, i}));
  return PermGroup::close_generators(n, std::move(gens));
}

PermGroup dihedral_group(std::size_t order)
{
  if (order < 2 || order % 2 != 0)
    throw InvalidParameter("dihedral group order must be even and >= 2");
  std::size_t const m = order / 2;
  if (m == 1)
    return PermGroup::close_generators(2, {cycle_perm(2, {0, 1})});
  if (m == 2)
    return PermGroup::close_generators(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})});
  std::vector<Point> reflection(m);
  for (std::size_t i = 0; i < m; ++i)
    reflection[i] = static_cast<Point>((m - i) % m);
  return PermGroup::close_generators(m, {cycle_perm(m, range(0, m)), Permutation(std::move(reflection))});
}

PermGroup quaternion_group()
{
  // Elements (sign, unit) with unit 0..3 = 1,i,j,k, encoded as 4*neg + unit.
  // Right regular action of i and j.
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mult = [](int u) {
    std::vector<Point> img(8);
    for (int neg = 0; neg < 2; ++neg) {
      for (int a = 0; a < 4; ++a) {
        int const sign = (neg ? -1 : 1) * unit_sign[a][u];
        img[4 * neg + a] = static_cast<Point>(4 * (sign < 0 ? 1 : 0) + unit_prod[a][u]);
      }
    }
    return Permutation(std::move(img));
  };
  return PermGroup::close_generators(8, {right_mult(1), right_mult(2)});
}

std::string to_string(Psl2Variant v) { return v == Psl2Variant::PSL ? "psl" : "pgl"; }

namespace
{

std::uint64_t primitive_root(std::uint64_t q)
{
  auto const factors = prime_divisors(q - 1);
  for (std::uint64_t a = 2; a < q; ++a) {
    bool ok = true;
    for (auto p : factors) {
      std::uint64_t e = (q - 1) / p, r = 1, b = a;
      for (; e; e >>= 1, b = b * b % q)
        if (e & 1)
          r = r * b % q;
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return a;
  }
  throw InvalidParameter("no primitive root");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q)
{
  std::uint64_t r = 1, e = q - 2;
  for (; e; e >>= 1, a = a * a % q)
    if (e & 1)
      r = r * a % q;
  return r;
}

} // namespace

AlmostSimpleSpec make_psl2(std::uint64_t q, Psl2Variant variant, std::uint64_t max_q)
{
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw InvalidParameter("make_psl2: q must be an odd prime >= 5, got " + std::to_string(q));
  if (q > max_q)
    throw InvalidParameter("make_psl2: q = " + std::to_string(q) + " exceeds configured maximum " +
                           std::to_string(max_q));

  std::size_t const degree = q + 1;
  Point const inf = static_cast<Point>(q);
  auto mobius_map = [&](auto &&f) {
    std::vector<Point> img(degree);
    for (std::uint64_t x = 0; x <= q; ++x)
      img[x] = static_cast<Point>(f(x));
    return Permutation(std::move(img));
  };
  std::uint64_t const a = primitive_root(q);

  auto translate = mobius_map([&](std::uint64_t x) { return x == inf ? inf : (x + 1) % q; });
  auto square_scale = mobius_map([&](std::uint64_t x) { return x == inf ? inf : a * a % q * x % q; });
  auto invert = mobius_map([&](std::uint64_t x) -> std::uint64_t {
    if (x == inf)
      return 0;
    if (x == 0)
      return inf;
    return (q - inverse_mod(x, q)) % q;
  });
  std::vector<Permutation> socle_gens{translate, square_scale, invert};

  AlmostSimpleSpec spec{.name = "", .group = PermGroup::close_generators(degree, socle_gens),
                        .socle = PermGroup::close_generators(degree, socle_gens)};
  if (variant == Psl2Variant::PSL) {
    spec.name = "PSL(2," + std::to_string(q) + ")";
  } else {
    auto scale = mobius_map([&](std::uint64_t x) { return x == inf ? inf : a * x % q; });
    auto gens = socle_gens;
    gens.push_back(scale);
    spec.group = PermGroup::close_generators(degree, std::move(gens));
    spec.name = "PGL(2," + std::to_string(q) + ")";
  }
  return spec;
}

bool is_nonabelian_simple(PermGroup const &g)
{
  if (g.order() < 2 || g.is_abelian())
    return false;
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<ElementId> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId s : g.generator_ids()) {
        ElementId const y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    if (generate_subgroup(g, cls).order() != g.order())
      return false;
  }
  return true;
}

void validate_almost_simple(AlmostSimpleSpec const &spec)
{
  auto const &x = spec.group;
  auto const &s = spec.socle;
  if (x.degree() != s.degree())
    throw InvalidParameter(spec.name + ": socle and group act on different degrees");
  std::vector<ElementId> socle_ids;
  for (auto const &gen : s.generators()) {
    if (!x.contains(gen))
      throw InvalidParameter(spec.name + ": socle is not a subgroup");
    socle_ids.push_back(x.id_of(gen));
  }
  Subgroup const socle = generate_subgroup(x, socle_ids);
  for (ElementId g : x.generator_ids())
    for (ElementId t : socle_ids)
      if (!socle.contains(x.conj(t, g)))
        throw InvalidParameter(spec.name + ": socle is not normal");
  if (!is_nonabelian_simple(s))
    throw InvalidParameter(spec.name + ": socle is not nonabelian simple");
  for (ElementId c = 1; c < x.order(); ++c) {
    bool const central = std::all_of(socle_ids.begin(), socle_ids.end(),
                                     [&](ElementId t) { return x.mul(c, t) == x.mul(t, c); });
    if (central)
      throw InvalidParameter(spec.name + ": centralizer of socle is nontrivial");
  }
}

namespace
{

PermGroup single_builtin(std::string const &name, std::size_t max_order)
{
  std::smatch m;
  static std::regex const simple_re(R"(([CSAD])(\d+))");
  static std::regex const psl_re(R"((PSL|PGL)\(2,(\d+)\))");
  if (std::regex_match(name, m, simple_re)) {
    std::size_t const n = std::stoul(m[2]);
    if (n == 0 || n > 5000)
      throw ParseError("builtin parameter out of range in " + name);
    switch (m[1].str()[0]) {
    case 'C':
      return cyclic_group(n);
    case 'S':
      if (n > 9)
        throw ParseError("symmetric degree too large in " + name);
      return symmetric_group(n);
    case 'A':
      if (n > 10)
        throw ParseError("alternating degree too large in " + name);
      return alternating_group(n);
    default:
      return dihedral_group(n);
    }
  }
  if (name == "Q8")
    return quaternion_group();
  if (name == "V4")
    return direct_product(cyclic_group(2), cyclic_group(2), max_order);
  if (std::regex_match(name, m, psl_re)) {
    auto spec = make_psl2(std::stoull(m[2]), m[1] == "PSL" ? Psl2Variant::PSL : Psl2Variant::PGL,
                          std::numeric_limits<std::uint64_t>::max());
    return std::move(spec.group);
  }
  throw ParseError("unknown builtin group '" + name + "'");
}

} // namespace

PermGroup builtin_group(std::string_view name, std::size_t max_order)
{
  std::string const text(name);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == 'x') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  PermGroup g = single_builtin(parts.front(), max_order);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, single_builtin(parts[i], max_order), max_order);
  if (g.order() > max_order)
    throw OrderBoundExceeded("builtin " + text + " exceeds order bound", g.order(), 0);
  return g;
}

PermGroup parse_group_file(std::istream &in, std::size_t max_order)
{
  std::string line;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line = line.substr(first);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (degree == 0) {
      std::istringstream ls(line);
      std::string kw;
      long long d = 0;
      if (!(ls >> kw >> d) || kw != "degree" || d <= 0 || !(ls >> std::ws).eof())
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree <d>'");
      degree = static_cast<std::size_t>(d);
      continue;
    }
    try {
      gens.push_back(Permutation::from_cycles(degree, line));
    } catch (Error const &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree == 0)
    throw ParseError("group file has no 'degree' line");
  return PermGroup::close_generators(degree, std::move(gens), max_order);
}

PermGroup load_group_file(std::string const &path, std::size_t max_order)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file " + path);
  return parse_group_file(in, max_order);
}

std::string format_group_file(PermGroup const &g)
{
  std::ostringstream os;
  os << "degree " << g.degree() << '\n';
  for (auto const &gen : g.generators())
    os << gen.to_cycles() << '\n';
  return os.str();
}

namespace
{

std::map<std::uint64_t, std::string> build_simple_table()
{
  std::map<std::uint64_t, std::string> table;
  auto add = [&](std::uint64_t order, std::string const &label) {
    auto [it, inserted] = table.emplace(order, label);
    if (!inserted && it->second.find(label) == std::string::npos)
      it->second += "|" + label;
  };
  std::uint64_t fact = 60;
  for (std::uint64_t n = 5; n <= 12; ++n) {
    add(fact, "A" + std::to_string(n));
    fact *= n + 1;
  }
  for (std::uint64_t q = 4; q <= 2000; ++q) {
    auto ps = prime_divisors(q);
    if (ps.size() != 1)
      continue;
    std::uint64_t const order = q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    if (q == 4 || q == 5 || q == 9)
      continue;
    add(order, "PSL(2," + std::to_string(q) + ")");
  }
  for (auto const &[order, label] : std::initializer_list<std::pair<std::uint64_t, char const *>>{
           {5616, "PSL(3,3)"},   {6048, "PSU(3,3)"},  {7920, "M11"},     {20160, "PSL(3,4)"},
           {25920, "PSU(4,2)"},  {29120, "Sz(8)"},    {62400, "PSU(3,4)"}, {95040, "M12"},
           {126000, "PSU(3,5)"}, {175560, "J1"},      {372000, "PSL(3,5)"}, {443520, "M22"},
           {604800, "J2"}})
    add(order, label);
  return table;
}

} // namespace

std::string simple_group_label(std::uint64_t order)
{
  static auto const table = build_simple_table();
  auto it = table.find(order);
  return it == table.end() ? std::string{} : it->second;
}

} // namespace pzeta
