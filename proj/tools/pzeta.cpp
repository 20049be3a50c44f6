// pzeta: probabilistic zeta functions of finite groups.
//
// Exit codes
//   0  success
//   1  internal error
//   2  parse or usage error, invalid parameter, empty input
//   3  budget exceeded (lattice order, subgroup count, time, tuple count)
//   4  verification mismatch under --strict
//   5  hypothesis violated (replay input does not have the required shape)
//   6  division failed (not divisible, zero divisor, non-unit denominator)

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pzeta/errors.hpp"
#include "pzeta/io.hpp"
#include "pzeta/rationality.hpp"
#include "pzeta/structure.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

namespace
{

enum Exit
{
  ok = 0,
  internal = 1,
  usage = 2,
  budget = 3,
  mismatch = 4,
  hypothesis = 5,
  division = 6
};

struct Config
{
  std::string format = "text";
  std::size_t budget_order = LatticeBudget{}.max_order;
  std::size_t budget_subgroups = LatticeBudget{}.max_subgroups;
  double time_hint = 0;
  std::uint64_t truncate = 1000;
  bool strict = false;

  bool json() const { return format == "json"; }
  LatticeBudget budget() const { return {budget_order, budget_subgroups, time_hint}; }
};

struct GroupChoice
{
  std::string builtin;
  std::string file;
  std::optional<std::uint64_t> p, n, q;
};

void add_group_options(CLI::App *cmd, GroupChoice &g)
{
  auto *b = cmd->add_option("--builtin", g.builtin, "builtin group: Cn, Sn, An, Dn, Q8, V4, PSL(2,q), PGL(2,q), AxB");
  auto *f = cmd->add_option("--file", g.file, "group file (degree line plus one generator per line)");
  b->excludes(f);
  cmd->add_option("--p", g.p, "value substituted for a trailing 'p' in the builtin name");
  cmd->add_option("--n", g.n, "value substituted for a trailing 'n' in the builtin name");
  cmd->add_option("--q", g.q, "value substituted for 'q' in the builtin name");
}

std::string resolve_name(GroupChoice const &g)
{
  std::string name = g.builtin;
  auto substitute = [&](char letter, std::optional<std::uint64_t> const &v) {
    for (std::size_t pos; (pos = name.find(letter)) != std::string::npos;) {
      if (!v)
        throw ParseError("builtin name '" + g.builtin + "' needs --" + std::string(1, letter));
      name.replace(pos, 1, std::to_string(*v));
    }
  };
  substitute('p', g.p);
  substitute('n', g.n);
  substitute('q', g.q);
  return name;
}

std::pair<std::string, PermGroup> load_group(GroupChoice const &g)
{
  if (!g.file.empty())
    return {g.file, load_group_file(g.file)};
  if (g.builtin.empty())
    throw ParseError("choose a group with --builtin or --file");
  std::string const name = resolve_name(g);
  return {name, builtin_group(name)};
}

std::string read_text(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(std::string const &text, std::string const &where)
{
  try {
    return Json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(where + ": " + e.what());
  }
}

// "@path" reads a file holding either JSON or text notation.
DirichletPolynomial polynomial_arg(std::string const &arg)
{
  if (arg.empty() || arg[0] != '@')
    return parse_dirichlet(arg);
  std::string const text = read_text(arg.substr(1));
  auto const first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return polynomial_from_json(parse_json_text(text, arg.substr(1)));
  return parse_dirichlet(text);
}

void emit(Config const &cfg, Json const &j, std::string const &text)
{
  if (cfg.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::vector<std::uint64_t> parse_list(std::string const &s)
{
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      auto const v = std::stoull(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (std::logic_error const &) {
      throw ParseError("'" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

std::string rational_text(Rational const &x)
{
  auto const den = boost::multiprecision::denominator(x);
  return boost::multiprecision::numerator(x).str() + (den == 1 ? "" : "/" + den.str());
}

int cmd_pg(Config const &cfg, GroupChoice const &g, std::vector<unsigned> const &ks)
{
  auto [name, group] = load_group(g);
  auto const report = zeta_report(name, std::move(group), cfg.budget());
  Json j = to_json(report);
  std::ostringstream os;
  os << "P_G(s) = " << report.p_g.to_string() << '\n'
     << "order " << report.order << ", " << report.subgroups << " subgroups in " << report.classes << " classes, "
     << std::fixed << std::setprecision(3) << report.seconds << " s\n";
  if (!ks.empty()) {
    Json values = Json::object();
    for (unsigned k : ks) {
      auto const v = report.p_g.evaluate(k);
      values[std::to_string(k)] = rational_text(v);
      os << "P_G(" << k << ") = " << rational_text(v) << '\n';
    }
    j["values"] = values;
  }
  emit(cfg, j, os.str());
  return ok;
}

AlmostSimpleContext almost_simple(Config const &cfg, std::uint64_t q, std::string const &variant)
{
  return AlmostSimpleContext::build(make_psl2(q, variant_from_string(variant)), cfg.budget());
}

int cmd_pxs(Config const &cfg, std::uint64_t q, std::string const &variant, std::optional<unsigned> r,
            std::vector<std::uint64_t> const &pi)
{
  auto const ctx = almost_simple(cfg, q, variant);
  auto const p = p_xs(ctx);
  Json j{{"group", ctx.name}, {"p_xs", to_json(p)}, {"p_xs_text", p.to_string()}};
  std::string text = "P_{X,S}(s) = " + p.to_string() + "\n";
  int code = ok;
  if (r) {
    PrimeSet const primes(pi.begin(), pi.end());
    bool const holds = verify_paz(ctx, *r, primes);
    j["shift_check"] = Json{{"r", *r}, {"pi", pi}, {"holds", holds}};
    text += "shift/projection identity for r = " + std::to_string(*r) + ": " + (holds ? "OK" : "FAILED") + "\n";
    if (!holds && cfg.strict)
      code = mismatch;
  }
  emit(cfg, j, text);
  return code;
}

int cmd_omega(Config const &cfg, std::uint64_t q, std::string const &variant, bool even)
{
  auto const ctx = almost_simple(cfg, q, variant);
  auto const res = omega_set(ctx, even);
  Json j = to_json(res);
  std::ostringstream os;
  os << ctx.name << ": Omega = {";
  for (std::size_t i = 0; i < res.omega.size(); ++i)
    os << (i ? ", " : "") << res.omega[i];
  os << "}" << (even ? " (even indices included)" : "") << "\n";
  os << "w = " << (res.w ? std::to_string(*res.w) : "none");
  int code = ok;
  if (!even) {
    auto const predicted = predicted_w(q, variant_from_string(variant));
    bool const match = res.w == predicted;
    j["predicted"] = predicted;
    j["match"] = match;
    os << ", predicted " << predicted << (match ? " MATCH" : " MISMATCH");
    if (!match && cfg.strict)
      code = mismatch;
  }
  os << '\n';
  emit(cfg, j, os.str());
  return code;
}

int cmd_wtable(Config const &cfg, std::uint64_t qmin, std::uint64_t qmax, std::string const &variants,
               unsigned threads)
{
  std::vector<Psl2Variant> vs;
  std::stringstream ss(variants);
  for (std::string item; std::getline(ss, item, ',');)
    vs.push_back(variant_from_string(item));
  if (vs.empty())
    throw ParseError("--variants must name psl, pgl or both");
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = std::max<std::uint64_t>(qmin, 5); q <= qmax; ++q)
    if (is_prime(q))
      qs.push_back(q);

  auto const rows = w_table(qs, vs, cfg.budget(), threads);
  Json j = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(5) << "q" << std::setw(9) << "variant" << std::setw(10) << "computed" << std::setw(11)
     << "predicted" << "status\n";
  bool any_mismatch = false;
  for (auto const &row : rows) {
    j.push_back(to_json(row));
    os << std::setw(5) << row.q << std::setw(9) << to_string(row.variant) << std::setw(10)
       << (row.computed ? std::to_string(*row.computed) : "-") << std::setw(11) << row.predicted
       << to_string(row.status) << '\n';
    any_mismatch = any_mismatch || row.status == RowStatus::Mismatch;
  }
  emit(cfg, Json{{"rows", j}}, os.str());
  return any_mismatch && cfg.strict ? mismatch : ok;
}

int cmd_factorize(Config const &cfg, GroupChoice const &g, std::string const &series)
{
  SeriesChoice choice;
  if (series == "first")
    choice = SeriesChoice::First;
  else if (series == "last")
    choice = SeriesChoice::Last;
  else
    throw ParseError("--series must be first or last");
  auto [name, group] = load_group(g);
  auto const lattice = SubgroupLattice::build(std::move(group), cfg.budget());
  auto const f = chief_factorization(lattice, choice);
  Json j{{"group", name}, {"order", lattice.group().order()}};
  j.update(to_json(f));
  std::ostringstream os;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    auto const &fp = f.factors[i];
    os << "P_" << i + 1 << "  " << fp.factor.label << " (order " << fp.factor.order << ")";
    if (fp.frattini)
      os << " [Frattini]";
    os << ": " << fp.poly.to_string();
    if (fp.complements)
      os << "   complements " << fp.complements->str();
    os << '\n';
  }
  os << "P_G(s) = " << f.p_g.to_string() << '\n'
     << "product of factors " << (f.product_matches ? "OK" : "MISMATCH") << '\n';
  emit(cfg, j, os.str());
  return !f.product_matches && cfg.strict ? mismatch : ok;
}

int cmd_moebius(Config const &cfg, GroupChoice const &g)
{
  auto [name, group] = load_group(g);
  auto const lattice = SubgroupLattice::build(std::move(group), cfg.budget());
  Json j{{"group", name}};
  j.update(lattice_to_json(lattice));
  std::ostringstream os;
  os << name << ": " << lattice.size() << " subgroups, " << lattice.classes().size() << " classes\n";
  os << std::left << std::setw(7) << "class" << std::setw(8) << "order" << std::setw(6) << "size" << std::setw(8)
     << "mu" << "\n";
  for (std::size_t c = 0; c < lattice.classes().size(); ++c) {
    NodeId const h = lattice.classes()[c].front();
    os << std::setw(7) << c << std::setw(8) << lattice.order(h) << std::setw(6) << lattice.classes()[c].size()
       << std::setw(8) << lattice.moebius(h).str() << (lattice.is_maximal(h) ? "maximal" : "")
       << (lattice.is_normal(h) ? (lattice.is_maximal(h) ? " normal" : "normal") : "") << '\n';
  }
  emit(cfg, j, os.str());
  return ok;
}

int cmd_replay(Config const &cfg, std::string const &path, std::uint64_t bound)
{
  auto const factors = descriptors_from_json(parse_json_text(read_text(path), path));
  auto const rep = replay_extraction(factors, bound);
  std::ostringstream os;
  auto ids = [](std::vector<std::int64_t> const &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
  };
  os << "q = " << rep.q << ", r = " << (rep.r ? std::to_string(*rep.r) : "-") << '\n';
  os << "lemma: I* = " << ids(rep.lemma_i_star) << ", w = " << (rep.lemma_w ? std::to_string(*rep.lemma_w) : "-")
     << ", beta = " << (rep.beta ? rep.beta->str() : "-") << ", c_beta = " << (rep.c_beta ? rep.c_beta->str() : "-")
     << (rep.beta ? (rep.beta_is_w_pow_r ? " (beta = w^r)" : " (beta != w^r)") : "") << '\n';
  os << "theorem: w = " << (rep.w ? rep.w->str() : "none") << ", I* = " << ids(rep.i_star) << '\n';
  for (auto const &h : rep.h_factors)
    os << "  (" << h.to_string() << ")\n";
  if (rep.h_leading)
    os << "H coefficient at " << rep.h_leading_index->str() << ": " << rep.h_leading->str() << '\n';
  os << "characterization of I*: " << (rep.characterization_holds ? "OK" : "FAILED") << '\n';
  os << "condition (i): "
     << (rep.sml.condition_i ? std::string("holds") : "violated at " + std::to_string(*rep.sml.violated_at))
     << ", condition (ii): "
     << (rep.sml.condition_ii ? "t = " + std::to_string(*rep.sml.witness_t) : std::string("no witness"))
     << (rep.sml.window_relative ? " (window-relative)" : "") << '\n';
  emit(cfg, to_json(rep), os.str());
  bool const bad = !rep.characterization_holds || (rep.c_beta && !rep.lemma_i_star.empty() && *rep.c_beta >= 0);
  return bad && cfg.strict ? mismatch : ok;
}

int cmd_smlcheck(Config const &cfg, std::vector<std::string> const &windows, std::vector<std::uint64_t> const &constants,
                 std::vector<std::string> const &linears, std::vector<std::string> const &geometrics,
                 std::uint64_t probe)
{
  std::vector<ExponentFamily> families;
  for (auto const &w : windows)
    families.push_back(ExponentFamily::window(parse_list(w)));
  for (auto c : constants)
    families.push_back(ExponentFamily::constant(c));
  auto pair_of = [](std::string const &s, char const *what) {
    auto v = parse_list(s);
    if (v.size() != 2)
      throw ParseError(std::string(what) + " expects two comma-separated integers, got '" + s + "'");
    return v;
  };
  for (auto const &l : linears) {
    auto v = pair_of(l, "--linear");
    families.push_back(ExponentFamily::linear(v[0], v[1]));
  }
  for (auto const &g : geometrics) {
    auto v = pair_of(g, "--geometric");
    families.push_back(ExponentFamily::geometric(v[0], v[1]));
  }
  if (families.empty())
    throw EmptyInput("smlcheck: give at least one --window, --constant, --linear or --geometric family");
  auto const v = sml_conditions(families, probe);
  Json fam = Json::array();
  for (auto const &f : families)
    fam.push_back(f.describe());
  Json j{{"families", fam}, {"verdict", to_json(v)}};
  std::ostringstream os;
  for (auto const &f : families)
    os << f.describe() << '\n';
  os << "condition (i): " << (v.condition_i ? std::string("holds") : "violated at " + std::to_string(*v.violated_at))
     << '\n'
     << "condition (ii): "
     << (v.condition_ii ? "holds, t = " + std::to_string(*v.witness_t) : std::string("violated")) << '\n';
  if (v.window_relative)
    os << "verdict is relative to the given windows; max #{i : r_i | n} = " << v.max_divisor_count << " at n = "
       << v.max_divisor_count_at << '\n';
  emit(cfg, j, os.str());
  return ok;
}

int cmd_product(Config const &cfg, std::vector<std::string> const &args, bool truncated)
{
  if (args.empty())
    throw EmptyInput("product: no factors given");
  std::vector<DirichletPolynomial> factors;
  for (auto const &a : args)
    factors.push_back(polynomial_arg(a));
  if (truncated) {
    auto const s = product_truncated(factors, cfg.truncate);
    emit(cfg, to_json(s), s.to_string() + "\n");
    return ok;
  }
  DirichletPolynomial p = DirichletPolynomial::one();
  for (auto const &f : factors)
    p = p * f;
  emit(cfg, to_json(p), p.to_string() + "\n");
  return ok;
}

int cmd_divide(Config const &cfg, std::string const &num, std::string const &den, bool series)
{
  auto const p = polynomial_arg(num);
  auto const d = polynomial_arg(den);
  if (series) {
    auto const s = expand_rational(RationalSeries{p, d}, cfg.truncate);
    emit(cfg, Json{{"series", to_json(RationalSeries{p, d})}, {"expansion", to_json(s)}}, s.to_string() + "\n");
    return ok;
  }
  auto const quotient = divide_exact(p, d);
  emit(cfg, to_json(quotient), quotient.to_string() + "\n");
  return ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Probabilistic zeta functions of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget-order", cfg.budget_order, "largest group order the lattice builder accepts")
      ->envname("PZETA_BUDGET_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-subgroups", cfg.budget_subgroups, "largest subgroup count")->check(CLI::PositiveNumber);
  app.add_option("--time-hint", cfg.time_hint, "wall-clock limit per lattice in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--truncate", cfg.truncate, "truncation bound for series output")->check(CLI::PositiveNumber);
  app.add_flag("--strict", cfg.strict, "exit 4 on any verification mismatch");

  GroupChoice group;
  std::vector<unsigned> ks;
  auto *pg = app.add_subcommand("pg", "P_G(s) from the subgroup lattice");
  add_group_options(pg, group);
  pg->add_option("--k", ks, "also evaluate P_G at these positive integers")->delimiter(',');

  std::uint64_t q = 5;
  std::string variant = "psl";
  std::optional<unsigned> paz_r;
  std::vector<std::uint64_t> paz_pi;
  auto *pxs = app.add_subcommand("pxs", "P_{X,S}(s) for X = PSL(2,q) or PGL(2,q)");
  pxs->add_option("--q", q, "prime q")->required();
  pxs->add_option("--variant", variant, "psl or pgl");
  pxs->add_option("--r", paz_r, "check the shift/projection identity for this r");
  pxs->add_option("--pi", paz_pi, "primes for the projection (with --r)")->delimiter(',');

  bool even = false;
  auto *omega = app.add_subcommand("omega", "Omega(X) and w(X) for X = PSL(2,q) or PGL(2,q)");
  omega->add_option("--q", q, "prime q")->required();
  omega->add_option("--variant", variant, "psl or pgl");
  omega->add_flag("--even", even, "also admit even indices");

  std::uint64_t qmin = 5, qmax = 13;
  std::string variants = "psl,pgl";
  unsigned threads = 0;
  auto *wtable = app.add_subcommand("wtable", "computed versus predicted w(X) for each prime q");
  wtable->add_option("--qmin", qmin, "smallest q");
  wtable->add_option("--qmax", qmax, "largest q");
  wtable->add_option("--variants", variants, "comma-separated: psl, pgl");
  wtable->add_option("--threads", threads, "worker threads (0 = all cores)");
  wtable->add_flag("--strict", cfg.strict, "exit 4 on any mismatch");

  std::string series = "first";
  auto *factorize = app.add_subcommand("factorize", "factor P_G(s) along a chief series");
  add_group_options(factorize, group);
  factorize->add_option("--series", series, "first or last minimal normal subgroup at each step");

  auto *moeb = app.add_subcommand("moebius", "subgroup lattice with Moebius values");
  add_group_options(moeb, group);

  std::string factors_path;
  std::uint64_t bound = 1'000'000;
  auto *replay = app.add_subcommand("replay", "run the w-extraction pipeline on factor descriptors");
  replay->add_option("factors", factors_path, "JSON file of factor descriptors")->required();
  replay->add_option("--bound", bound, "largest index expanded for H(s)")->check(CLI::PositiveNumber);

  std::vector<std::string> windows, linears, geometrics;
  std::vector<std::uint64_t> constants;
  std::uint64_t probe = 1000;
  auto *sml = app.add_subcommand("smlcheck", "decide the finiteness conditions on exponent families");
  sml->add_option("--window", windows, "explicit values r_1,r_2,...");
  sml->add_option("--constant", constants, "r repeated infinitely often");
  sml->add_option("--linear", linears, "a,b for r_i = a*i + b");
  sml->add_option("--geometric", geometrics, "c,base for r_i = c*base^i");
  sml->add_option("--probe", probe, "largest n probed for divisor counts");

  std::vector<std::string> operands;
  bool truncated = false;
  auto *product = app.add_subcommand("product", "multiply Dirichlet polynomials ('@file' reads a file)");
  product->add_option("factors", operands, "polynomials, e.g. '1 - 2/3^s'")->required();
  product->add_flag("--truncated", truncated, "expand only up to --truncate");

  std::string num, den;
  bool as_series = false;
  auto *divide = app.add_subcommand("divide", "exact quotient of Dirichlet polynomials");
  divide->add_option("numerator", num)->required();
  divide->add_option("denominator", den)->required();
  divide->add_flag("--series", as_series, "expand num/den as a series up to --truncate");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*pg)
      return cmd_pg(cfg, group, ks);
    if (*pxs)
      return cmd_pxs(cfg, q, variant, paz_r, paz_pi);
    if (*omega)
      return cmd_omega(cfg, q, variant, even);
    if (*wtable)
      return cmd_wtable(cfg, qmin, qmax, variants, threads);
    if (*factorize)
      return cmd_factorize(cfg, group, series);
    if (*moeb)
      return cmd_moebius(cfg, group);
    if (*replay)
      return cmd_replay(cfg, factors_path, bound);
    if (*sml)
      return cmd_smlcheck(cfg, windows, constants, linears, geometrics, probe);
    if (*product)
      return cmd_product(cfg, operands, truncated);
    if (*divide)
      return cmd_divide(cfg, num, den, as_series);
  } catch (BudgetExceeded const &e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (HypothesisViolated const &e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return hypothesis;
  } catch (NotDivisible const &e) {
    std::cerr << "not divisible: " << e.what() << '\n';
    return division;
  } catch (ZeroDivisor const &e) {
    std::cerr << "zero divisor: " << e.what() << '\n';
    return division;
  } catch (NonUnitDenominator const &e) {
    std::cerr << "non-unit denominator: " << e.what() << '\n';
    return division;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (InvalidParameter const &e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return usage;
  } catch (EmptyInput const &e) {
    std::cerr << "empty input: " << e.what() << '\n';
    return usage;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}
