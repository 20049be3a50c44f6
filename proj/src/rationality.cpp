#include "pzeta/rationality.hpp"

#include <algorithm>
#include <numeric>

#include "pzeta/errors.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta
{

unsigned v_q(Index const &n, std::uint64_t q)
{
  if (!is_prime(q))
    throw InvalidParameter("v_q: q = " + std::to_string(q) + " is not prime");
  return valuation(n, q);
}

void FactorDescriptor::validate() const
{
  std::string const who = "factor " + std::to_string(id);
  if (r < 1)
    throw InvalidParameter(who + ": r must be >= 1");
  if (!is_prime(q))
    throw InvalidParameter(who + ": q = " + std::to_string(q) + " is not prime");
  for (auto const &[n, b] : coeffs) {
    if (n < 2)
      throw InvalidParameter(who + ": coefficient indices must be >= 2 (constant term 1 is implicit)");
    if (b == 0)
      throw InvalidParameter(who + ": zero coefficient stored at " + n.str());
  }
  if (kind == FactorKind::Cyclic) {
    Index const expected = ipow(Index(q), r);
    if (coeffs.size() > 1 || (coeffs.size() == 1 && (coeffs.begin()->first != expected || coeffs.begin()->second > 0)))
      throw InvalidParameter(who + ": cyclic factor must be 1 - c/" + expected.str() + "^s with c >= 0");
  } else if (q < 5) {
    throw InvalidParameter(who + ": PSL(2,q) needs q >= 5");
  }
}

Integer FactorDescriptor::b(Index const &n) const
{
  auto it = coeffs.find(n);
  return it == coeffs.end() ? Integer(0) : it->second;
}

DirichletPolynomial FactorDescriptor::polynomial() const
{
  DirichletPolynomial::Terms terms(coeffs.begin(), coeffs.end());
  terms[1] += 1;
  return DirichletPolynomial(std::move(terms));
}

std::string FactorDescriptor::label() const
{
  std::string base = kind == FactorKind::Cyclic
                         ? "C" + std::to_string(q)
                         : (variant == Psl2Variant::PSL ? "PSL(2," : "PGL(2,") + std::to_string(q) + ")";
  return base + " r=" + std::to_string(r);
}

ExponentFamily ExponentFamily::window(std::vector<std::uint64_t> values)
{
  ExponentFamily f;
  f.kind = Kind::Window;
  f.values = std::move(values);
  return f;
}

ExponentFamily ExponentFamily::constant(std::uint64_t r)
{
  ExponentFamily f;
  f.kind = Kind::Constant;
  f.a = r;
  return f;
}

ExponentFamily ExponentFamily::linear(std::uint64_t a, std::uint64_t b)
{
  ExponentFamily f;
  f.kind = Kind::Linear;
  f.a = a;
  f.b = b;
  return f;
}

ExponentFamily ExponentFamily::geometric(std::uint64_t c, std::uint64_t base)
{
  ExponentFamily f;
  f.kind = Kind::Geometric;
  f.c = c;
  f.base = base;
  return f;
}

std::string ExponentFamily::describe() const
{
  switch (kind) {
  case Kind::Window: {
    std::string s = "window[";
    for (std::size_t i = 0; i < values.size(); ++i)
      s += (i ? "," : "") + std::to_string(values[i]);
    return s + "]";
  }
  case Kind::Constant:
    return "constant(" + std::to_string(a) + ")";
  case Kind::Linear:
    return "linear(" + std::to_string(a) + "*i+" + std::to_string(b) + ")";
  default:
    return "geometric(" + std::to_string(c) + "*" + std::to_string(base) + "^i)";
  }
}

namespace
{

// Value repeated infinitely often by this family, if any.
std::optional<std::uint64_t> repeated_value(ExponentFamily const &f)
{
  using Kind = ExponentFamily::Kind;
  switch (f.kind) {
  case Kind::Constant:
    return f.a;
  case Kind::Linear:
    if (f.a == 0)
      return f.b;
    return std::nullopt;
  case Kind::Geometric:
    if (f.base == 1)
      return f.c;
    return std::nullopt;
  case Kind::Window: {
    std::vector<std::uint64_t> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        return sorted[i];
    return std::nullopt;
  }
  }
  return std::nullopt;
}

// True if the prime t divides no member of the family.
bool avoids(ExponentFamily const &f, std::uint64_t t)
{
  using Kind = ExponentFamily::Kind;
  switch (f.kind) {
  case Kind::Window:
    return std::none_of(f.values.begin(), f.values.end(), [&](std::uint64_t r) { return r % t == 0; });
  case Kind::Constant:
    return f.a % t != 0;
  case Kind::Linear:
    // a*i + b runs through every residue mod t unless t | a.
    return f.a % t == 0 && f.b % t != 0;
  case Kind::Geometric:
    return f.c % t != 0 && (f.base == 1 || f.base % t != 0);
  }
  return false;
}

void check_family(ExponentFamily const &f)
{
  using Kind = ExponentFamily::Kind;
  bool ok = true;
  switch (f.kind) {
  case Kind::Window:
    ok = std::all_of(f.values.begin(), f.values.end(), [](std::uint64_t r) { return r >= 1; });
    break;
  case Kind::Constant:
    ok = f.a >= 1;
    break;
  case Kind::Linear:
    ok = f.a + f.b >= 1;
    break;
  case Kind::Geometric:
    ok = f.c >= 1 && f.base >= 1;
    break;
  }
  if (!ok)
    throw InvalidParameter("exponent family " + f.describe() + " has non-positive members");
}

} // namespace

SmlVerdict sml_conditions(std::vector<ExponentFamily> const &families, std::uint64_t probe_bound)
{
  using Kind = ExponentFamily::Kind;
  SmlVerdict v;
  for (auto const &f : families) {
    check_family(f);
    if (f.kind == Kind::Window)
      v.window_relative = true;
    if (auto rep = repeated_value(f); rep && (!v.violated_at || *rep < *v.violated_at))
      v.violated_at = rep;
  }
  v.condition_i = !v.violated_at;

  // Candidate primes for (ii): with a linear family only divisors of its
  // slope qualify; otherwise any prime above every member bound works, so the
  // scan terminates.
  std::optional<std::vector<std::uint64_t>> candidates;
  std::uint64_t scan_limit = 2;
  for (auto const &f : families) {
    if (f.kind == Kind::Linear && f.a > 0) {
      auto ps = prime_divisors(f.a);
      if (candidates) {
        std::vector<std::uint64_t> keep;
        std::set_intersection(candidates->begin(), candidates->end(), ps.begin(), ps.end(), std::back_inserter(keep));
        candidates = keep;
      } else {
        candidates = ps;
      }
    }
    std::uint64_t bound = 0;
    switch (f.kind) {
    case Kind::Window:
      bound = f.values.empty() ? 0 : *std::max_element(f.values.begin(), f.values.end());
      break;
    case Kind::Constant:
      bound = f.a;
      break;
    case Kind::Linear:
      bound = std::max(f.a, f.b);
      break;
    case Kind::Geometric:
      bound = std::max(f.c, f.base);
      break;
    }
    scan_limit = std::max(scan_limit, bound + 1);
  }
  if (!candidates) {
    candidates.emplace();
    for (std::uint64_t t = 2; candidates->empty() || candidates->back() <= scan_limit; ++t)
      if (is_prime(t))
        candidates->push_back(t);
  }
  for (std::uint64_t t : *candidates) {
    if (std::all_of(families.begin(), families.end(), [&](ExponentFamily const &f) { return avoids(f, t); })) {
      v.witness_t = t;
      break;
    }
  }
  v.condition_ii = v.witness_t.has_value();

  for (std::uint64_t n = 1; n <= probe_bound; ++n) {
    std::uint64_t count = 0;
    for (auto const &f : families)
      if (f.kind == Kind::Window)
        count += static_cast<std::uint64_t>(
            std::count_if(f.values.begin(), f.values.end(), [&](std::uint64_t r) { return n % r == 0; }));
    if (count > v.max_divisor_count) {
      v.max_divisor_count = count;
      v.max_divisor_count_at = n;
    }
  }
  return v;
}

std::string to_string(LambdaVariant v)
{
  switch (v) {
  case LambdaVariant::Multiples:
    return "multiples of q";
  case LambdaVariant::OddMultiples:
    return "odd multiples of q";
  default:
    return "odd multiples of q with no prime divisor > q";
  }
}

bool in_lambda(Index const &n, std::uint64_t q, LambdaVariant variant)
{
  if (n < 1 || n % q != 0)
    return false;
  if (variant == LambdaVariant::Multiples)
    return true;
  if (n % 2 == 0)
    return false;
  if (variant == LambdaVariant::OddMultiples)
    return true;
  Index rest = n;
  for (std::uint64_t p = 3; p <= q; p += 2) {
    while (rest % p == 0)
      rest /= p;
  }
  return rest == 1;
}

WExtraction extract_w(ProductExperiment const &exp)
{
  if (!is_prime(exp.q))
    throw InvalidParameter("extract_w: q = " + std::to_string(exp.q) + " is not prime");

  std::optional<Index> w;
  for (auto const &f : exp.factors) {
    for (auto const &[n, b] : f.coeffs) {
      if (b == 0 || !in_lambda(n, exp.q, exp.lambda))
        continue;
      auto root = exact_root(n, f.r);
      if (!root || valuation(n, exp.q) != f.r)
        throw HypothesisViolated("factor " + std::to_string(f.id) + ": coefficient at " + n.str() +
                                 " is not an r-th power of q-valuation r (r = " + std::to_string(f.r) + ")");
      if (!w || *root < *w)
        w = *root;
    }
  }
  if (!w)
    throw NoWitness("extract_w: no nonzero coefficient lies in Lambda (" + to_string(exp.lambda) + ")");

  WExtraction out;
  out.w = *w;
  for (auto const &f : exp.factors) {
    Index const n = ipow(*w, f.r);
    Integer const b = f.b(n);
    if (b == 0)
      continue;
    out.i_star.push_back(f.id);
    out.f_star.push_back(DirichletPolynomial{{1, 1}, {n, b}});
  }
  return out;
}

ReplayReport replay_extraction(std::vector<FactorDescriptor> const &factors, std::uint64_t bound)
{
  if (factors.empty())
    throw EmptyInput("replay_extraction: no factors");
  for (auto const &f : factors) {
    f.validate();
    if (f.kind != FactorKind::Psl2)
      continue;
    for (auto const &[n, b] : f.coeffs)
      if (n % 2 != 0 && !exact_root(n, f.r))
        throw HypothesisViolated("factor " + std::to_string(f.id) + ": odd index " + n.str() + " is not a perfect power of exponent r = " +
                                 std::to_string(f.r));
  }

  ReplayReport rep;
  rep.bound = bound;
  rep.q = std::max_element(factors.begin(), factors.end(), [](auto const &a, auto const &b) { return a.q < b.q; })->q;
  std::uint64_t const q = rep.q;

  auto w_of = [](FactorDescriptor const &f) { return predicted_w(f.q, f.variant); };
  auto top_psl = [&](FactorDescriptor const &f) { return f.kind == FactorKind::Psl2 && f.q == q; };

  // Finiteness-lemma skeleton.
  for (auto const &f : factors)
    if (top_psl(f) && (!rep.r || f.r < *rep.r))
      rep.r = f.r;
  if (rep.r) {
    for (auto const &f : factors) {
      if (top_psl(f) && f.r == *rep.r) {
        rep.lemma_i_star.push_back(f.id);
        std::uint64_t const wx = w_of(f);
        if (!rep.lemma_w || wx < *rep.lemma_w)
          rep.lemma_w = wx;
      }
    }
    for (auto const &f : factors) {
      if (f.kind != FactorKind::Psl2)
        continue;
      for (auto const &[n, b] : f.coeffs) {
        if (n > 1 && b != 0 && in_lambda(n, q, LambdaVariant::OddMultiplesBoundedPrime) && valuation(n, q) == *rep.r &&
            (!rep.beta || n < *rep.beta))
          rep.beta = n;
      }
    }
    if (rep.beta) {
      Integer c = 0;
      for (auto const &f : factors)
        if (top_psl(f) && f.r == *rep.r && w_of(f) == *rep.lemma_w)
          c += f.b(*rep.beta);
      rep.c_beta = c;
      rep.beta_is_w_pow_r = *rep.beta == ipow(Index(*rep.lemma_w), *rep.r);
    }
  }

  // Theorem skeleton on Q(s) = prod P_i^{2}(s).
  std::vector<FactorDescriptor> projected = factors;
  for (auto &f : projected)
    std::erase_if(f.coeffs, [](auto const &kv) { return kv.first % 2 == 0; });
  try {
    auto const ex = extract_w(ProductExperiment{projected, q, LambdaVariant::OddMultiples});
    rep.w = ex.w;
    rep.i_star = ex.i_star;
    rep.h_factors = ex.f_star;
  } catch (NoWitness const &) {
  }

  if (rep.w) {
    std::vector<std::int64_t> expected;
    unsigned r_min = 0;
    bool negative = true;
    for (auto const &f : factors) {
      bool in = false;
      if (f.kind == FactorKind::Cyclic)
        in = f.q == q && *rep.w == q && !f.coeffs.empty();
      else
        in = f.q == q && *rep.w == w_of(f);
      if (in)
        expected.push_back(f.id);
      Integer const b = f.b(ipow(*rep.w, f.r));
      if (b != 0) {
        negative = negative && b < 0;
        r_min = r_min == 0 ? f.r : std::min(r_min, f.r);
      }
    }
    rep.characterization_holds = expected == rep.i_star;
    rep.all_h_coefficients_negative = negative && !rep.i_star.empty();
    if (r_min > 0) {
      Index const lead = ipow(*rep.w, r_min);
      rep.h_leading_index = lead;
      if (lead <= bound) {
        auto const h = product_truncated(rep.h_factors, lead.convert_to<std::uint64_t>());
        rep.h_leading = h.coeff(lead.convert_to<std::uint64_t>());
      }
    }
  }

  std::vector<std::uint64_t> rs;
  for (auto const &f : factors)
    if (std::find(rep.i_star.begin(), rep.i_star.end(), f.id) != rep.i_star.end())
      rs.push_back(f.r);
  rep.sml = sml_conditions({ExponentFamily::window(rs)});
  return rep;
}

namespace
{

void add_primes(PrimeSet &out, Index const &n)
{
  for (auto const &p : prime_divisors(n)) {
    auto small = to_u64(p);
    if (!small)
      throw InvalidParameter("prime divisor " + p.str() + " exceeds 64 bits");
    out.insert(*small);
  }
}

} // namespace

PrimeSupport pi_of_series(DirichletPolynomial const &p)
{
  PrimeSupport out;
  for (auto const &[n, a] : p.terms())
    if (n > 1)
      add_primes(out.primes, n);
  return out;
}

PrimeSupport pi_of_series(TruncatedSeries const &s)
{
  PrimeSupport out;
  out.lower_bound = true;
  for (auto const &[n, a] : s.terms())
    if (n > 1)
      add_primes(out.primes, Index(n));
  return out;
}

PrimeSet pi_of_group(std::size_t order)
{
  auto const ps = prime_divisors(static_cast<std::uint64_t>(order));
  return PrimeSet(ps.begin(), ps.end());
}

} // namespace pzeta
