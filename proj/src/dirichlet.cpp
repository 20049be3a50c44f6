#include "pzeta/dirichlet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pzeta/errors.hpp"

namespace pzeta
{

DirichletPolynomial::DirichletPolynomial(std::initializer_list<std::pair<Index, Integer>> terms)
{
  for (auto const &[n, a] : terms) {
    if (n < 1)
      throw InvalidParameter("Dirichlet index must be >= 1, got " + n.str());
    terms_[n] += a;
  }
  canonicalize();
}

DirichletPolynomial::DirichletPolynomial(Terms terms) : terms_(std::move(terms))
{
  if (!terms_.empty() && terms_.begin()->first < 1)
    throw InvalidParameter("Dirichlet index must be >= 1, got " + terms_.begin()->first.str());
  canonicalize();
}

DirichletPolynomial DirichletPolynomial::one() { return constant(1); }

DirichletPolynomial DirichletPolynomial::constant(Integer c) { return monomial(1, std::move(c)); }

DirichletPolynomial DirichletPolynomial::monomial(Index n, Integer c)
{
  Terms t;
  t.emplace(std::move(n), std::move(c));
  return DirichletPolynomial(std::move(t));
}

void DirichletPolynomial::canonicalize()
{
  std::erase_if(terms_, [](auto const &kv) { return kv.second == 0; });
}

Integer DirichletPolynomial::coeff(Index const &n) const
{
  auto it = terms_.find(n);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool DirichletPolynomial::is_one() const
{
  return terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second == 1;
}

std::optional<Index> DirichletPolynomial::min_index() const
{
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Index> DirichletPolynomial::max_index() const
{
  if (terms_.empty())
    return std::nullopt;
  return terms_.rbegin()->first;
}

Rational DirichletPolynomial::evaluate(unsigned k) const
{
  Rational sum = 0;
  for (auto const &[n, a] : terms_)
    sum += Rational(a, ipow(n, k));
  return sum;
}

namespace
{

std::string render_term(Index const &n, Integer const &a, bool first)
{
  std::string out;
  Integer mag = abs(a);
  if (first)
    out = a < 0 ? "-" : "";
  else
    out = a < 0 ? " - " : " + ";
  out += mag.str();
  if (n != 1)
    out += "/" + n.str() + "^s";
  return out;
}

} // namespace

std::string DirichletPolynomial::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto const &[n, a] : terms_) {
    out += render_term(n, a, first);
    first = false;
  }
  return out;
}

DirichletPolynomial DirichletPolynomial::operator-() const
{
  DirichletPolynomial r = *this;
  for (auto &kv : r.terms_)
    kv.second = -kv.second;
  return r;
}

DirichletPolynomial add(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  auto terms = p.terms();
  for (auto const &[n, a] : q.terms())
    terms[n] += a;
  return DirichletPolynomial(std::move(terms));
}

DirichletPolynomial sub(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  return add(p, -q);
}

DirichletPolynomial mul(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  DirichletPolynomial::Terms terms;
  for (auto const &[d, a] : p.terms())
    for (auto const &[e, b] : q.terms())
      terms[d * e] += a * b;
  return DirichletPolynomial(std::move(terms));
}

DirichletPolynomial operator+(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  return add(p, q);
}

DirichletPolynomial operator-(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  return sub(p, q);
}

DirichletPolynomial operator*(DirichletPolynomial const &p, DirichletPolynomial const &q)
{
  return mul(p, q);
}

DirichletPolynomial divide_exact(DirichletPolynomial const &p, DirichletPolynomial const &d,
                                 std::optional<Index> support_bound)
{
  if (d.is_zero())
    throw ZeroDivisor("divide_exact: divisor is zero");
  if (p.is_zero())
    return {};

  Index const bound = support_bound ? *support_bound : *p.max_index();
  auto const &[d0, lead] = *d.terms().begin();

  DirichletPolynomial::Terms quotient;
  DirichletPolynomial::Terms rest = p.terms();
  while (!rest.empty()) {
    auto const [n, a] = *rest.begin();
    if (n % d0 != 0)
      throw NotDivisible("divide_exact: index " + n.str() + " not a multiple of " + d0.str());
    Index const m = n / d0;
    if (m > bound)
      throw NotDivisible("divide_exact: quotient support exceeds bound " + bound.str());
    if (a % lead != 0)
      throw NotDivisible("divide_exact: coefficient " + a.str() + " not divisible by " + lead.str());
    Integer const c = a / lead;
    quotient.emplace(m, c);
    for (auto const &[e, b] : d.terms()) {
      auto &slot = rest[m * e];
      slot -= c * b;
      if (slot == 0)
        rest.erase(m * e);
    }
  }
  return DirichletPolynomial(std::move(quotient));
}

DirichletPolynomial project_pi(DirichletPolynomial const &p, PrimeSet const &pi)
{
  DirichletPolynomial::Terms terms;
  for (auto const &[n, a] : p.terms()) {
    bool const killed = std::any_of(pi.begin(), pi.end(), [&](std::uint64_t prime) { return n % prime == 0; });
    if (!killed)
      terms.emplace(n, a);
  }
  return DirichletPolynomial(std::move(terms));
}

DirichletPolynomial shift_r(DirichletPolynomial const &p, unsigned r)
{
  if (r < 1)
    throw InvalidParameter("shift_r: r must be >= 1");
  DirichletPolynomial::Terms terms;
  for (auto const &[m, a] : p.terms())
    terms.emplace(ipow(m, r), a * ipow(m, r - 1));
  return DirichletPolynomial(std::move(terms));
}

namespace
{

class PolyParser
{
public:
  explicit PolyParser(std::string_view text)
  {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        text_.push_back(c);
  }

  DirichletPolynomial parse()
  {
    if (text_.empty())
      fail("empty input");
    DirichletPolynomial::Terms terms;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Integer a = number();
      Index n = 1;
      if (pos_ < text_.size() && peek() == '/') {
        ++pos_;
        n = number();
        expect("^s");
        if (n < 1)
          fail("index must be >= 1");
      }
      terms[n] += sign * a;
    }
    return DirichletPolynomial(std::move(terms));
  }

private:
  char peek() const { return text_[pos_]; }

  Integer number()
  {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return Integer(text_.substr(start, pos_ - start));
  }

  void expect(std::string_view token)
  {
    if (text_.compare(pos_, token.size(), token) != 0)
      fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  [[noreturn]] void fail(std::string const &msg) const
  {
    throw ParseError("dirichlet polynomial at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

} // namespace

DirichletPolynomial parse_dirichlet(std::string_view text) { return PolyParser(text).parse(); }

TruncatedSeries::TruncatedSeries(std::uint64_t bound) : bound_(bound)
{
  if (bound < 1)
    throw InvalidParameter("truncation bound must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::uint64_t bound, DirichletPolynomial const &p)
: TruncatedSeries(bound)
{
  for (auto const &[n, a] : p.terms()) {
    if (n > bound)
      break;
    terms_.emplace(n.convert_to<std::uint64_t>(), a);
  }
}

Integer TruncatedSeries::coeff(std::uint64_t n) const
{
  if (n < 1 || n > bound_)
    throw InvalidParameter("index " + std::to_string(n) + " outside truncation window [1, " +
                           std::to_string(bound_) + "]");
  auto it = terms_.find(n);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::set(std::uint64_t n, Integer c)
{
  if (n < 1 || n > bound_)
    throw InvalidParameter("index " + std::to_string(n) + " outside truncation window");
  if (c == 0)
    terms_.erase(n);
  else
    terms_[n] = std::move(c);
}

DirichletPolynomial TruncatedSeries::to_polynomial() const
{
  DirichletPolynomial::Terms terms;
  for (auto const &[n, a] : terms_)
    terms.emplace(n, a);
  return DirichletPolynomial(std::move(terms));
}

std::string TruncatedSeries::to_string() const
{
  return to_polynomial().to_string() + " + O(" + std::to_string(bound_ + 1) + "^-s)";
}

TruncatedSeries mul(TruncatedSeries const &a, TruncatedSeries const &b)
{
  if (a.bound() != b.bound())
    throw InvalidParameter("truncated product needs equal bounds");
  std::uint64_t const bound = a.bound();
  std::map<std::uint64_t, Integer> acc;
  for (auto const &[d, x] : a.terms()) {
    for (auto const &[e, y] : b.terms()) {
      if (e > bound / d)
        break;
      acc[d * e] += x * y;
    }
  }
  TruncatedSeries out(bound);
  for (auto &[n, c] : acc)
    out.set(n, std::move(c));
  return out;
}

TruncatedSeries product_truncated(std::vector<DirichletPolynomial> const &factors, std::uint64_t bound)
{
  TruncatedSeries acc(bound, DirichletPolynomial::one());
  for (auto const &f : factors) {
    if (f.coeff(1) != 1)
      throw FactorNotUnital("product_truncated: factor " + f.to_string() + " has constant term != 1");
    // Factor is 1 + (terms beyond the window): contributes nothing.
    if (f.size() == 1 || std::next(f.terms().begin())->first > bound)
      continue;
    acc = mul(acc, TruncatedSeries(bound, f));
  }
  return acc;
}

TruncatedSeries expand_rational(RationalSeries const &f, std::uint64_t bound)
{
  Integer const lead = f.denominator.coeff(1);
  if (lead != 1 && lead != -1)
    throw NonUnitDenominator("expand_rational: denominator constant term is " + lead.str());

  std::vector<std::pair<std::uint64_t, Integer>> den;
  for (auto const &[d, b] : f.denominator.terms()) {
    if (d == 1)
      continue;
    if (d > bound)
      break;
    den.emplace_back(d.convert_to<std::uint64_t>(), b);
  }

  // den_1 c_n = a_n - sum_{d | n, d > 1} den_d c_{n/d}
  std::vector<Integer> c(bound + 1);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    Integer v = f.numerator.coeff(n);
    for (auto const &[d, b] : den) {
      if (d > n)
        break;
      if (n % d == 0)
        v -= b * c[n / d];
    }
    c[n] = v * lead;
  }

  TruncatedSeries out(bound);
  for (std::uint64_t n = 1; n <= bound; ++n)
    out.set(n, std::move(c[n]));
  return out;
}

} // namespace pzeta
