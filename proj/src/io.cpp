#include "pzeta/io.hpp"

#include <limits>

#include "pzeta/errors.hpp"

namespace pzeta
{

namespace
{

Json const &field(Json const &j, char const *key)
{
  if (!j.is_object())
    throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <class F>
auto guarded(char const *what, F &&f)
{
  try {
    return f();
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class T>
Json opt(std::optional<T> const &v)
{
  return v ? Json(*v) : Json(nullptr);
}

Json opt_big(std::optional<Integer> const &v) { return v ? Json(v->str()) : Json(nullptr); }

Json opt_index(std::optional<Index> const &v) { return v ? index_to_json(*v) : Json(nullptr); }

template <class T>
std::optional<T> get_opt(Json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    return std::nullopt;
  return it->get<T>();
}

std::optional<Index> get_opt_index(Json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    return std::nullopt;
  return index_from_json(*it);
}

std::optional<Integer> get_opt_integer(Json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    return std::nullopt;
  return integer_from_json(*it);
}

Json polys(std::vector<DirichletPolynomial> const &ps)
{
  Json a = Json::array();
  for (auto const &p : ps)
    a.push_back(to_json(p));
  return a;
}

RowStatus status_from_string(std::string const &s)
{
  if (s == "MATCH")
    return RowStatus::Match;
  if (s == "MISMATCH")
    return RowStatus::Mismatch;
  if (s == "SKIPPED")
    return RowStatus::Skipped;
  throw ParseError("unknown row status '" + s + "'");
}

} // namespace

Json index_to_json(Index const &n)
{
  if (auto small = to_u64(n))
    return Json(*small);
  return Json(n.str());
}

Index index_from_json(Json const &j)
{
  if (j.is_number_unsigned())
    return Index(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto const v = j.get<std::int64_t>();
    if (v < 1)
      throw ParseError("index must be positive");
    return Index(v);
  }
  if (j.is_string()) {
    Index n = integer_from_json(j);
    if (n < 1)
      throw ParseError("index must be positive");
    return n;
  }
  throw ParseError("index must be a number or a decimal string");
}

Integer integer_from_json(Json const &j)
{
  if (j.is_number_unsigned())
    return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (!j.is_string())
    throw ParseError("integer must be a decimal string");
  auto const s = j.get<std::string>();
  std::size_t const digits_from = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (s.size() == digits_from ||
      s.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw ParseError("'" + s + "' is not a decimal integer");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Json to_json(DirichletPolynomial const &p)
{
  Json terms = Json::array();
  for (auto const &[n, a] : p.terms())
    terms.push_back(Json{{"n", index_to_json(n)}, {"a", a.str()}});
  return Json{{"terms", terms}};
}

DirichletPolynomial polynomial_from_json(Json const &j)
{
  return guarded("polynomial", [&] {
    DirichletPolynomial::Terms terms;
    Index prev = 0;
    for (auto const &t : field(j, "terms")) {
      Index n = index_from_json(field(t, "n"));
      if (n <= prev)
        throw ParseError("polynomial terms must be strictly ascending in n");
      prev = n;
      terms[n] = integer_from_json(field(t, "a"));
    }
    return DirichletPolynomial(std::move(terms));
  });
}

Json to_json(RationalSeries const &f) { return Json{{"num", to_json(f.numerator)}, {"den", to_json(f.denominator)}}; }

RationalSeries rational_series_from_json(Json const &j)
{
  return RationalSeries{polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den"))};
}

Json to_json(TruncatedSeries const &s)
{
  Json terms = Json::array();
  for (auto const &[n, a] : s.terms())
    terms.push_back(Json{{"n", n}, {"a", a.str()}});
  return Json{{"bound", s.bound()}, {"terms", terms}};
}

Psl2Variant variant_from_string(std::string const &s)
{
  if (s == "psl" || s == "PSL")
    return Psl2Variant::PSL;
  if (s == "pgl" || s == "PGL")
    return Psl2Variant::PGL;
  throw ParseError("unknown variant '" + s + "' (expected psl or pgl)");
}

Json to_json(FactorDescriptor const &f)
{
  Json kind = f.kind == FactorKind::Cyclic
                  ? Json{{"cyclic", f.q}}
                  : Json{{"psl2", Json{{"q", f.q}, {"variant", to_string(f.variant)}}}};
  Json coeffs = Json::array();
  for (auto const &[n, b] : f.coeffs)
    coeffs.push_back(Json{{"n", index_to_json(n)}, {"b", b.str()}});
  return Json{{"id", f.id}, {"kind", kind}, {"r", f.r}, {"coeffs", coeffs}};
}

FactorDescriptor descriptor_from_json(Json const &j)
{
  return guarded("factor descriptor", [&] {
    FactorDescriptor f;
    f.id = field(j, "id").get<std::int64_t>();
    auto const &kind = field(j, "kind");
    if (kind.contains("cyclic")) {
      f.kind = FactorKind::Cyclic;
      f.q = kind["cyclic"].get<std::uint64_t>();
    } else if (kind.contains("psl2")) {
      auto const &p = kind["psl2"];
      f.kind = FactorKind::Psl2;
      f.q = field(p, "q").get<std::uint64_t>();
      f.variant = p.contains("variant") ? variant_from_string(p["variant"].get<std::string>()) : Psl2Variant::PSL;
    } else {
      throw ParseError("factor " + std::to_string(f.id) + ": kind must be {\"cyclic\":q} or {\"psl2\":{...}}");
    }
    auto const r = field(j, "r").get<std::int64_t>();
    if (r < 1 || r > std::numeric_limits<unsigned>::max())
      throw ParseError("factor " + std::to_string(f.id) + ": r must be a positive integer");
    f.r = static_cast<unsigned>(r);
    for (auto const &c : field(j, "coeffs")) {
      Index n = index_from_json(field(c, "n"));
      Integer b = integer_from_json(field(c, "b"));
      if (!f.coeffs.emplace(n, b).second)
        throw ParseError("factor " + std::to_string(f.id) + ": index " + n.str() + " listed twice");
    }
    f.validate();
    return f;
  });
}

std::vector<FactorDescriptor> descriptors_from_json(Json const &j)
{
  Json const &list = j.is_object() ? field(j, "factors") : j;
  if (!list.is_array())
    throw ParseError("expected an array of factor descriptors");
  std::vector<FactorDescriptor> out;
  for (auto const &f : list)
    out.push_back(descriptor_from_json(f));
  return out;
}

Json to_json(std::vector<FactorDescriptor> const &factors)
{
  Json a = Json::array();
  for (auto const &f : factors)
    a.push_back(to_json(f));
  return Json{{"factors", a}};
}

Json to_json(ZetaReport const &r, bool timing)
{
  Json j{{"group", r.group_id},
         {"order", r.order},
         {"p_g", to_json(r.p_g)},
         {"p_g_text", r.p_g.to_string()},
         {"subgroups", r.subgroups},
         {"classes", r.classes}};
  if (timing)
    j["seconds"] = r.seconds;
  return j;
}

ZetaReport zeta_report_from_json(Json const &j)
{
  return guarded("zeta report", [&] {
    ZetaReport r;
    r.group_id = field(j, "group").get<std::string>();
    r.order = field(j, "order").get<std::size_t>();
    r.p_g = polynomial_from_json(field(j, "p_g"));
    r.subgroups = field(j, "subgroups").get<std::size_t>();
    r.classes = field(j, "classes").get<std::size_t>();
    r.seconds = j.value("seconds", 0.0);
    return r;
  });
}

Json to_json(ChiefFactorization const &f)
{
  Json factors = Json::array();
  for (auto const &fp : f.factors) {
    auto const &c = fp.factor;
    factors.push_back(Json{{"label", c.label},
                           {"order", c.order},
                           {"simple_order", c.simple_order},
                           {"r", c.r},
                           {"abelian", c.abelian},
                           {"upper", c.upper},
                           {"lower", c.lower},
                           {"frattini", fp.frattini},
                           {"complements", opt_big(fp.complements)},
                           {"polynomial", to_json(fp.poly)},
                           {"polynomial_text", fp.poly.to_string()}});
  }
  return Json{{"factors", factors},
              {"p_g", to_json(f.p_g)},
              {"p_g_text", f.p_g.to_string()},
              {"product_matches", f.product_matches}};
}

ChiefFactorization chief_factorization_from_json(Json const &j)
{
  return guarded("chief factorization", [&] {
    ChiefFactorization out;
    for (auto const &x : field(j, "factors")) {
      FactorPolynomial fp;
      fp.factor.label = field(x, "label").get<std::string>();
      fp.factor.order = field(x, "order").get<std::uint64_t>();
      fp.factor.simple_order = field(x, "simple_order").get<std::uint64_t>();
      fp.factor.r = field(x, "r").get<unsigned>();
      fp.factor.abelian = field(x, "abelian").get<bool>();
      fp.factor.upper = field(x, "upper").get<NodeId>();
      fp.factor.lower = field(x, "lower").get<NodeId>();
      fp.frattini = field(x, "frattini").get<bool>();
      fp.complements = get_opt_integer(x, "complements");
      fp.poly = polynomial_from_json(field(x, "polynomial"));
      out.factors.push_back(std::move(fp));
    }
    out.p_g = polynomial_from_json(field(j, "p_g"));
    out.product_matches = field(j, "product_matches").get<bool>();
    return out;
  });
}

Json to_json(OmegaResult const &r)
{
  return Json{{"group", r.name}, {"odd_only", r.odd_only}, {"omega", r.omega}, {"w", opt(r.w)}};
}

OmegaResult omega_result_from_json(Json const &j)
{
  return guarded("omega result", [&] {
    OmegaResult r;
    r.name = field(j, "group").get<std::string>();
    r.odd_only = field(j, "odd_only").get<bool>();
    r.omega = field(j, "omega").get<std::vector<std::uint64_t>>();
    r.w = get_opt<std::uint64_t>(j, "w");
    return r;
  });
}

Json to_json(WTableRow const &row, bool timing)
{
  Json j{{"q", row.q},
         {"variant", to_string(row.variant)},
         {"computed", opt(row.computed)},
         {"predicted", row.predicted},
         {"status", to_string(row.status)},
         {"match", row.status == RowStatus::Match},
         {"subgroups", row.subgroups}};
  if (!row.note.empty())
    j["note"] = row.note;
  if (timing)
    j["seconds"] = row.seconds;
  return j;
}

WTableRow wtable_row_from_json(Json const &j)
{
  return guarded("w-table row", [&] {
    WTableRow row;
    row.q = field(j, "q").get<std::uint64_t>();
    row.variant = variant_from_string(field(j, "variant").get<std::string>());
    row.computed = get_opt<std::uint64_t>(j, "computed");
    row.predicted = field(j, "predicted").get<std::uint64_t>();
    row.status = status_from_string(field(j, "status").get<std::string>());
    row.subgroups = field(j, "subgroups").get<std::size_t>();
    row.note = j.value("note", std::string());
    row.seconds = j.value("seconds", 0.0);
    return row;
  });
}

Json to_json(SmlVerdict const &v)
{
  return Json{{"condition_i", v.condition_i},
              {"violated_at", opt(v.violated_at)},
              {"condition_ii", v.condition_ii},
              {"witness_t", opt(v.witness_t)},
              {"window_relative", v.window_relative},
              {"max_divisor_count", v.max_divisor_count},
              {"max_divisor_count_at", v.max_divisor_count_at}};
}

SmlVerdict sml_verdict_from_json(Json const &j)
{
  return guarded("SML verdict", [&] {
    SmlVerdict v;
    v.condition_i = field(j, "condition_i").get<bool>();
    v.violated_at = get_opt<std::uint64_t>(j, "violated_at");
    v.condition_ii = field(j, "condition_ii").get<bool>();
    v.witness_t = get_opt<std::uint64_t>(j, "witness_t");
    v.window_relative = field(j, "window_relative").get<bool>();
    v.max_divisor_count = field(j, "max_divisor_count").get<std::uint64_t>();
    v.max_divisor_count_at = field(j, "max_divisor_count_at").get<std::uint64_t>();
    return v;
  });
}

Json to_json(ReplayReport const &r)
{
  Json c_sign = nullptr;
  if (r.c_beta)
    c_sign = *r.c_beta < 0 ? "negative" : (*r.c_beta == 0 ? "zero" : "positive");
  return Json{
      {"q", r.q},
      {"r", opt(r.r)},
      {"lemma",
       Json{{"lambda", to_string(LambdaVariant::OddMultiplesBoundedPrime)},
            {"i_star", r.lemma_i_star},
            {"w", opt(r.lemma_w)},
            {"beta", opt_index(r.beta)},
            {"c_beta", opt_big(r.c_beta)},
            {"c_beta_sign", c_sign},
            {"beta_is_w_pow_r", r.beta_is_w_pow_r}}},
      {"theorem",
       Json{{"lambda", to_string(LambdaVariant::OddMultiples)},
            {"w", opt_index(r.w)},
            {"i_star", r.i_star},
            {"h_factors", polys(r.h_factors)},
            {"h_leading_index", opt_index(r.h_leading_index)},
            {"h_leading", opt_big(r.h_leading)},
            {"characterization_holds", r.characterization_holds},
            {"all_h_coefficients_negative", r.all_h_coefficients_negative}}},
      {"sml", to_json(r.sml)},
      {"bound", r.bound}};
}

ReplayReport replay_report_from_json(Json const &j)
{
  return guarded("replay report", [&] {
    ReplayReport r;
    r.q = field(j, "q").get<std::uint64_t>();
    r.r = get_opt<unsigned>(j, "r");
    auto const &lemma = field(j, "lemma");
    r.lemma_i_star = field(lemma, "i_star").get<std::vector<std::int64_t>>();
    r.lemma_w = get_opt<std::uint64_t>(lemma, "w");
    r.beta = get_opt_index(lemma, "beta");
    r.c_beta = get_opt_integer(lemma, "c_beta");
    r.beta_is_w_pow_r = field(lemma, "beta_is_w_pow_r").get<bool>();
    auto const &thm = field(j, "theorem");
    r.w = get_opt_index(thm, "w");
    r.i_star = field(thm, "i_star").get<std::vector<std::int64_t>>();
    for (auto const &p : field(thm, "h_factors"))
      r.h_factors.push_back(polynomial_from_json(p));
    r.h_leading_index = get_opt_index(thm, "h_leading_index");
    r.h_leading = get_opt_integer(thm, "h_leading");
    r.characterization_holds = field(thm, "characterization_holds").get<bool>();
    r.all_h_coefficients_negative = field(thm, "all_h_coefficients_negative").get<bool>();
    r.sml = sml_verdict_from_json(field(j, "sml"));
    r.bound = field(j, "bound").get<std::uint64_t>();
    return r;
  });
}

Json lattice_to_json(SubgroupLattice const &lattice)
{
  Json nodes = Json::array();
  for (NodeId i = 0; i < lattice.size(); ++i) {
    auto const &h = lattice.node(i);
    nodes.push_back(Json{{"id", i},
                         {"order", h.order()},
                         {"class", lattice.class_of(i)},
                         {"moebius", lattice.moebius(i).str()},
                         {"maximal", lattice.is_maximal(i)},
                         {"normal", lattice.is_normal(i)},
                         {"elements", h.elements}});
  }
  Json edges = Json::array();
  for (auto const &[a, b] : lattice.hasse_edges())
    edges.push_back(Json::array({a, b}));
  return Json{{"order", lattice.group().order()},
              {"degree", lattice.group().degree()},
              {"subgroups", lattice.size()},
              {"nodes", nodes},
              {"hasse", edges},
              {"classes", lattice.classes()}};
}

} // namespace pzeta
