#ifndef PZETA_IO_HPP
#define PZETA_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pzeta/dirichlet.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/rationality.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta
{

// Field order is insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

// Indices go out as JSON numbers while they fit 64 bits and as decimal
// strings beyond; both forms are accepted on input. Coefficients are always
// decimal strings.
Json index_to_json(Index const &n);
Index index_from_json(Json const &j);
Integer integer_from_json(Json const &j);

// {"terms":[{"n":..,"a":".."}]} ascending in n.
Json to_json(DirichletPolynomial const &p);
DirichletPolynomial polynomial_from_json(Json const &j);

// {"num":..,"den":..}
Json to_json(RationalSeries const &f);
RationalSeries rational_series_from_json(Json const &j);

Json to_json(TruncatedSeries const &s);

// {"id":..,"kind":{"cyclic":q}|{"psl2":{"q":q,"variant":"psl"|"pgl"}},
//  "r":..,"coeffs":[{"n":..,"b":".."}]}
Json to_json(FactorDescriptor const &f);
FactorDescriptor descriptor_from_json(Json const &j);
// A bare array or {"factors":[...]}.
std::vector<FactorDescriptor> descriptors_from_json(Json const &j);
Json to_json(std::vector<FactorDescriptor> const &factors);

// Timing fields are omitted unless asked for, keeping golden files stable.
Json to_json(ZetaReport const &r, bool timing = false);
ZetaReport zeta_report_from_json(Json const &j);

Json to_json(ChiefFactorization const &f);
ChiefFactorization chief_factorization_from_json(Json const &j);

Json to_json(OmegaResult const &r);
OmegaResult omega_result_from_json(Json const &j);

Json to_json(WTableRow const &row, bool timing = false);
WTableRow wtable_row_from_json(Json const &j);

Json to_json(SmlVerdict const &v);
SmlVerdict sml_verdict_from_json(Json const &j);

Json to_json(ReplayReport const &r);
ReplayReport replay_report_from_json(Json const &j);

// Nodes with element lists, Hasse edges, conjugacy classes, Moebius values.
Json lattice_to_json(SubgroupLattice const &lattice);

Psl2Variant variant_from_string(std::string const &s);

} // namespace pzeta

#endif // PZETA_IO_HPP
