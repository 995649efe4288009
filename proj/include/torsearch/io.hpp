#ifndef TORSEARCH_IO_HPP
#define TORSEARCH_IO_HPP

#include <string>

#include <json.hpp>

#include "torsearch/arith.hpp"
#include "torsearch/curve.hpp"
#include "torsearch/residues.hpp"
#include "torsearch/search.hpp"

namespace torsearch {

using json = nlohmann::json;

// field elements serialize as plain integers over prime fields and as
// residue vectors (constant coefficient first) over extensions
json elem_to_json(const FieldSpec& spec, std::uint64_t code);
json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldSpecPtr& spec, const json& j);

/// accepts either a JSON coefficient array ("[1,2,1,4]") or a human-readable
/// expression ("4*x^3+x^2+2*x+1"); integer coefficients only.
Poly parse_poly(const FieldSpecPtr& spec, const std::string& text);

json params_to_json(const SearchParams& p);
json solution_to_json(const SearchParams& p, const SolutionTuple& s);
std::string solution_to_jsonl_line(const SearchParams& p, const SolutionTuple& s);

json census_to_json(const CensusReport& rep);
std::string census_csv_header();
std::string census_csv_row(const CensusReport& rep);

std::string tables_csv_header();
std::string tables_csv_row(const DegreeSummary& s);

std::string charsum_csv_header();
std::string charsum_csv_row(const CharSumResult& r);

json curve_summary_to_json(const ClassGroupSummary& s);
json certificate_to_json(const OrderCertificate& c, const FieldSpec& spec);

} // namespace torsearch

#endif
