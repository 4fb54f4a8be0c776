#ifndef CYLQ_JSON_IO_HPP
#define CYLQ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cylq/bijection.hpp"
#include "cylq/cylindric.hpp"
#include "cylq/enumerate.hpp"
#include "cylq/identities.hpp"
#include "cylq/series.hpp"

namespace cylq {

using Json = nlohmann::json;

/* {"profile":[1,1],"rows":[[7,4,4,3],[6,5,4]]} — canonical rows on output;
 * input rows may carry trailing zeros, which validation strips. */
Json to_json(const CylindricPartition& cp);

struct ParsedCylindric {
    std::optional<CylindricPartition> value;
    std::string error;  // parse or validation failure, one line
};

/* The profile may come from the document or the caller; when both are
 * present they must agree. */
ParsedCylindric cylindric_from_json(const Json& doc,
                                    const std::optional<Profile>& expected_profile);

/* {"mu":[...],"beta":[...],"flavor":"distinct-odd"} */
Json to_json(const PartitionPair& pair);

struct ParsedPair {
    std::optional<PartitionPair> value;
    std::string error;
};

ParsedPair pair_from_json(const Json& doc);

Json to_json(const MoveTrace& trace);
Json to_json(const VerificationReport& report);

/* Series serialize as arrays of decimal strings; QuadElem coefficients as
 * [a, b] pairs, tracked polynomials as arrays by ascending tracked degree. */
Json to_json(const TruncatedSeries<BigInt>& s);
Json to_json(const TruncatedSeries<QuadElem>& s);
Json to_json(const TruncatedSeries<TrackedPoly>& s);

Json refined_to_json(const RefinedCounts& table);

} // namespace cylq

#endif
