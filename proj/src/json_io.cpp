#include "cylq/json_io.hpp"

namespace cylq {

namespace {

bool read_int_list(const Json& node, std::vector<long long>& out, std::string& error,
                   const char* what) {
    if (!node.is_array()) {
        error = std::string(what) + " must be an array of integers";
        return false;
    }
    out.clear();
    for (const auto& x : node) {
        if (!x.is_number_integer()) {
            error = std::string(what) + " must contain only integers";
            return false;
        }
        out.push_back(x.get<long long>());
    }
    return true;
}

} // namespace

Json to_json(const CylindricPartition& cp) {
    Json rows = Json::array();
    for (const auto& r : cp.rows) rows.push_back(r.parts());
    return Json{{"profile", cp.profile.entries()}, {"rows", rows}};
}

ParsedCylindric cylindric_from_json(const Json& doc,
                                    const std::optional<Profile>& expected_profile) {
    ParsedCylindric res;
    if (!doc.is_object() || !doc.contains("rows")) {
        res.error = "expected an object with a \"rows\" field";
        return res;
    }

    std::optional<Profile> profile = expected_profile;
    if (doc.contains("profile")) {
        std::vector<long long> raw;
        if (!read_int_list(doc["profile"], raw, res.error, "profile")) return res;
        std::vector<int> entries(raw.begin(), raw.end());
        try {
            Profile parsed(entries);
            if (profile && !(parsed == *profile)) {
                res.error = "document profile " + parsed.to_string() +
                            " disagrees with requested profile " + profile->to_string();
                return res;
            }
            profile = parsed;
        } catch (const std::invalid_argument& e) {
            res.error = e.what();
            return res;
        }
    }
    if (!profile) {
        res.error = "no profile given (neither in the document nor via --profile)";
        return res;
    }

    if (!doc["rows"].is_array()) {
        res.error = "rows must be an array of integer arrays";
        return res;
    }
    std::vector<std::vector<long long>> rows;
    for (const auto& r : doc["rows"]) {
        std::vector<long long> row;
        if (!read_int_list(r, row, res.error, "row")) return res;
        rows.push_back(std::move(row));
    }

    auto validated = validate_cylindric(rows, *profile);
    if (!validated.ok()) {
        res.error = validated.failure->message;
        return res;
    }
    res.value = std::move(*validated.value);
    return res;
}

Json to_json(const PartitionPair& pair) {
    return Json{{"mu", pair.mu.parts()},
                {"beta", pair.beta.parts()},
                {"flavor", flavor_name(pair.flavor)}};
}

ParsedPair pair_from_json(const Json& doc) {
    ParsedPair res;
    if (!doc.is_object() || !doc.contains("mu") || !doc.contains("beta")) {
        res.error = "expected an object with \"mu\" and \"beta\" fields";
        return res;
    }
    std::vector<long long> mu, beta;
    if (!read_int_list(doc["mu"], mu, res.error, "mu")) return res;
    if (!read_int_list(doc["beta"], beta, res.error, "beta")) return res;

    PairFlavor flavor = PairFlavor::DistinctOdd;
    if (doc.contains("flavor")) {
        if (!doc["flavor"].is_string()) {
            res.error = "flavor must be a string";
            return res;
        }
        auto parsed = flavor_from_name(doc["flavor"].get<std::string>());
        if (!parsed) {
            res.error = "unknown flavor \"" + doc["flavor"].get<std::string>() + "\"";
            return res;
        }
        flavor = *parsed;
    }

    try {
        res.value = PartitionPair{Partition(mu), Partition(beta), flavor};
    } catch (const std::invalid_argument& e) {
        res.error = e.what();
    }
    return res;
}

Json to_json(const MoveTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps)
        steps.push_back(Json{{"direction", s.forward ? "forward" : "backward"},
                             {"pair", s.pair_index},
                             {"amount", s.amount},
                             {"beta_part", s.beta_part}});
    return steps;
}

Json to_json(const VerificationReport& report) {
    Json j{{"identity", report.identity},
           {"order", report.order},
           {"pass", report.pass},
           {"first_diff", report.first_diff < 0 ? Json(nullptr) : Json(report.first_diff)},
           {"ms", report.millis}};
    if (!report.lhs.empty()) j["lhs"] = report.lhs;
    if (!report.rhs.empty()) j["rhs"] = report.rhs;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

Json to_json(const TruncatedSeries<BigInt>& s) {
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).str());
    return coeffs;
}

Json to_json(const TruncatedSeries<QuadElem>& s) {
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n)
        coeffs.push_back(Json::array({s.coeff(n).a.str(), s.coeff(n).b.str()}));
    return coeffs;
}

Json to_json(const TruncatedSeries<TrackedPoly>& s) {
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) {
        Json poly = Json::array();
        for (int d = 0; d <= s.coeff(n).degree(); ++d)
            poly.push_back(s.coeff(n).coeff(d).str());
        coeffs.push_back(std::move(poly));
    }
    return coeffs;
}

Json refined_to_json(const RefinedCounts& table) {
    Json rows = Json::array();
    for (int n = 0; n <= table.max_weight(); ++n) {
        Json by_largest = Json::array();
        for (int m = 0; m <= n; ++m) by_largest.push_back(table.at(m, n));
        rows.push_back(Json{{"weight", n}, {"by_largest", std::move(by_largest)}});
    }
    return rows;
}

} // namespace cylq
