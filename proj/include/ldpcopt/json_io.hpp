#pragma once

#include <string>

#include <json.hpp>

#include "ldpcopt/optimizer.hpp"

namespace ldpcopt {

using nlohmann::json;

json dd_to_json(const DegreeDistribution& d, const std::string& side);
DegreeDistribution dd_from_json(const json& j, std::string* side = nullptr);

json certificate_to_json(const GramCertificate& cert);
GramCertificate certificate_from_json(const json& j);

json de_report_to_json(const DeReport& rep);
DeReport de_report_from_json(const json& j);

json design_result_to_json(const DesignResult& res);

// Rebuilds the pieces of a result that verification needs (distributions,
// certificate, reported scalars). Throws on schema violations.
struct StoredResult {
    std::string mode;
    Ensemble ensemble;
    Scalar t_star = 0.0;
    Scalar epsilon = 0.0;
    Scalar rate = 0.0;
    Scalar delta = 0.0;
    std::string status;
    GramCertificate certificate;
    bool has_certificate = false;
    DeReport de;
};
StoredResult design_result_from_json(const json& j);

}  // namespace ldpcopt
