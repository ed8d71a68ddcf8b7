#include "ldpcopt/json_io.hpp"

namespace ldpcopt {

json dd_to_json(const DegreeDistribution& d, const std::string& side) {
    json coeffs = json::object();
    for (const auto& [deg, c] : d.coeffs()) coeffs[std::to_string(deg)] = c;
    return json{{"side", side}, {"coeffs", coeffs}};
}

DegreeDistribution dd_from_json(const json& j, std::string* side) {
    if (side) *side = j.at("side").get<std::string>();
    std::map<int, Scalar> coeffs;
    for (const auto& [key, val] : j.at("coeffs").items())
        coeffs[std::stoi(key)] = val.get<Scalar>();
    return DegreeDistribution(std::move(coeffs));
}

json certificate_to_json(const GramCertificate& cert) {
    const int m = static_cast<int>(cert.B.rows());
    std::vector<Scalar> flat;
    flat.reserve(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) flat.push_back(cert.B(i, j));
    return json{{"q", cert.q},
                {"B", flat},
                {"residual", cert.reconstruction_residual},
                {"min_eig", cert.min_eigenvalue}};
}

GramCertificate certificate_from_json(const json& j) {
    GramCertificate cert;
    cert.q = j.at("q").get<int>();
    const auto flat = j.at("B").get<std::vector<Scalar>>();
    const int m = cert.q + 1;
    if (flat.size() != static_cast<size_t>(m) * m)
        throw std::runtime_error("certificate JSON: B size does not match q");
    cert.B = Matrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) cert.B(i, k) = flat[static_cast<size_t>(i) * m + k];
    cert.reconstruction_residual = j.at("residual").get<Scalar>();
    cert.min_eigenvalue = j.at("min_eig").get<Scalar>();
    return cert;
}

json de_report_to_json(const DeReport& rep) {
    return json{{"epsilon_tested", rep.epsilon_tested},
                {"converged", rep.converged},
                {"final_erasure", rep.final_erasure},
                {"iterations_used", rep.iterations_used},
                {"threshold_estimate", rep.threshold_estimate},
                {"grid_min", rep.grid_min}};
}

DeReport de_report_from_json(const json& j) {
    DeReport rep;
    rep.epsilon_tested = j.at("epsilon_tested").get<Scalar>();
    rep.converged = j.at("converged").get<bool>();
    rep.final_erasure = j.at("final_erasure").get<Scalar>();
    rep.iterations_used = j.at("iterations_used").get<int>();
    rep.threshold_estimate = j.at("threshold_estimate").get<Scalar>();
    rep.grid_min = j.at("grid_min").get<Scalar>();
    return rep;
}

json design_result_to_json(const DesignResult& res) {
    json j{{"mode", to_string(res.mode)},
           {"status", to_string(res.solver_status)},
           {"solver", {{"iterations", res.solver_iterations}, {"gap", res.solver_gap}}}};
    if (res.solver_status != SolveStatus::Optimal) {
        j["notes"] = res.notes;
        return j;
    }
    j["lambda"] = dd_to_json(res.ensemble.lambda, "lambda");
    j["rho"] = dd_to_json(res.ensemble.rho, "rho");
    j["t_star"] = res.t_star;
    j["epsilon"] = res.epsilon_used;
    j["rate"] = res.rate;
    j["delta"] = res.delta;
    j["objective"] = res.objective;
    j["de"] = de_report_to_json(res.de);
    if (res.has_certificate) j["certificate"] = certificate_to_json(res.certificate);
    if (res.rate_floor_used) j["rate_floor"] = *res.rate_floor_used;
    if (!res.notes.empty()) j["notes"] = res.notes;
    return j;
}

StoredResult design_result_from_json(const json& j) {
    StoredResult out;
    out.mode = j.at("mode").get<std::string>();
    out.status = j.at("status").get<std::string>();
    if (out.status != "Optimal") return out;
    out.ensemble.lambda = dd_from_json(j.at("lambda"));
    out.ensemble.rho = dd_from_json(j.at("rho"));
    out.t_star = j.at("t_star").get<Scalar>();
    out.epsilon = j.at("epsilon").get<Scalar>();
    out.rate = j.at("rate").get<Scalar>();
    out.delta = j.at("delta").get<Scalar>();
    out.de = de_report_from_json(j.at("de"));
    if (j.contains("certificate")) {
        out.certificate = certificate_from_json(j.at("certificate"));
        out.has_certificate = true;
    }
    return out;
}

}  // namespace ldpcopt
