#include "qcf/json_io.hpp"

#include "qcf/errors.hpp"

namespace qcf {

Json laurent_to_json(const Laurent& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json t;
        t["q"] = key.first;
        t["y"] = key.second;
        t["c"] = c.to_string();
        terms.push_back(std::move(t));
    }
    Json j;
    j["g"] = f.granularity();
    j["terms"] = std::move(terms);
    return j;
}

Laurent laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("terms"))
        throw DomainError("laurent_from_json: malformed object");
    int g = j.at("g").get<int>();
    Laurent acc;
    for (const Json& t : j.at("terms")) {
        Rational c = Rational::from_string(t.at("c").get<std::string>());
        acc += Laurent::monomial(c, t.at("q").get<long long>(), t.at("y").get<long long>(), g);
    }
    return acc;
}

Json zseries_to_json(const ZSeries& f) {
    Json coeffs = Json::array();
    for (int n = 0; n <= f.order(); ++n) coeffs.push_back(laurent_to_json(f.coeff(n)));
    Json j;
    j["order"] = f.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

ZSeries zseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw DomainError("zseries_from_json: malformed object");
    int order = j.at("order").get<int>();
    const Json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw DomainError("zseries_from_json: coefficient count mismatch");
    ZSeries f(order);
    for (int n = 0; n <= order; ++n) f.set_coeff(n, laurent_from_json(coeffs.at(static_cast<std::size_t>(n))));
    return f;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

} // namespace qcf
