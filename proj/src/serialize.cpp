#include "twinrow/serialize.hpp"

#include <stdexcept>

namespace twinrow {

namespace {

template <class Poly>
Json polynomial_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (std::size_t i = 0; i < e.size(); ++i)
            exps.push_back(e[i]);
        out.push_back({{"exponents", std::move(exps)}, {"coeff", c.get_str()}});
    }
    return out;
}

template <class Poly>
Poly polynomial_from_json(const Json& j, std::size_t nvars) {
    std::vector<typename Poly::Term> terms;
    for (const auto& item : j) {
        const auto& exps = item.at("exponents");
        if (exps.size() != nvars)
            throw std::invalid_argument("exponent vector of the wrong length");
        ExponentVector e(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            e[i] = exps[i].get<ExponentVector::value_type>();
        terms.emplace_back(std::move(e), Integer(item.at("coeff").get<std::string>()));
    }
    return Poly::from_terms(nvars, std::move(terms));
}

} // namespace

Json to_json(const XPolynomial& p) { return polynomial_to_json(p); }
Json to_json(const ZPolynomial& p) { return polynomial_to_json(p); }

Json to_json(const SchurExpansion& e) {
    Json out = Json::array();
    for (const auto& [p, c] : e.terms())
        out.push_back({{"partition", to_json(p)}, {"coefficient", c.get_str()}});
    return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const FrobeniusCoordinates& fc) { return {{"arms", fc.arms}, {"legs", fc.legs}}; }

Json to_json(const VerificationReport& r) {
    Json out = {{"identity", r.identity},
                {"n", r.n},
                {"index", r.index ? Json(*r.index) : Json(nullptr)},
                {"status", r.passed() ? "pass" : "fail"}};
    if (r.first_mismatch)
        out["first_mismatch"] = *r.first_mismatch;
    return out;
}

XPolynomial x_polynomial_from_json(const Json& j, std::size_t nvars) { return polynomial_from_json<XPolynomial>(j, nvars); }

ZPolynomial z_polynomial_from_json(const Json& j, std::size_t nvars) { return polynomial_from_json<ZPolynomial>(j, nvars); }

SchurExpansion schur_expansion_from_json(const Json& j) {
    SchurExpansion out;
    for (const auto& item : j)
        out.add(Partition(item.at("partition").get<std::vector<int>>()), Integer(item.at("coefficient").get<std::string>()));
    return out;
}

} // namespace twinrow
