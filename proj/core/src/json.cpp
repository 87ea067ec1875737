#include "ginirep/json.hpp"

namespace ginirep {

void to_json(nlohmann::json& j, const Partition& p) { j = std::vector<int>(p.begin(), p.end()); }

void to_json(nlohmann::json& j, const Composition& c) { j = std::vector<int>(c.begin(), c.end()); }

void to_json(nlohmann::json& j, const IntVector& v) { j = std::vector<int>(v.begin(), v.end()); }

void to_json(nlohmann::json& j, const Word& w) { j = w.letters; }

void to_json(nlohmann::json& j, const QPolynomial& p) {
    const auto c = p.coefficients();
    j = std::vector<QPolynomial::Coeff>(c.begin(), c.end());
}

void from_json(const nlohmann::json& j, QPolynomial& p) {
    p = QPolynomial(j.get<std::vector<QPolynomial::Coeff>>());
}

void to_json(nlohmann::json& j, const LorenzCurve& c) {
    j = nlohmann::json::array();
    for (const auto& s : c.samples()) j.push_back({s.j, s.value});
}

void to_json(nlohmann::json& j, const Tableau& t) { j = t.rows(); }

void to_json(nlohmann::json& j, const EmdResult& r) {
    j = nlohmann::json{{"mu", r.mu}, {"lambda", r.lambda}, {"distance", r.distance}};
}

void to_json(nlohmann::json& j, const GradedMultiplicityReport& r) {
    j = nlohmann::json{
        {"alpha", r.alpha},
        {"k", r.k},
        {"lambda", r.lambda},
        {"coefficients", r.polynomial},
        {"degree", r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr)},
        {"gini", r.gini},
        {"theorem1_holds", r.theorem1_holds},
        {"routes_agree", r.routes_agree},
    };
}

}  // namespace ginirep
