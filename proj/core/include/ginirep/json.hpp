#pragma once

// JSON forms of the value types, through nlohmann::json's ADL hooks.
//
//   Partition / Composition / IntVector / Word -> [int, ...]
//   QPolynomial       -> ascending coefficient array, [] for zero
//   LorenzCurve       -> [[j, value], ...]
//   EmdResult         -> {"mu": [...], "lambda": [...], "distance": d}
//   GradedMultiplicityReport ->
//     {"alpha", "k", "lambda", "coefficients", "degree" (int or null),
//      "gini", "theorem1_holds", "routes_agree"}

#include <nlohmann/json.hpp>

#include "ginirep/emd.hpp"
#include "ginirep/gini.hpp"
#include "ginirep/kostka_foulkes.hpp"
#include "ginirep/partition.hpp"
#include "ginirep/qpoly.hpp"
#include "ginirep/tableau.hpp"

namespace ginirep {

void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const Composition& c);
void to_json(nlohmann::json& j, const IntVector& v);
void to_json(nlohmann::json& j, const Word& w);
void to_json(nlohmann::json& j, const QPolynomial& p);
void to_json(nlohmann::json& j, const LorenzCurve& c);
void to_json(nlohmann::json& j, const Tableau& t);
void to_json(nlohmann::json& j, const EmdResult& r);
void to_json(nlohmann::json& j, const GradedMultiplicityReport& r);

void from_json(const nlohmann::json& j, QPolynomial& p);

}  // namespace ginirep
