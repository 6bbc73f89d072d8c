#pragma once

#include <json.hpp>

#include "nefres/classifier.hpp"

namespace nefres {

using Json = nlohmann::json;

/// An integer on Picard rank one, [a, b] on Q2.
Json to_json(const PicClass& p);
PicClass pic_from_json(const Json& j);

Json to_json(const BundleSym& b);
Json to_json(const ExcCollection& c);
Json to_json(const ValidationReport& r);

/// {e: matrix, dmin}; table_from_json also takes a bare matrix.
Json to_json(const ExponentTable& t);
ExponentTable table_from_json(const Json& j);

Json to_json(const Term& t);
Json to_json(const std::vector<Term>& ts);
Json to_json(const ChernData& c);
Json to_json(const Check& c);
Json checks_json(const VerifyReport& r);

/// Integer when constant and integral, otherwise its string form.
Json to_json(const LinExpr& x);

Json to_json(const ResolutionCandidate& c);
Json to_json(const CaseCheck& c);
Json to_json(const SolverCheck& c);
Json to_json(const TablesReport& r);
Json to_json(const SolveResult& r);
Json to_json(const SectionBound& b);
Json to_json(const TwoStepResult& r);
Json to_json(const Conclusion& c);
Json to_json(const DminBounds& b);

}  // namespace nefres
