#pragma once

#include <nlohmann/json.hpp>

#include "hurwitz/idealizer.hpp"
#include "hurwitz/roots_oracle.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/suites.hpp"

namespace hurwitz {

using Json = nlohmann::json;

/// Exact numbers are written as strings ("6.17", "1/3"); decimals under "display" are for reading only.
Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const MinorSequence& m);
Json to_json(const StabilityVerdict& v);
Json to_json(const HermiteBiehlerClass& c);
Json to_json(const RootSet& rs);
Json to_json(const HalfPlaneSummary& hp);
Json to_json(const MembershipReport& r);
Json to_json(const CounterexampleRecord& r);
Json to_json(const SuiteReport& r);
Json to_json(const ExampleReport& r);
/// Run manifest: config, counts and acceptance rate; records go to the findings file.
Json manifest_json(const ProbeReport& r);

Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
MinorSequence minors_from_json(const Json& j);
/// Restores f, g, product and minor evidence; roots are recomputed by the caller if needed.
CounterexampleRecord record_from_json(const Json& j);

}  // namespace hurwitz
