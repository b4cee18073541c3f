#pragma once

#include "kforest/coloring.hpp"
#include "kforest/colorer.hpp"
#include "kforest/configurations.hpp"
#include "kforest/discharging.hpp"
#include "kforest/rational.hpp"

#include <json.hpp>

namespace kforest {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings, denominator always spelled out.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// A coloring is an array of colors indexed by vertex; 0 means uncolored.
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

// Lists are an array of arrays of colors.
Json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j);

Json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json trace_to_json(const ExtensionTrace& trace);
Json charge_state_to_json(const ChargeState& state);

}  // namespace kforest
