#pragma once

#include "famcake/allocation.hpp"
#include "famcake/fairness.hpp"
#include "famcake/instance.hpp"
#include "famcake/oracle.hpp"
#include "famcake/protocols.hpp"

#include <json.hpp>

#include <string>

namespace famcake::jsonio {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const ValueMeasure& m);
json to_json(const Piece& p);
json to_json(const Allocation& x);
json to_json(const Instance& inst);
json to_json(const FairnessReport& report);
json to_json(const ProtocolResult& result);
json to_json(const OracleResult& result);

// Parsers throw std::invalid_argument naming the offending field path.
Rational rational_from_json(const json& j, const std::string& path);
ValueMeasure measure_from_json(const json& j, const std::string& path);
Piece piece_from_json(const json& j, const std::string& path);
Allocation allocation_from_json(const json& j, const std::string& path);
Instance instance_from_json(const json& j, const std::string& path = "$");

// Text-level helpers; JSON syntax errors propagate as
// nlohmann::json::parse_error (with byte location), schema errors as
// std::invalid_argument.
Instance parse_instance(const std::string& text);
Allocation parse_allocation(const std::string& text);
std::string dump(const json& j);

} // namespace famcake::jsonio
