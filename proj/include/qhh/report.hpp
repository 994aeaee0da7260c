#pragma once

// Text and JSON renderings of analyses and verification reports. JSON keys
// are stable.

#include <string>

#include "json.hpp"
#include "qhh/formula.hpp"

namespace qhh {

std::string to_text(const Analysis& a);
nlohmann::json to_json(const Analysis& a);

std::string to_text(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace qhh
