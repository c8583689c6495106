#pragma once

#include "permcode/enumerate.hpp"

#include <json.hpp>

#include <string>

namespace permcode {

/// {n, check, pass, counterexample?, table?, cases, details}
nlohmann::json to_json(const Report& report);
nlohmann::json table_json(const PairTable& table);

std::string to_text(const Report& report);
/// Dense matrix (rows d, columns e) followed by the polynomial line.
std::string table_text(const PairTable& table);

/// Report wrapping a double Eulerian table; passes iff it sums to n!.
Report table_report(const PairTable& table, Side side);

}  // namespace permcode
