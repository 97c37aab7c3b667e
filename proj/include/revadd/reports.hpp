#pragma once

/// @file reports.hpp
/// @brief Text and JSON rendering of analysis results. Both forms are
///        deterministic: identical inputs produce byte-identical output.

#include "revadd/analysis.hpp"

#include <string>

namespace revadd {

[[nodiscard]] std::string metrics_text(const std::string& circuit, const MetricsRecord& record);
[[nodiscard]] std::string metrics_json(const std::string& circuit, const MetricsRecord& record);

[[nodiscard]] std::string comparison_text(const ComparisonTable& table);
[[nodiscard]] std::string comparison_json(const ComparisonTable& table);

[[nodiscard]] std::string fault_text(const FaultReport& report);
[[nodiscard]] std::string fault_json(const FaultReport& report);

[[nodiscard]] std::string verify_text(const VerifyReport& report);
[[nodiscard]] std::string verify_json(const VerifyReport& report);

/// "2 MIG" or "1 F2G + 8 MIG + 4 NFT" in gate-kind declaration order.
[[nodiscard]] std::string inventory_to_string(const Inventory& inventory);

} // namespace revadd
