#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "arrfiber/arrangement.hpp"
#include "arrfiber/resolution.hpp"
#include "arrfiber/local.hpp"
#include "arrfiber/verify.hpp"

namespace arrfiber {

inline constexpr std::string_view kVersion = "0.1.0";

// Integers within +-2^53 become JSON numbers; larger magnitudes become
// decimal strings so binary64 consumers never round them.
nlohmann::json integer_json(const mpz_class& value);
// Rationals are always "p/q" strings in lowest terms ("n" when integral).
nlohmann::json rational_json(const mpq_class& value);

struct ReportInput {
  std::string source;  // "catalog:<name>", "file:<path>" or "profile"
  Profile profile;
  std::optional<std::int64_t> q;
};

// Full invariants report. Keys are sorted (nlohmann::json default), so the
// serialization is deterministic; only the "input" member depends on how the
// profile was supplied. "hodge" is present iff q is known.
nlohmann::json invariants_report(const ReportInput& input);

std::string invariants_table(const nlohmann::json& report);

nlohmann::json local_report(std::int64_t r, std::int64_t d);
nlohmann::json graph_report(const ResolutionGraph& graph);
nlohmann::json oracle_report_json(const OracleReport& report);

}  // namespace arrfiber
