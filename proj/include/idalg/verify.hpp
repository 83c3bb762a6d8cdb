#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idalg/io/json.hpp"

namespace idalg {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string name;
  /// Which statement of the source result the check certifies.
  std::string paper_ref;
  CheckStatus status = CheckStatus::Fail;
  io::Json detail = io::Json::object();
};

struct VerifyOptions {
  std::size_t n = 5;
  bool slow = false;
  std::uint64_t seed = 1;
};

/// "table", "facts", "corollaries", "density" or "all"; UnknownName otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);
const std::vector<std::string>& suite_names();

bool all_pass(const std::vector<CheckResult>& checks);
io::Json report_to_json(const std::string& suite, const VerifyOptions& opts, const std::vector<CheckResult>& checks);
std::string_view status_name(CheckStatus s);

}  // namespace idalg
