#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace simpcx::verifier {

enum class Status { pass, fail, undetermined };
std::string to_string(Status s);

struct ClaimCheck {
  std::string name;
  Status status = Status::fail;
  std::string detail;
};

struct RunOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 0;  // 0: one worker per hardware thread
};

struct Claim {
  std::string id;     // "thm1.1", "sec4.census", ...
  std::string title;  // one line
  std::function<std::vector<ClaimCheck>(const RunOptions&)> runner;
};

struct ClaimResult {
  std::string id;
  std::string title;
  Status status = Status::fail;
  std::vector<ClaimCheck> checks;
  double elapsed_ms = 0;
};

// Fixed order; ids are unique.
const std::vector<Claim>& registry();
const Claim* find_claim(std::string_view id);

// "all" expands to the whole registry. Throws std::invalid_argument naming the
// first unknown id. Results come back in request order whatever the number of
// workers. A runner that throws yields a failing check carrying the message.
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids, const RunOptions& opts);

// Fail beats undetermined beats pass.
Status overall(const std::vector<ClaimResult>& results);

std::string render_text(const std::vector<ClaimResult>& results, bool timing);
std::string render_json(const std::vector<ClaimResult>& results, const RunOptions& opts, bool timing);

}  // namespace simpcx::verifier
