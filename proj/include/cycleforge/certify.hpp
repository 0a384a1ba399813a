#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cycleforge/cycle_search.hpp"
#include "cycleforge/graph.hpp"

namespace cycleforge {

inline constexpr const char* kToolName = "cycleforge";
inline constexpr const char* kToolVersion = "1.0.0";
// Above this order the certificate stores a SHA-256 of the graph6 text.
inline constexpr std::size_t kEmbedGraph6MaxOrder = 1024;

enum class Check { Cubic, Girth, Connectivity, HamCount, Census, Smith, Thomason, UniqueNonham };

std::string check_name(Check c);
Check parse_check(const std::string& name);
std::vector<Check> parse_checks(const std::string& comma_list);

struct Expectations {
  std::optional<bool> cubic;
  std::optional<std::size_t> girth;  // 0 means acyclic
  std::optional<std::size_t> connectivity;
  std::optional<std::uint64_t> ham_count;
  std::optional<std::uint64_t> census_count;
  std::optional<std::size_t> circumference;
  std::optional<std::size_t> circumference_at_most;
};

struct VerifyOptions {
  std::set<Check> checks;
  // When set, the connectivity check only decides kappa >= k.
  std::optional<std::size_t> min_connectivity;
  Expectations expect;
  SearchConfig search;
  std::string label;
};

struct CertificateResult {
  std::string json;  // pretty-printed, stable key order
  bool passed = true;
  std::vector<std::string> failures;  // one message per unmet expectation
  bool resource_limited = false;
};

// Runs the requested checks. Exceptions other than ResourceLimit propagate;
// a ResourceLimit in one check is recorded as "refused" and flags the result.
CertificateResult certify(const Graph& g, const VerifyOptions& options);

// Removes every "runtime_ms" field, for byte comparisons across runs.
std::string strip_runtime_fields(const std::string& certificate_json);

std::string sha256_hex(std::string_view data);

}  // namespace cycleforge
