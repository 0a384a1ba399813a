#include "cycleforge/limits.hpp"

#include <cstdlib>
#include <string>

#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {

std::size_t env_override(std::size_t fallback) {
  const char* raw = std::getenv("CYCLEFORGE_MAX_VERTICES");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw Error(ErrorCode::InvalidParameters, std::string("CYCLEFORGE_MAX_VERTICES=") + raw);
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::size_t search_vertex_limit() { return env_override(kDefaultSearchVertexLimit); }

std::size_t enumeration_vertex_limit() { return env_override(kDefaultEnumerationVertexLimit); }

void require_order_at_most(std::size_t order, std::size_t limit, const char* what) {
  if (order > limit) {
    throw Error(ErrorCode::ResourceLimit, std::string(what) + " refused on " + std::to_string(order) +
                                              " vertices (limit " + std::to_string(limit) + ")");
  }
}

}  // namespace cycleforge
