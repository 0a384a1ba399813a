#include "cycleforge/origin_io.hpp"

#include <sstream>

#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {
constexpr const char* kMagic = "cycleforge-origin";
constexpr int kVersion = 1;
}  // namespace

std::string to_origin_text(const VertexOrigin& origin) {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << '\n';
  out << origin.order() << ' ' << origin.host_order << ' ' << origin.fiber_order << '\n';
  for (std::size_t v = 0; v < origin.order(); ++v) {
    out << v << ' ' << origin.entries[v].host << ' ' << origin.entries[v].guest << '\n';
  }
  return out.str();
}

VertexOrigin from_origin_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) {
    throw Error(ErrorCode::MalformedInput, "origin file lacks the cycleforge-origin header");
  }
  if (version != kVersion) {
    throw Error(ErrorCode::MalformedInput, "unsupported origin file version " + std::to_string(version));
  }
  std::size_t order = 0;
  VertexOrigin origin;
  if (!(in >> order >> origin.host_order >> origin.fiber_order)) {
    throw Error(ErrorCode::MalformedInput, "origin file lacks the size line");
  }
  origin.entries.resize(order);
  std::vector<char> seen(order, 0);
  for (std::size_t k = 0; k < order; ++k) {
    long long v = 0;
    long long i = 0;
    long long j = 0;
    if (!(in >> v >> i >> j)) throw Error(ErrorCode::MalformedInput, "origin file is truncated");
    if (v < 0 || static_cast<std::size_t>(v) >= order || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::MalformedInput, "origin file lists vertex " + std::to_string(v) + " badly");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    origin.entries[static_cast<std::size_t>(v)] = {static_cast<Vertex>(i), static_cast<Vertex>(j)};
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::MalformedInput, "trailing data in origin file");
  validate_origin(origin, order);
  return origin;
}

}  // namespace cycleforge
