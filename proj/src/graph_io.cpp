#include "cycleforge/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedGraph6, why); }

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(sizeof(kGraph6Header) - 1);
  if (text.empty()) malformed("empty input");
  for (char c : text) {
    if (c < 63 || c > 126) malformed("byte outside 63..126");
  }
  auto value = [&](std::size_t pos) { return static_cast<std::uint64_t>(text[pos] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) malformed("truncated size field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    if (text.size() < 8) malformed("truncated size field");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | value(k);
    pos = 8;
  }
  if (n > (std::uint64_t{1} << 24)) malformed("order too large");

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) malformed("expected " + std::to_string(bytes) + " data bytes");

  EdgeList edges;
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  if (bits % 6 != 0) {
    std::uint64_t last = value(text.size() - 1);
    if (last & ((std::uint64_t{1} << (6 - bits % 6)) - 1)) malformed("nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

namespace {

std::vector<std::string_view> meaningful_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

bool parse_int_pair(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip();
  return p == end;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "edge list is empty");
  long long n = 0;
  long long m = 0;
  if (!parse_int_pair(lines[0], n, m) || n < 0 || m < 0) {
    throw Error(ErrorCode::MalformedInput, "edge list header must be \"n m\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(ErrorCode::MalformedInput,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    long long a = 0;
    long long b = 0;
    if (!parse_int_pair(lines[k], a, b)) {
      throw Error(ErrorCode::MalformedInput, "bad edge line \"" + std::string(lines[k]) + "\"");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

GraphFormat sniff_format(std::string_view text) {
  auto lines = meaningful_lines(text);
  long long a = 0;
  long long b = 0;
  if (!lines.empty() && !lines[0].starts_with(kGraph6Header) && parse_int_pair(lines[0], a, b)) {
    return GraphFormat::EdgeList;
  }
  return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text) {
  return sniff_format(text) == GraphFormat::EdgeList ? from_edge_list(text) : from_graph6(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOFailure, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IOFailure, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IOFailure, "short write to " + path);
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

void write_graph_file(const std::string& path, const Graph& g, GraphFormat format) {
  write_text_file(path, format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
}

}  // namespace cycleforge
