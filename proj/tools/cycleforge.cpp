// cycleforge: build the marriage family and certify its properties.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycleforge/analysis.hpp"
#include "cycleforge/certify.hpp"
#include "cycleforge/constructors.hpp"
#include "cycleforge/error.hpp"
#include "cycleforge/graph_io.hpp"
#include "cycleforge/origin_io.hpp"

namespace cf = cycleforge;

namespace {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kMalformedInput = 2,
  kResourceLimit = 3,
  kIOFailure = 4,
  kInvalidCycle = 5,
  kOriginMismatch = 6,
  kOtherError = 7,
};

int exit_code_for(cf::ErrorCode code) {
  using cf::ErrorCode;
  switch (code) {
    case ErrorCode::ExpectationFailed: return kExpectationFailed;
    case ErrorCode::ResourceLimit: return kResourceLimit;
    case ErrorCode::IOFailure: return kIOFailure;
    case ErrorCode::InvalidCycle:
    case ErrorCode::SameEndpoint: return kInvalidCycle;
    case ErrorCode::OriginMismatch: return kOriginMismatch;
    case ErrorCode::MalformedGraph6:
    case ErrorCode::MalformedInput:
    case ErrorCode::InvalidParameters:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::SelfLoop:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::NotCubic: return kMalformedInput;
    default: return kOtherError;
  }
}

std::size_t to_size(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw cf::Error(cf::ErrorCode::InvalidParameters, std::string(what) + " must be a non-negative integer, got \"" + s + "\"");
  }
}

struct BuildOptions {
  std::string target;
  std::vector<std::string> args;
  std::string out;
  std::string format = "graph6";
  std::string origin_out;
  int guest_vertex = 0;
  std::vector<std::string> bijection{"sorted"};
  std::size_t max_order = std::size_t{1} << 20;
};

std::uint8_t parse_bijection(const std::vector<std::string>& spec) {
  if (spec.size() == 1 && spec[0] == "sorted") return 0;
  std::string index;
  if (spec.size() == 2 && spec[0] == "index") index = spec[1];
  if (spec.size() == 1 && spec[0] != "index") index = spec[0];
  if (index.empty()) throw cf::Error(cf::ErrorCode::InvalidParameters, "--bijection takes \"sorted\" or \"index K\"");
  std::size_t k = to_size(index, "bijection index");
  cf::bijection_permutation(k);
  return static_cast<std::uint8_t>(k);
}

struct Built {
  cf::Graph graph;
  std::optional<cf::VertexOrigin> origin;
};

void require_args(const BuildOptions& o, std::size_t count, const char* usage) {
  if (o.args.size() != count) throw cf::Error(cf::ErrorCode::InvalidParameters, std::string("usage: build ") + usage);
}

Built build_target(const BuildOptions& o) {
  const std::uint8_t bijection = parse_bijection(o.bijection);
  if (o.target == "gp") {
    require_args(o, 2, "gp N K");
    return {cf::generalized_petersen(to_size(o.args[0], "N"), to_size(o.args[1], "K")), {}};
  }
  if (o.target == "k4") return {cf::k4(), {}};
  if (o.target == "petersen") return {cf::petersen(), {}};
  if (o.target == "chia-thomassen") return {cf::chia_thomassen(), {}};
  if (o.target == "marry") {
    require_args(o, 3, "marry HOST_FILE HOST_VERTEX GUEST_FILE");
    auto host = cf::read_graph_file(o.args[0]);
    auto guest = cf::read_graph_file(o.args[2]);
    auto plan = cf::make_marriage_plan(host, static_cast<cf::Vertex>(to_size(o.args[1], "HOST_VERTEX")), guest,
                                       o.guest_vertex, bijection);
    auto married = cf::marry(plan);
    return {std::move(married.graph), std::move(married.origin)};
  }
  if (o.target == "marry-all") {
    require_args(o, 2, "marry-all HOST_FILE GUEST_FILE");
    auto married = cf::marry_all(cf::read_graph_file(o.args[0]), cf::read_graph_file(o.args[1]), o.guest_vertex,
                                 cf::BijectionPolicy::fixed(bijection));
    return {std::move(married.graph), std::move(married.origin)};
  }
  if (o.target == "family") {
    require_args(o, 1, "family K");
    cf::FamilyConfig config{o.guest_vertex, bijection, o.max_order};
    auto member = cf::family_member(to_size(o.args[0], "K"), config);
    std::optional<cf::VertexOrigin> origin;
    if (!member.origins.empty()) origin = member.origins.back();
    return {std::move(member.graph), std::move(origin)};
  }
  throw cf::Error(cf::ErrorCode::InvalidParameters, "unknown build target \"" + o.target + "\"");
}

int run_build(const BuildOptions& o) {
  Built built = build_target(o);
  cf::GraphFormat format;
  if (o.format == "graph6") {
    format = cf::GraphFormat::Graph6;
  } else if (o.format == "edgelist") {
    format = cf::GraphFormat::EdgeList;
  } else {
    throw cf::Error(cf::ErrorCode::InvalidParameters, "--format must be graph6 or edgelist");
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << (format == cf::GraphFormat::Graph6 ? cf::to_graph6(built.graph) + "\n" : cf::to_edge_list(built.graph));
  } else {
    cf::write_graph_file(o.out, built.graph, format);
  }
  if (!o.origin_out.empty()) {
    if (!built.origin) throw cf::Error(cf::ErrorCode::InvalidParameters, "target \"" + o.target + "\" has no origin map");
    cf::write_text_file(o.origin_out, cf::to_origin_text(*built.origin));
  }
  std::cerr << "order " << built.graph.order() << " size " << built.graph.size() << (cf::is_cubic(built.graph) ? " cubic" : "")
            << "\n";
  return kOk;
}

cf::Graph builtin_graph(const std::string& name, std::size_t max_order) {
  if (name == "k4") return cf::k4();
  if (name == "petersen") return cf::petersen();
  if (name == "chia-thomassen") return cf::chia_thomassen();
  if (name.starts_with("gp:")) {
    auto rest = name.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw cf::Error(cf::ErrorCode::InvalidParameters, "use gp:N:K");
    return cf::generalized_petersen(to_size(rest.substr(0, colon), "N"), to_size(rest.substr(colon + 1), "K"));
  }
  if (name.starts_with("family:")) {
    cf::FamilyConfig config;
    config.max_order = max_order;
    return cf::family_member(to_size(name.substr(7), "K"), config).graph;
  }
  throw cf::Error(cf::ErrorCode::InvalidParameters, "unknown builtin graph \"" + name + "\"");
}

struct VerifyCli {
  std::string input;
  std::string builtin;
  std::string checks = "cubic";
  std::string out;
  std::optional<std::size_t> min_connectivity;
  std::optional<std::string> expect_cubic;
  std::optional<std::size_t> expect_girth;
  std::optional<std::size_t> expect_connectivity;
  std::optional<std::uint64_t> expect_ham_count;
  std::optional<std::uint64_t> expect_count;
  std::optional<std::size_t> expect_circumference;
  std::optional<std::size_t> expect_circumference_at_most;
  std::size_t max_order = std::size_t{1} << 20;
};

int run_verify(const VerifyCli& v, const cf::SearchConfig& search) {
  if (v.input.empty() == v.builtin.empty()) {
    throw cf::Error(cf::ErrorCode::InvalidParameters, "give exactly one of INPUT or --builtin");
  }
  cf::Graph g = v.builtin.empty() ? cf::read_graph_file(v.input) : builtin_graph(v.builtin, v.max_order);

  cf::VerifyOptions options;
  for (cf::Check c : cf::parse_checks(v.checks)) options.checks.insert(c);
  options.min_connectivity = v.min_connectivity;
  options.search = search;
  options.label = v.builtin.empty() ? std::filesystem::path(v.input).filename().string() : v.builtin;
  if (v.expect_cubic) {
    if (*v.expect_cubic != "true" && *v.expect_cubic != "false") {
      throw cf::Error(cf::ErrorCode::InvalidParameters, "--expect-cubic takes true or false");
    }
    options.expect.cubic = *v.expect_cubic == "true";
  }
  options.expect.girth = v.expect_girth;
  options.expect.connectivity = v.expect_connectivity;
  options.expect.ham_count = v.expect_ham_count;
  options.expect.census_count = v.expect_count;
  options.expect.circumference = v.expect_circumference;
  options.expect.circumference_at_most = v.expect_circumference_at_most;

  auto result = cf::certify(g, options);
  if (v.out.empty() || v.out == "-") {
    std::cout << result.json;
  } else {
    cf::write_text_file(v.out, result.json);
  }
  for (const auto& f : result.failures) std::cerr << "expectation failed: " << f << "\n";
  if (!result.failures.empty()) return kExpectationFailed;
  if (result.resource_limited) {
    std::cerr << "a check was refused by a resource limit\n";
    return kResourceLimit;
  }
  return kOk;
}

int run_project(const std::string& graph_path, const std::string& origin_path, const std::string& cycle_text) {
  cf::Graph h = cf::read_graph_file(graph_path);
  cf::VertexOrigin origin = cf::from_origin_text(cf::read_text_file(origin_path));
  cf::validate_origin(origin, h.order());
  auto projection = cf::project_cycle(h, origin, cf::parse_cycle(cycle_text));
  if (auto* internal = std::get_if<cf::InternalCycle>(&projection)) {
    std::cout << "InternalCycle host " << internal->host << " length " << internal->cycle.size() << ": "
              << cf::format_cycle(internal->cycle) << "\n";
    return kOk;
  }
  const auto& host = std::get<cf::HostCycle>(projection);
  std::cout << "HostCycle length " << host.cycle.size() << ": " << cf::format_cycle(host.cycle) << "\n";
  std::cout << "fiber paths:";
  for (std::size_t k = 0; k < host.fibers.size(); ++k) std::cout << (k ? "/" : " ") << host.fibers[k].path.size();
  std::cout << "\n";
  for (const auto& f : host.fibers) std::cout << "  host " << f.host << ": " << cf::format_cycle(f.path) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct cubic graphs with a unique longest cycle and certify their properties"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cf::kToolVersion);

  cf::SearchConfig search;
  std::optional<std::size_t> max_vertices;
  bool no_prune = false;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--threads", search.threads, "worker threads for the search kernels")->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", search.node_budget, "abort a search after this many nodes");
    cmd->add_option("--max-vertices", max_vertices, "vertex cap for exponential searches");
    cmd->add_option("--max-witnesses", search.max_witnesses, "witness cycles kept per census");
    cmd->add_flag("--no-prune", no_prune, "disable the search bounds (slow; for cross-checks)");
  };

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "construct a graph and write it");
  build_cmd->add_option("target", build.target, "gp | k4 | petersen | chia-thomassen | marry | marry-all | family")
      ->required();
  build_cmd->add_option("args", build.args, "target parameters");
  build_cmd->add_option("-o,--out", build.out, "output path (default stdout)");
  build_cmd->add_option("--format", build.format, "graph6 | edgelist");
  build_cmd->add_option("--origin-out", build.origin_out, "write the vertex origin map here");
  build_cmd->add_option("--guest-vertex", build.guest_vertex, "marked guest vertex u");
  build_cmd->add_option("--bijection", build.bijection, "sorted | index K")->expected(1, 2);
  build_cmd->add_option("--max-order", build.max_order, "refuse family members above this order");

  VerifyCli verify;
  auto* verify_cmd = app.add_subcommand("verify", "run checks and write a certificate");
  verify_cmd->add_option("input", verify.input, "graph file (graph6 or edge list)");
  verify_cmd->add_option("--builtin", verify.builtin, "k4 | petersen | chia-thomassen | gp:N:K | family:K");
  verify_cmd->add_option("--checks", verify.checks,
                         "comma list of cubic,girth,connectivity,ham-count,census,smith,thomason,unique-nonham,all");
  verify_cmd->add_option("-o,--out", verify.out, "certificate path (default stdout)");
  verify_cmd->add_option("--min-connectivity", verify.min_connectivity, "only decide kappa >= K");
  verify_cmd->add_option("--expect-cubic", verify.expect_cubic);
  verify_cmd->add_option("--expect-girth", verify.expect_girth, "0 means acyclic");
  verify_cmd->add_option("--expect-connectivity", verify.expect_connectivity);
  verify_cmd->add_option("--expect-ham-count", verify.expect_ham_count);
  verify_cmd->add_option("--expect-count", verify.expect_count, "number of longest cycles");
  verify_cmd->add_option("--expect-circumference", verify.expect_circumference);
  verify_cmd->add_option("--expect-circumference-at-most", verify.expect_circumference_at_most);
  verify_cmd->add_option("--max-order", verify.max_order, "refuse builtin family members above this order");
  add_search_flags(verify_cmd);

  std::string graph_path;
  std::string origin_path;
  std::string cycle_text;
  auto* project_cmd = app.add_subcommand("project", "collapse a cycle of a married graph onto its host");
  project_cmd->add_option("--graph", graph_path, "married graph H")->required();
  project_cmd->add_option("--origin", origin_path, "origin map written by build --origin-out")->required();
  project_cmd->add_option("--cycle", cycle_text, "cycle as space- or comma-separated vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (max_vertices) search.max_vertices = *max_vertices;
    search.prune = !no_prune;
    if (*build_cmd) return run_build(build);
    if (*verify_cmd) return run_verify(verify, search);
    if (*project_cmd) return run_project(graph_path, origin_path, cycle_text);
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
  return kOk;
}
