#include "parklot/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "parklot/error.hpp"

namespace parklot {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

DiGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t header_line = 0;
  int n = 0;
  Vertex root = 0;
  Orientation orient = Orientation::General;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string kn, kr, ko, otext;
      if (!(fields >> kn >> n >> kr >> root >> ko >> otext) || kn != "n" || kr != "root" || ko != "orient")
        throw ParseError(lineno, "expected header 'n <N> root <z> orient <sink|source>'");
      std::string extra;
      if (fields >> extra) throw ParseError(lineno, "trailing text after header");
      if (n < 1) throw ParseError(lineno, "vertex count must be positive");
      try {
        orient = parse_orientation(otext);
      } catch (const InvalidArgument& e) {
        throw ParseError(lineno, e.what());
      }
      have_header = true;
      header_line = lineno;
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw ParseError(lineno, "expected an edge '<u> <v>', got '" + line + "'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lineno, "edge endpoint outside 1.." + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(lineno, "missing header line");
  try {
    return DiGraph(n, edges, root == 0 ? std::nullopt : std::optional<Vertex>(root), orient);
  } catch (const GraphError& e) {
    throw ParseError(header_line, e.what());
  }
}

DiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

DiGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  return parse_graph(in);
}

std::string format_graph(const DiGraph& d) {
  std::ostringstream out;
  out << "n " << d.size() << " root " << d.root().value_or(0) << " orient " << to_string(d.orientation()) << '\n';
  for (auto [u, v] : d.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_hash(const DiGraph& d) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_graph(d)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace parklot
