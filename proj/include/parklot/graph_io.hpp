#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "parklot/digraph.hpp"

namespace parklot {

/// Reads the line-oriented `.pg` graph format:
///
///     n <N> root <z> orient <sink|source|general>
///     <u> <v>        one directed edge per line
///
/// Blank lines and lines starting with `#` are ignored. Errors carry the
/// offending line number.
DiGraph parse_graph(std::istream& in);
DiGraph parse_graph(const std::string& text);
DiGraph load_graph(const std::filesystem::path& path);

/// Canonical `.pg` text: header line, then edges in lexicographic order.
std::string format_graph(const DiGraph& d);

/// FNV-1a hash of the canonical text, as 16 hex digits.
std::string graph_hash(const DiGraph& d);

}  // namespace parklot
