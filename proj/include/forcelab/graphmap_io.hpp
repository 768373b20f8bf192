#pragma once

#include <string>
#include <string_view>

#include "forcelab/graphmap.hpp"

namespace forcelab {

/// Line-based text format:
///   vertex <name> [puncture]
///   edge <name> <v1> <v2> [peripheral]
///   vmap <v> -> <v>
///   emap <e> -> <e1|~e1> <e2|~e2> ...
/// Blank lines and lines starting with `#` are ignored.
GraphMap parse_graph_map(std::string_view text);
/// Canonical text: vertices, edges, vmaps, emaps, each in index order.
std::string write_graph_map(const GraphMap& gm);

GraphMap read_graph_map_file(const std::string& path);
void write_graph_map_file(const std::string& path, const GraphMap& gm, const std::string& header = "");

}  // namespace forcelab
