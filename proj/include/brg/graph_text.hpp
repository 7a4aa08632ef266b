#pragma once
// Text format for ribbon graphs ("ribbon v1").
//
//   ribbon v1
//   # comment
//   edge <name> <twist>          twist is 0 or 1, 1 = twisted
//   vertex <name>: <end> ...     ends in cyclic order, written <edge>.a / <edge>.b
//
// Edges may be declared before or after the vertices that use them.
// All diagnostics carry 1-based line numbers.

#include <string>

#include "brg/ribbon_graph.hpp"

namespace brg {

RibbonGraph parse_graph(const std::string& text);
RibbonGraph parse_graph_file(const std::string& path);
std::string format_graph(const RibbonGraph& g);

}  // namespace brg
