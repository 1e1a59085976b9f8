#pragma once

#include <iosfwd>
#include <string>

#include "iqmis/graph.hpp"

namespace iqmis {

// Text format, one record per line, blank lines and '#' comments ignored:
//   p mis <n> <m> [weighted]
//   w <r_0> ... <r_{n-1}>          (present iff the header says weighted)
//   e <u> <v>                      (m lines, 0-indexed, u < v)
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void save_graph(const std::string& path, const Graph& g);

}  // namespace iqmis
