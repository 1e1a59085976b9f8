#include "iqmis/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace iqmis {

namespace {

// strips comments/blank lines; returns false at end of stream
bool next_record(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_record(in, line)) throw std::runtime_error("graph file: missing header");
  std::istringstream head(line);
  std::string p, fmt, flag;
  int n = -1, m = -1;
  head >> p >> fmt >> n >> m;
  if (!head || p != "p" || fmt != "mis" || n < 0 || m < 0)
    throw std::runtime_error("graph file: malformed header: " + line);
  bool weighted = false;
  if (head >> flag) {
    if (flag != "weighted") throw std::runtime_error("graph file: unknown header flag: " + flag);
    weighted = true;
  }

  std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
  if (weighted) {
    if (!next_record(in, line)) throw std::runtime_error("graph file: missing weight line");
    std::istringstream ws(line);
    std::string tag;
    ws >> tag;
    if (tag != "w") throw std::runtime_error("graph file: expected weight line, got: " + line);
    for (int i = 0; i < n; ++i)
      if (!(ws >> weights[static_cast<std::size_t>(i)]))
        throw std::runtime_error("graph file: weight line too short");
    double extra;
    if (ws >> extra) throw std::runtime_error("graph file: weight line too long");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_record(in, line)) throw std::runtime_error("graph file: fewer edges than header declares");
    std::istringstream es(line);
    std::string tag;
    int u = -1, v = -1;
    es >> tag >> u >> v;
    if (!es || tag != "e") throw std::runtime_error("graph file: malformed edge line: " + line);
    if (u >= v) throw std::runtime_error("graph file: edge endpoints must satisfy u < v: " + line);
    edges.emplace_back(u, v);
  }
  if (next_record(in, line)) throw std::runtime_error("graph file: trailing content: " + line);
  return weighted ? Graph(n, std::move(edges), std::move(weights)) : Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const bool weighted = !g.unit_weights();
  out << "p mis " << g.n() << ' ' << g.m();
  if (weighted) out << " weighted";
  out << '\n';
  if (weighted) {
    out << 'w';
    char buf[32];
    for (double w : g.weights()) {
      std::snprintf(buf, sizeof buf, " %.17g", w);
      out << buf;
    }
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_graph(out, g);
}

}  // namespace iqmis
