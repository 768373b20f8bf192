#include "forcelab/graphmap_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

GraphMap parse_graph_map(std::string_view text) {
  GraphMap gm;
  std::vector<std::optional<int>> vmap;
  std::vector<std::optional<EdgePath>> emap;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokens_of(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& kind = tok[0];
    try {
      if (kind == "vertex") {
        if (tok.size() == 2) {
          gm.graph.add_vertex(tok[1]);
        } else if (tok.size() == 3 && tok[2] == "puncture") {
          gm.graph.add_vertex(tok[1], true);
        } else {
          fail(line_no, "expected 'vertex <name> [puncture]'");
        }
        vmap.emplace_back();
      } else if (kind == "edge") {
        if (tok.size() != 4 && !(tok.size() == 5 && tok[4] == "peripheral")) {
          fail(line_no, "expected 'edge <name> <v1> <v2> [peripheral]'");
        }
        auto a = gm.graph.find_vertex(tok[2]);
        auto b = gm.graph.find_vertex(tok[3]);
        if (!a || !b) fail(line_no, "unknown vertex in edge '" + tok[1] + "'");
        gm.graph.add_edge(tok[1], *a, *b, tok.size() == 5);
        emap.emplace_back();
      } else if (kind == "vmap") {
        if (tok.size() != 4 || tok[2] != "->") fail(line_no, "expected 'vmap <v> -> <v>'");
        auto a = gm.graph.find_vertex(tok[1]);
        auto b = gm.graph.find_vertex(tok[3]);
        if (!a || !b) fail(line_no, "unknown vertex in vmap");
        if (vmap[static_cast<std::size_t>(*a)]) fail(line_no, "vertex '" + tok[1] + "' mapped twice");
        vmap[static_cast<std::size_t>(*a)] = *b;
      } else if (kind == "emap") {
        if (tok.size() < 4 || tok[2] != "->") fail(line_no, "expected 'emap <e> -> <path>'");
        auto e = gm.graph.find_edge(tok[1]);
        if (!e) fail(line_no, "unknown edge '" + tok[1] + "'");
        if (emap[static_cast<std::size_t>(*e)]) fail(line_no, "edge '" + tok[1] + "' mapped twice");
        EdgePath path;
        for (std::size_t i = 3; i < tok.size(); ++i) {
          bool rev = tok[i][0] == '~';
          auto f = gm.graph.find_edge(rev ? tok[i].substr(1) : tok[i]);
          if (!f) fail(line_no, "unknown edge '" + tok[i] + "' in image");
          path.push_back({*f, rev});
        }
        emap[static_cast<std::size_t>(*e)] = std::move(path);
      } else {
        fail(line_no, "unknown directive '" + kind + "'");
      }
    } catch (const InvalidGraphMap& err) {
      fail(line_no, err.what());
    }
  }
  for (int v = 0; v < gm.graph.vertex_count(); ++v) {
    if (!vmap[static_cast<std::size_t>(v)]) throw ParseError("vertex '" + gm.graph.vertex(v).name + "' has no vmap");
    gm.vertex_image.push_back(*vmap[static_cast<std::size_t>(v)]);
  }
  for (int e = 0; e < gm.graph.edge_count(); ++e) {
    if (!emap[static_cast<std::size_t>(e)]) throw ParseError("edge '" + gm.graph.edge(e).name + "' has no emap");
    gm.edge_image.push_back(*emap[static_cast<std::size_t>(e)]);
  }
  return gm;
}

std::string write_graph_map(const GraphMap& gm) {
  const Graph& g = gm.graph;
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v.name << (v.puncture ? " puncture" : "") << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << e.name << ' ' << g.vertex(e.from).name << ' ' << g.vertex(e.to).name
        << (e.peripheral ? " peripheral" : "") << '\n';
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "vmap " << g.vertex(v).name << " -> " << g.vertex(gm.vertex_image[static_cast<std::size_t>(v)]).name
        << '\n';
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "emap " << g.edge(e).name << " -> " << g.label(gm.edge_image[static_cast<std::size_t>(e)]) << '\n';
  }
  return out.str();
}

GraphMap read_graph_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_map(buf.str());
}

void write_graph_map_file(const std::string& path, const GraphMap& gm, const std::string& header) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  if (!header.empty()) out << "# " << header << '\n';
  out << write_graph_map(gm);
}

}  // namespace forcelab
