#include "treelat/treeio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace treelat {

TreeSpec parse_tree_text(std::istream& in) {
  TreeSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.back() != ':')
      throw ParseError("expected 'vertex:' at start of line", line_no);
    head.pop_back();
    int v;
    try {
      v = std::stoi(head);
    } catch (...) {
      throw ParseError("bad vertex label '" + head + "'", line_no);
    }
    std::vector<int> nbrs;
    int w;
    while (ls >> w) nbrs.push_back(w);
    std::string trailing;
    ls.clear();
    if (ls >> trailing) throw ParseError("trailing junk", line_no);
    if (nbrs.empty()) throw ParseError("vertex with no neighbors", line_no);
    spec.rotations.emplace_back(v, std::move(nbrs));
  }
  if (spec.rotations.empty()) throw ParseError("empty tree file", line_no);
  return spec;
}

TreeSpec parse_tree_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what(), 0);
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("expected a 'vertices' array", 0);
  TreeSpec spec;
  for (const auto& v : j["vertices"]) {
    if (!v.contains("id") || !v.contains("ccw"))
      throw ParseError("vertex entries need 'id' and 'ccw'", 0);
    spec.rotations.emplace_back(v["id"].get<int>(),
                                v["ccw"].get<std::vector<int>>());
  }
  return spec;
}

TreeSpec load_tree_file(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return json ? parse_tree_json(in) : parse_tree_text(in);
}

std::string tree_to_text(const EmbeddedTree& t) {
  std::ostringstream out;
  for (const auto& [v, nbrs] : t.to_spec().rotations) {
    out << v << ":";
    for (int w : nbrs) out << " " << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace treelat
