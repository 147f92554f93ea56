#pragma once

#include <iosfwd>
#include <string>

#include "treelat/tree.hpp"

namespace treelat {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

// Line-oriented format: one line per vertex, "v: n1 n2 ... nk" with the
// neighbors in counterclockwise order; leaves may omit their line. '#'
// starts a comment.
TreeSpec parse_tree_text(std::istream& in);
// JSON equivalent: {"vertices": [{"id": 5, "ccw": [1, 6, 4]}, ...]}
TreeSpec parse_tree_json(std::istream& in);
TreeSpec load_tree_file(const std::string& path, bool json);

std::string tree_to_text(const EmbeddedTree& t);

}  // namespace treelat
