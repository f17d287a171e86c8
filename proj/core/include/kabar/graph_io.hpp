#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kabar/graph.hpp"
#include "kabar/partition.hpp"

namespace kabar {

/// Malformed input. line() is 1-based, 0 when no single line is to blame.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a METIS/Chaco graph: header "n m [fmt [ncon]]", then one line per
/// node with 1-based neighbor ids, each followed by an integer edge weight
/// when fmt ends in 1. Node weights (fmt 10/11) must all be 1. Lines
/// starting with '%' are comments.
///
/// Rejects malformed headers, asymmetric adjacency, non-positive or
/// non-integer weights and an edge count that disagrees with the header.
Graph parse_graph(std::string_view text);

/// Emits METIS text; weights are written only if some weight differs from 1.
std::string write_graph(const Graph& g);

/// Parses one 0-based block id per line. With k = 0 the block count is the
/// largest id plus one. Throws ParseError on bad ids or a line count != n.
std::vector<BlockId> parse_partition(std::string_view text, std::size_t n, BlockId k = 0);

std::string write_partition(const Partition& p);

/// File helpers; throw IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kabar
