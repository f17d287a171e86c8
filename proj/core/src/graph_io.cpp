#include "kabar/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace kabar {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && ptr == token.data() + token.size()) return value;
  if (token.find_first_of(".eE") != std::string_view::npos) {
    throw ParseError(line, std::string("non-integer ") + what + " '" + std::string(token) + "'");
  }
  throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
}

// Splits text into lines, remembering 1-based line numbers.
struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({number++, l});
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline does not open another line.
  if (!lines.empty() && lines.back().text.empty() && !text.empty() && text.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = lines_of(text);
  std::size_t i = 0;
  auto is_comment = [](std::string_view l) { return !l.empty() && l.front() == '%'; };
  while (i < lines.size() && (is_comment(lines[i].text) || split_ws(lines[i].text).empty())) ++i;
  if (i == lines.size()) throw ParseError(0, "missing header");

  const auto header = split_ws(lines[i].text);
  const std::size_t header_line = lines[i].number;
  if (header.size() < 2 || header.size() > 4) {
    throw ParseError(header_line, "header must be 'n m [fmt [ncon]]'");
  }
  const std::int64_t n = parse_int(header[0], header_line, "node count");
  const std::int64_t m = parse_int(header[1], header_line, "edge count");
  if (n < 0 || m < 0) throw ParseError(header_line, "negative node or edge count");
  bool edge_weights = false;
  bool node_weights = false;
  if (header.size() >= 3) {
    const std::string_view fmt = header[2];
    if (fmt.size() > 3 || fmt.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(header_line, "unknown format code '" + std::string(fmt) + "'");
    }
    const std::string padded = std::string(3 - fmt.size(), '0') + std::string(fmt);
    if (padded[0] == '1') throw ParseError(header_line, "node sizes are not supported");
    node_weights = padded[1] == '1';
    edge_weights = padded[2] == '1';
  }
  if (header.size() == 4) {
    const std::int64_t ncon = parse_int(header[3], header_line, "constraint count");
    if (ncon != 1) throw ParseError(header_line, "only a single node weight is supported");
  }

  struct Entry {
    NodeId u;
    NodeId v;
    EdgeWeight w;
    std::size_t line;
  };
  std::vector<Entry> entries;
  NodeId node = 0;
  for (++i; i < lines.size(); ++i) {
    if (is_comment(lines[i].text)) continue;
    const auto tokens = split_ws(lines[i].text);
    const std::size_t ln = lines[i].number;
    if (node == static_cast<std::size_t>(n)) {
      if (!tokens.empty()) throw ParseError(ln, "more node lines than the header announces");
      continue;
    }
    std::size_t t = 0;
    if (node_weights) {
      if (tokens.empty()) throw ParseError(ln, "missing node weight");
      if (parse_int(tokens[t++], ln, "node weight") != 1) {
        throw ParseError(ln, "node weights other than 1 are not supported");
      }
    }
    while (t < tokens.size()) {
      const std::int64_t target = parse_int(tokens[t++], ln, "neighbor id");
      if (target < 1 || target > n) {
        throw ParseError(ln, "neighbor id " + std::to_string(target) + " outside [1, " +
                                 std::to_string(n) + "]");
      }
      EdgeWeight w = 1;
      if (edge_weights) {
        if (t == tokens.size()) throw ParseError(ln, "missing edge weight");
        w = parse_int(tokens[t++], ln, "edge weight");
        if (w <= 0) throw ParseError(ln, "edge weight must be positive");
      }
      const auto v = static_cast<NodeId>(target - 1);
      if (v != node) entries.push_back({node, v, w, ln});
    }
    ++node;
  }
  if (node != static_cast<std::size_t>(n)) {
    throw ParseError(0, "expected " + std::to_string(n) + " node lines, found " +
                            std::to_string(node));
  }

  // Merge repeated entries per direction, then require both directions to
  // agree.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.u != b.u ? a.u < b.u : (a.v != b.v ? a.v < b.v : a.line < b.line);
  });
  std::vector<Entry> merged;
  for (const Entry& e : entries) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().w += e.w;
    } else {
      merged.push_back(e);
    }
  }
  for (const Entry& e : merged) {
    const Entry reverse_key{e.v, e.u, 0, 0};
    const auto rev = std::lower_bound(
        merged.begin(), merged.end(), reverse_key,
        [](const Entry& a, const Entry& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    if (rev == merged.end() || rev->u != e.v || rev->v != e.u) {
      throw ParseError(e.line, "edge " + std::to_string(e.u + 1) + " -> " + std::to_string(e.v + 1) +
                                   " has no reverse entry");
    }
    if (rev->w != e.w) {
      throw ParseError(e.line, "edge " + std::to_string(e.u + 1) + " -> " + std::to_string(e.v + 1) +
                                   " weight differs from its reverse entry");
    }
  }
  if (entries.size() != static_cast<std::size_t>(2 * m)) {
    throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, adjacency has " +
                                      std::to_string(entries.size() / 2));
  }

  std::vector<WeightedEdge> edges;
  for (const Entry& e : merged) {
    if (e.u < e.v) edges.push_back({e.u, e.v, e.w});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string write_graph(const Graph& g) {
  bool weighted = false;
  for (NodeId v = 0; v < g.num_nodes() && !weighted; ++v) {
    for (EdgeWeight w : g.weights(v)) weighted = weighted || w != 1;
  }
  std::ostringstream out;
  out << g.num_nodes() << ' ' << g.num_edges();
  if (weighted) out << " 1";
  out << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto nbrs = g.neighbors(v);
    const auto ws = g.weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (i > 0) out << ' ';
      out << nbrs[i] + 1;
      if (weighted) out << ' ' << ws[i];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<BlockId> parse_partition(std::string_view text, std::size_t n, BlockId k) {
  std::vector<BlockId> blocks;
  for (const Line& line : lines_of(text)) {
    const auto tokens = split_ws(line.text);
    if (tokens.empty()) continue;
    if (tokens.size() > 1) throw ParseError(line.number, "expected a single block id");
    const std::int64_t b = parse_int(tokens[0], line.number, "block id");
    if (b < 0 || (k > 0 && b >= k)) {
      throw ParseError(line.number, "block id " + std::to_string(b) + " out of range");
    }
    blocks.push_back(static_cast<BlockId>(b));
  }
  if (blocks.size() != n) {
    throw ParseError(0, "partition has " + std::to_string(blocks.size()) + " entries, expected " +
                            std::to_string(n));
  }
  return blocks;
}

std::string write_partition(const Partition& p) {
  std::string out;
  out.reserve(p.num_nodes() * 3);
  for (BlockId b : p.assignment()) {
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace kabar
