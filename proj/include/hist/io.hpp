#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "tree.hpp"

namespace hist {

enum class GraphFormat { Graph6, EdgeList };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// graph6: N(n) followed by the upper triangle in column order, six bits per
// byte offset by 63. Accepts an optional ">>graph6<<" header.
inline Graph parse_graph6(std::string_view text) {
  auto s = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.find('\n') != std::string_view::npos) throw ParseError(1, "graph6: expected a single graph");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(1, "graph6: byte outside printable range 63..126");
  if (s.empty()) throw ParseError(1, "graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size()) throw ParseError(1, "graph6: truncated order field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > (std::uint64_t{1} << 15)) throw ParseError(1, "graph6: order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw ParseError(1, "graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                            std::to_string(s.size() - pos));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<std::uint64_t>(s[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bits % 6 != 0) {
    const auto last = static_cast<std::uint64_t>(s.back() - 63);
    const auto pad = 6 - bits % 6;
    if ((last & ((std::uint64_t{1} << pad) - 1)) != 0) throw ParseError(1, "graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// Edge list: one "u v" pair of 0-based ids per line, '#' starts a comment.
// An optional leading "n <count>" line fixes the order (needed for isolated
// vertices); without it the order is 1 + the largest id seen.
inline Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_id = 0;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::split_ws(detail::trim(line));
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks[0] == "n") {
      std::uint64_t count = 0;
      if (toks.size() != 2 || !detail::parse_uint(toks[1], count))
        throw ParseError(line_no, "malformed header, expected \"n <count>\"");
      if (declared || any) throw ParseError(line_no, "header must precede all edges");
      if (count > (std::uint64_t{1} << 15)) throw RangeError("line " + std::to_string(line_no) + ": order too large");
      declared = count;
      continue;
    }
    std::uint64_t a = 0, b = 0;
    if (toks.size() != 2 || !detail::parse_uint(toks[0], a) || !detail::parse_uint(toks[1], b))
      throw ParseError(line_no, "expected two non-negative integers \"u v\"");
    if (declared && (a >= *declared || b >= *declared))
      throw RangeError("line " + std::to_string(line_no) + ": vertex id >= n=" + std::to_string(*declared));
    if (a == b) throw ParseError(line_no, "self-loop " + std::to_string(a) + " " + std::to_string(b));
    if (a >= (std::uint64_t{1} << 15) || b >= (std::uint64_t{1} << 15))
      throw RangeError("line " + std::to_string(line_no) + ": vertex id too large");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_id = std::max({max_id, a, b});
    any = true;
    if (end == text.size()) break;
  }
  const std::uint64_t n = declared ? *declared : (any ? max_id + 1 : 0);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string encode_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

// Tree files use the edge-list syntax; the host order comes from the graph.
inline SpanningTree parse_tree(std::string_view text, std::size_t host_n) {
  const auto t = parse_edgelist(text);
  return SpanningTree(host_n, t.edges());
}

inline std::string encode_tree(const SpanningTree& t) {
  std::ostringstream os;
  for (const auto& e : t.edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

inline std::string encode_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? encode_graph6(g) + "\n" : encode_edgelist(g);
}

}  // namespace hist
