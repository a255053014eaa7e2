#pragma once

#include <pebbling/errors.hpp>
#include <pebbling/graph.hpp>

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

namespace pebbling {

// graph6: header byte 63+n (n <= 62 only), then the upper triangle in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
// most significant bit first, each byte offset by 63, zero padded.

namespace detail {
inline constexpr int kGraph6Offset = 63;
inline constexpr std::uint32_t kGraph6MaxOrder = 62;

inline std::size_t graph6_body_length(std::uint32_t n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  using detail::kGraph6Offset;
  if (text.empty()) throw parse_error("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kGraph6Offset || c > 126) throw parse_error("graph6: byte outside printable range", i);
  }
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw parse_error("graph6: multi-byte order header not supported", 0);
  const auto n = static_cast<std::uint32_t>(header - kGraph6Offset);
  if (n == 0) throw parse_error("graph6: graph with no vertices", 0);

  const std::size_t expected = 1 + detail::graph6_body_length(n);
  if (text.size() < expected) throw parse_error("graph6: input too short", text.size());
  if (text.size() > expected) throw parse_error("graph6: trailing bytes", expected);

  GraphBuilder builder(n);
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const std::size_t byte = 1 + bit / 6;
    const int value = static_cast<unsigned char>(text[byte]) - kGraph6Offset;
    const bool set = (value >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (std::uint32_t v = 1; v < n; ++v) {
    for (std::uint32_t u = 0; u < v; ++u) {
      if (next_bit()) builder.add_edge(u, v);
    }
  }
  while (bit % 6 != 0) {
    const std::size_t byte = 1 + bit / 6;
    if (next_bit()) throw parse_error("graph6: nonzero padding bits", byte);
  }
  return builder.build();
}

inline std::string encode_graph6(const Graph& g) {
  const std::uint32_t n = g.order();
  if (n > detail::kGraph6MaxOrder) {
    throw usage_error("graph6 encoding supports at most 62 vertices");
  }
  std::string out;
  out.reserve(1 + detail::graph6_body_length(n));
  out.push_back(static_cast<char>(detail::kGraph6Offset + static_cast<int>(n)));
  int acc = 0;
  int filled = 0;
  for (std::uint32_t v = 1; v < n; ++v) {
    for (std::uint32_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(detail::kGraph6Offset + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>(detail::kGraph6Offset + (acc << (6 - filled))));
  return out;
}

// Edge-list text: a first line "n <count>", then one "u v" pair per line.
// Blank lines are ignored; offsets in errors are byte offsets into the stream.

inline Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_blank = [&]() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  auto read_uint = [&](const char* what) {
    skip_blank();
    std::uint32_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw parse_error(std::string("edge list: expected ") + what, pos);
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  auto end_line = [&]() {
    skip_blank();
    if (pos < text.size() && text[pos] != '\n') throw parse_error("edge list: unexpected text", pos);
    if (pos < text.size()) ++pos;
  };
  auto at_blank_line = [&]() {
    std::size_t p = pos;
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\r')) ++p;
    if (p == text.size() || text[p] == '\n') {
      pos = p < text.size() ? p + 1 : p;
      return true;
    }
    return false;
  };

  while (pos < text.size() && at_blank_line()) {
  }
  skip_blank();
  if (text.substr(pos, 1) != "n") throw parse_error("edge list: expected header 'n <count>'", pos);
  ++pos;
  const std::size_t count_pos = pos;
  const std::uint32_t n = read_uint("vertex count");
  if (n < 1 || n > Graph::kMaxVertices) throw parse_error("edge list: vertex count out of range", count_pos);
  end_line();

  GraphBuilder builder(n);
  while (pos < text.size()) {
    if (at_blank_line()) continue;
    skip_blank();
    const std::size_t line_pos = pos;
    const std::uint32_t u = read_uint("vertex label");
    const std::uint32_t v = read_uint("vertex label");
    try {
      builder.add_edge(u, v);
    } catch (const usage_error& e) {
      throw parse_error(std::string("edge list: ") + e.what(), line_pos);
    }
    end_line();
  }
  return builder.build();
}

inline Graph read_edge_list(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace pebbling
