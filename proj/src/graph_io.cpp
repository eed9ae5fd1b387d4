#include <charconv>
#include <sstream>

#include "graph_energy/error.hpp"
#include "graph_energy/graph.hpp"

namespace genergy {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c, std::size_t pos) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126)
    throw Error(ErrorCode::InvalidChar,
                "byte " + std::to_string(byte) + " at offset " + std::to_string(pos));
  return byte - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>")) {
    if (!line.starts_with(kGraph6Header))
      throw Error(ErrorCode::BadHeader, "expected \">>graph6<<\"");
    line.remove_prefix(kGraph6Header.size());
  }
  if (line.empty()) throw Error(ErrorCode::BadHeader, "missing size field");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = static_cast<std::size_t>(sextet(line[0], 0));
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
    if (line.size() < 8) throw Error(ErrorCode::BadHeader, "short 8-byte size field");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(line[pos], pos));
    if (n <= kGraph6MaxOrder)
      throw Error(ErrorCode::BadHeader, "non-canonical 8-byte size field");
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kGraph6MaxOrder));
  } else {
    if (line.size() < 4) throw Error(ErrorCode::BadHeader, "short 4-byte size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(line[pos], pos));
    if (n < 63) throw Error(ErrorCode::BadHeader, "non-canonical 4-byte size field");
  }

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::string_view body = line.substr(pos);
  if (body.size() < byte_count)
    throw Error(ErrorCode::TruncatedBits, "need " + std::to_string(byte_count) +
                                              " data bytes, found " +
                                              std::to_string(body.size()));
  if (body.size() > byte_count)
    throw Error(ErrorCode::TrailingData,
                std::to_string(body.size() - byte_count) + " unexpected bytes");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int group = sextet(body[k / 6], pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bytes still have to be printable.
  for (std::size_t b = 0; b < body.size(); ++b) sextet(body[b], pos + b);
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kGraph6MaxOrder));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  }
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

namespace {

bool parse_index(std::string_view token, std::size_t& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no);
    if (!n) {
      std::size_t count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_index(tokens[1], count))
        throw Error(ErrorCode::Malformed, where + ": expected \"n <count>\"");
      n = count;
      continue;
    }
    std::size_t i = 0, j = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], i) || !parse_index(tokens[1], j))
      throw Error(ErrorCode::Malformed, where + ": expected \"i j\"");
    if (i >= *n || j >= *n)
      throw Error(ErrorCode::IndexOutOfRange, where + ": vertex index >= " + std::to_string(*n));
    if (i == j) throw Error(ErrorCode::SelfLoop, where);
    edges.emplace_back(i, j);
  }
  if (!n) throw Error(ErrorCode::Malformed, "missing \"n <count>\" line");
  return Graph(*n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace genergy
