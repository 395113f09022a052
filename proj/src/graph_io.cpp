#include <betti/graph_io.hpp>

#include <betti/errors.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace betti {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidArgument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                          std::string(token) + "'");
  }
  return value;
}

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxSmall = 62;

}  // namespace

Graph parse_edge_list(std::string_view text, int max_vertices) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw InvalidArgument("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      n = parse_int(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InvalidArgument("missing header 'n <count>'");
  return Graph::from_edge_list(n, edges, max_vertices);
}

Graph read_edge_list_file(const std::string& path, int max_vertices) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open edge-list file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), max_vertices);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text, int max_vertices) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InvalidArgument("graph6: empty input");
  for (char c : text) {
    if (c < kGraph6Offset || c > 126) throw InvalidArgument("graph6: byte outside the printable range 63..126");
  }
  const int n = text[0] - kGraph6Offset;
  if (n > kGraph6MaxSmall) throw InvalidArgument("graph6: multi-byte size headers (n > 62) are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw InvalidArgument("graph6: expected " + std::to_string(bytes) + " data bytes for n = " +
                          std::to_string(n) + ", got " + std::to_string(text.size() - 1));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit_at = [&](std::size_t idx) {
    const int byte = text[1 + idx / 6] - kGraph6Offset;
    return (byte >> (5 - idx % 6)) & 1;
  };
  // Upper triangle in column-major order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) edges.emplace_back(i + 1, j + 1);
    }
  }
  for (std::size_t idx = bits; idx < bytes * 6; ++idx) {
    if (bit_at(idx)) throw InvalidArgument("graph6: nonzero padding bits");
  }
  if (n == 0) throw InvalidArgument("graph6: graph with no vertices");
  return Graph::from_edge_list(n, edges, max_vertices);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxSmall) throw InvalidArgument("graph6: n > 62 is not supported");
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  return out;
}

}  // namespace betti
