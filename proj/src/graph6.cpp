#include "sepgraph/graph6.hpp"

#include "sepgraph/error.hpp"

namespace sepgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int byte_value(std::string_view s, std::size_t pos) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", pos);
  return c - 63;
}

void encode_length(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kGraph6MaxOrder) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

} // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.size() <= base) throw ParseError("missing graph6 length field", base);

  std::size_t pos = base;
  long long n = 0;
  if (line[pos] != '~') {
    n = byte_value(line, pos);
    pos += 1;
  } else if (line.size() > pos + 1 && line[pos + 1] == '~') {
    if (line.size() < pos + 8) throw ParseError("truncated 8-byte length field", line.size());
    for (std::size_t k = pos + 2; k < pos + 8; ++k) n = (n << 6) | byte_value(line, k);
    pos += 8;
  } else {
    if (line.size() < pos + 4) throw ParseError("truncated 4-byte length field", line.size());
    for (std::size_t k = pos + 1; k < pos + 4; ++k) n = (n << 6) | byte_value(line, k);
    pos += 4;
  }
  if (n > kGraph6MaxOrder) throw ParseError("order " + std::to_string(n) + " exceeds supported maximum", base);

  const long long bit_count = n * (n - 1) / 2;
  const long long expected = (bit_count + 5) / 6;
  const long long available = static_cast<long long>(line.size() - pos);
  if (available < expected) throw ParseError("edge data truncated", line.size());
  if (available > expected) throw ParseError("trailing bytes after edge data", pos + static_cast<std::size_t>(expected));

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = byte_value(line, at);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(expected - 1);
    const int pad_bits = static_cast<int>(6 - bit_count % 6);
    if (byte_value(line, last) & ((1 << pad_bits) - 1)) throw ParseError("nonzero padding bits", last);
  } else if (expected > 0) {
    byte_value(line, pos + static_cast<std::size_t>(expected - 1));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_length(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line == kHeader) continue;
    try {
      out.push_back({number, parse_graph6(line)});
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), e.offset(), number);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), 0, number);
    }
  }
  return out;
}

} // namespace sepgraph
