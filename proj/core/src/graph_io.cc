// Copyright 2026 The semlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semlab/graph.h"

namespace semlab {
namespace {

constexpr int kGraph6Offset = 63;
constexpr char kGraph6Header[] = ">>graph6<<";

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

int ParseInt(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

Graph ParseEdgeList(std::string_view text) {
  std::optional<int> order;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    while (true) {
      line = Trim(line);
      if (line.empty()) break;
      auto end = std::find_if(line.begin(), line.end(), IsSpace);
      auto len = static_cast<std::size_t>(end - line.begin());
      tokens.push_back(line.substr(0, len));
      line.remove_prefix(len);
    }
    if (tokens.empty()) continue;
    if (!order) {
      if (tokens.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must hold only the vertex count");
      }
      order = ParseInt(tokens[0], line_no);
      if (*order < 0) throw ParseError("negative vertex count");
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v' edge");
    }
    edges.push_back({ParseInt(tokens[0], line_no), ParseInt(tokens[1], line_no)});
  }
  if (!order) throw ParseError("missing vertex count header");
  try {
    return Graph(*order, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

int Graph6Value(char c) {
  int v = static_cast<unsigned char>(c) - kGraph6Offset;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("graph6: invalid character '") + c + "'");
  }
  return v;
}

Graph ParseGraph6(std::string_view text) {
  text = Trim(text);
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(sizeof(kGraph6Header) - 1);
  }
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&]() {
    if (pos >= text.size()) throw ParseError("graph6: truncated header");
    return Graph6Value(text[pos++]);
  };
  std::int64_t order = 0;
  if (text[0] != '~') {
    order = take();
  } else {
    ++pos;
    int digits = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      digits = 6;
    }
    for (int i = 0; i < digits; ++i) order = (order << 6) | take();
  }
  if (order > std::numeric_limits<int>::max() / 2) {
    throw ParseError("graph6: order too large");
  }

  const std::int64_t bits = order * (order - 1) / 2;
  const std::int64_t body_chars = (bits + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != body_chars) {
    throw ParseError("graph6: expected " + std::to_string(body_chars) +
                     " adjacency characters, found " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::int64_t bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int chunk = Graph6Value(text[pos + bit / 6]);
      if (chunk & (1 << (5 - bit % 6))) edges.push_back({i, j});
    }
  }
  for (; bit < body_chars * 6; ++bit) {
    if (Graph6Value(text[pos + bit / 6]) & (1 << (5 - bit % 6))) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(order), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return ParseEdgeList(text);
    case GraphFormat::kGraph6:
      return ParseGraph6(text);
  }
  throw ParseError("unknown graph format");
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view t = Trim(text);
  if (!t.empty() && ((t[0] >= '0' && t[0] <= '9') || t[0] == '#')) {
    return ParseEdgeList(text);
  }
  return ParseGraph6(text);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  auto put = [&](std::int64_t v) {
    out.push_back(static_cast<char>(v + kGraph6Offset));
  };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(chunk << (6 - filled));
  return out;
}

}  // namespace semlab
