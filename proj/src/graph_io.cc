// Copyright 2026 The netfail Authors
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

#include "netfail/graph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "netfail/errors.h"

namespace netfail::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                     std::string(token) + "'");
  return value;
}

double parse_double(std::string_view token, std::size_t line) {
  const std::string s(trim(token));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size())
    throw ParseError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line, line_no);
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto tokens = split_ws(line);
    if (!have_n) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      n = parse_number<std::size_t>(tokens[1], line_no);
      have_n = true;
      return;
    }
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(parse_number<VertexId>(tokens[0], line_no),
                       parse_number<VertexId>(tokens[1], line_no));
  });
  if (!have_n) throw ParseError("missing 'n <count>' header");
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be [u, v]");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string write_graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}}.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Matrix parse_matrix_csv(std::string_view text) {
  std::size_t rows = 0;
  bool have_header = false;
  std::vector<std::vector<double>> data;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (!have_header) {
      if (line.substr(0, 5) != "rows=")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'rows=<n>'");
      rows = parse_number<std::size_t>(trim(line.substr(5)), line_no);
      have_header = true;
      return;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(parse_double(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    data.push_back(std::move(row));
  });
  if (!have_header) throw ParseError("missing 'rows=<n>' header");
  if (data.size() != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                     std::to_string(data.size()));
  const std::size_t cols = rows == 0 ? 0 : data.front().size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) throw ParseError("ragged matrix row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
  }
  return m;
}

std::string write_matrix_csv(const Matrix& m) {
  std::ostringstream out;
  out.precision(17);
  out << "rows=" << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

Matrix read_matrix_file(const std::string& path) { return parse_matrix_csv(read_file(path)); }

}  // namespace netfail::io
