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

#ifndef NETFAIL_GRAPH_IO_H_
#define NETFAIL_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "netfail/graph.h"
#include "netfail/matrix.h"

namespace netfail::io {

// Edge-list text:
//   # comment
//   n <count>
//   u v
//   ...
// '#' starts a comment anywhere on a line. Vertices are 0-based decimals.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);
std::string write_graph_json(const Graph& g);

// Dispatches on the first significant character: '{' means JSON.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// Matrix CSV: a header line "rows=<n>" followed by n comma-separated rows.
Matrix parse_matrix_csv(std::string_view text);
std::string write_matrix_csv(const Matrix& m);
Matrix read_matrix_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace netfail::io

#endif  // NETFAIL_GRAPH_IO_H_
