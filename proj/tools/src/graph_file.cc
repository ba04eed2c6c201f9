//
// Copyright 2026 The Rainbow DP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "rainbow_dp/cli/graph_file.h"

#include <map>
#include <set>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "rainbow_dp/cli/csv.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {
namespace {

absl::Status LineError(int line, const std::string& message) {
  return MakeError(ErrorKind::kInvalidInput,
                   absl::StrCat("line ", line, ": ", message));
}

// Turns a status from a value constructor into a line diagnostic.
absl::Status AtLine(int line, const absl::Status& status) {
  return LineError(line, std::string(status.message()));
}

std::vector<std::string> Tokenize(std::string_view line) {
  const size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return absl::StrSplit(std::string(line), absl::ByAnyChar(" \t\r"),
                        absl::SkipEmpty());
}

struct PendingEdge {
  int line;
  std::string a;
  std::string b;
};

}  // namespace

absl::StatusOr<GraphFile> ParseGraphFile(std::string_view text) {
  std::optional<ColorSpace> space;
  std::vector<NodeSpec> nodes;
  std::set<std::string> node_ids;
  std::vector<PendingEdge> edges;
  std::set<std::pair<std::string, std::string>> edge_keys;
  BoundaryCondition boundary;
  bool has_boundary = false;

  const std::vector<std::string> lines =
      absl::StrSplit(std::string(text), '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::vector<std::string> tok = Tokenize(lines[i]);
    if (tok.empty()) continue;
    const std::string& directive = tok[0];

    if (directive == "colors") {
      if (space.has_value()) return LineError(line_no, "colors declared twice");
      absl::StatusOr<ColorSpace> s = ColorSpace::Create(
          std::vector<std::string>(tok.begin() + 1, tok.end()));
      if (!s.ok()) return AtLine(line_no, s.status());
      space = *std::move(s);
      continue;
    }
    if (!space.has_value()) {
      return LineError(line_no, "the colors line must come first");
    }
    const int q = space->size();

    if (directive == "node") {
      if (static_cast<int>(tok.size()) != q + 2) {
        return LineError(line_no, absl::StrCat("node needs an id and ", q,
                                               " colors"));
      }
      const std::string& id = tok[1];
      if (id.find(',') != std::string::npos) {
        return LineError(line_no, "node ids may not contain ','");
      }
      if (!node_ids.insert(id).second) {
        return LineError(line_no, absl::StrCat("duplicate node '", id, "'"));
      }
      std::vector<std::string> names(tok.begin() + 2, tok.end());
      absl::StatusOr<Rainbow> r = Rainbow::FromNames(*space, names);
      if (!r.ok()) return AtLine(line_no, r.status());
      nodes.push_back({id, *std::move(r)});
    } else if (directive == "edge") {
      if (tok.size() != 3) return LineError(line_no, "edge needs two node ids");
      if (tok[1] == tok[2]) {
        return LineError(line_no, absl::StrCat("self-loop on '", tok[1], "'"));
      }
      auto key = std::minmax(tok[1], tok[2]);
      if (!edge_keys.emplace(key.first, key.second).second) {
        return LineError(line_no, absl::StrCat("duplicate edge ", tok[1], " ",
                                               tok[2]));
      }
      edges.push_back({line_no, tok[1], tok[2]});
    } else if (directive == "boundary") {
      if (tok.size() < 2) return LineError(line_no, "boundary needs a rainbow");
      std::vector<std::string> names = absl::StrSplit(tok[1], ',');
      absl::StatusOr<Rainbow> r = Rainbow::FromNames(*space, names);
      if (!r.ok()) return AtLine(line_no, r.status());
      if (static_cast<int>(tok.size()) != q + 2) {
        return LineError(line_no,
                         absl::StrCat("boundary vector has ", tok.size() - 2,
                                      " entries, expected ", q));
      }
      std::vector<double> p;
      for (size_t k = 2; k < tok.size(); ++k) {
        double v;
        if (!absl::SimpleAtod(tok[k], &v)) {
          return LineError(line_no,
                           absl::StrCat("malformed probability '", tok[k], "'"));
        }
        p.push_back(v);
      }
      absl::StatusOr<SimplexVector> m = SimplexVector::Create(std::move(p));
      if (!m.ok()) return AtLine(line_no, m.status());
      if (boundary.Find(*r) != nullptr) {
        return LineError(line_no, "boundary for this rainbow given twice");
      }
      boundary.Set(*r, *std::move(m));
      has_boundary = true;
    } else {
      return LineError(line_no,
                       absl::StrCat("unknown directive '", directive, "'"));
    }
  }
  if (!space.has_value()) {
    return MakeError(ErrorKind::kInvalidInput, "missing colors line");
  }

  std::vector<EdgeSpec> edge_specs;
  for (const PendingEdge& e : edges) {
    for (const std::string* id : {&e.a, &e.b}) {
      if (!node_ids.contains(*id)) {
        return LineError(e.line,
                         absl::StrCat("edge endpoint '", *id, "' is not a node"));
      }
    }
    edge_specs.emplace_back(e.a, e.b);
  }
  absl::StatusOr<RainbowGraph> graph = RainbowGraph::Create(
      *std::move(space), std::move(nodes), std::move(edge_specs));
  if (!graph.ok()) return graph.status();
  GraphFile file{*std::move(graph), std::nullopt};
  if (has_boundary) file.boundary = std::move(boundary);
  return file;
}

std::string EmitGraphFile(const GraphFile& file) {
  const RainbowGraph& g = file.graph;
  const ColorSpace& space = g.color_space();
  std::string out = absl::StrCat("colors ", absl::StrJoin(space.colors(), " "),
                                 "\n");
  for (int d = 0; d < g.num_nodes(); ++d) {
    absl::StrAppend(&out, "node ", g.id(d), " ",
                    g.preference(d).ToString(space, " "), "\n");
  }
  for (const auto& [a, b] : g.edges()) {
    absl::StrAppend(&out, "edge ", g.id(a), " ", g.id(b), "\n");
  }
  if (file.boundary.has_value()) {
    for (const auto& [c, m] : file.boundary->values()) {
      absl::StrAppend(&out, "boundary ", c.ToString(space, ","));
      for (double v : m.values()) absl::StrAppend(&out, " ", FormatNumber(v));
      absl::StrAppend(&out, "\n");
    }
  }
  return out;
}

}  // namespace rainbow_dp
