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

#include "rainbow_dp/cli/csv.h"

#include <cstdio>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {
namespace {

constexpr char kTrajectoryHeader[] = "t,k,color,p,s";

std::vector<std::string> Lines(std::string_view text) {
  std::vector<std::string> lines = absl::StrSplit(std::string(text), '\n');
  for (std::string& l : lines) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

absl::Status RowError(ErrorKind kind, size_t row, const std::string& message) {
  return MakeError(kind, absl::StrCat("line ", row + 1, ": ", message));
}

void AppendRow(std::string& out, const std::string& id,
               const SimplexVector& p) {
  out += id;
  for (double v : p.values()) absl::StrAppend(&out, ",", FormatNumber(v));
  out += "\n";
}

std::string Header(const ColorSpace& space) {
  return absl::StrCat("node,", absl::StrJoin(space.colors(), ","), "\n");
}

}  // namespace

std::string FormatNumber(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string WriteMechanismCsv(const RainbowGraph& graph,
                              const Mechanism& mechanism) {
  std::string out = Header(mechanism.color_space());
  for (const std::string& id : graph.ids()) {
    if (const SimplexVector* p = mechanism.Find(id)) AppendRow(out, id, *p);
  }
  return out;
}

std::string WriteMechanismCsv(const Mechanism& mechanism) {
  std::string out = Header(mechanism.color_space());
  for (const auto& [id, p] : mechanism.assignment()) AppendRow(out, id, p);
  return out;
}

absl::StatusOr<Mechanism> ParseMechanismCsv(std::string_view text,
                                            const ColorSpace& space) {
  const std::vector<std::string> lines = Lines(text);
  if (lines.empty()) {
    return MakeError(ErrorKind::kMissingNode, "empty mechanism file");
  }
  const std::vector<std::string> header = absl::StrSplit(lines[0], ',');
  if (header.empty() || header[0] != "node" ||
      static_cast<int>(header.size()) != space.size() + 1) {
    return RowError(ErrorKind::kInvalidInput, 0,
                    absl::StrCat("expected header node,",
                                 absl::StrJoin(space.colors(), ",")));
  }
  // column -> canonical color index
  std::vector<int> column_color;
  std::vector<bool> seen(space.size(), false);
  for (size_t c = 1; c < header.size(); ++c) {
    std::optional<int> index = space.IndexOf(header[c]);
    if (!index.has_value() || seen[*index]) {
      return RowError(ErrorKind::kInvalidInput, 0,
                      absl::StrCat("unexpected column '", header[c], "'"));
    }
    seen[*index] = true;
    column_color.push_back(*index);
  }

  Mechanism mechanism(space);
  for (size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const std::vector<std::string> fields = absl::StrSplit(lines[r], ',');
    if (fields.size() < header.size()) {
      return RowError(ErrorKind::kMissingNode, r,
                      absl::StrCat("row has ", fields.size(), " of ",
                                   header.size(), " fields"));
    }
    if (fields.size() > header.size()) {
      return RowError(ErrorKind::kInvalidInput, r, "too many fields");
    }
    if (mechanism.Find(fields[0]) != nullptr) {
      return RowError(ErrorKind::kInvalidInput, r,
                      absl::StrCat("duplicate node '", fields[0], "'"));
    }
    std::vector<double> p(space.size());
    for (size_t c = 1; c < fields.size(); ++c) {
      double v;
      if (!absl::SimpleAtod(fields[c], &v)) {
        return RowError(ErrorKind::kInvalidInput, r,
                        absl::StrCat("malformed probability '", fields[c], "'"));
      }
      p[column_color[c - 1]] = v;
    }
    absl::StatusOr<SimplexVector> sv = SimplexVector::Create(std::move(p));
    if (!sv.ok()) {
      return RowError(ErrorKind::kInvalidInput, r,
                      std::string(sv.status().message()));
    }
    if (absl::Status s = mechanism.Set(fields[0], *std::move(sv)); !s.ok()) {
      return s;
    }
  }
  return mechanism;
}

std::string WriteTrajectoryCsv(const TrajectoryTable& table) {
  std::string out = absl::StrCat(kTrajectoryHeader, "\n");
  for (const TrajectoryRow& row : table) {
    absl::StrAppend(&out, FormatNumber(row.t), ",", row.k, ",", row.color, ",",
                    FormatNumber(row.p), ",", FormatNumber(row.s), "\n");
  }
  return out;
}

absl::StatusOr<TrajectoryTable> ParseTrajectoryCsv(std::string_view text) {
  const std::vector<std::string> lines = Lines(text);
  if (lines.empty() || lines[0] != kTrajectoryHeader) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("line 1: expected header ", kTrajectoryHeader));
  }
  TrajectoryTable table;
  for (size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> f = absl::StrSplit(lines[r], ',');
    TrajectoryRow row;
    if (f.size() != 5 || !absl::SimpleAtod(f[0], &row.t) ||
        !absl::SimpleAtoi(f[1], &row.k) || f[2].empty() ||
        !absl::SimpleAtod(f[3], &row.p) || !absl::SimpleAtod(f[4], &row.s) ||
        row.k < 1) {
      return RowError(ErrorKind::kInvalidInput, r,
                      absl::StrCat("malformed trajectory row '", lines[r], "'"));
    }
    row.color = f[2];
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace rainbow_dp
