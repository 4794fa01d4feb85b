// Copyright 2026 The Authors.
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

#ifndef MATACT_IO_HPP
#define MATACT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matact/decomposition.hpp"
#include "matact/matroid.hpp"

namespace matact {

enum class InputKind { kGraph, kBases, kUniform };

// A parsed input file before matroid construction. The order override
// relabels the ground set so that the i-th listed label becomes element i.
struct InputSpec {
  InputKind kind = InputKind::kGraph;

  // kGraph payload.
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  // kBases payload.
  int ground_size = 0;
  int rank = 0;
  std::vector<ElementSet> bases;

  // kUniform payload reuses ground_size/rank.

  std::optional<std::vector<int>> order_override;

  Matroid build() const;
};

// Parses a graph / bases / uniform description; the kind is sniffed from the
// first line unless forced. Errors: kParseError (with line number),
// validation errors propagate from matroid construction.
InputSpec parse_input(std::istream& in,
                      std::optional<InputKind> forced = std::nullopt);

// File variant; path "-" reads stdin.
Matroid load_input(const std::string& path,
                   std::optional<InputKind> forced = std::nullopt,
                   const std::optional<std::vector<int>>& order_override =
                       std::nullopt);

// One row of the basis table, in display form.
struct TableRow {
  std::string filtration;
  std::string partition;
  std::string uniactive_bases;
  std::string ext;
  std::string intl;
  std::string basis;
};

// Rows of the decomposition table, one per basis, sorted by filtration shape
// (internal activity descending, external ascending, partition part sizes,
// then basis). Errors: kSizeBoundExceeded.
std::vector<TableRow> table_rows(const Matroid& m, bool unicode = false,
                                 int max_n = kDefaultEnumerationBound);

// Full table text: header plus one line per basis, fields joined by " | ".
std::string render_table(const Matroid& m, bool unicode = false,
                         int max_n = kDefaultEnumerationBound);

// Result of one `verify` check.
struct VerifyResult {
  std::string name;
  enum class Status { kPass, kFail, kSkip } status;
  std::string detail;
};

struct VerifyBounds {
  int enumeration = kDefaultEnumerationBound;  // filtration sums
  int uniqueness = 7;                          // exhaustive uniqueness search
  int characterization = 6;                    // 2^|E| closure characterization
};

// Runs the full invariant suite on one matroid. Checks whose bound the
// ground set exceeds are reported as skipped, not failed.
std::vector<VerifyResult> verify_matroid(const Matroid& m,
                                         const VerifyBounds& bounds = {});

// Per-check engines, also usable directly. Each returns an empty string on
// success and a failure description otherwise.
std::string check_four_way_tutte(const Matroid& m, int max_n);
std::string check_acl_characterization(const Matroid& m);
std::string check_unique_decomposition(const Matroid& m, int max_n);

// Command-line entry: activities/decompose/partition/table/tutte/
// filtrations/verify, --json, --unicode, --order, --format. Exit codes:
// 0 success, 1 verification failure, 2 input error.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace matact

#endif  // MATACT_IO_HPP
