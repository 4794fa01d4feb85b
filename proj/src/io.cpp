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

#include "matact/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matact/active_closure.hpp"
#include "matact/fundamental_graph.hpp"
#include "matact/tutte.hpp"

namespace matact {

namespace {

using nlohmann::json;

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::kParseError,
         "line " + std::to_string(line_no) + ": expected an integer, got '" +
             tok + "'");
  }
}

json set_json(ElementSet s) {
  json out = json::array();
  for (int e : s) out.push_back(e);
  return out;
}

json filtration_json(const Filtration& f, const GroundSet& ground) {
  json chain = json::array();
  for (ElementSet s : f.chain()) chain.push_back(set_json(s));
  return json{{"chain", chain},
              {"cyclic_index", f.cyclic_index()},
              {"text", f.text(ground)}};
}

json tutte_json(const TuttePolynomial& t, const std::string& method) {
  std::vector<std::pair<std::pair<int, int>, long long>> terms(
      t.coefficients().begin(), t.coefficients().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  json coeffs = json::array();
  for (const auto& [exps, c] : terms) {
    coeffs.push_back(json{{"i", exps.first}, {"j", exps.second}, {"coeff", c}});
  }
  return json{{"method", method}, {"coefficients", coeffs}, {"text", t.text()}};
}

ElementSet parse_label_list(const std::string& arg) {
  ElementSet out;
  std::string tok;
  std::istringstream ss(arg);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out = out.with(parse_int(tok, 0));
  }
  return out;
}

}  // namespace

Matroid InputSpec::build() const {
  Matroid m = [&] {
    switch (kind) {
      case InputKind::kGraph:
        return graphic_matroid(vertex_count, edges);
      case InputKind::kBases:
        return Matroid::from_bases(GroundSet::first_n(ground_size), bases);
      case InputKind::kUniform:
        return uniform_matroid(rank, ground_size);
    }
    fail(ErrorCode::kParseError, "unknown input kind");
  }();
  if (!order_override) return m;

  // The i-th listed label becomes element i of the new order.
  const std::vector<int>& order = *order_override;
  const std::vector<int> old_labels = m.ground().labels();
  if (order.size() != old_labels.size() ||
      ElementSet::from_labels(order) != m.ground().all()) {
    fail(ErrorCode::kUsageError,
         "--order must be a permutation of the ground-set labels");
  }
  std::vector<int> new_labels(old_labels.size());
  for (std::size_t i = 0; i < old_labels.size(); ++i) {
    const auto at = std::find(order.begin(), order.end(), old_labels[i]);
    new_labels[i] = static_cast<int>(at - order.begin()) + 1;
  }
  return relabel(m, new_labels);
}

InputSpec parse_input(std::istream& in, std::optional<InputKind> forced) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::vector<std::string> toks = tokenize(raw);
    if (!toks.empty()) lines.emplace_back(line_no, toks);
  }
  if (lines.empty()) fail(ErrorCode::kParseError, "empty input");

  const auto& [first_no, first] = lines.front();
  InputKind kind;
  if (forced) {
    kind = *forced;
  } else if (first.front() == "uniform") {
    kind = InputKind::kUniform;
  } else if (first.size() == 1) {
    kind = InputKind::kGraph;
  } else if (first.size() == 2) {
    kind = InputKind::kBases;
  } else {
    fail(ErrorCode::kParseError,
         "line " + std::to_string(first_no) + ": unrecognized header");
  }

  InputSpec spec;
  spec.kind = kind;
  switch (kind) {
    case InputKind::kUniform: {
      if (first.size() != 3 || first.front() != "uniform") {
        fail(ErrorCode::kParseError,
             "line " + std::to_string(first_no) + ": expected 'uniform r n'");
      }
      spec.rank = parse_int(first[1], first_no);
      spec.ground_size = parse_int(first[2], first_no);
      break;
    }
    case InputKind::kGraph: {
      spec.vertex_count = parse_int(first.front(), first_no);
      for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, toks] = lines[i];
        if (toks.size() != 2) {
          fail(ErrorCode::kParseError,
               "line " + std::to_string(no) + ": expected an edge 'u v'");
        }
        spec.edges.emplace_back(parse_int(toks[0], no), parse_int(toks[1], no));
      }
      break;
    }
    case InputKind::kBases: {
      if (first.size() != 2) {
        fail(ErrorCode::kParseError,
             "line " + std::to_string(first_no) + ": expected 'n r'");
      }
      spec.ground_size = parse_int(first[0], first_no);
      spec.rank = parse_int(first[1], first_no);
      for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, toks] = lines[i];
        if (static_cast<int>(toks.size()) != spec.rank) {
          fail(ErrorCode::kParseError,
               "line " + std::to_string(no) + ": expected " +
                   std::to_string(spec.rank) + " elements");
        }
        ElementSet b;
        for (const std::string& tok : toks) b = b.with(parse_int(tok, no));
        spec.bases.push_back(b);
      }
      if (spec.bases.empty() && spec.rank == 0) {
        spec.bases.push_back(ElementSet());
      }
      break;
    }
  }
  return spec;
}

Matroid load_input(const std::string& path, std::optional<InputKind> forced,
                   const std::optional<std::vector<int>>& order_override) {
  InputSpec spec;
  if (path == "-") {
    spec = parse_input(std::cin, forced);
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kParseError, "cannot open input file: " + path);
    spec = parse_input(in, forced);
  }
  spec.order_override = order_override;
  return spec.build();
}

namespace {

struct SortableRow {
  int iota;
  int epsilon;
  std::vector<int> part_sizes;
  ElementSet basis;
  TableRow row;
};

std::string pieces_text(const BasisDecomposition& dec, bool unicode) {
  // Chain order: external pieces from F'_{eps-1}\F'_eps down, then internal.
  std::string out;
  auto append = [&](const ElementSet s) {
    if (!out.empty()) out += "+";
    out += set_text(s, unicode);
  };
  for (std::size_t k = dec.external_pieces.size(); k-- > 0;) {
    append(dec.external_pieces[k].basis);
  }
  for (const auto& piece : dec.internal_pieces) append(piece.basis);
  return out;
}

std::string partition_text(const Filtration& f, bool unicode) {
  std::string out;
  for (std::size_t i = 0; i + 1 < f.chain().size(); ++i) {
    if (!out.empty()) out += "+";
    out += set_text(f.chain()[i + 1] - f.chain()[i], unicode);
  }
  return out;
}

}  // namespace

std::vector<TableRow> table_rows(const Matroid& m, bool unicode, int max_n) {
  if (m.ground().size() > max_n) {
    fail(ErrorCode::kSizeBoundExceeded,
         "table bound exceeded: |E|=" + std::to_string(m.ground().size()));
  }
  std::vector<SortableRow> rows;
  rows.reserve(m.bases().size());
  for (ElementSet b : m.bases()) {
    const BasisDecomposition dec = decompose_basis(m, b);
    const ActivitySets a = activity_sets(fundamental_graph(m, b));
    rows.push_back(SortableRow{
        dec.filtration.iota(), dec.filtration.epsilon(),
        dec.filtration.part_sizes(), b,
        TableRow{dec.filtration.text(m.ground(), unicode),
                 partition_text(dec.filtration, unicode),
                 pieces_text(dec, unicode),
                 set_text(a.externally_active, unicode),
                 set_text(a.internally_active, unicode),
                 set_text(b, unicode)}});
  }
  std::sort(rows.begin(), rows.end(),
            [](const SortableRow& a, const SortableRow& b) {
              if (a.iota != b.iota) return a.iota > b.iota;
              if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
              if (a.part_sizes != b.part_sizes) return a.part_sizes < b.part_sizes;
              return lex_less(a.basis, b.basis);
            });
  std::vector<TableRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(r.row));
  return out;
}

std::string render_table(const Matroid& m, bool unicode, int max_n) {
  std::string out =
      "Active filtrations | Active partitions | Uniactive bases of minors | "
      "Ext | Int | Bases\n";
  for (const TableRow& r : table_rows(m, unicode, max_n)) {
    out += r.filtration + " | " + r.partition + " | " + r.uniactive_bases +
           " | " + r.ext + " | " + r.intl + " | " + r.basis + "\n";
  }
  return out;
}

namespace {

struct CliOptions {
  bool json_output = false;
  bool unicode = false;
  int max_n = kDefaultEnumerationBound;
  std::optional<InputKind> format;
  std::optional<std::vector<int>> order;
};

Matroid load_for_cli(const std::string& path, const CliOptions& opt) {
  return load_input(path, opt.format, opt.order);
}

int run_activities(const Matroid& m, ElementSet basis, const CliOptions& opt,
                   std::ostream& out) {
  const FundamentalGraph fg = fundamental_graph(m, basis);
  const ActivitySets a = activity_sets(fg);
  if (opt.json_output) {
    out << json{{"ground", set_json(m.ground().all())},
                {"basis", set_json(basis)},
                {"internally_active", set_json(a.internally_active)},
                {"externally_active", set_json(a.externally_active)},
                {"iota", a.iota()},
                {"epsilon", a.epsilon()}}
               .dump(2)
        << "\n";
  } else {
    out << "basis: " << set_text(basis, opt.unicode) << "\n";
    out << "Int: " << set_text(a.internally_active, opt.unicode) << "\n";
    out << "Ext: " << set_text(a.externally_active, opt.unicode) << "\n";
    out << "activities: (" << a.iota() << "," << a.epsilon() << ")\n";
    out << "tableau:\n" << render_tableau(fg);
  }
  return 0;
}

int run_decompose(const Matroid& m, ElementSet basis, const CliOptions& opt,
                  std::ostream& out) {
  const BasisDecomposition dec = decompose_basis(m, basis);
  if (opt.json_output) {
    json internal_parts = json::array();
    for (const auto& piece : dec.internal_pieces) {
      internal_parts.push_back(json{{"ground", set_json(piece.minor.ground().all())},
                                    {"basis", set_json(piece.basis)}});
    }
    json external_parts = json::array();
    for (const auto& piece : dec.external_pieces) {
      external_parts.push_back(json{{"ground", set_json(piece.minor.ground().all())},
                                    {"basis", set_json(piece.basis)}});
    }
    out << json{{"basis", set_json(basis)},
                {"filtration", filtration_json(dec.filtration, m.ground())},
                {"internal_parts", internal_parts},
                {"external_parts", external_parts}}
               .dump(2)
        << "\n";
  } else {
    out << "basis: " << set_text(basis, opt.unicode) << "\n";
    out << "filtration: " << dec.filtration.text(m.ground(), opt.unicode) << "\n";
    std::string parts;
    for (std::size_t k = dec.external_pieces.size(); k-- > 0;) {
      if (!parts.empty()) parts += " + ";
      parts += set_text(dec.external_pieces[k].basis, opt.unicode);
    }
    for (const auto& piece : dec.internal_pieces) {
      if (!parts.empty()) parts += " + ";
      parts += set_text(piece.basis, opt.unicode);
    }
    out << "parts: " << parts << "\n";
  }
  return 0;
}

int run_partition(const Matroid& m, ElementSet basis, const CliOptions& opt,
                  std::ostream& out) {
  const ActivePartition part =
      active_partition(fundamental_graph(m, basis));
  if (opt.json_output) {
    json parts = json::array();
    for (const auto& p : part.parts) {
      parts.push_back(json{{"key", p.key},
                           {"side", p.internal_side ? "internal" : "external"},
                           {"elements", set_json(p.elements)}});
    }
    out << json{{"basis", set_json(basis)},
                {"parts", parts},
                {"external_part", set_json(part.external_part)},
                {"internal_part", set_json(part.internal_part)}}
               .dump(2)
        << "\n";
  } else {
    out << "basis: " << set_text(basis, opt.unicode) << "\n";
    std::string text;
    for (const auto& p : part.parts) {
      if (!text.empty()) text += "+";
      text += set_text(p.elements, opt.unicode);
    }
    out << "partition: " << text << "\n";
    for (const auto& p : part.parts) {
      out << "  part " << set_text(p.elements, opt.unicode) << " (key " << p.key
          << ", " << (p.internal_side ? "internal" : "external") << ")\n";
    }
    out << "external part: " << set_text(part.external_part, opt.unicode) << "\n";
    out << "internal part: " << set_text(part.internal_part, opt.unicode) << "\n";
  }
  return 0;
}

int run_table(const Matroid& m, const CliOptions& opt, std::ostream& out) {
  if (opt.json_output) {
    json rows = json::array();
    for (const TableRow& r : table_rows(m, opt.unicode, opt.max_n)) {
      rows.push_back(json{{"filtration", r.filtration},
                          {"partition", r.partition},
                          {"uniactive_bases", r.uniactive_bases},
                          {"ext", r.ext},
                          {"int", r.intl},
                          {"basis", r.basis}});
    }
    out << json{{"rows", rows}}.dump(2) << "\n";
  } else {
    out << render_table(m, opt.unicode, opt.max_n);
  }
  return 0;
}

int run_tutte(const Matroid& m, const std::string& method,
              const CliOptions& opt, std::ostream& out) {
  TuttePolynomial t;
  if (method == "activities") {
    t = tutte_by_activities(m);
  } else if (method == "ranknullity") {
    t = tutte_rank_nullity(m, opt.max_n);
  } else if (method == "filtrations") {
    t = tutte_by_filtrations(m, /*connected_only=*/true, opt.max_n);
  } else if (method == "convolution") {
    t = tutte_convolution(m, /*cyclic_flats_only=*/true, opt.max_n);
  } else {
    fail(ErrorCode::kUsageError, "unknown tutte method: " + method);
  }
  if (opt.json_output) {
    out << tutte_json(t, method).dump(2) << "\n";
  } else {
    out << t.text() << "\n";
  }
  return 0;
}

int run_filtrations(const Matroid& m, bool connected_only,
                    const CliOptions& opt, std::ostream& out) {
  enumerate_filtrations(
      m.ground(),
      [&](const Filtration& f) {
        if (connected_only && !is_connected_filtration(m, f)) return;
        if (opt.json_output) {
          out << filtration_json(f, m.ground()).dump() << "\n";
        } else {
          out << f.text(m.ground(), opt.unicode) << "\n";
        }
      },
      opt.max_n);
  return 0;
}

int run_verify(const Matroid& m, const CliOptions& opt, std::ostream& out) {
  VerifyBounds bounds;
  bounds.enumeration = opt.max_n;
  const std::vector<VerifyResult> results = verify_matroid(m, bounds);
  bool ok = true;
  if (opt.json_output) {
    json checks = json::array();
    for (const VerifyResult& r : results) {
      const char* status = r.status == VerifyResult::Status::kPass   ? "pass"
                           : r.status == VerifyResult::Status::kFail ? "fail"
                                                                     : "skip";
      checks.push_back(json{{"name", r.name},
                            {"status", status},
                            {"detail", r.detail}});
      ok = ok && r.status != VerifyResult::Status::kFail;
    }
    out << json{{"checks", checks}, {"ok", ok}}.dump(2) << "\n";
  } else {
    for (const VerifyResult& r : results) {
      switch (r.status) {
        case VerifyResult::Status::kPass:
          out << "PASS " << r.name << "\n";
          break;
        case VerifyResult::Status::kFail:
          out << "FAIL " << r.name << ": " << r.detail << "\n";
          ok = false;
          break;
        case VerifyResult::Status::kSkip:
          out << "SKIP " << r.name << " (" << r.detail << ")\n";
          break;
      }
    }
  }
  return ok ? 0 : 1;
}

std::vector<int> parse_order_arg(const std::string& arg) {
  std::vector<int> out;
  std::istringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_int(tok, 0));
  }
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Basis activities, active partitions and Tutte invariants of "
               "small ordered matroids"};
  app.require_subcommand(1);

  CliOptions opt;
  if (const char* env = std::getenv("ACTIVE_MATROID_MAX_N")) {
    try {
      opt.max_n = std::stoi(env);
    } catch (const std::exception&) {
      err << "ignoring malformed ACTIVE_MATROID_MAX_N\n";
    }
  }
  app.add_flag("--json", opt.json_output, "JSON output");
  app.add_flag("--unicode", opt.unicode, "render with the paper's glyphs");
  app.add_option("--max-n", opt.max_n,
                 "bound for exhaustive enumerations (default 10, or "
                 "ACTIVE_MATROID_MAX_N)");
  std::string format_name;
  app.add_option("--format", format_name, "input format")
      ->check(CLI::IsMember({"graph", "bases", "uniform"}));
  std::string order_arg;
  app.add_option("--order", order_arg,
                 "comma-separated relabeling: listed labels become 1,2,...");

  std::string input_path, basis_arg, method = "activities";
  bool connected_only = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "input file (- for stdin)")->required();
  };
  CLI::App* activities = app.add_subcommand("activities", "activity sets of a basis");
  add_input(activities);
  activities->add_option("--basis", basis_arg, "comma-separated basis")->required();
  CLI::App* decompose = app.add_subcommand("decompose", "active decomposition of a basis");
  add_input(decompose);
  decompose->add_option("--basis", basis_arg, "comma-separated basis")->required();
  CLI::App* partition = app.add_subcommand("partition", "active partition of a basis");
  add_input(partition);
  partition->add_option("--basis", basis_arg, "comma-separated basis")->required();
  CLI::App* table = app.add_subcommand("table", "decomposition table of all bases");
  add_input(table);
  CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  add_input(tutte);
  tutte->add_option("--method", method, "computation method")
      ->check(CLI::IsMember({"activities", "ranknullity", "filtrations",
                             "convolution"}));
  CLI::App* filtrations = app.add_subcommand("filtrations", "enumerate filtrations");
  add_input(filtrations);
  filtrations->add_flag("--connected", connected_only, "connected filtrations only");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_input(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!format_name.empty()) {
      opt.format = format_name == "graph"   ? InputKind::kGraph
                   : format_name == "bases" ? InputKind::kBases
                                            : InputKind::kUniform;
    }
    if (!order_arg.empty()) opt.order = parse_order_arg(order_arg);

    const Matroid m = load_for_cli(input_path, opt);
    if (activities->parsed()) {
      return run_activities(m, parse_label_list(basis_arg), opt, out);
    }
    if (decompose->parsed()) {
      return run_decompose(m, parse_label_list(basis_arg), opt, out);
    }
    if (partition->parsed()) {
      return run_partition(m, parse_label_list(basis_arg), opt, out);
    }
    if (table->parsed()) return run_table(m, opt, out);
    if (tutte->parsed()) return run_tutte(m, method, opt, out);
    if (filtrations->parsed()) {
      return run_filtrations(m, connected_only, opt, out);
    }
    if (verify->parsed()) return run_verify(m, opt, out);
    fail(ErrorCode::kUsageError, "no subcommand given");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInternalCheckFailed ||
                   e.code() == ErrorCode::kNotABijection
               ? 1
               : 2;
  }
}

}  // namespace matact
