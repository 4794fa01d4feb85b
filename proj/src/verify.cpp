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

#include <algorithm>
#include <random>

#include "matact/active_closure.hpp"
#include "matact/detail/minor_ops.hpp"
#include "matact/fundamental_graph.hpp"
#include "matact/io.hpp"
#include "matact/tutte.hpp"

namespace matact {

namespace {

std::string poly_mismatch(const char* a_name, const TuttePolynomial& a,
                          const char* b_name, const TuttePolynomial& b) {
  if (a == b) return "";
  return std::string(a_name) + " gives " + a.text() + " but " + b_name +
         " gives " + b.text();
}

// The uniactivity conditions of the decomposition theorem, checked directly
// on a candidate filtration.
bool filtration_decomposes_basis(const Matroid& m, const Filtration& f,
                                 ElementSet basis) {
  for (int k = 1; k <= f.iota(); ++k) {
    if (!detail::is_uniactive_minor_basis(m, f.internal_set(k),
                                          f.internal_set(k - 1),
                                          basis & f.internal_diff(k),
                                          /*internal_side=*/true)) {
      return false;
    }
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    if (!detail::is_uniactive_minor_basis(m, f.external_set(k - 1),
                                          f.external_set(k),
                                          basis & f.external_diff(k),
                                          /*internal_side=*/false)) {
      return false;
    }
  }
  return true;
}

Matroid random_relabeling(const Matroid& m, std::mt19937& rng) {
  std::vector<int> labels = m.ground().labels();
  std::shuffle(labels.begin(), labels.end(), rng);
  return relabel(m, labels);
}

}  // namespace

std::string check_four_way_tutte(const Matroid& m, int max_n) {
  const TuttePolynomial by_activities = tutte_by_activities(m);
  const TuttePolynomial by_rank = tutte_rank_nullity(m, max_n);
  if (std::string s = poly_mismatch("activities", by_activities, "rank-nullity",
                                    by_rank);
      !s.empty()) {
    return s;
  }
  const TuttePolynomial by_filtrations =
      tutte_by_filtrations(m, /*connected_only=*/true, max_n);
  if (std::string s = poly_mismatch("activities", by_activities, "filtrations",
                                    by_filtrations);
      !s.empty()) {
    return s;
  }
  const TuttePolynomial all_filtrations =
      tutte_by_filtrations(m, /*connected_only=*/false, max_n);
  if (std::string s = poly_mismatch("connected filtrations", by_filtrations,
                                    "all filtrations", all_filtrations);
      !s.empty()) {
    return s;
  }
  const TuttePolynomial conv_flats =
      tutte_convolution(m, /*cyclic_flats_only=*/true, max_n);
  if (std::string s = poly_mismatch("activities", by_activities,
                                    "convolution over cyclic flats", conv_flats);
      !s.empty()) {
    return s;
  }
  const TuttePolynomial conv_all =
      tutte_convolution(m, /*cyclic_flats_only=*/false, max_n);
  return poly_mismatch("convolution over cyclic flats", conv_flats,
                       "convolution over all subsets", conv_all);
}

std::string check_acl_characterization(const Matroid& m) {
  const std::vector<int> labels = m.ground().labels();
  const int n = static_cast<int>(labels.size());
  for (ElementSet basis : m.bases()) {
    const FundamentalGraph fg = fundamental_graph(m, basis);
    const ActivitySets activity = activity_sets(fg);
    const std::vector<int> internal = activity.internally_active.labels();

    // Every X <= Int(F).
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << internal.size());
         ++xm) {
      ElementSet x;
      for (std::size_t i = 0; i < internal.size(); ++i) {
        if ((xm >> i) & 1u) x = x.with(internal[i]);
      }
      const ElementSet closure = acl_internal(fg, x);

      // Brute force over all subsets A of E: the closure must be the unique
      // one satisfying the five characterizing conditions.
      int satisfying = 0;
      bool closure_satisfies = false;
      for (std::uint64_t am = 0; am < (std::uint64_t{1} << n); ++am) {
        ElementSet a;
        for (int i = 0; i < n; ++i) {
          if ((am >> i) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
        }
        bool ok = true;
        for (int b : basis & a) {
          if (!fg.cocircuit(b).subset_of(a)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          const ActivitySets removed = activity_sets(fg_remove(fg, a));
          ok = removed.internally_active ==
                   activity.internally_active - x &&
               removed.externally_active == activity.externally_active;
        }
        if (ok) {
          const ActivitySets kept =
              activity_sets(fg_remove(fg, m.ground().all() - a));
          ok = kept.internally_active == x && kept.externally_active.empty();
        }
        if (ok) {
          ++satisfying;
          if (a == closure) closure_satisfies = true;
        }
      }
      if (satisfying != 1 || !closure_satisfies) {
        return "closure of " + set_text(x) + " w.r.t. basis " +
               set_text(basis) + " is not the unique characterized set (" +
               std::to_string(satisfying) + " candidates)";
      }
    }
  }
  return "";
}

std::string check_unique_decomposition(const Matroid& m, int max_n) {
  std::vector<Filtration> connected;
  enumerate_filtrations(
      m.ground(),
      [&](const Filtration& f) {
        if (is_connected_filtration(m, f)) connected.push_back(f);
      },
      max_n);
  for (ElementSet basis : m.bases()) {
    const Filtration expected =
        active_filtration(fundamental_graph(m, basis));
    int matches = 0;
    bool expected_matches = false;
    for (const Filtration& f : connected) {
      if (filtration_decomposes_basis(m, f, basis)) {
        ++matches;
        if (f == expected) expected_matches = true;
      }
    }
    if (matches != 1 || !expected_matches) {
      return "basis " + set_text(basis) + " admits " +
             std::to_string(matches) +
             " decomposing connected filtrations (expected exactly the active "
             "filtration)";
    }
  }
  return "";
}

std::vector<VerifyResult> verify_matroid(const Matroid& m,
                                         const VerifyBounds& bounds) {
  std::vector<VerifyResult> out;
  const int n = m.ground().size();

  auto run = [&](const std::string& name, int bound,
                 const std::function<std::string()>& fn) {
    if (n > bound) {
      out.push_back({name, VerifyResult::Status::kSkip,
                     "|E|=" + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound)});
      return;
    }
    std::string detail;
    try {
      detail = fn();
    } catch (const Error& e) {
      detail = e.what();
    }
    out.push_back({name,
                   detail.empty() ? VerifyResult::Status::kPass
                                  : VerifyResult::Status::kFail,
                   detail});
  };
  const int unbounded = kMaxLabel + 1;

  run("exchange-axiom", unbounded, [&]() -> std::string {
    Matroid::from_bases(m.ground(), m.bases());
    return "";
  });

  run("four-way-tutte", bounds.enumeration,
      [&] { return check_four_way_tutte(m, bounds.enumeration); });

  run("order-invariance", bounds.enumeration, [&]() -> std::string {
    const TuttePolynomial reference = tutte_by_activities(m);
    std::mt19937 rng(0xA11CEu + static_cast<unsigned>(n));
    for (int trial = 0; trial < 5; ++trial) {
      const Matroid shuffled = random_relabeling(m, rng);
      if (!(tutte_by_activities(shuffled) == reference)) {
        return "activity polynomial changed under relabeling";
      }
      if (!(tutte_by_filtrations(shuffled, true, bounds.enumeration) ==
            reference)) {
        return "filtration polynomial changed under relabeling";
      }
    }
    return "";
  });

  run("beta-duality", unbounded, [&]() -> std::string {
    const Matroid md = dual(m);
    if (n > 1) {
      if (beta(m) != beta_star(m)) return "beta != beta* with |E| > 1";
      if (beta(m) != beta(md)) return "beta != beta of the dual";
    }
    if (beta_star(m) != beta(md)) return "beta* != beta of the dual";
    return "";
  });

  run("beta-connectivity", unbounded, [&]() -> std::string {
    if (n > 1 && (beta(m) != 0) != is_connected(m)) {
      return "beta nonzero does not match connectivity";
    }
    return "";
  });

  run("tutte-duality", unbounded, [&]() -> std::string {
    if (!(tutte_by_activities(dual(m)) == tutte_by_activities(m).transpose())) {
      return "t(M*) is not the exponent transpose of t(M)";
    }
    return "";
  });

  run("activity-duality", unbounded, [&]() -> std::string {
    const Matroid md = dual(m);
    for (ElementSet b : m.bases()) {
      const ActivitySets a = activity_sets(fundamental_graph(m, b));
      const ActivitySets ad =
          activity_sets(fundamental_graph(md, m.ground().all() - b));
      if (a.internally_active != ad.externally_active ||
          a.externally_active != ad.internally_active) {
        return "activity duality fails at basis " + set_text(b);
      }
    }
    return "";
  });

  run("partition-identity", unbounded, [&]() -> std::string {
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      const auto [internal, external] = internal_external_partition(fg);
      if ((internal | external) != m.ground().all() ||
          internal.intersects(external)) {
        return "acl(Int) and acl(Ext) do not partition E at basis " +
               set_text(b);
      }
      const EtlvSplit split = etlv_split(m, b);
      if (split.cyclic_flat != external) {
        return "two-piece split disagrees with the partition at basis " +
               set_text(b);
      }
      if (!is_cyclic_flat(m, external)) {
        return "external part is not a cyclic flat at basis " + set_text(b);
      }
    }
    return "";
  });

  run("acl-characterization", bounds.characterization,
      [&] { return check_acl_characterization(m); });

  run("decomposition-roundtrip", unbounded, [&]() -> std::string {
    for (ElementSet b : m.bases()) {
      const BasisDecomposition dec = decompose_basis(m, b);
      std::vector<ElementSet> internal_bases, external_bases;
      for (const auto& piece : dec.internal_pieces) {
        internal_bases.push_back(piece.basis);
      }
      for (const auto& piece : dec.external_pieces) {
        external_bases.push_back(piece.basis);
      }
      if (recompose(m, dec.filtration, internal_bases, external_bases) != b) {
        return "recompose(decompose) is not the identity at basis " +
               set_text(b);
      }
    }
    return "";
  });

  run("unique-decomposition", bounds.uniqueness,
      [&] { return check_unique_decomposition(m, bounds.uniqueness); });

  run("classification", bounds.enumeration, [&]() -> std::string {
    const BasisClassification cls = classify_all_bases(m);
    long long total = 0;
    for (const auto& [key, fiber] : cls.fibers) {
      total += static_cast<long long>(fiber.bases.size());
    }
    if (total != tutte_by_activities(m).evaluate_at_ones()) {
      return "fiber sizes do not sum to the number of bases";
    }
    // Every connected filtration has a nonempty fiber (its beta product is
    // positive), so the keys must be exactly the connected filtrations.
    std::size_t connected_count = 0;
    enumerate_filtrations(
        m.ground(),
        [&](const Filtration& f) {
          if (is_connected_filtration(m, f)) ++connected_count;
        },
        bounds.enumeration);
    if (connected_count != cls.fibers.size()) {
      return "classification keys do not exhaust the connected filtrations";
    }
    return "";
  });

  run("filtration-duality", unbounded, [&]() -> std::string {
    const Matroid md = dual(m);
    for (ElementSet b : m.bases()) {
      const Filtration f = decompose_basis(m, b).filtration;
      const Filtration fd =
          decompose_basis(md, m.ground().all() - b).filtration;
      if (!(filtration_dual(f, m.ground()) == fd)) {
        return "dual decomposition is not the complement-reversed filtration "
               "at basis " +
               set_text(b);
      }
    }
    return "";
  });

  if (n >= 2) {
    run("swap-bijection", unbounded, [&]() -> std::string {
      const auto pairs = swap_min_bijection(m);
      if (static_cast<long long>(pairs.size()) != beta(m)) {
        return "bijection size differs from beta";
      }
      return "";
    });
  } else {
    out.push_back({"swap-bijection", VerifyResult::Status::kSkip,
                   "|E| < 2"});
  }

  return out;
}

}  // namespace matact
