#include <map>
#include <set>

#include "springerkit/checks.hpp"
#include "springerkit/domino.hpp"
#include "springerkit/errors.hpp"
#include "springerkit/flags.hpp"
#include "springerkit/nilpotent.hpp"
#include "springerkit/tableau.hpp"

namespace springerkit {

void Report::add(std::string name, bool passed, std::string detail, std::optional<std::string> counterexample) {
  checks.push_back({std::move(name), passed, std::move(detail), std::move(counterexample)});
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    out["checks"].push_back(std::move(j));
  }
  out["data"] = data;
  return out;
}

namespace {

struct Sp6Strata {
  bool z1 = false;
  bool z21 = false;
  bool z22 = false;
  bool z31 = false;
  bool z32 = false;
};

Residue form_value(const FqMatrix& gram, const FqVector& u, const FqVector& v) {
  const FqVector gv = gram.apply(v);
  Residue total = gram.field().zero();
  for (std::size_t k = 0; k < u.size(); ++k) total += u[k] * gv[k];
  return total;
}

std::string describe(const Flag& f, const DominoTableau& label) {
  return "flag " + f.key() + " labelled " + label.to_string();
}

}  // namespace

Report verify_sp6(std::uint32_t q) {
  check_flag_guard(6, q);
  Report report;
  report.suite = "sp6";
  const PrimeField field(q);
  const NilpotentModel model = skew_adjoint_model(Partition({2, 2, 1, 1}), FormKind::Symplectic);
  const FqMatrix x = reduce_mod(model.x, field);
  const FqMatrix g = reduce_mod(*model.gram, field);
  const std::size_t n = 6;
  const FqSubspace im = FqSubspace::image_of(x);
  const FqSubspace ker = FqSubspace::kernel_of(x);

  // chi(x w, x w') = omega(w, x w') on Im x; w1, w2 are standard basis
  // vectors whose images span Im x.
  std::vector<FqVector> pre;
  FqSubspace reached(field, n);
  for (std::size_t j = 0; j < n && reached.dim() < im.dim(); ++j) {
    FqVector e(n, field.zero());
    e[j] = field.one();
    const FqVector xe = x.apply(e);
    if (reached.contains(xe)) continue;
    reached = reached.with(xe);
    pre.push_back(e);
  }
  std::vector<FqSubspace> lines;
  for_each_projective_point(field, pre.size(), [&](const FqVector& c) {
    FqVector w(n, field.zero());
    for (std::size_t k = 0; k < pre.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) w[j] += c[k] * pre[k][j];
    }
    if (is_zero(form_value(g, w, x.apply(w)))) lines.push_back(FqSubspace::span(field, n, {x.apply(w)}));
  });
  report.add("chi-split", lines.size() == 2,
             "isotropic lines of the induced form on Im x: " + std::to_string(lines.size()));
  if (lines.size() != 2) return report;
  const FqSubspace& l1 = lines[0];
  const FqSubspace& l2 = lines[1];

  // h = -1 on the second single Jordan block of size 2, identity elsewhere.
  FqMatrix h = FqMatrix::identity(field, n);
  int seen = 0;
  for (const auto& b : model.blocks) {
    if (b.partner_offset != -1 || b.size != 2 || ++seen != 2) continue;
    for (int i = 0; i < b.size; ++i) {
      h(static_cast<std::size_t>(b.offset + i), static_cast<std::size_t>(b.offset + i)) = -field.one();
    }
  }
  const bool h_ok = h * h == FqMatrix::identity(field, n) && h.transpose() * g * h == g && h * x == x * h &&
                    l1.image(h) == l2;
  report.add("h-involution", h_ok, "h^2 = 1, h preserves the form, commutes with x and swaps L1, L2");

  const DominoTableau d1 = DominoTableau::parse("11,22,3,3");
  const DominoTableau d2 = DominoTableau::parse("13,13,2,2");
  const DominoTableau d3 = DominoTableau::parse("12,12,3,3");

  const std::vector<Flag> flags = enumerate_xstable_flags(x, g);
  std::set<std::string> keys;
  for (const auto& f : flags) keys.insert(f.key());

  auto strata = [&](const Flag& f) {
    Sp6Strata s;
    s.z1 = f[3].contains(im) && ker.contains(f[3]);
    s.z21 = f[1] == l1;
    s.z22 = f[1] == l2;
    s.z31 = f[2].contains(l1) && ker.contains(f[2]);
    s.z32 = f[2].contains(l2) && ker.contains(f[2]);
    return s;
  };

  std::map<std::string, int> label_counts;
  std::map<std::string, int> stratum_counts{{"Z1", 0}, {"Z2,1", 0}, {"Z2,2", 0}, {"Z3,1", 0}, {"Z3,2", 0}};
  std::optional<std::string> cover_bad, inclusion_bad, disjoint_bad, meet_bad, swap_bad, unlabelled_example;
  int meet_count = 0;
  int unlabelled = 0;
  for (const auto& f : flags) {
    const Sp6Strata s = strata(f);
    stratum_counts["Z1"] += s.z1;
    stratum_counts["Z2,1"] += s.z21;
    stratum_counts["Z2,2"] += s.z22;
    stratum_counts["Z3,1"] += s.z31;
    stratum_counts["Z3,2"] += s.z32;
    if (!(s.z1 || s.z21 || s.z22 || s.z31 || s.z32) && !cover_bad) cover_bad = "flag " + f.key();
    if (s.z21 && s.z22 && !disjoint_bad) disjoint_bad = "flag " + f.key();
    const bool meet = s.z31 && s.z32;
    meet_count += meet;
    if (meet != (f[2] == im) && !meet_bad) meet_bad = "flag " + f.key();

    const Flag hf = f.transformed(h);
    const Sp6Strata hs = strata(hf);
    const bool swapped = keys.count(hf.key()) == 1 && s.z21 == hs.z22 && s.z22 == hs.z21 && s.z31 == hs.z32 &&
                         s.z32 == hs.z31;
    if (!swapped && !swap_bad) swap_bad = "flag " + f.key();

    // Flags whose subquotient chain takes a non-domino step carry no label.
    DominoTableau d;
    try {
      d = domino_label(f, x);
    } catch (const NotDominoError& e) {
      ++unlabelled;
      if (!unlabelled_example) unlabelled_example = "flag " + f.key() + ": " + e.what();
      continue;
    }
    ++label_counts[d.to_string()];
    const bool included = (d != d1 || s.z1) && (d != d2 || s.z21 || s.z22) && (d != d3 || s.z31 || s.z32);
    if (!included && !inclusion_bad) inclusion_bad = describe(f, d);
  }

  std::set<std::string> occurring;
  for (const auto& [label, count] : label_counts) occurring.insert(label);
  const std::set<std::string> expected{d1.to_string(), d2.to_string(), d3.to_string()};
  std::set<std::string> admissible;
  for (const auto& d : enumerate_domino(Partition({2, 2, 1, 1}), FormKind::Symplectic)) admissible.insert(d.to_string());

  report.add("labels", occurring == expected && admissible == expected,
             "domino labels occurring: " + std::to_string(occurring.size()) + ", admissible tableaux: " +
                 std::to_string(admissible.size()) + ", flags without a domino label: " + std::to_string(unlabelled));
  report.add("cover", !cover_bad, "every isotropic x-stable flag lies in some Z-set", cover_bad);
  report.add("inclusion", !inclusion_bad, "flags labelled d1, d2, d3 lie in Z1, Z2, Z3", inclusion_bad);
  report.add("Z2-disjoint", !disjoint_bad, "Z2,1 and Z2,2 do not meet", disjoint_bad);
  report.add("Z3-intersection", !meet_bad && meet_count > 0,
             "Z3,1 and Z3,2 meet exactly in the flags with V2 = Im x (" + std::to_string(meet_count) + " flags)",
             meet_bad);
  report.add("h-swap", h_ok && !swap_bad, "h exchanges Z2,1 with Z2,2 and Z3,1 with Z3,2", swap_bad);

  report.data["field"] = field.name();
  report.data["flags"] = flags.size();
  report.data["labels"] = label_counts;
  report.data["strata"] = stratum_counts;
  report.data["Z3_intersection"] = meet_count;
  report.data["flags_without_domino_label"] = unlabelled;
  if (unlabelled_example) report.data["unlabelled_example"] = *unlabelled_example;
  report.data["scope"] = "verified over " + field.name();
  return report;
}

Report verify_concatenation(const Partition& shape, FormKind kind, int l1, std::uint32_t q) {
  const auto& cols = shape.columns();
  if (l1 < 0 || l1 >= shape.num_columns() || shape.num_columns() > l1 + 2) {
    throw InvalidArgument("split " + std::to_string(l1) + " must leave one or two columns of " + shape.to_string());
  }
  const int k2 = l1 + 1 < shape.num_columns() ? cols[static_cast<std::size_t>(l1) + 1] : 0;
  const int n2 = cols[static_cast<std::size_t>(l1)] + k2;
  if (n2 % 2 != 0) throw ParityError("the last columns hold an odd number of boxes");
  check_flag_guard(shape.size(), q);
  const DominoTableau d2 = d_nk(n2, k2);
  const int n = shape.size();
  const int shift = (n - n2) / 2;
  const int m2 = n2 / 2;

  Report report;
  report.suite = "concatenation";
  const PrimeField field(q);
  const NilpotentModel model = skew_adjoint_model(shape, kind);
  const FqMatrix x = reduce_mod(model.x, field);
  const FqMatrix g = reduce_mod(*model.gram, field);
  const FqMatrix xl = power(x, static_cast<unsigned>(l1));
  const FqSubspace im_next = FqSubspace::image_of(xl * x);
  const FqSubspace upper_bound = FqSubspace::kernel_of(x).intersect(FqSubspace::image_of(xl));

  int flags = 0;
  int unlabelled = 0;
  int matched = 0;
  std::map<std::string, int> labels;
  std::optional<std::string> bad_image, bad_preimage, bad_bounds;
  for_each_xstable_flag(
      x,
      [&](const Flag& f) {
        ++flags;
        DominoTableau d;
        try {
          d = domino_label(f, x);
        } catch (const NotDominoError&) {
          ++unlabelled;
          return;
        }
        TableauRows right;
        for (const auto& row : d.rows()) {
          if (static_cast<int>(row.size()) <= l1) break;
          right.emplace_back();
          for (std::size_t c = static_cast<std::size_t>(l1); c < row.size(); ++c) right.back().push_back(row[c] - shift);
        }
        if (right != d2.rows()) return;
        ++matched;
        ++labels[d.to_string()];
        const FqSubspace& low = f[m2];
        const FqSubspace& high = f[n - m2];
        if (!(high.image(xl) == low) && !bad_image) bad_image = describe(f, d);
        if (!(low.preimage(xl) == high) && !bad_preimage) bad_preimage = describe(f, d);
        if (!(low.contains(im_next) && upper_bound.contains(low)) && !bad_bounds) bad_bounds = describe(f, d);
      },
      g);

  const std::string suffix = " on " + std::to_string(matched) + " matching flags";
  report.add("image", !bad_image, "x^l1(V_{n-m2}) = V_{m2}" + suffix, bad_image);
  report.add("preimage", !bad_preimage, "V_{n-m2} = (x^l1)^{-1}(V_{m2})" + suffix, bad_preimage);
  report.add("bounds", !bad_bounds, "Im x^{l1+1} <= V_{m2} <= ker x & Im x^l1" + suffix, bad_bounds);
  report.data["field"] = field.name();
  report.data["shape"] = shape.parts();
  report.data["kind"] = to_string(kind);
  report.data["split"] = l1;
  report.data["right_block"] = d2.to_string();
  report.data["flags"] = flags;
  report.data["flags_without_domino_label"] = unlabelled;
  report.data["matching_flags"] = matched;
  report.data["matching_labels"] = labels;
  report.data["scope"] = "verified over " + field.name();
  return report;
}

Report verify_partition_props(int max_n) {
  Report report;
  report.suite = "partition-props";
  std::optional<std::string> bad_dual, bad_adm, bad_size, bad_assoc;
  std::vector<std::vector<Partition>> by_size;
  for (int n = 0; n <= max_n; ++n) by_size.push_back(partitions_of(n));
  int total = 0;
  for (const auto& ps : by_size) {
    for (const auto& p : ps) {
      ++total;
      if (!(dual(dual(p)) == p) && !bad_dual) bad_dual = p.to_string();
      bool all_even = true;
      for (int part : p.parts()) all_even = all_even && p.multiplicity(part) % 2 == 0;
      const bool both = is_admissible(p, FormKind::Orthogonal) && is_admissible(p, FormKind::Symplectic);
      if (both != all_even && !bad_adm) bad_adm = p.to_string();
    }
  }
  // Juxtaposition on triples of small total size.
  const int jmax = std::min(max_n, 7);
  int triples = 0;
  for (int a = 0; a <= jmax; ++a) {
    for (int b = 0; a + b <= jmax; ++b) {
      for (int c = 0; a + b + c <= jmax; ++c) {
        for (const auto& p1 : by_size[static_cast<std::size_t>(a)]) {
          for (const auto& p2 : by_size[static_cast<std::size_t>(b)]) {
            std::optional<Partition> p12;
            try {
              p12 = juxtapose(p1, p2);
            } catch (const ConcatenationOrderError&) {
            }
            if (p12 && p12->size() != a + b && !bad_size) bad_size = p1.to_string() + " | " + p2.to_string();
            for (const auto& p3 : by_size[static_cast<std::size_t>(c)]) {
              std::optional<Partition> left, right;
              try {
                if (p12) left = juxtapose(*p12, p3);
              } catch (const ConcatenationOrderError&) {
              }
              try {
                right = juxtapose(p1, juxtapose(p2, p3));
              } catch (const ConcatenationOrderError&) {
              }
              if (left && right) {
                ++triples;
                if (!(*left == *right) && !bad_assoc) {
                  bad_assoc = p1.to_string() + " | " + p2.to_string() + " | " + p3.to_string();
                }
              }
            }
          }
        }
      }
    }
  }
  report.add("dual-involution", !bad_dual, "dual(dual(p)) = p", bad_dual);
  report.add("admissible-both", !bad_adm, "admissible for both kinds iff every part has even multiplicity", bad_adm);
  report.add("juxtapose-size", !bad_size, "juxtaposition adds sizes", bad_size);
  report.add("juxtapose-associative", !bad_assoc, "juxtaposition is associative where defined", bad_assoc);
  report.data["max_n"] = max_n;
  report.data["partitions"] = total;
  report.data["juxtaposition_triples"] = triples;
  return report;
}

Report verify_syt_strata(const Partition& p, std::uint32_t q) {
  Report report;
  report.suite = "syt-strata";
  const PrimeField field(q);
  const FqMatrix x = reduce_mod(standard_nilpotent(p).x, field);
  std::map<std::string, std::uint64_t> fibers;
  std::uint64_t flags = 0;
  std::optional<std::string> bad_shape;
  for_each_xstable_flag(x, [&](const Flag& f) {
    ++flags;
    const StandardYoungTableau t = syt_label(f, x);
    if (!(t.shape() == p) && !bad_shape) bad_shape = f.key() + " labelled " + t.to_string();
    ++fibers[t.to_string()];
  });
  const auto tableaux = enumerate_syt(p);
  std::optional<std::string> empty_fiber;
  for (const auto& t : tableaux) {
    if (fibers.count(t.to_string()) == 0 && !empty_fiber) empty_fiber = t.to_string();
  }
  std::uint64_t fiber_total = 0;
  for (const auto& [label, count] : fibers) fiber_total += count;
  const std::uint64_t hook = hook_length_count(p);
  report.add("label-shape", !bad_shape, "every label is a standard tableau of shape " + p.to_string(), bad_shape);
  report.add("fibers-nonempty", !empty_fiber, "every standard tableau labels some flag", empty_fiber);
  report.add("fiber-count", fibers.size() == hook && fiber_total == flags,
             std::to_string(fibers.size()) + " fibers, hook-length count " + std::to_string(hook));
  report.data["field"] = field.name();
  report.data["shape"] = p.parts();
  report.data["flags"] = flags;
  report.data["fibers"] = fibers;
  report.data["scope"] = "verified over " + field.name();
  return report;
}

}  // namespace springerkit
