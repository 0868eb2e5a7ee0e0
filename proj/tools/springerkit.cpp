#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "springerkit/checks.hpp"
#include "springerkit/domino.hpp"
#include "springerkit/errors.hpp"
#include "springerkit/exceptional.hpp"
#include "springerkit/flags.hpp"
#include "springerkit/g2.hpp"
#include "springerkit/json_io.hpp"
#include "springerkit/nilpotent.hpp"
#include "springerkit/partition.hpp"
#include "springerkit/tableau.hpp"

using namespace springerkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxGridRadius = 3;

/// Bad input, reported together with the flag it came from.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& message) : std::runtime_error(flag + ": " + message) {}
};

struct Outcome {
  Json json;
  std::string ascii;
  int status = kExitPass;
};

template <class F>
auto parse_flag(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const std::exception& e) {
    throw UsageError(flag, e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Partition partition_arg(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] {
    if (!text.empty() && text.front() == '[') return partition_from_json(Json::parse(text));
    return Partition::parse(text);
  });
}

FormKind form_arg(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return parse_form_kind(text); });
}

DominoTableau domino_arg(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] {
    if (!text.empty() && text.front() == '{') return domino_from_json(Json::parse(text));
    return DominoTableau::parse(text);
  });
}

std::vector<int> int_list(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) out.push_back(std::stoi(item));
    return out;
  });
}

std::string tableau_ascii(const DominoTableau& d) { return d.render() + d.to_string() + "\n"; }

std::string syt_ascii(const StandardYoungTableau& t) {
  return render_boxes(t.rows(), [](int, int, int, int) { return false; }) + t.to_string() + "\n";
}

template <class Field>
std::string matrix_ascii(const Matrix<Field>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string cell = m.field().format(m(i, j));
      out += std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

Outcome report_outcome(const Report& report) {
  Outcome out{report.to_json(), "", report.passed() ? kExitPass : kExitCounterexample};
  out.ascii = report.suite + ": " + (report.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : report.checks) {
    out.ascii += std::string(c.passed ? "  PASS " : "  FAIL ") + c.name + "  " + c.detail + "\n";
    if (c.counterexample) out.ascii += "       counterexample: " + *c.counterexample + "\n";
  }
  out.ascii += "  data: " + report.data.dump() + "\n";
  return out;
}

std::string kv_ascii(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

g2::Point point_arg(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return g2::parse_point(text); });
}

Json mpq_list(const std::vector<mpq_class>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Springer fiber and orbital variety computations"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--seed", seed, "Seed for randomized commands");

  std::function<Outcome()> run;
  // Inputs shared by many subcommands.
  std::string partition_text, shape_text, form_text, rows_text, left_text, right_text;
  std::uint32_t q = 3;

  auto add_partition = [&](CLI::App* cmd) { cmd->add_option("--partition", partition_text)->required(); };
  auto add_shape = [&](CLI::App* cmd) { cmd->add_option("--shape", shape_text)->required(); };
  auto add_form = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--form", form_text, "orthogonal or symplectic");
    if (required) opt->required();
  };

  // partition
  auto* partition = app.add_subcommand("partition", "Partition operations");
  partition->require_subcommand(1);
  auto* p_dual = partition->add_subcommand("dual", "Conjugate partition");
  add_partition(p_dual);
  p_dual->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      const Partition d = dual(p);
      Json j{{"partition", to_json(p)}, {"dual", to_json(d)}};
      return Outcome{j, d.to_string() + "\n"};
    };
  });
  auto* p_adm = partition->add_subcommand("admissible", "Parity condition for a form");
  add_partition(p_adm);
  add_form(p_adm, true);
  p_adm->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      const FormKind k = form_arg("--form", form_text);
      const bool ok = is_admissible(p, k);
      Json j{{"partition", to_json(p)}, {"form", to_string(k)}, {"admissible", ok}};
      return Outcome{j, std::string(ok ? "admissible" : "not admissible") + "\n"};
    };
  });

  // syt
  auto* syt = app.add_subcommand("syt", "Standard Young tableaux");
  syt->require_subcommand(1);
  auto* syt_enum = syt->add_subcommand("enum", "All standard tableaux of a shape");
  add_shape(syt_enum);
  syt_enum->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--shape", shape_text);
      const auto all = enumerate_syt(p);
      Outcome out;
      out.json = {{"shape", to_json(p)}, {"count", all.size()}, {"hook_length_count", hook_length_count(p)}};
      out.json["tableaux"] = Json::array();
      for (const auto& t : all) {
        out.json["tableaux"].push_back(to_json(t));
        out.ascii += syt_ascii(t) + "\n";
      }
      out.ascii += std::to_string(all.size()) + " tableaux\n";
      return out;
    };
  });

  // domino
  auto* domino = app.add_subcommand("domino", "Domino tableaux");
  domino->require_subcommand(1);
  auto* d_enum = domino->add_subcommand("enum", "All domino tableaux of a shape");
  add_shape(d_enum);
  add_form(d_enum, false);
  d_enum->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--shape", shape_text);
      std::optional<FormKind> k;
      if (!form_text.empty()) k = form_arg("--form", form_text);
      const auto all = enumerate_domino(p, k);
      Outcome out;
      out.json = {{"shape", to_json(p)}, {"count", all.size()}, {"tableaux", Json::array()}};
      if (k) out.json["form"] = to_string(*k);
      for (const auto& d : all) {
        out.json["tableaux"].push_back(to_json(d));
        out.ascii += tableau_ascii(d) + "\n";
      }
      out.ascii += std::to_string(all.size()) + " tableaux\n";
      return out;
    };
  });
  auto* d_adm = domino->add_subcommand("admissible", "Check every prefix shape");
  d_adm->add_option("--rows", rows_text, "Rows such as 011,235 or a JSON tableau")->required();
  add_form(d_adm, true);
  d_adm->callback([&] {
    run = [&] {
      const DominoTableau d = domino_arg("--rows", rows_text);
      const FormKind k = form_arg("--form", form_text);
      const bool ok = is_admissible_domino(d, k);
      Json chain = Json::array();
      for (const auto& s : d.shape_chain()) chain.push_back(to_json(s));
      Json j{{"tableau", to_json(d)}, {"form", to_string(k)}, {"admissible", ok}, {"shape_chain", chain}};
      return Outcome{j, std::string(ok ? "admissible" : "not admissible") + "\n"};
    };
  });
  auto* d_concat = domino->add_subcommand("concat", "Column concatenation d1 * d2");
  d_concat->add_option("--left", left_text)->required();
  d_concat->add_option("--right", right_text)->required();
  d_concat->callback([&] {
    run = [&] {
      const DominoTableau a = domino_arg("--left", left_text);
      const DominoTableau b = domino_arg("--right", right_text);
      const DominoTableau c = parse_flag("--right", [&] { return concat(a, b); });
      return Outcome{{{"tableau", to_json(c)}}, tableau_ascii(c)};
    };
  });
  auto* d_construct = domino->add_subcommand("construct", "The tableau d_x^omega of an admissible shape");
  add_shape(d_construct);
  add_form(d_construct, true);
  d_construct->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--shape", shape_text);
      const FormKind k = form_arg("--form", form_text);
      const DominoTableau d = parse_flag("--shape", [&] { return construct_dxomega(p, k); });
      Json j{{"shape", to_json(p)}, {"form", to_string(k)}, {"tableau", to_json(d)}, {"text", d.to_string()}};
      return Outcome{j, tableau_ascii(d)};
    };
  });
  auto* d_refine = domino->add_subcommand("refine", "Standard tableau tau(d)");
  d_refine->add_option("--rows", rows_text)->required();
  d_refine->callback([&] {
    run = [&] {
      const DominoTableau d = domino_arg("--rows", rows_text);
      const StandardYoungTableau t = refine_to_syt(d);
      return Outcome{{{"domino", to_json(d)}, {"syt", to_json(t)}}, syt_ascii(t)};
    };
  });
  auto* d_count = domino->add_subcommand("count-prediction", "Predicted number of components");
  add_shape(d_count);
  add_form(d_count, true);
  int count_n = -1;
  d_count->add_option("--n", count_n, "Dimension of V (defaults to the shape size)");
  d_count->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--shape", shape_text);
      const FormKind k = form_arg("--form", form_text);
      const int n = count_n < 0 ? p.size() : count_n;
      const auto pred = parse_flag("--shape", [&] { return predicted_component_count(p, k, n); });
      Json j{{"shape", to_json(p)}, {"form", to_string(k)}, {"count", pred.count}, {"reason", pred.reason}};
      return Outcome{j, std::to_string(pred.count) + " (" + pred.reason + ")\n"};
    };
  });

  // model
  auto* model = app.add_subcommand("model", "Nilpotent matrix models");
  model->require_subcommand(1);
  auto* m_skew = model->add_subcommand("skew", "Skew-adjoint nilpotent with its Gram matrix");
  add_partition(m_skew);
  add_form(m_skew, true);
  m_skew->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      const FormKind k = form_arg("--form", form_text);
      const auto m = parse_flag("--partition", [&] { return skew_adjoint_model(p, k); });
      const bool gram_ok = is_skew_adjoint(m.x, *m.gram);
      const bool type_ok = jordan_type(m.x) == p;
      Json j{{"partition", to_json(p)},
             {"form", to_string(k)},
             {"x", matrix_to_json(m.x)},
             {"gram", matrix_to_json(*m.gram)},
             {"skew_adjoint", gram_ok},
             {"jordan_type_matches", type_ok}};
      Outcome out{j, "x =\n" + matrix_ascii(m.x) + "gram =\n" + matrix_ascii(*m.gram)};
      if (!gram_ok || !type_ok) out.status = kExitCounterexample;
      return out;
    };
  });
  auto* m_dim = model->add_subcommand("orbit-dim", "Orbit dimensions by the rank of ad x");
  add_partition(m_dim);
  add_form(m_dim, false);
  m_dim->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      Json j{{"partition", to_json(p)}, {"gl_orbit_dim_formula", gl_orbit_dimension(p)}};
      if (form_text.empty()) {
        j["gl_orbit_dim"] = orbit_dim(standard_nilpotent(p), Ambient::GeneralLinear);
      } else {
        const FormKind k = form_arg("--form", form_text);
        const auto m = parse_flag("--partition", [&] { return skew_adjoint_model(p, k); });
        j["form"] = to_string(k);
        j["gl_orbit_dim"] = orbit_dim(m, Ambient::GeneralLinear);
        j["form_orbit_dim"] = orbit_dim(m, Ambient::FormPreserving);
      }
      Outcome out{j, kv_ascii(j)};
      if (j["gl_orbit_dim"] != j["gl_orbit_dim_formula"]) out.status = kExitCounterexample;
      return out;
    };
  });
  auto* m_induce = model->add_subcommand("induce", "Sample the orbit induced from a type A Levi");
  std::string blocks_text, orbits_text;
  int trials = 32;
  m_induce->add_option("--blocks", blocks_text, "Block sizes, e.g. 2,2")->required();
  m_induce->add_option("--orbits", orbits_text, "Block orbits, e.g. 1+1,1+1 (default trivial)");
  m_induce->add_option("--trials", trials)->check(CLI::PositiveNumber);
  m_induce->callback([&] {
    run = [&] {
      const std::vector<int> sizes = int_list("--blocks", blocks_text);
      const LeviData levi = parse_flag("--orbits", [&] {
        if (orbits_text.empty()) return LeviData::trivial_orbits(sizes);
        std::vector<Partition> orbits;
        for (auto item : split(orbits_text, ',')) {
          std::replace(item.begin(), item.end(), '+', ',');
          orbits.push_back(Partition::parse(item));
        }
        return LeviData(sizes, orbits);
      });
      const auto sample = induced_orbit_sample(levi, trials, seed);
      Json j{{"blocks", sizes},
             {"orbit", to_json(sample.orbit)},
             {"orbit_dim", sample.orbit_dim},
             {"expected_dim", sample.expected_dim},
             {"nilradical_dim", levi.nilradical_dim()},
             {"trials", sample.trials},
             {"seed", seed},
             {"dimension_check", sample.dimension_matches() ? "pass" : "fail"}};
      return Outcome{j, kv_ascii(j), sample.dimension_matches() ? kExitPass : kExitCounterexample};
    };
  });
  auto* m_split = model->add_subcommand("split", "Jordan types on (x^l)^-1(M)/M and Im x^l");
  add_partition(m_split);
  add_form(m_split, false);
  int split_l = 0;
  std::string m_text;
  m_split->add_option("--l", split_l, "Power of x")->required();
  m_split->add_option("--m", m_text, "Basis of M: vectors separated by ';', entries by ','");
  m_split->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      const NilpotentModel m = form_text.empty()
                                   ? standard_nilpotent(p)
                                   : parse_flag("--form", [&] { return skew_adjoint_model(p, parse_form_kind(form_text)); });
      const auto basis = parse_flag("--m", [&] {
        std::vector<std::vector<mpq_class>> out;
        for (const auto& vec : split(m_text, ';')) {
          out.emplace_back();
          for (const auto& e : split(vec, ',')) out.back().push_back(Rationals{}.parse(e));
        }
        return out;
      });
      const auto [quotient, image] = parse_flag("--m", [&] { return split_by_columns(m, split_l, basis); });
      Json j{{"partition", to_json(p)}, {"l", split_l}, {"quotient_type", to_json(quotient)},
             {"image_type", to_json(image)}};
      return Outcome{j, kv_ascii(j)};
    };
  });

  // flags
  auto* flags = app.add_subcommand("flags", "x-stable flags over F_q");
  flags->require_subcommand(1);
  auto* f_enum = flags->add_subcommand("enum", "Enumerate x-stable (isotropic) flags and label them");
  std::string label_kind;
  bool list_flags = false;
  add_partition(f_enum);
  add_form(f_enum, false);
  f_enum->add_option("--q", q, "Field size (3 or 5)");
  f_enum->add_option("--label", label_kind, "syt or domino")->check(CLI::IsMember({"syt", "domino"}));
  f_enum->add_flag("--list", list_flags, "Include every flag in the output");
  f_enum->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      parse_flag("--partition", [&] { check_flag_guard(p.size(), q); return 0; });
      std::optional<FormKind> k;
      if (!form_text.empty()) k = form_arg("--form", form_text);
      const std::string label = label_kind.empty() ? (k ? "domino" : "syt") : label_kind;
      const PrimeField field(q);
      const NilpotentModel m = k ? parse_flag("--partition", [&] { return skew_adjoint_model(p, *k); })
                                 : standard_nilpotent(p);
      const FqMatrix x = reduce_mod(m.x, field);
      std::optional<FqMatrix> g;
      if (m.gram) g = reduce_mod(*m.gram, field);
      std::map<std::string, int> counts;
      int total = 0, unlabelled = 0;
      Json listed = Json::array();
      for_each_xstable_flag(
          x,
          [&](const Flag& f) {
            ++total;
            Json entry = list_flags ? to_json(f) : Json();
            try {
              const std::string l = label == "syt" ? syt_label(f, x).to_string() : domino_label(f, x).to_string();
              ++counts[l];
              entry["label"] = l;
            } catch (const NotDominoError&) {
              ++unlabelled;
              entry["label"] = nullptr;
            }
            if (list_flags) listed.push_back(std::move(entry));
          },
          g);
      Json j{{"partition", to_json(p)}, {"field", field.name()}, {"label", label}, {"flags", total},
             {"labels", counts}};
      if (k) j["form"] = to_string(*k);
      if (label == "domino") j["flags_without_domino_label"] = unlabelled;
      if (list_flags) j["flag_list"] = listed;
      std::string ascii = "flags: " + std::to_string(total) + " over " + field.name() + "\n";
      for (const auto& [l, c] : counts) ascii += "  " + l + ": " + std::to_string(c) + "\n";
      if (unlabelled > 0) ascii += "  without domino label: " + std::to_string(unlabelled) + "\n";
      return Outcome{j, ascii};
    };
  });
  auto* f_label = flags->add_subcommand("label", "Label one flag given by an adapted basis");
  std::string basis_text;
  add_partition(f_label);
  add_form(f_label, false);
  f_label->add_option("--q", q, "Field size (3 or 5)");
  f_label->add_option("--basis", basis_text, "v_1;...;v_n with V_i spanned by v_1..v_i")->required();
  f_label->add_option("--label", label_kind, "syt or domino")->check(CLI::IsMember({"syt", "domino"}));
  f_label->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      parse_flag("--partition", [&] { check_flag_guard(p.size(), q); return 0; });
      std::optional<FormKind> k;
      if (!form_text.empty()) k = form_arg("--form", form_text);
      const PrimeField field(q);
      const NilpotentModel m = k ? parse_flag("--partition", [&] { return skew_adjoint_model(p, *k); })
                                 : standard_nilpotent(p);
      const FqMatrix x = reduce_mod(m.x, field);
      const auto n = static_cast<std::size_t>(p.size());
      const Flag f = parse_flag("--basis", [&] {
        std::vector<FqSubspace> chain{FqSubspace(field, n)};
        for (const auto& vec : split(basis_text, ';')) {
          FqVector v;
          for (const auto& e : split(vec, ',')) v.push_back(field.parse(e));
          if (v.size() != n) throw InvalidArgument("vector of length " + std::to_string(v.size()));
          chain.push_back(chain.back().with(v));
        }
        return Flag(chain);
      });
      if (!f.is_stable(x)) throw UsageError("--basis", "flag is not x-stable");
      const std::string label = label_kind.empty() ? (k ? "domino" : "syt") : label_kind;
      Json j = to_json(f);
      if (label == "syt") {
        const auto t = syt_label(f, x);
        j["label"] = to_json(t);
        return Outcome{j, syt_ascii(t)};
      }
      if (k && !is_isotropic(f, reduce_mod(*m.gram, field))) throw UsageError("--basis", "flag is not isotropic");
      const auto d = domino_label(f, x);
      j["label"] = to_json(d);
      return Outcome{j, tableau_ascii(d)};
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_sp6 = verify->add_subcommand("sp6", "Strata of isotropic flags for x of type (2,2,1,1) in sp_6");
  v_sp6->alias("section6");
  v_sp6->add_option("--q", q, "Field size (3 or 5)");
  v_sp6->callback([&] {
    run = [&] {
      parse_flag("--q", [&] { check_flag_guard(6, q); return 0; });
      return report_outcome(verify_sp6(q));
    };
  });
  auto* v_concat = verify->add_subcommand("concatenation", "Flags whose label ends with a d_{n,k} block");
  v_concat->alias("lemma2");
  int split_at = 0;
  add_shape(v_concat);
  add_form(v_concat, true);
  v_concat->add_option("--split", split_at, "Number of leading columns")->required();
  v_concat->add_option("--q", q, "Field size (3 or 5)");
  v_concat->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--shape", shape_text);
      const FormKind k = form_arg("--form", form_text);
      if (!is_admissible(p, k)) throw UsageError("--shape", "shape is not admissible for " + to_string(k));
      parse_flag("--shape", [&] { check_flag_guard(p.size(), q); return 0; });
      return report_outcome(parse_flag("--split", [&] { return verify_concatenation(p, k, split_at, q); }));
    };
  });
  auto* v_props = verify->add_subcommand("partition-props", "Duality, admissibility and juxtaposition");
  int max_n = 8;
  v_props->add_option("--max-n", max_n)->check(CLI::Range(0, 12));
  v_props->callback([&] { run = [&] { return report_outcome(verify_partition_props(max_n)); }; });
  auto* v_syt = verify->add_subcommand("syt-strata", "syt_label fibers of the x-stable flags");
  add_partition(v_syt);
  v_syt->add_option("--q", q, "Field size (3 or 5)");
  v_syt->callback([&] {
    run = [&] {
      const Partition p = partition_arg("--partition", partition_text);
      parse_flag("--partition", [&] { check_flag_guard(p.size(), q); return 0; });
      return report_outcome(verify_syt_strata(p, q));
    };
  });

  // g2
  auto* g2cmd = app.add_subcommand("g2", "Rank and Jacobian computations in the G2 nilradical");
  g2cmd->require_subcommand(1);
  std::string x_text;
  auto* g_rank = g2cmd->add_subcommand("rank", "rank C_x and the orbit label");
  g_rank->add_option("--x", x_text, "x_1,...,x_6 (rationals)")->required();
  g_rank->callback([&] {
    run = [&] {
      const g2::Point x = point_arg("--x", x_text);
      const int r = g2::orbit_rank(x);
      Json j{{"x", g2::format_point(x)},
             {"rank", r},
             {"orbit_dim", r},
             {"orbit", g2::orbit_label(r)},
             {"min_orbit_equations", mpq_list(g2::equation_values(g2::Variety::MinimalOrbit, x))},
             {"tildeV_equations", mpq_list(g2::equation_values(g2::Variety::TildeV, x))}};
      return Outcome{j, kv_ascii(j)};
    };
  });
  auto* g_classify = g2cmd->add_subcommand("classify", "Compare ranks with the equations on a grid");
  int radius = 2;
  bool x1_zero = false;
  g_classify->add_option("--grid", radius, "Coordinates range over -r..r")->required();
  g_classify->add_flag("--x1-zero", x1_zero, "Only the x_1 = 0 slice");
  g_classify->callback([&] {
    run = [&] {
      if (radius < 0 || radius > kMaxGridRadius) {
        throw UsageError("--grid", "radius must lie in 0.." + std::to_string(kMaxGridRadius));
      }
      const auto scan = g2::classify_grid(radius, x1_zero);
      Json hist = Json::object();
      for (const auto& [r, c] : scan.rank_histogram) hist[std::to_string(r)] = c;
      Json j{{"radius", radius},
             {"x1_zero_only", x1_zero},
             {"points", scan.points},
             {"rank_histogram", hist},
             {"min_orbit_mismatches", scan.min_orbit_mismatches},
             {"tildeV_points", scan.tilde_points},
             {"tildeV_mismatches", scan.tilde_mismatches}};
      if (scan.first_mismatch) j["first_mismatch"] = g2::format_point(*scan.first_mismatch);
      const bool ok = scan.min_orbit_mismatches == 0 && scan.tilde_mismatches == 0;
      return Outcome{j, kv_ascii(j), ok ? kExitPass : kExitCounterexample};
    };
  });
  auto* g_jac = g2cmd->add_subcommand("jacobian", "Jacobian rank at a point of a variety");
  std::string variety_text;
  g_jac->add_option("--variety", variety_text, "min or tilde")->required();
  g_jac->add_option("--x", x_text, "x_1,...,x_6 (rationals)")->required();
  g_jac->callback([&] {
    run = [&] {
      const auto v = parse_flag("--variety", [&] { return g2::parse_variety(variety_text); });
      const g2::Point x = point_arg("--x", x_text);
      const int r = parse_flag("--x", [&] { return g2::jacobian_rank(v, x); });
      const int codim = g2::expected_codimension(v);
      Json j{{"variety", g2::to_string(v)},
             {"x", g2::format_point(x)},
             {"equations", mpq_list(g2::equation_values(v, x))},
             {"jacobian", matrix_to_json(g2::jacobian(v, x))},
             {"jacobian_rank", r},
             {"codimension", codim},
             {"smooth_point", r == codim}};
      return Outcome{j, kv_ascii(j)};
    };
  });

  // orbits
  auto* orbits = app.add_subcommand("orbits", "Exceptional nilpotent orbits");
  orbits->require_subcommand(1);
  auto* o_verdict = orbits->add_subcommand("verdict", "Is a smooth orbital variety guaranteed?");
  std::string type_text, orbit_text;
  o_verdict->add_option("--type", type_text, "G2, F4, E6, E7 or E8")->required();
  o_verdict->add_option("--orbit", orbit_text, "Bala-Carter label")->required();
  o_verdict->callback([&] {
    run = [&] {
      const auto type = parse_flag("--type", [&] { return parse_exceptional_type(type_text); });
      const auto v = parse_flag("--orbit", [&] { return smooth_ov_verdict(type, orbit_text); });
      Json j{{"type", to_string(type)}, {"orbit", v.label}, {"verdict", to_string(v.verdict)}, {"source", v.source}};
      return Outcome{j, kv_ascii(j)};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Outcome out = run();
    if (format == "ascii") {
      std::cout << out.ascii;
    } else {
      std::cout << out.json.dump(2) << "\n";
    }
    return out.status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const NotDominoError& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const ScaleError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
