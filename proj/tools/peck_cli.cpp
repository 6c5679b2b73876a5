// Copyright (c) 2026 The peck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peck/coxeter.hpp"
#include "peck/exact_linalg.hpp"
#include "peck/sl2.hpp"
#include "peck/sperner.hpp"
#include "peck/weak_order.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget_refused = 3;

// Output goes through a temp file plus rename so readers never observe a
// partially written certificate.
void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp(path + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os)
      throw peck::input_error("cannot open '" + path + "' for writing");
    os << content;
    os.flush();
    if (!os)
      throw peck::input_error("write to '" + path + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw peck::input_error("cannot move temporary output onto '" + path +
                            "'");
  }
}

void emit_json(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_atomic(out_path, text);
}

struct RunConfig {
  int n = 0;
  std::string coxeter_type;
  std::string coxeter_matrix_file;
  std::string which;
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
  bool exact = false;
  bool large = false;
  bool with_oracle = false;
  bool allow_h4 = false;
};

int cmd_verify_sl2(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > peck::max_permutation_degree)
    throw peck::input_error("--n must be in [1, 9]");
  if (cfg.n > 7)
    throw peck::budget_error("verify-sl2 supports n <= 7");
  if (cfg.n == 7 && !cfg.large)
    throw peck::budget_error(
        "n = 7 builds 5040x5040 operators; pass --large to proceed");
  const peck::RankedPoset poset = peck::build_weak_order(cfg.n);
  const peck::Sl2Triple triple = peck::build_sl2_triple(poset);
  const peck::Sl2Report report = peck::verify_sl2(triple);

  json j;
  j["schema"] = peck::schema_version;
  j["command"] = "verify-sl2";
  j["n"] = cfg.n;
  j["basis"] = "weak_order(S" + std::to_string(cfg.n) + ") order=shortlex";
  j["relations"] = json::array();
  for (const auto& rel : report.relations) {
    json r;
    r["relation"] = rel.relation;
    r["max_abs_residual"] = rel.max_abs_residual.str();
    r["ok"] = rel.ok;
    if (rel.first_offending)
      r["first_offending"] = {{"row", rel.first_offending->row},
                              {"col", rel.first_offending->col},
                              {"value", rel.first_offending->value.str()}};
    j["relations"].push_back(std::move(r));
  }
  j["ok"] = report.all_ok;
  j["version"] = peck::version;
  emit_json(j, cfg.out);
  return report.all_ok ? exit_ok : exit_claim_failed;
}

std::pair<peck::RankedPoset, std::string> build_certify_target(
    const RunConfig& cfg) {
  if (!cfg.coxeter_type.empty() || !cfg.coxeter_matrix_file.empty()) {
    peck::CoxeterSpec spec;
    if (!cfg.coxeter_type.empty()) {
      spec = peck::coxeter_spec_from_string(cfg.coxeter_type);
    } else {
      std::ifstream in(cfg.coxeter_matrix_file);
      if (!in)
        throw peck::input_error("cannot read Coxeter matrix file '" +
                                cfg.coxeter_matrix_file + "'");
      spec = peck::coxeter_spec_from_matrix_text(in);
    }
    if (spec.label == "H4" && !cfg.allow_h4)
      throw peck::budget_error(
          "H4 has 14400 elements and rank 60; pass --allow-h4 to run it");
    return {peck::build_weak_order_coxeter(spec),
            "weak_order(" + spec.label + ")"};
  }
  if (cfg.n < 1 || cfg.n > peck::max_permutation_degree)
    throw peck::input_error("--n must be in [1, 9]");
  if (cfg.n > 7 || (cfg.n == 7 && !cfg.large))
    throw peck::budget_error(
        "certify supports n <= 6 by default (n = 7 with --large)");
  return {peck::build_weak_order(cfg.n),
          "weak_order(S" + std::to_string(cfg.n) + ")"};
}

int cmd_certify(const RunConfig& cfg) {
  auto [poset, id] = build_certify_target(cfg);
  peck::SpernerCertificate cert = peck::certify(poset, id, cfg.seed);

  bool oracle_agrees = true;
  if (cfg.with_oracle) {
    if (poset.size() > peck::default_oracle_element_cap)
      throw peck::budget_error(
          "--with-oracle is limited to posets with at most " +
          std::to_string(peck::default_oracle_element_cap) + " elements");
    for (const auto& rec : cert.per_k)
      if (peck::max_k_antichain_oracle(poset, rec.k) != rec.max_k_antichain)
        oracle_agrees = false;
  }

  json j = cert.to_json();
  j["command"] = "certify";
  if (!cfg.coxeter_type.empty()) j["coxeter_type"] = cfg.coxeter_type;
  if (cfg.coxeter_type.empty() && cfg.coxeter_matrix_file.empty()) {
    j["symmetric_group_n"] = cfg.n;
    j["coxeter_rank_label"] = "A" + std::to_string(cfg.n - 1);
  }
  if (cfg.with_oracle) j["oracle_checked"] = oracle_agrees;
  j["sl2_operators"] =
      cfg.coxeter_type.empty() && cfg.coxeter_matrix_file.empty()
          ? "type A only; built by verify-sl2/export"
          : "not constructed outside type A";
  emit_json(j, cfg.out);
  if (!oracle_agrees) return exit_claim_failed;
  return cert.strongly_sperner && cert.peck ? exit_ok : exit_claim_failed;
}

int cmd_invertibility(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > peck::max_permutation_degree)
    throw peck::input_error("--n must be in [1, 9]");
  if (cfg.n > 6)
    throw peck::budget_error("invertibility supports n <= 6");
  const peck::RankedPoset poset = peck::build_weak_order(cfg.n);
  const peck::Sl2Triple triple = peck::build_sl2_triple(poset);
  const int r = triple.top_rank;

  json j;
  j["schema"] = peck::schema_version;
  j["command"] = "invertibility";
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["blocks"] = json::array();
  bool all_nonsingular = true;
  for (int k = 0; 2 * k < r; ++k) {
    const peck::IntMatrix block = peck::raising_power_block(triple, k);
    json row;
    row["k"] = k;
    row["power"] = r - 2 * k;
    row["dim"] = block.rows();
    if (cfg.exact) {
      const peck::Int det = peck::determinant_exact(block);
      row["method"] = "EXACT";
      row["determinant"] = det.str();
      row["verdict"] = det != 0 ? "NONSINGULAR" : "SINGULAR";
      all_nonsingular = all_nonsingular && det != 0;
    } else {
      const peck::NonsingularCertificate cert =
          peck::nonsingular_certificate(block, cfg.seed);
      row["method"] = cert.method;
      row["verdict"] = cert.nonsingular() ? "NONSINGULAR" : "SINGULAR";
      if (cert.method == "MODULAR") {
        row["prime"] = cert.prime;
        row["rank_mod_p"] = cert.rank;
      }
      if (cert.exact_det) row["determinant"] = cert.exact_det->str();
      all_nonsingular = all_nonsingular && cert.nonsingular();
    }
    j["blocks"].push_back(std::move(row));
  }
  j["ok"] = all_nonsingular;
  j["version"] = peck::version;
  emit_json(j, cfg.out);
  return all_nonsingular ? exit_ok : exit_claim_failed;
}

int cmd_export(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > peck::max_permutation_degree)
    throw peck::input_error("--n must be in [1, 9]");
  if (cfg.format == "dot" && cfg.n > 6)
    throw peck::budget_error("dot export supports n <= 6");
  if (cfg.format == "triplet" && cfg.n > 7)
    throw peck::budget_error("triplet export supports n <= 7");
  const peck::RankedPoset poset = peck::build_weak_order(cfg.n);
  const std::string suffix = "_S" + std::to_string(cfg.n);
  const std::string basis_desc =
      "basis=weak_order(" + std::to_string(cfg.n) + ") order=shortlex";

  std::string text;
  if (cfg.format == "dot") {
    if (cfg.which == "hasse") {
      text = peck::export_dot(poset, nullptr, "weak_order" + suffix);
    } else if (cfg.which == "U") {
      std::map<std::pair<int, int>, peck::Int> labels;
      for (int u = 0; u < poset.size(); ++u) {
        const auto& covers = poset.up_covers(u);
        const auto& gens = poset.up_labels(u);
        for (std::size_t e = 0; e < covers.size(); ++e)
          labels[{u, covers[e]}] = gens[e];
      }
      text = peck::export_dot(poset, &labels, "raising" + suffix);
    } else {
      const peck::IntMatrix d = peck::build_D(poset);
      std::vector<std::tuple<int, int, peck::Int>> edges;
      for (int w = 0; w < d.cols(); ++w)
        for (const auto& [v, c] : d.column(w)) edges.emplace_back(w, v, c);
      text = peck::export_labeled_digraph(poset, std::move(edges),
                                          "lowering" + suffix);
    }
  } else {
    peck::IntMatrix m;
    if (cfg.which == "hasse") {
      std::vector<std::tuple<int, int, peck::Int>> ts;
      for (int u = 0; u < poset.size(); ++u)
        for (int v : poset.up_covers(u)) ts.emplace_back(v, u, peck::Int(1));
      m = peck::IntMatrix::from_triplets(poset.size(), poset.size(), ts);
    } else if (cfg.which == "U") {
      m = peck::build_U(poset);
    } else {
      m = peck::build_D(poset);
    }
    std::ostringstream os;
    peck::write_triplets(os, m, basis_desc);
    text = os.str();
  }
  write_atomic(cfg.out, text);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "Exact sl2 operators and Sperner certification for Coxeter weak "
      "orders"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand(
      "verify-sl2", "Check [U,D]=H, [H,U]=2U, [H,D]=-2D exactly on W_n");
  verify->add_option("--n", cfg.n, "symmetric group degree (W_n = S_n)")
      ->required();
  verify->add_flag("--large", cfg.large, "allow n = 7");
  verify->add_option("--out", cfg.out, "write the JSON report here");

  CLI::App* certify = app.add_subcommand(
      "certify", "Certify strong Sperner / Peck via exact max-antichain flow");
  certify->add_option("--n", cfg.n,
                      "symmetric group degree for --type A (W_n = S_n)");
  std::string type_a = "A";
  certify->add_option("--type", type_a, "group family; only 'A' (default)");
  certify->add_option("--coxeter", cfg.coxeter_type,
                      "Coxeter type string, e.g. A3, B3, H3, F4, I2:7");
  certify->add_option("--coxeter-matrix", cfg.coxeter_matrix_file,
                      "file with rank + upper-triangle Coxeter matrix");
  certify->add_option("--seed", cfg.seed, "seed recorded in the certificate");
  certify->add_flag("--with-oracle", cfg.with_oracle,
                    "cross-check the flow against the brute-force oracle");
  certify->add_flag("--allow-h4", cfg.allow_h4, "opt in to the H4 run");
  certify->add_flag("--large", cfg.large, "allow n = 7 for type A");
  certify->add_option("--out", cfg.out, "write the certificate here");

  CLI::App* invert = app.add_subcommand(
      "invertibility",
      "Certify det != 0 for every raising power block of W_n");
  invert->add_option("--n", cfg.n, "symmetric group degree")->required();
  invert->add_flag("--exact", cfg.exact,
                   "compute exact determinants instead of modular ranks");
  invert->add_option("--seed", cfg.seed, "seed for modular prime selection");
  invert->add_option("--out", cfg.out, "write the JSON table here");

  CLI::App* exp = app.add_subcommand(
      "export", "Write Hasse/U/D as a DOT diagram or a triplet file");
  exp->add_option("--n", cfg.n, "symmetric group degree")->required();
  exp->add_option("--which", cfg.which, "hasse, U or D")
      ->required()
      ->check(CLI::IsMember({"hasse", "U", "D"}));
  exp->add_option("--format", cfg.format, "dot or triplet")
      ->required()
      ->check(CLI::IsMember({"dot", "triplet"}));
  exp->add_option("--out", cfg.out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (verify->parsed()) return cmd_verify_sl2(cfg);
    if (certify->parsed()) {
      if (type_a != "A")
        throw peck::input_error("--type supports only 'A'; use --coxeter for "
                                "other families");
      if (cfg.coxeter_type.empty() && cfg.coxeter_matrix_file.empty() &&
          cfg.n == 0)
        throw peck::input_error("certify needs --n, --coxeter or "
                                "--coxeter-matrix");
      return cmd_certify(cfg);
    }
    if (invert->parsed()) return cmd_invertibility(cfg);
    if (exp->parsed()) return cmd_export(cfg);
    return exit_input_error;
  } catch (const peck::budget_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return exit_budget_refused;
  } catch (const peck::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}
