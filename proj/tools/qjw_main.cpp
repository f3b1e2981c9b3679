// Copyright 2026 The qjw Authors
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

// qjw: build and verify conical 2-designs, run the design/concurrence and
// witness tables, and compute Jordan-algebraic composites.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qjw/entangle.hpp"
#include "qjw/io.hpp"
#include "qjw/jordan.hpp"

using nlohmann::json;
using namespace qjw;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string output;
  std::string format = "json";
  bool long_tests = false;
};

json meta_block(const RunConfig& cfg) {
  return json{{"tool", "qjw"},
              {"version", kVersion},
              {"seed", cfg.seed},
              {"tol", cfg.tol},
              {"kernels", kernel_backend_name()}};
}

// Report files are written atomically; stdout when no path was given.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    write_file_atomic(cfg.output, text);
  }
}

void emit_report(const RunConfig& cfg, json results) {
  json rep{{"meta", meta_block(cfg)}, {"results", std::move(results)}};
  emit(cfg, rep.dump(2));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

ConicalDesign design_by_kind(const std::string& kind, std::size_t d, double contraction,
                             std::uint64_t seed) {
  if (kind == "sim") return build_sim(d, contraction, seed);
  if (kind == "mum") return build_mum(d, contraction, seed);
  if (kind == "sic") {
    auto projs = build_sic(d);
    std::vector<Mat> effects;
    for (auto& p : projs) effects.push_back(p * cplx(1.0 / static_cast<double>(d)));
    return make_design(d, std::move(effects));
  }
  if (kind == "mub") {
    auto projs = build_mub(d);
    std::vector<Mat> effects;
    for (auto& p : projs) effects.push_back(p * cplx(1.0 / static_cast<double>(d + 1)));
    return make_design(d, std::move(effects));
  }
  require(false, "unknown design kind '" + kind + "' (sim|mum|sic|mub)");
  return {};
}

int cmd_design_build(const RunConfig& cfg, const std::string& kind, std::size_t d,
                     double contraction) {
  ConicalDesign des = design_by_kind(kind, d, contraction, cfg.seed);
  json j = design_to_json(des);
  j["meta"] = meta_block(cfg);
  emit(cfg, j.dump(2));
  return 0;
}

int cmd_design_verify(const RunConfig& cfg, const std::string& path) {
  const json j = json::parse(read_file(path));
  ConicalDesign des = design_from_json(j);
  DesignReport rep = verify_design(des.ops, cfg.tol, cfg.seed);
  emit_report(cfg, json::array({report_to_json(rep)}));
  return rep.pass ? 0 : 1;
}

int cmd_entangle_table(const RunConfig& cfg, const std::string& kind, std::size_t d,
                       double contraction, std::size_t samples) {
  ConicalDesign des = design_by_kind(kind, d, contraction, cfg.seed);
  Povm povm = design_povm(des);
  SeededRng rng(cfg.seed);
  double worst = 0.0;
  std::ostringstream csv;
  csv << "state,pnorm,c_schmidt,c_design,delta,lin_below,lin_above\n";
  json rows = json::array();
  for (std::size_t s = 0; s < samples; ++s) {
    const Mat psi = random_ket(d * d, rng);
    const Mat probs = product_povm_probs(psi, povm);
    const double pnorm = pvec_norm(probs);
    const double c_schmidt = concurrence_pure(psi, d);
    const double c_design = concurrence_from_design(pnorm, des.ks, des.ka);
    const double delta = std::abs(c_design - c_schmidt);
    worst = std::max(worst, delta);
    const WitnessVerdicts v = witness_tests(matmul(psi, psi.adjoint()), des);
    csv << s << "," << fmt(pnorm) << "," << fmt(c_schmidt) << "," << fmt(c_design)
        << "," << fmt(delta) << "," << (v.lin_below ? 1 : 0) << ","
        << (v.lin_above ? 1 : 0) << "\n";
    rows.push_back({{"state", s},
                    {"pnorm", pnorm},
                    {"c_schmidt", c_schmidt},
                    {"c_design", c_design},
                    {"delta", delta},
                    {"lin_below", v.lin_below},
                    {"lin_above", v.lin_above}});
  }
  if (cfg.format == "csv") emit(cfg, csv.str());
  else emit_report(cfg, std::move(rows));
  return worst < 1e-8 ? 0 : 1;
}

int cmd_entangle_witness(const RunConfig& cfg, const std::string& state,
                         std::size_t d, double p, double fidelity,
                         const std::string& kind, double contraction) {
  ConicalDesign des = design_by_kind(kind, d, contraction, cfg.seed);
  Mat rho;
  if (state == "werner") rho = werner_state(d, p);
  else if (state == "isotropic") rho = isotropic_state(d, fidelity);
  else if (state == "maxmixed")
    rho = Mat::identity(d * d) * cplx(1.0 / static_cast<double>(d * d));
  else
    require(false, "unknown state '" + state + "' (werner|isotropic|maxmixed)");
  const WitnessVerdicts v = witness_tests(rho, des);
  const WitnessPair w = witnesses_from_design(des);
  emit_report(cfg, json::array({json{{"state", state},
                                     {"d", d},
                                     {"p", p},
                                     {"F", fidelity},
                                     {"tr_n", v.tr_n},
                                     {"tr_npt", v.tr_npt},
                                     {"s_minus", w.s_minus},
                                     {"s_plus", w.s_plus},
                                     {"lin_below", v.lin_below},
                                     {"lin_above", v.lin_above},
                                     {"quad_n", v.quad_n},
                                     {"quad_npt", v.quad_npt}}}));
  return 0;
}

int cmd_jordan_tensor(const RunConfig& cfg, const std::string& a_text,
                      const std::string& b_text, bool universal) {
  const EjaDescriptor da = parse_descriptor(a_text);
  const EjaDescriptor db = parse_descriptor(b_text);
  if (universal) {
    require(da.summands.size() == 1 && db.summands.size() == 1,
            "--universal expects simple factors");
    UniversalTensorResult r =
        universal_tensor(da.summands[0], db.summands[0], cfg.long_tests);
    if (r.skipped) {
      emit_report(cfg, json::array({json{{"status", "skipped"}, {"note", r.note}}}));
      return 0;
    }
    emit_report(cfg, json::array({json{{"a", da.str()},
                                       {"b", db.str()},
                                       {"identified", r.identified.str()},
                                       {"dim", r.dim}}}));
    return 0;
  }
  TensorResult r = canonical_tensor(standard_embedding(da), standard_embedding(db));
  json row{{"a", da.str()},
           {"b", db.str()},
           {"identified", r.identified.str()},
           {"identified_descriptor", descriptor_to_json(r.identified)},
           {"dim", r.dim}};
  if (da.summands.size() == 1 && db.summands.size() == 1) {
    if (auto pred = predicted_canonical_tensor(da.summands[0], db.summands[0])) {
      row["predicted"] = pred->str();
      row["matches"] =
          r.identified.summands.size() == 1 && r.identified.summands[0] == *pred;
    }
  }
  emit_report(cfg, json::array({row}));
  return 0;
}

int cmd_jordan_table(const RunConfig& cfg) {
  // every product of two Jordan matrix algebras, instantiated at small sizes
  const std::vector<std::string> tags = {"R",         "real:2",   "real:3",
                                         "complex:2", "complex:3", "quat:2"};
  std::ostringstream csv;
  csv << "A,B,predicted,computed_dim,computed_rank,status\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    for (std::size_t j = i; j < tags.size(); ++j) {
      const EjaDescriptor da = parse_descriptor(tags[i]);
      const EjaDescriptor db = parse_descriptor(tags[j]);
      TensorResult r =
          canonical_tensor(standard_embedding(da), standard_embedding(db));
      const auto pred =
          predicted_canonical_tensor(da.summands[0], db.summands[0]);
      const bool ok = pred && r.identified.summands.size() == 1 &&
                      r.identified.summands[0] == *pred;
      all_ok = all_ok && ok;
      csv << tags[i] << "," << tags[j] << "," << (pred ? pred->str() : "-") << ","
          << r.dim << "," << r.identified.summands[0].rank() << ","
          << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  emit(cfg, csv.str());
  return all_ok ? 0 : 1;
}

int cmd_jordan_envelope(const RunConfig& cfg, const std::string& a_text) {
  const EjaDescriptor da = parse_descriptor(a_text);
  UniversalEnvelope env = universal_envelope(da);
  json row{{"a", da.str()},
           {"envelope", env.shape.str()},
           {"complex_dim", env.shape.algebra_dim()}};
  if (env.involution) row["involution"] = env.involution->str();
  if (env.verified_generated_dim)
    row["verified_generated_dim"] = *env.verified_generated_dim;
  emit_report(cfg, json::array({row}));
  return 0;
}

int cmd_jordan_reversible(const RunConfig& cfg, std::size_t k, std::size_t maxlen) {
  EmbeddedEjc ejc = standard_embedding(parse_descriptor("spin:" + std::to_string(k)));
  ReversibilityResult r = check_reversible(ejc, maxlen, cfg.seed);
  std::ostringstream witness;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) witness << " ";
    witness << "t" << r.witness[i];
  }
  emit_report(cfg, json::array({json{{"spin", k},
                                     {"maxlen", maxlen},
                                     {"reversible", r.reversible},
                                     {"witness", witness.str()}}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conical 2-designs and Jordan-algebraic composites"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain visible after subcommands

  RunConfig cfg;
  if (const char* env_tol = std::getenv("QJW_TOL")) cfg.tol = std::atof(env_tol);
  app.add_option("--seed", cfg.seed, "seed for every randomized subroutine");
  app.add_option("--tol", cfg.tol, "verification tolerance");
  app.add_option("-o,--output", cfg.output, "report file (atomic write)");
  app.add_option("--format", cfg.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--long", cfg.long_tests, "enable long-running cases");

  // design
  auto* design = app.add_subcommand("design", "build or verify conical 2-designs");
  design->fallthrough();
  auto* dbuild = design->add_subcommand("build", "construct a design");
  dbuild->fallthrough();
  std::string kind = "sim";
  std::size_t dim = 2;
  double kappa = 0.0, eta = 0.0;
  dbuild->add_option("--kind", kind, "sim|mum|sic|mub")->required();
  dbuild->add_option("--d", dim, "Hilbert dimension")->required();
  dbuild->add_option("--kappa", kappa, "SIM contraction parameter");
  dbuild->add_option("--eta", eta, "MUM contraction parameter");
  auto* dverify = design->add_subcommand("verify", "verify a design file");
  dverify->fallthrough();
  std::string design_path;
  dverify->add_option("file", design_path, "design JSON file")->required();

  // entangle
  auto* entangle = app.add_subcommand("entangle", "concurrence and witness tables");
  entangle->fallthrough();
  auto* etable = entangle->add_subcommand("table", "dual-route concurrence table");
  etable->fallthrough();
  std::string edesign = "sic";
  std::size_t esamples = 100;
  double econtr = 0.0;
  etable->add_option("--d", dim, "local dimension")->required();
  etable->add_option("--design", edesign, "sim|mum|sic|mub");
  etable->add_option("--kappa", econtr, "contraction parameter for sim/mum");
  etable->add_option("--samples", esamples, "number of Haar-random kets");
  auto* ewitness = entangle->add_subcommand("witness", "witness verdicts for a state");
  ewitness->fallthrough();
  std::string estate = "werner";
  double ep = 1.0, ef = 1.0;
  ewitness->add_option("--state", estate, "werner|isotropic|maxmixed")->required();
  ewitness->add_option("--d", dim, "local dimension")->required();
  ewitness->add_option("--p", ep, "Werner parameter");
  ewitness->add_option("--F", ef, "isotropic fidelity");
  ewitness->add_option("--design", edesign, "sim|mum|sic|mub");
  ewitness->add_option("--kappa", econtr, "contraction parameter for sim/mum");

  // jordan
  auto* jordan = app.add_subcommand("jordan", "composites, envelopes, reversibility");
  jordan->fallthrough();
  auto* jtensor = jordan->add_subcommand("tensor", "canonical tensor product");
  jtensor->fallthrough();
  std::string atext, btext;
  bool universal = false;
  jtensor->add_option("--a", atext, "left factor, e.g. quat:2")->required();
  jtensor->add_option("--b", btext, "right factor, e.g. complex:2")->required();
  jtensor->add_flag("--universal", universal, "use universal embeddings");
  auto* jtable = jordan->add_subcommand("table", "all canonical tensor table cells");
  jtable->fallthrough();
  auto* jenvelope = jordan->add_subcommand("envelope", "universal C*-algebra");
  jenvelope->fallthrough();
  jenvelope->add_option("--a", atext, "factor, e.g. complex:2")->required();
  auto* jreversible = jordan->add_subcommand("reversible", "spin factor reversibility");
  jreversible->fallthrough();
  std::size_t spin_k = 4, maxlen = 4;
  jreversible->add_option("--spin", spin_k, "spin factor cardinality k")->required();
  jreversible->add_option("--maxlen", maxlen, "maximum word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dbuild->parsed()) {
      double contraction = kind == "mum" ? eta : kappa;
      if (contraction == 0.0)
        contraction = 1.0 / static_cast<double>(dim - 1);  // inball default
      return cmd_design_build(cfg, kind, dim, contraction);
    }
    if (dverify->parsed()) return cmd_design_verify(cfg, design_path);
    if (etable->parsed()) {
      if (econtr == 0.0) econtr = 1.0 / static_cast<double>(dim - 1);
      return cmd_entangle_table(cfg, edesign, dim, econtr, esamples);
    }
    if (ewitness->parsed()) {
      if (econtr == 0.0) econtr = 1.0 / static_cast<double>(dim - 1);
      return cmd_entangle_witness(cfg, estate, dim, ep, ef, edesign, econtr);
    }
    if (jtensor->parsed()) return cmd_jordan_tensor(cfg, atext, btext, universal);
    if (jtable->parsed()) return cmd_jordan_table(cfg);
    if (jenvelope->parsed()) return cmd_jordan_envelope(cfg, atext);
    if (jreversible->parsed()) return cmd_jordan_reversible(cfg, spin_k, maxlen);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const ExceptionalFactorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
