// Command-line front end: analyze sequences, run lemma instance checks,
// character-sum reports, threshold scans, theorem pipelines, and searches.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "zslab/charsum.hpp"
#include "zslab/lemmas.hpp"
#include "zslab/search.hpp"
#include "zslab/theorems.hpp"

using namespace zslab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kShortConvention =
    "short zero-sum = length in [1, p] (exp(G))";

struct RunContext {
  std::string command;
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  bool json_out = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json report = json::object();
  std::vector<std::string> artifacts;

  void set(const std::string& key, const json& value) { report[key] = value; }

  void emit(std::ostream& out) {
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json record = {{"command", command}, {"arguments", args},     {"seed", seed},
                   {"version", kVersion}, {"wall_time_s", wall},  {"artifacts", artifacts}};
    if (json_out) {
      record["report"] = report;
      out << record.dump(2) << "\n";
      return;
    }
    for (auto& [k, v] : report.items())
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    out << "run.command: " << command << "\n";
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    out << "run.arguments: " << joined << "\n";
    out << "run.seed: " << seed << "\n";
    out << "run.version: " << kVersion << "\n";
    out << "run.wall_time_s: " << wall << "\n";
    for (const auto& a : artifacts) out << "run.artifact: " << a << "\n";
  }
};

Sequence load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

json seq_json(const Sequence& S) {
  return {{"p", S.spec.p}, {"r", S.spec.r}, {"length", S.length()},
          {"text", serialize(S)}};
}

void put_stats(RunContext& ctx, const Sequence& S) {
  auto st = stats(S);
  ctx.set("length", st.length);
  ctx.set("h", st.h);
  ctx.set("supp_size", st.supp_size);
  ctx.set("v0", st.v0);
  json sg = json::array();
  for (auto c : st.sigma) sg.push_back(c);
  ctx.set("sigma", sg);
}

int cmd_analyze(RunContext& ctx, const std::string& file) {
  auto S = load_sequence(file);
  put_stats(ctx, S);
  ctx.set("convention", kShortConvention);
  auto w = find_zero_sum(S);
  bool zsf = !w.has_value();
  ctx.set("zero_sumfree", zsf);
  if (w) {
    if (!verify_zero_sum_witness(S, *w))
      fail(Errc::TheoremViolation, "extracted witness failed re-verification");
    ctx.set("witness", seq_json(*w));
    auto ws = find_zero_sum(S, ZeroSumConstraint::Short);
    ctx.set("has_short_zero_sum", ws.has_value());
  }
  ctx.emit(std::cout);
  return zsf ? 0 : 1;
}

json lemma_json(const LemmaReport& r) {
  json j = {{"lemma", r.lemma},         {"hypothesis_ok", r.hypothesis_ok},
            {"claim_holds", r.claim_holds}, {"lhs", r.lhs},
            {"rhs", r.rhs},             {"note", r.note}};
  if (r.witness) j["witness"] = seq_json(*r.witness);
  if (r.translate_T) j["translate_T"] = seq_json(*r.translate_T);
  if (r.translate_g) {
    json g = json::array();
    for (auto c : *r.translate_g) g.push_back(c);
    j["translate_g"] = g;
  }
  j["cover_size"] = r.cover.size();
  return j;
}

int cmd_lemma(RunContext& ctx, const std::string& name, const std::string& file, i64 k,
              int part, i64 gao_k) {
  auto S = load_sequence(file);
  LemmaReport r;
  if (name == "3.1") {
    r = check_lemma_3_1(S);
  } else if (name == "3.2") {
    r = check_lemma_3_2(S, k, part);
  } else if (name == "3.3") {
    r = check_lemma_3_3(S, standard_basis(S.spec));
  } else if (name == "3.5") {
    r = find_n_or_2n_zero_sum(S);
  } else if (name == "3.6") {
    r = find_gao_translate(S, gao_k >= 0 ? gao_k : S.length() - S.spec.order);
  } else {
    fail(Errc::BadArgument, "unknown lemma name: " + name);
  }
  auto rj = lemma_json(r);
  for (auto& [kk, vv] : rj.items()) ctx.set(kk, vv);
  ctx.emit(std::cout);
  if (!r.hypothesis_ok) return 1;
  return 0;
}

int cmd_charsum(RunContext& ctx, const std::string& file, double eps, double c,
                const std::string& csv_path, int threads) {
  auto S = load_sequence(file);
  auto sp = spectrum(S, threads);
  auto id = spectrum_identity_check(S);
  ctx.set("length", S.length());
  ctx.set("sum_over_chi_re", id.sum_over_chi.real());
  ctx.set("sum_over_chi_im", id.sum_over_chi.imag());
  ctx.set("order_times_z", id.rhs);
  ctx.set("z", id.z);
  ctx.set("rel_error", id.rel_error);
  std::optional<AsymptoticParams> params;
  if (eps > 0) {
    params = AsymptoticParams{eps, c, S.spec.r};
    validate_params(*params);
    ctx.set("coset_cap", coset_cap(*params, S.spec.p));
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) fail(Errc::ParseError, "cannot open " + csv_path + " for writing");
    write_spectrum_csv(out, S, sp, params ? &*params : nullptr);
    ctx.artifacts.push_back(csv_path);
  }
  ctx.emit(std::cout);
  return 0;
}

int cmd_threshold(RunContext& ctx, double eps, double c, int r, i64 cap) {
  auto rep = effective_threshold({eps, c, r}, cap);
  ctx.set("epsilon", rep.epsilon);
  ctx.set("c", rep.c);
  ctx.set("r", rep.r);
  ctx.set("p_threshold", rep.p_threshold);
  ctx.set("M_at_p", rep.M_at_p);
  ctx.set("lhs", rep.lhs);
  ctx.set("rhs", rep.rhs);
  ctx.emit(std::cout);
  return 0;
}

json verdict_json(const Verdict& v) {
  json j = {{"kind", verdict_name(v.kind)}, {"path", v.path}, {"h", v.h},
            {"bound", v.bound}};
  if (v.witness) j["witness"] = seq_json(*v.witness);
  return j;
}

int cmd_theorem(RunContext& ctx, const std::string& which, const std::string& file,
                double eps, double c) {
  auto S = load_sequence(file);
  ctx.set("convention", kShortConvention);
  if (which == "1.1") {
    auto v = analyze_theorem_1_1(S, eps, c);
    ctx.set("verdict", verdict_json(v));
    ctx.emit(std::cout);
    return 0;
  }
  PipelineReport rep;
  if (which == "1.2") {
    rep = reduce_theorem_1_2(S, eps, c);
  } else if (which == "1.3") {
    rep = reduce_theorem_1_3(S, eps, c);
  } else {
    fail(Errc::BadArgument, "unknown theorem: " + which);
  }
  json steps = json::array();
  for (const auto& s : rep.steps) steps.push_back({{"name", s.name}, {"detail", s.detail}});
  ctx.set("steps", steps);
  json inter = json::object();
  for (const auto& [name, text] : rep.intermediates) inter[name] = text;
  ctx.set("intermediates", inter);
  ctx.set("verdict", verdict_json(rep.final));
  ctx.emit(std::cout);
  return 0;
}

int cmd_search(RunContext& ctx, i64 p, const std::string& mode, std::uint64_t samples,
               bool no_symmetry, bool allow_large, bool property_b,
               const std::string& out_path) {
  SearchConfig cfg;
  cfg.p = p;
  cfg.exhaustive = (mode == "exhaustive");
  cfg.samples = samples;
  cfg.seed = ctx.seed;
  cfg.symmetry = !no_symmetry;
  cfg.allow_large = allow_large;
  if (property_b) {
    auto rep = verify_property_b(cfg);
    ctx.set("p", rep.p);
    ctx.set("bound", rep.bound);
    ctx.set("min_h", rep.min_h);
    ctx.set("holds", rep.holds);
    ctx.set("catalog_size", rep.catalog_size);
    ctx.set("exhaustive", rep.exhaustive);
    json hist = json::object();
    for (auto [h, n] : rep.h_histogram) hist[std::to_string(h)] = n;
    ctx.set("h_histogram", hist);
    ctx.emit(std::cout);
    return 0;
  }
  auto cat = max_zero_sumfree_length(cfg);
  ctx.set("p", cat.p);
  ctx.set("max_length", cat.max_length);
  ctx.set("count", cat.extremal.size());
  ctx.set("min_h", cat.min_h);
  ctx.set("exhaustive", cat.exhaustive);
  ctx.set("nodes", cat.nodes);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, "cannot open " + out_path + " for writing");
    for (const auto& S : cat.extremal) out << serialize(S) << "\n";
    ctx.artifacts.push_back(out_path);
  }
  ctx.emit(std::cout);
  return 0;
}

int cmd_random(RunContext& ctx, i64 p, i64 length, const std::string& out_path) {
  auto S = random_zero_sumfree(p, length, ctx.seed);
  ctx.set("p", p);
  ctx.set("length", length);
  ctx.set("found", S.has_value());
  if (S) {
    ctx.set("sequence", seq_json(*S));
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) fail(Errc::ParseError, "cannot open " + out_path + " for writing");
      out << serialize(*S);
      ctx.artifacts.push_back(out_path);
    }
  }
  ctx.emit(std::cout);
  return S ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum sequence toolkit over C_p^r"};
  app.require_subcommand(1);

  bool json_out = false;
  std::uint64_t seed = 0;
  int threads = 1;
  app.add_flag("--json", json_out, "machine-readable JSON output");
  app.add_option("--seed", seed, "random seed (echoed in the run record)");
  app.add_option("--threads", threads, "worker cap for parallel sections");

  std::string file, lemma_name, csv_path, theorem_name, mode = "exhaustive", out_path;
  i64 k = 1, gao_k = -1, p = 3, length = 4, cap = 1'000'000'000;
  int part = 1, r = 2;
  double eps = 0, c = 1.0;
  bool no_symmetry = false, allow_large = false, property_b = false;
  std::uint64_t samples = 10000;

  auto* analyze = app.add_subcommand("analyze", "sequence statistics and zero-sum verdict");
  analyze->add_option("file", file)->required();

  auto* lemma = app.add_subcommand("lemma", "run a lemma instance check");
  lemma->add_option("name", lemma_name, "3.1 | 3.2 | 3.3 | 3.5 | 3.6")->required();
  lemma->add_option("file", file)->required();
  lemma->add_option("--k", k, "cardinality (3.2) ");
  lemma->add_option("--part", part, "sub-claim 1|2|3 (3.2)");
  lemma->add_option("--gao-k", gao_k, "overshoot k (3.6); default |S| - p^r");

  auto* charsum = app.add_subcommand("charsum", "character spectrum and identity check");
  charsum->add_option("file", file)->required();
  charsum->add_option("--eps", eps, "envelope epsilon in (0, 1/2)");
  charsum->add_option("--c", c, "envelope constant c > 0");
  charsum->add_option("--csv", csv_path, "write the spectrum CSV here");

  auto* threshold = app.add_subcommand("threshold", "effective tail-inequality threshold");
  threshold->add_option("--eps", eps)->required();
  threshold->add_option("--c", c)->required();
  threshold->add_option("--r", r);
  threshold->add_option("--cap", cap, "prime scan cap");

  auto* theorem = app.add_subcommand("theorem", "run a theorem pipeline");
  theorem->add_option("name", theorem_name, "1.1 | 1.2 | 1.3")->required();
  theorem->add_option("file", file)->required();
  theorem->add_option("--eps", eps)->required();
  theorem->add_option("--c", c)->required();

  auto* search = app.add_subcommand("search", "extremal zero-sumfree structure");
  search->add_option("--p", p)->required();
  search->add_option("--mode", mode, "exhaustive | randomized");
  search->add_option("--samples", samples, "randomized mode sample count");
  search->add_flag("--no-symmetry", no_symmetry);
  search->add_flag("--allow-large", allow_large, "permit exhaustive p > 5");
  search->add_flag("--property-b", property_b, "verify the h >= p-2 bound instead");
  search->add_option("--out", out_path, "write the catalog here");

  auto* random = app.add_subcommand("random", "generate a zero-sumfree instance");
  random->add_option("--p", p)->required();
  random->add_option("--length", length)->required();
  random->add_option("--out", out_path, "write the sequence here");

  // allow the global flags (--json, --seed, --threads) after a subcommand
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunContext ctx;
  ctx.seed = seed;
  ctx.json_out = json_out;
  for (int i = 1; i < argc; ++i) ctx.args.push_back(argv[i]);

  try {
    if (analyze->parsed()) {
      ctx.command = "analyze";
      return cmd_analyze(ctx, file);
    }
    if (lemma->parsed()) {
      ctx.command = "lemma";
      return cmd_lemma(ctx, lemma_name, file, k, part, gao_k);
    }
    if (charsum->parsed()) {
      ctx.command = "charsum";
      return cmd_charsum(ctx, file, eps, c, csv_path, threads);
    }
    if (threshold->parsed()) {
      ctx.command = "threshold";
      return cmd_threshold(ctx, eps, c, r, cap);
    }
    if (theorem->parsed()) {
      ctx.command = "theorem";
      return cmd_theorem(ctx, theorem_name, file, eps, c);
    }
    if (search->parsed()) {
      ctx.command = "search";
      return cmd_search(ctx, p, mode, samples, no_symmetry, allow_large, property_b,
                        out_path);
    }
    if (random->parsed()) {
      ctx.command = "random";
      return cmd_random(ctx, p, length, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::TheoremViolation ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
