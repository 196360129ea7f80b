#include "gradus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gradus/artinian.hpp"
#include "gradus/errors.hpp"
#include "gradus/harness.hpp"
#include "gradus/invariants.hpp"
#include "gradus/koszul.hpp"
#include "gradus/limits.hpp"
#include "gradus/module_file.hpp"

namespace gradus::cli {

std::pair<int, int> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("window must look like lo..hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw InputError("bad window bound '" + a + "'");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw InputError("bad window bound '" + b + "'");
    if (lo > hi) throw InputError("window lower bound exceeds upper bound");
    return {lo, hi};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("window must look like lo..hi, got '" + text + "'");
  }
}

namespace {

PresentedModule load_module(const std::string& path) {
  if (path.empty()) throw InputError("--module is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read module file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_module_file(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), e.line(), e.column());
  }
}

struct Context {
  const CommandConfig& cfg;
  PresentedModule module;
  LimitConfig limits;
  InvariantConfig invariants;

  int levels() const { return limits.levels; }

  std::vector<Polynomial> sequence(bool prefer_sop) const {
    const auto& first = prefer_sop ? cfg.sop : cfg.ideal;
    const auto& second = prefer_sop ? cfg.ideal : cfg.sop;
    if (first) return parse_sequence(module.ring(), *first);
    if (second) return parse_sequence(module.ring(), *second);
    return variables_of(module.ring());
  }

  // [-(N d + g + 2), g + N d + 2] with d the largest degree in the sequence.
  std::pair<int, int> default_window(const std::vector<Polynomial>& seq) const {
    if (cfg.window) return *cfg.window;
    int d = 0;
    for (const auto& f : seq) d = std::max(d, f.degree());
    const int g = std::max(module.max_presentation_degree(), 0);
    const int reach = levels() * d + g + 2;
    return {-reach, reach};
  }
};

// Result of a computing verb: a text rendering, a JSON payload and caveats.
struct Outcome {
  std::ostringstream text;
  Json result = Json::object();
  std::vector<std::string> flags;
};

std::string joined(const std::set<int>& s) {
  std::string out;
  for (int j : s) out += (out.empty() ? "" : ",") + std::to_string(j);
  return out;
}

void dims_row(std::ostream& os, const std::vector<std::size_t>& dims) {
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? " " : "") << dims[k];
  os << "\n";
}

void limit_rows(Outcome& o, const std::string& symbol, const std::vector<LimitComputation>& all, int lo, int hi) {
  o.text << "degrees " << lo << ".." << hi << "\n";
  Json rows = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const LimitResult& r = all[i].result;
    const auto dims = r.module.hilbert(lo, hi);
    o.text << symbol << i << ": ";
    dims_row(o.text, dims);
    const auto unstable = r.unstable_degrees();
    if (!unstable.empty()) o.flags.push_back(symbol + std::to_string(i) + " not stabilized in degrees " + joined(unstable));
    Json entry;
    entry["index"] = i;
    entry["dims"] = dims;
    entry["levels"] = r.levels;
    entry["stable_levels"] = Json::array();
    for (int j = lo; j <= hi; ++j) entry["stable_levels"].push_back(r.status(j).stable_level);
    entry["unstable"] = unstable;
    rows.push_back(std::move(entry));
  }
  o.result["lo"] = lo;
  o.result["hi"] = hi;
  o.result["modules"] = std::move(rows);
}

std::string seq_text(const RingSpec& ring, const std::vector<Polynomial>& seq) {
  std::string out;
  for (const auto& f : seq) out += (out.empty() ? "" : ", ") + f.to_string(ring.variables);
  return out;
}

void compute(const std::string& verb, const Context& ctx, Outcome& o) {
  const PresentedModule& m = ctx.module;
  const RingSpec& ring = m.ring();
  if (verb == "hilbert") {
    const auto w = ctx.cfg.window ? *ctx.cfg.window : std::make_pair(m.min_twist(), ctx.invariants.top_for(m));
    const auto dims = hilbert_function(m, w.first, w.second);
    for (int j = w.first; j <= w.second; ++j) o.text << j << " " << dims[j - w.first] << "\n";
    o.result["lo"] = w.first;
    o.result["dims"] = dims;
  } else if (verb == "dim") {
    const KrullResult k = krull_dimension(m, ctx.invariants);
    o.text << k.dimension << "\n";
    o.result["dim"] = k.dimension;
    if (k.window_insufficient) o.flags.push_back("Hilbert fit not confirmed on the window; value from parameter search");
  } else if (verb == "depth") {
    const DepthInfo d = depth(m, ctx.invariants);
    o.text << d.depth << "\n";
    o.result["depth"] = d.depth;
  } else if (verb == "cm") {
    const bool cm = is_cohen_macaulay(m, ctx.invariants);
    o.text << (cm ? "true" : "false") << "\n";
    o.result["cohen_macaulay"] = cm;
  } else if (verb == "sop") {
    const auto sop = find_sop(m, ctx.invariants);
    o.text << seq_text(ring, sop) << "\n";
    o.result["sop"] = seq_text(ring, sop);
  } else if (verb == "koszul") {
    const auto seq = ctx.sequence(true);
    const int level = ctx.cfg.levels.value_or(1);
    const auto [lo, hi] = ctx.default_window(seq);
    o.text << "level " << level << ", degrees " << lo << ".." << hi << "\n";
    Json rows = Json::array();
    for (int i = 0; i <= static_cast<int>(seq.size()); ++i) {
      const auto h = homology(m, seq, level, i, lo, hi);
      const auto dims = h.module.hilbert(lo, hi);
      o.text << "H" << i << ": ";
      dims_row(o.text, dims);
      rows.push_back(dims);
    }
    o.result["level"] = level;
    o.result["lo"] = lo;
    o.result["hi"] = hi;
    o.result["homology"] = std::move(rows);
  } else if (verb == "lc") {
    const auto seq = ctx.sequence(false);
    const auto [lo, hi] = ctx.default_window(seq);
    std::vector<LimitComputation> all;
    for (int i = 0; i <= static_cast<int>(seq.size()); ++i)
      all.push_back(local_cohomology(realizer_of(m), seq, i, lo, hi, ctx.limits));
    limit_rows(o, "H^", all, lo, hi);
  } else if (verb == "lh") {
    const ArtinianDual x = graded_dual(m);
    const auto seq = ctx.sequence(true);
    const auto [lo, hi] = ctx.default_window(seq);
    std::vector<LimitComputation> all;
    for (int i = 0; i <= static_cast<int>(seq.size()); ++i)
      all.push_back(local_homology(realizer_of(x), seq, i, lo, hi, ctx.limits));
    limit_rows(o, "H_", all, lo, hi);
  } else if (verb == "ndim") {
    const NdimResult r = ndim(graded_dual(m), ArtinianConfig{ctx.invariants});
    o.text << r.value << "\n";
    o.result["ndim"] = r.value;
    if (r.window_insufficient) o.flags.push_back("finite-length test not certified on the window");
  } else if (verb == "width") {
    const WidthResult r = width(graded_dual(m), ArtinianConfig{ctx.invariants});
    if (r.value == kInfinite)
      o.text << "inf\n";
    else
      o.text << r.value << "\n";
    o.result["width"] = r.value == kInfinite ? Json("inf") : Json(r.value);
    if (r.window_heuristic) o.flags.push_back("coregularity checked on a finite window");
  } else if (verb == "cocm") {
    const bool c = is_co_cohen_macaulay(graded_dual(m), ArtinianConfig{ctx.invariants});
    o.text << (c ? "true" : "false") << "\n";
    o.result["co_cohen_macaulay"] = c;
  }
}

VerificationReport verify(const Context& ctx) {
  HarnessConfig h;
  h.limits = ctx.limits;
  h.invariants = ctx.invariants;
  if (ctx.cfg.levels) h.n_max = *ctx.cfg.levels;
  h.window = ctx.cfg.window;
  const PresentedModule& m = ctx.module;
  const std::string& s = ctx.cfg.statement;
  auto sop = [&] {
    if (ctx.cfg.sop) return parse_sequence(m.ring(), *ctx.cfg.sop);
    return find_sop(m, ctx.invariants);
  };
  if (s == "prop21") return verify_prop21(m, ctx.sequence(true), h);
  if (s == "cor22") return verify_cor22(m, sop(), h);
  if (s == "prop23") return verify_prop23(m, ctx.sequence(false), h);
  if (s == "prop24") return verify_prop24(m, ctx.sequence(false), h);
  if (s == "cocm") return verify_cocm(m, ctx.sequence(false), h);
  if (s == "thm31") return verify_thm31(m, sop(), h);
  if (s == "cor32") return verify_cor32(m, h);
  return verify_lemma33_thm34(graded_dual(m), ctx.sequence(true), h);
}

std::string render(const CommandConfig& cfg, const Context& ctx, const Outcome& o) {
  if (cfg.format == Format::kJson) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = cfg.verb;
    doc["fixture"] = describe(ctx.module);
    doc["result"] = o.result;
    doc["flags"] = o.flags;
    return doc.dump(2) + "\n";
  }
  std::string out = o.text.str();
  for (const auto& f : o.flags) out += "flag: " + f + "\n";
  return out;
}

}  // namespace

CommandResult run(const CommandConfig& cfg) {
  CommandResult res;
  try {
    if (std::find(kVerbs.begin(), kVerbs.end(), cfg.verb) == kVerbs.end())
      throw InputError("unknown command '" + cfg.verb + "'");
    if (cfg.verb == "verify" && std::find(kStatements.begin(), kStatements.end(), cfg.statement) == kStatements.end())
      throw InputError("verify needs one of prop21 cor22 prop23 prop24 cocm thm31 cor32 thm34");
    if (cfg.levels && *cfg.levels < 1) throw InputError("--levels must be positive");
    if (cfg.streak && *cfg.streak < 1) throw InputError("--streak must be positive");
    if (cfg.trials && *cfg.trials < 1) throw InputError("--trials must be positive");

    Context ctx{cfg, load_module(cfg.module_path), {}, {}};
    if (cfg.levels) ctx.limits.levels = *cfg.levels;
    if (cfg.streak) ctx.limits.streak = *cfg.streak;
    if (cfg.seed) ctx.invariants.seed = *cfg.seed;
    if (cfg.trials) ctx.invariants.trials = *cfg.trials;

    if (cfg.verb == "verify") {
      const VerificationReport r = verify(ctx);
      res.output = emit_report({r}, cfg.format);
      res.exit_code = exit_code(r.verdict);
      return res;
    }
    Outcome o;
    try {
      compute(cfg.verb, ctx, o);
    } catch (const WindowOverflow& e) {
      o.flags.push_back(std::string("window overflow: ") + e.what());
    } catch (const SearchFailure& e) {
      o.flags.push_back(std::string("search failure: ") + e.what());
    }
    res.output = render(cfg, ctx, o);
    res.exit_code = o.flags.empty() ? 0 : 3;
  } catch (const InputError& e) {
    res.exit_code = 1;
    res.output = std::string("error: ") + e.what() + "\n";
  } catch (const DomainError& e) {
    res.exit_code = 1;
    res.output = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gradus: graded local (co)homology over F_p[x_1..x_n]"};
  CommandConfig cfg;
  std::string window;
  std::string format = "text";
  app.add_option("command", cfg.verb, "hilbert dim depth cm sop koszul lc lh ndim width cocm verify")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("statement", cfg.statement, "statement for verify")->check(CLI::IsMember(kStatements));
  app.add_option("--module", cfg.module_path, "module description file")->required();
  app.add_option("--ideal", cfg.ideal, "comma-separated ideal generators");
  app.add_option("--sop", cfg.sop, "comma-separated sequence or system of parameters");
  app.add_option("--levels", cfg.levels, "levels of the direct / inverse systems");
  app.add_option("--window", window, "degree window lo..hi");
  app.add_option("--streak", cfg.streak, "consecutive isomorphisms required for stability");
  app.add_option("--seed", cfg.seed, "seed for random linear forms");
  app.add_option("--trials", cfg.trials, "random trials in sequence searches");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.format = format == "json" ? Format::kJson : Format::kText;
  if (!window.empty()) {
    try {
      cfg.window = parse_window(window);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  const CommandResult res = run(cfg);
  if (res.exit_code == 1) {
    err << res.output;
    return 1;
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *cfg.out << "'\n";
      return 1;
    }
    file << res.output;
  } else {
    out << res.output;
  }
  return res.exit_code;
}

}  // namespace gradus::cli
