#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "cqsres/braid.hpp"
#include "cqsres/components.hpp"
#include "cqsres/errors.hpp"
#include "cqsres/render.hpp"
#include "cqsres/sweep.hpp"

namespace {

using namespace cqsres;

constexpr const char* kGrammar =
    "grammar:\n"
    "  fraction:   DELTA/OMEGA               e.g. 19/7\n"
    "  hj string:  [e1,e2,...]               e.g. [3,4,2]\n"
    "  chain:      node (-(INT)- node)*      node := [N|A] | *\n"
    "              e.g. [2|1]-(1)-[3|1] or *-(3)-[2|1]-(2)-*\n"
    "  braid word: (R|L)INDEX,...            e.g. R2,R1,R2\n";

struct Output {
  std::string path;  // empty = stdout
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    if (!os) throw Error("cannot open output file " + path);
    os << text;
  }
};

ZeroFraction zero_fraction_of(const Fraction& f, const std::string& k_text) {
  HJString k = parse_hj(k_text);
  HJString b = hj_dual(f);
  if (is_du_val(f)) {
    if (k != HJString{0})
      throw Error("the Du Val fraction " + format_fraction(f) +
                  " has the single conventional zero fraction [0]");
    return ZeroFraction{k, b};
  }
  if (k.size() != b.size())
    throw Error("zero fraction has length " + std::to_string(k.size()) +
                ", the dual expansion has length " + std::to_string(b.size()));
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < 1 || k[i] > b[i])
      throw Error("zero fraction entry " + std::to_string(i + 1) +
                  " is outside [1, " + b[i].str() + "]");
  if (!is_zero_fraction(k))
    throw Error(format_hj(k) + " is not a zero continued fraction");
  return ZeroFraction{k, b};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of cyclic quotient surface singularities:\n"
               "deformation components, M- and N-resolutions, antiflips, quivers."};
  app.require_subcommand(1);
  app.fallthrough();  // let --color / --out appear after the subcommand too

  std::string color_mode = "auto";
  app.add_option("--color", color_mode, "ANSI color: auto, always, never")
      ->check(CLI::IsMember({"auto", "always", "never"}))
      ->capture_default_str();

  Output out;
  app.add_option("--out", out.path, "write the report to a file instead of stdout");

  std::string arg_fraction, arg_zero, arg_chain, arg_target, arg_word, arg_hj;
  std::int64_t arg_a = 0, arg_b = 0, arg_c = 0, arg_p = 0, arg_q = 0, arg_n = 0;
  std::size_t arg_m = 0;
  std::string format = "text";

  auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };

  auto* c_expand = app.add_subcommand("expand", "continued fraction of delta/omega");
  c_expand->add_option("fraction", arg_fraction)->required();

  auto* c_dual = app.add_subcommand("dual", "continued fraction of delta/(delta-omega)");
  c_dual->add_option("fraction", arg_fraction)->required();

  auto* c_blowdown = app.add_subcommand("blowdown", "contract all 1s in a string");
  c_blowdown->add_option("string", arg_hj)->required();

  auto* c_zf = app.add_subcommand("zero-fractions",
                                  "zero continued fractions indexing the components");
  c_zf->add_option("fraction", arg_fraction)->required();

  auto* c_delta = app.add_subcommand("delta", "delta vector of one component");
  c_delta->add_option("fraction", arg_fraction)->required();
  c_delta->add_option("--zero", arg_zero, "zero fraction, e.g. [2,2,1,5,1,2]")->required();

  auto* c_mres = app.add_subcommand("mres", "M-resolution of one component");
  c_mres->add_option("fraction", arg_fraction)->required();
  c_mres->add_option("--zero", arg_zero)->required();

  auto* c_nres = app.add_subcommand("nres", "N-resolution of one component");
  c_nres->add_option("fraction", arg_fraction)->required();
  c_nres->add_option("--zero", arg_zero)->required();

  auto* c_comp = app.add_subcommand("components", "full report on all components");
  c_comp->add_option("fraction", arg_fraction)->required();
  add_format(c_comp, {"text", "json"});

  auto* c_quiver = app.add_subcommand("quiver", "quiver of one component");
  c_quiver->add_option("fraction", arg_fraction)->required();
  c_quiver->add_option("--zero", arg_zero)->required();
  add_format(c_quiver, {"text", "json", "dot"});

  auto* c_flip = app.add_subcommand("antiflip", "apply a braid word to a chain");
  c_flip->add_option("--chain", arg_chain)->required();
  c_flip->add_option("--target", arg_target, "fraction the chain contracts to")->required();
  c_flip->add_option("--word", arg_word, "e.g. R2,R1,R2")->required();

  auto* c_sched = app.add_subcommand("schedule", "antiflip word from M- to N-resolution");
  c_sched->add_option("curves", arg_m, "number of curves")->required();

  auto* c_qabc = app.add_subcommand("qabc", "extremal chain witness for (a, b, c)");
  c_qabc->add_option("a", arg_a)->required();
  c_qabc->add_option("b", arg_b)->required();
  c_qabc->add_option("c", arg_c)->required();

  auto* c_dolg = app.add_subcommand("dolgachev", "Dolgachev family for (p, q)");
  c_dolg->add_option("p", arg_p)->required();
  c_dolg->add_option("q", arg_q)->required();
  add_format(c_dolg, {"text", "json"});

  auto* c_sweep = app.add_subcommand("sweep", "validate all fractions up to a bound");
  c_sweep->add_option("delta_max", arg_n)->required();
  std::uint64_t seed = SweepOptions{}.seed;
  unsigned jobs = 0;
  std::size_t braid_samples = 100;
  bool no_oracle = false;
  c_sweep->add_option("--seed", seed)->capture_default_str();
  c_sweep->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  c_sweep->add_option("--braid-samples", braid_samples)->capture_default_str();
  c_sweep->add_flag("--no-oracle", no_oracle, "skip the blow-up cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  }

  bool color = use_color(color_mode == "always"  ? Color::Always
                         : color_mode == "never" ? Color::Never
                                                 : Color::Auto);

  try {
    if (*c_expand) {
      out.emit(format_hj(hj_expand(parse_fraction(arg_fraction))) + "\n");
    } else if (*c_dual) {
      out.emit(format_hj(hj_dual(parse_fraction(arg_fraction))) + "\n");
    } else if (*c_blowdown) {
      out.emit(format_hj(blow_down(parse_hj(arg_hj))) + "\n");
    } else if (*c_zf) {
      Fraction f = parse_fraction(arg_fraction);
      std::string text;
      for (const ZeroFraction& z : enumerate_zero_fractions(f))
        text += format_hj(z.k) + "\n";
      out.emit(text);
    } else if (*c_delta) {
      Fraction f = parse_fraction(arg_fraction);
      DeltaVector dv = delta_vector(zero_fraction_of(f, arg_zero));
      std::string text = "(";
      for (std::size_t i = 0; i < dv.delta.size(); ++i) {
        if (i) text += ", ";
        text += dv.delta[i].str();
      }
      out.emit(text + ")\n");
    } else if (*c_mres) {
      Fraction f = parse_fraction(arg_fraction);
      out.emit(print_chain(m_resolution(f, zero_fraction_of(f, arg_zero))) + "\n");
    } else if (*c_nres) {
      Fraction f = parse_fraction(arg_fraction);
      out.emit(print_chain(n_resolution(f, zero_fraction_of(f, arg_zero))) + "\n");
    } else if (*c_comp) {
      Fraction f = parse_fraction(arg_fraction);
      std::vector<ComponentReport> reps = components(f);
      out.emit(format == "json" ? components_to_json(f, reps)
                                : format_components_text(f, reps, color));
    } else if (*c_quiver) {
      Fraction f = parse_fraction(arg_fraction);
      Quiver q = build_quiver(n_resolution(f, zero_fraction_of(f, arg_zero)));
      out.emit(format == "json"  ? quiver_to_json(q)
               : format == "dot" ? quiver_to_dot(q)
                                 : format_quiver_text(q));
    } else if (*c_flip) {
      ChainParts parts = parse_chain(arg_chain);
      Fraction target = parse_fraction(arg_target);
      WahlResolution w = make_resolution(target, parts.sings, parts.curves);
      out.emit(print_chain(apply_word(w, parse_braid_word(arg_word))) + "\n");
    } else if (*c_sched) {
      out.emit(format_braid_word(mn_schedule(arg_m)) + "\n");
    } else if (*c_qabc) {
      auto wit = check_Q_abc(arg_a, arg_b, arg_c);
      if (!wit) {
        out.emit("none\n");
      } else if (wit->degenerate) {
        out.emit("realizable (degenerate): rank-0 vertex, no chain\n");
      } else {
        out.emit("realizable: " + print_chain(*wit->chain) + " contracting to " +
                 format_fraction(wit->chain->target) + " (lambda=" + wit->lambda.str() +
                 ", eps_a=" + wit->eps_a.str() + ", eps_b=" + wit->eps_b.str() + ")\n");
      }
    } else if (*c_dolg) {
      DolgachevReport rep = dolgachev(arg_p, arg_q);
      out.emit(format == "json" ? dolgachev_to_json(rep)
                                : format_dolgachev_text(rep, color));
    } else if (*c_sweep) {
      SweepOptions opts;
      opts.delta_max = arg_n;
      opts.seed = seed;
      opts.jobs = jobs;
      opts.braid_samples = braid_samples;
      opts.check_oracle = !no_oracle;
      SweepSummary summary = run_sweep(opts);
      out.emit(format_sweep_summary(summary));
      if (!summary.failures.empty()) return 1;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
