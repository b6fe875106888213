// hap - exact desk-scale computations in sequence spaces generated by
// adequate set families: norms, dual norms, extreme points, slice
// certificates and polyhedrality reports, all over a finite index window.
//
// Output is canonical JSON (sorted keys, rationals as "num/den" strings) so
// identical invocations are byte-identical. Exit codes: 0 success, 1 domain
// error (reported as an {"error": ...} object), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hap/errors.hpp"
#include "hap/json_io.hpp"

namespace {

using hap::json;

struct Options {
  std::string family;
  std::string family_file;
  int window = 0;
  std::string p = "1";
  std::string output = "json";
};

hap::Family load_family(const Options& opt) {
  if (!opt.family_file.empty()) {
    std::ifstream in(opt.family_file);
    if (!in) throw CLI::ValidationError("--family-file", "cannot open " + opt.family_file);
    json j = json::parse(in);
    return hap::family_from_json(j);
  }
  if (opt.family.empty())
    throw CLI::RequiredError("--family or --family-file");
  try {
    return hap::family_from_shorthand(opt.family);
  } catch (const hap::Error&) {
    throw CLI::ValidationError("--family", "unknown family: " + opt.family);
  }
}

// inline JSON when the text looks like JSON, otherwise a file path
json parse_json_arg(const std::string& text) {
  std::string trimmed = text;
  auto first = trimmed.find_first_not_of(" \t\n");
  if (first != std::string::npos && (trimmed[first] == '{' || trimmed[first] == '['))
    return json::parse(trimmed);
  std::ifstream in(text);
  if (!in) throw CLI::ValidationError("vector", "cannot open file " + text);
  return json::parse(in);
}

hap::RatVec load_vector(const std::string& text) {
  return hap::vector_from_json(parse_json_arg(text));
}

void emit(const Options& opt, const json& j) {
  if (opt.output == "text") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << hap::canonical_dump(j);
  }
}

hap::Window window_of(const Options& opt) {
  if (opt.window < 1) throw CLI::ValidationError("--window", "a window of at least 1 is required");
  return hap::Window(opt.window);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in adequate-family sequence spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_window) {
    cmd->add_option("--family", opt.family, "builtin family shorthand");
    cmd->add_option("--family-file", opt.family_file, "family description JSON file");
    if (needs_window) cmd->add_option("--window", opt.window, "index window 1..n");
    cmd->add_option("--output", opt.output, "json (canonical) or text (indented)");
    return cmd;
  };

  std::string vector_arg, functional_arg, set_arg, signs_arg, scope_arg = "window",
                          side_arg = "primal", width_arg;
  std::vector<std::string> probe_args;
  int index_arg = 0, prefix_arg = 0, margin_arg = 2;
  bool verify = false, diameter = false;

  auto* validate = add_common(app.add_subcommand("validate", "check the family axioms on a window"), true);

  auto* norm_cmd = add_common(app.add_subcommand("norm", "norm of a vector with achieving sets"), false);
  norm_cmd->add_option("--vector", vector_arg, "vector JSON or file")->required();
  norm_cmd->add_option("--p", opt.p, "norm exponent (rational, default 1)");

  auto* maximal = add_common(app.add_subcommand("maximal-sets", "maximal family members"), true);
  maximal->add_option("--scope", scope_arg, "window or global");

  auto* norming = add_common(app.add_subcommand("norming-sets", "minimal norming sets M(x)"), false);
  norming->add_option("--vector", vector_arg)->required();
  norming->add_option("--p", opt.p);
  norming->add_option("--prefix", prefix_arg, "emit length-n prefixes of M(x) instead");

  auto* dualnorm = add_common(app.add_subcommand("dual-norm", "dual norm with the covering cross-check"), false);
  dualnorm->add_option("--vector", vector_arg)->required();

  auto* extpoints = add_common(app.add_subcommand("ext-points", "signed indicators over maximal sets"), true);
  extpoints->add_option("--scope", scope_arg);

  auto* decompose = add_common(app.add_subcommand("decompose", "convex decomposition into extreme points"), false);
  decompose->add_option("--vector", vector_arg)->required();
  decompose->add_option("--margin", margin_arg, "extra indices beyond the support window");

  auto* expose = add_common(app.add_subcommand("expose", "exposing vector of an extreme point"), true);
  expose->add_option("--set", set_arg, "JSON array, e.g. [2,3]")->required();
  expose->add_option("--signs", signs_arg, "JSON array of +1/-1 (default all +1)");

  auto* certificate = add_common(app.add_subcommand("certificate", "construct a non-delta certificate"), true);
  certificate->add_option("--vector", vector_arg)->required();
  certificate->add_flag("--verify", verify, "re-verify through independent solves");

  auto* holder = add_common(app.add_subcommand("holder-certificate", "certificate for p > 1"), true);
  holder->add_option("--vector", vector_arg)->required();
  holder->add_option("--p", opt.p)->required();

  auto* slice_sup = add_common(app.add_subcommand("slice-sup", "sup distance over a slice"), true);
  slice_sup->add_option("--point", vector_arg)->required();
  slice_sup->add_option("--functional", functional_arg)->required();
  slice_sup->add_option("--width", width_arg)->required();
  slice_sup->add_option("--side", side_arg, "primal or dual");
  slice_sup->add_flag("--diameter", diameter, "report the slice diameter instead");

  auto* witness_delta = add_common(app.add_subcommand("witness-delta", "sign-flip witnesses in a dual slice"), true);
  witness_delta->add_option("--set", set_arg, "window trace of an infinite member")->required();
  witness_delta->add_option("--functional", functional_arg, "primal unit vector")->required();
  witness_delta->add_option("--width", width_arg)->required();

  auto* daugavet = add_common(app.add_subcommand("daugavet-bound", "exclusion bound 2 - lambda"), true);
  daugavet->add_option("--vector", vector_arg)->required();
  daugavet->add_flag("--verify", verify);

  auto* classify_cmd = add_common(app.add_subcommand("classify", "polyhedrality report"), false);
  classify_cmd->add_option("--window", opt.window, "probe window for the c0 check");

  auto* witness_iv = add_common(app.add_subcommand("witness-iv", "escaping maximal sets through an index"), true);
  witness_iv->add_option("--index", index_arg)->required();
  witness_iv->add_option("--probe", probe_args, "probe vector(s) for the pairing gaps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      emit(opt, hap::to_json(load_family(opt).validate(window_of(opt))));
    } else if (*norm_cmd) {
      auto result = hap::norm(load_vector(vector_arg), load_family(opt),
                              hap::PNorm(hap::parse_rational(opt.p)));
      emit(opt, hap::to_json(result));
    } else if (*maximal) {
      auto scope = scope_arg == "global" ? hap::Scope::global : hap::Scope::window;
      json arr = json::array();
      for (const auto& s : load_family(opt).maximal_sets(window_of(opt), scope))
        arr.push_back(hap::to_json(s));
      emit(opt, arr);
    } else if (*norming) {
      auto fam = load_family(opt);
      auto x = load_vector(vector_arg);
      hap::PNorm p(hap::parse_rational(opt.p));
      json arr = json::array();
      auto sets = prefix_arg > 0 ? hap::prefix_collection(x, fam, p, prefix_arg)
                                 : hap::norming_sets(x, fam, p);
      for (const auto& s : sets) arr.push_back(hap::to_json(s));
      emit(opt, arr);
    } else if (*dualnorm) {
      auto fam = load_family(opt);
      auto y = load_vector(vector_arg);
      json j;
      j["dual_norm"] = hap::rational_to_json(hap::dual_norm(y, fam));
      j["covering_norm"] = hap::rational_to_json(hap::covering_norm(y, fam));
      emit(opt, j);
    } else if (*extpoints) {
      auto scope = scope_arg == "global" ? hap::Scope::global : hap::Scope::window;
      json arr = json::array();
      for (const auto& f : hap::extreme_points(load_family(opt), window_of(opt), scope))
        arr.push_back(hap::to_json(f));
      emit(opt, arr);
    } else if (*decompose) {
      emit(opt, hap::to_json(hap::convex_decomposition(load_vector(vector_arg),
                                                       load_family(opt), margin_arg)));
    } else if (*expose) {
      auto fam = load_family(opt);
      hap::SignedIndicator f;
      f.set = hap::finite_set_from_json(parse_json_arg(set_arg));
      if (signs_arg.empty()) {
        f = hap::SignedIndicator::plus(f.set);
      } else {
        json merged;
        merged["set"] = hap::to_json(f.set);
        merged["signs"] = parse_json_arg(signs_arg);
        f = hap::signed_indicator_from_json(merged);
      }
      auto x = hap::exposing_vector(f, fam, window_of(opt));
      json j;
      j["vector"] = hap::to_json(x);
      j["exposed"] = hap::verify_exposed(f, x, fam, window_of(opt));
      emit(opt, j);
    } else if (*certificate) {
      auto fam = load_family(opt);
      auto cert = hap::non_delta_certificate(load_vector(vector_arg), fam, window_of(opt));
      json j = hap::to_json(cert);
      if (verify) {
        auto check = hap::verify_certificate(cert, fam, window_of(opt));
        j["verification"] = {{"ok", check.ok},
                             {"sup_distance", hap::rational_to_json(check.recomputed_sup)}};
      }
      emit(opt, j);
    } else if (*holder) {
      emit(opt, hap::to_json(hap::holder_certificate(
                    load_vector(vector_arg), load_family(opt), window_of(opt),
                    hap::PNorm(hap::parse_rational(opt.p)))));
    } else if (*slice_sup) {
      auto fam = load_family(opt);
      hap::Slice slice{load_vector(functional_arg), hap::parse_rational(width_arg),
                       side_arg == "dual" ? hap::Side::dual : hap::Side::primal};
      json j;
      if (diameter) {
        j["diameter"] = hap::rational_to_json(
            hap::slice_diameter(slice, fam, window_of(opt)));
      } else {
        j["sup_distance"] = hap::rational_to_json(hap::slice_sup_distance(
            load_vector(vector_arg), slice, fam, window_of(opt)));
      }
      emit(opt, j);
    } else if (*witness_delta) {
      hap::Slice slice{load_vector(functional_arg), hap::parse_rational(width_arg),
                       hap::Side::dual};
      emit(opt, hap::to_json(hap::delta_witness_sequence(
                    hap::finite_set_from_json(parse_json_arg(set_arg)),
                    load_family(opt), slice, window_of(opt))));
    } else if (*daugavet) {
      auto fam = load_family(opt);
      auto cert = hap::daugavet_exclusion(load_vector(vector_arg), fam, window_of(opt));
      json j = hap::to_json(cert);
      if (verify) {
        auto check = hap::verify_certificate(cert, fam, window_of(opt));
        j["verification"] = {{"ok", check.ok},
                             {"sup_distance", hap::rational_to_json(check.recomputed_sup)}};
      }
      emit(opt, j);
    } else if (*classify_cmd) {
      auto probe = opt.window >= 1 ? hap::Window(opt.window) : hap::Window(8);
      emit(opt, hap::to_json(hap::classify(load_family(opt), probe)));
    } else if (*witness_iv) {
      std::vector<hap::RatVec> probes;
      for (const auto& text : probe_args) probes.push_back(load_vector(text));
      emit(opt, hap::to_json(hap::iv_violation_witness(load_family(opt), index_arg,
                                                       window_of(opt), probes)));
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hap::Error& e) {
    json err;
    err["error"] = {{"kind", e.kind_name()}, {"message", e.what()}};
    std::cout << hap::canonical_dump(err);
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "invalid JSON input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
