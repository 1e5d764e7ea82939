#include "comb/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "comb/cartesian.hpp"
#include "comb/dsl/bundled.hpp"
#include "comb/dsl/elaborate.hpp"
#include "comb/dsl/parser.hpp"
#include "comb/dsl/printer.hpp"
#include "comb/laws.hpp"
#include "comb/serialize.hpp"

namespace comb::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return kSyntax;
    case ErrorKind::Type:
    case ErrorKind::BackendMismatch:
    case ErrorKind::Factorization:
    case ErrorKind::FamilyShape: return kType;
    case ErrorKind::Unsupported:
    case ErrorKind::ResourceLimit: return kUnsupported;
    case ErrorKind::Io:
    case ErrorKind::Usage: return kUsage;
  }
  return kUsage;
}

namespace {

struct Source {
  std::string name;  // stem, used to pick the default comb
  std::string file;
  std::string text;
};

Source load(const std::string& file) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(file)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!in) throw Error(ErrorKind::Io, "cannot read " + file);
    return {fs::path(file).stem().string(), file, ss.str()};
  }
  if (auto src = dsl::bundled_source(file)) return {file, file, std::string(*src)};
  throw Error(ErrorKind::Io, "no such file or bundled example: " + file);
}

std::string default_comb(const dsl::Elaboration& e, const Source& src) {
  if (e.combs.count(src.name)) return src.name;
  if (e.comb_order.empty()) throw Error(ErrorKind::Type, src.file + " declares no comb");
  return e.comb_order.back();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_csv(std::ostream& out, const StateFamily& sf) {
  out << "stage,wire,value\n";
  for (std::size_t n = 0; n < sf.values.size(); ++n) {
    const auto& v = sf.values[n];
    if (v.backend() == Backend::BigFn) {
      auto values = v.apply(std::vector<Integer>{});
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << n << "," << k << "," << to_string(values[k]) << "\n";
      }
    } else {
      auto labels = v.codomain().element_labels(v.apply(0));
      for (std::size_t k = 0; k < labels.size(); ++k) {
        out << n << "," << k << "," << labels[k] << "\n";
      }
    }
  }
}

Backend parse_backend(const std::string& name) {
  auto b = backend_from_name(name);
  if (!b) throw Error(ErrorKind::Usage, "unknown backend '" + name + "'");
  return *b;
}

std::uint64_t seed_override(std::uint64_t seed) {
  const char* env = std::getenv("COMB_SEED");
  if (!env || !*env) return seed;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, std::string("COMB_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, unfold, run and compare comb circuits.", "combs"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> comb_names;
  std::size_t depth = 0;
  std::string format = "json";

  auto* parse_cmd = app.add_subcommand("parse", "Parse a circuit and print it canonically");
  parse_cmd->add_option("file", file, "Circuit file or bundled example")->required();

  auto* unfold_cmd = app.add_subcommand("unfold", "Print the first pieces of a comb as JSON");
  auto* run_cmd = app.add_subcommand("run", "Print the state stream or behavior trace");
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the causal form (cartesian)");
  for (auto* cmd : {unfold_cmd, run_cmd, normalize_cmd}) {
    cmd->add_option("file", file, "Circuit file or bundled example")->required();
    cmd->add_option("--comb", comb_names, "Comb name (default: the file's namesake, else "
                                          "the last declared)")
        ->expected(1);
    cmd->add_option("--depth", depth, "Last stage index")->required();
  }
  run_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* eq_cmd = app.add_subcommand("eq", "Compare two combs up to a depth");
  eq_cmd->add_option("file", file, "Circuit file or bundled example")->required();
  eq_cmd->add_option("--comb", comb_names, "The two combs")->expected(2)->required();
  eq_cmd->add_option("--depth", depth, "Last stage index")->required();

  std::string backend_name_arg = "finfn";
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::size_t law_depth = 6;
  auto* laws_cmd = app.add_subcommand("laws", "Run the randomized law suites");
  laws_cmd->add_option("--backend", backend_name_arg, "finfn, bigfn or finstoch")
      ->check(CLI::IsMember({"finfn", "bigfn", "finstoch"}));
  laws_cmd->add_option("--seed", seed, "Random seed (COMB_SEED overrides)");
  laws_cmd->add_option("--cases", cases, "Cases per law");
  laws_cmd->add_option("--depth", law_depth, "Depth of behavior checks");

  std::string example;
  auto* examples_cmd = app.add_subcommand("examples", "Print a bundled circuit source");
  examples_cmd->add_option("name", example, "fibonacci or lotka")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "lotka"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (examples_cmd->parsed()) {
      out << *dsl::bundled_source(example);
      return kOk;
    }
    if (laws_cmd->parsed()) {
      laws::Config cfg;
      cfg.backend = parse_backend(backend_name_arg);
      cfg.seed = seed_override(seed);
      cfg.cases = cases;
      cfg.depth = law_depth;
      bool all = true;
      for (const auto& r : laws::run_all(cfg)) {
        all = all && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases - r.failures
            << "/" << r.cases << " cases)";
        if (!r.first_failure.empty()) out << ": " << r.first_failure;
        out << "\n";
      }
      out << "seed " << cfg.seed << "\n";
      return all ? kOk : kUnequal;
    }

    const auto src = load(file);
    const auto program = dsl::parse(src.text, src.file);
    if (parse_cmd->parsed()) {
      out << dsl::print(program);
      return kOk;
    }
    const auto elaboration = dsl::elaborate(program);
    auto pick = [&](std::size_t k) {
      return comb_names.size() > k ? comb_names[k] : default_comb(elaboration, src);
    };

    if (unfold_cmd->parsed()) {
      const auto name = pick(0);
      Json j;
      j["comb"] = name;
      j["depth"] = depth;
      j["unfolded"] = to_json(truncate(elaboration.comb(name), depth));
      emit(out, j);
      return kOk;
    }
    if (run_cmd->parsed()) {
      const auto& c = elaboration.comb(pick(0));
      if (c.inputs().is_unit()) {
        auto sf = extract_state_stream(c, depth);
        if (format == "csv") {
          if (!is_cartesian(c.backend())) {
            throw Error(ErrorKind::Unsupported,
                        "finstoch state streams are distributions; use --format json");
          }
          emit_csv(out, sf);
        } else {
          emit(out, to_json(sf));
        }
        return kOk;
      }
      if (format == "csv") {
        throw Error(ErrorKind::Unsupported,
                    "CSV covers state streams only; this comb has inputs " +
                        c.inputs().to_string());
      }
      emit(out, trace_json(behavior_up_to(c, depth)));
      return kOk;
    }
    if (normalize_cmd->parsed()) {
      const auto& c = elaboration.comb(pick(0));
      if (!is_cartesian(c.backend())) {
        throw Error(ErrorKind::Unsupported, "causal forms exist only for cartesian backends");
      }
      emit(out, to_json(causal_form(c).prefix(depth)));
      return kOk;
    }
    if (eq_cmd->parsed()) {
      const auto& a = elaboration.comb(comb_names.at(0));
      const auto& b = elaboration.comb(comb_names.at(1));
      for (std::size_t n = 0; n <= depth; ++n) {
        if (!(a.inputs()[n] == b.inputs()[n]) || !(a.outputs()[n] == b.outputs()[n])) {
          throw Error(ErrorKind::Type, "the combs have different boundaries at stage " +
                                           std::to_string(n) + ": " +
                                           a.inputs()[n].to_string() + " -> " +
                                           a.outputs()[n].to_string() + " vs " +
                                           b.inputs()[n].to_string() + " -> " +
                                           b.outputs()[n].to_string());
        }
      }
      std::optional<BehaviorDifference> diff;
      if (is_cartesian(a.backend())) {
        diff = compare(causal_form(a), causal_form(b), depth);
      } else {
        diff = compare(behavior_up_to(a, depth), behavior_up_to(b, depth));
      }
      if (!diff) {
        out << "equal up to depth " << depth << "\n";
        return kOk;
      }
      out << "unequal: first difference at stage " << diff->stage << ": " << diff->witness
          << "\n";
      return kUnequal;
    }
  } catch (const Error& e) {
    err << "combs: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "combs: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace comb::cli
