#include "mpres_tools/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mpres/barcode.hpp"
#include "mpres/error.hpp"
#include "mpres/families.hpp"
#include "mpres/filtration.hpp"
#include "mpres/homology.hpp"
#include "mpres/json_io.hpp"
#include "mpres/orbits.hpp"
#include "mpres/presentation.hpp"
#include "mpres/rank_invariant.hpp"

namespace mpres::tools {
namespace {

struct Options {
  std::string field = "Fp:2";
  bool pretty = false;
  unsigned threads = 1;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

PersistenceModule module_from_file(const std::string& path, int l, const Options& opt) {
  const auto X = parse_filtration(read_text(path));
  return build_persistence_module(X, l, Field::parse(opt.field), opt.threads);
}

void emit(std::ostream& out, const json& j, const Options& opt) {
  out << (opt.pretty ? j.dump(2) : j.dump()) << '\n';
}

std::string bar_text(const json& bar) {
  std::string death = bar["death"].is_null() ? "inf" : bar["death"].dump();
  return "[" + bar["birth"].dump() + ", " + death + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiparameter persistence: presentations, invariants and moduli"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options opt;
  app.add_option("--field", opt.field, "Fp:<p> or Q")->capture_default_str();
  app.add_flag("--pretty", opt.pretty, "Human-readable output");
  app.add_option("--threads", opt.threads, "Parallelism hint for grid stages")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string file;
  int l = 0;
  std::string at;
  auto add_filtration_args = [&](CLI::App* sub) {
    sub->add_option("file", file, "Filtration file ('-' for stdin)")->required();
    sub->add_option("-l,--degree", l, "Homological degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };

  auto* homology = app.add_subcommand("homology", "dim H_l(X_u) on the grid or at one degree");
  add_filtration_args(homology);
  homology->add_option("--at", at, "Grade u, e.g. \"(1 2)\"");

  auto* module = app.add_subcommand("module", "Persistence module H_l on the grid box");
  add_filtration_args(module);
  auto* present = app.add_subcommand("present", "Minimal presentation of H_l");
  add_filtration_args(present);
  std::size_t max_steps = 3;
  auto* resolve_cmd = app.add_subcommand("resolve", "Types of a minimal free resolution");
  add_filtration_args(resolve_cmd);
  resolve_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber)->capture_default_str();
  auto* barcode_cmd = app.add_subcommand("barcode", "Barcode of H_l (n = 1)");
  add_filtration_args(barcode_cmd);
  auto* rank_cmd = app.add_subcommand("rank", "Rank invariant of H_l");
  add_filtration_args(rank_cmd);

  auto* tensor = app.add_subcommand("tensor-check", "Tensor condition of presentation relations");
  tensor->add_option("file", file, "Presentation JSON")->required();
  auto* verify = app.add_subcommand("verify-family", "Check a relation or framed family");
  verify->add_option("file", file, "Family JSON")->required();
  auto* frame = app.add_subcommand("frame", "Frame a relation family or unframe a framed one");
  frame->add_option("file", file, "Family JSON")->required();

  std::uint32_t q = 2;
  std::string xi0_text;
  std::string xi1_text;
  auto* orbits = app.add_subcommand("orbits", "Orbits of GL on framed families over F_q");
  orbits->add_option("--q", q, "Prime field size")->required();
  orbits->add_option("--xi0", xi0_text, "Multiset, e.g. \"{(0 0):2}\"")->required();
  orbits->add_option("--xi1", xi1_text, "Multiset")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (homology->parsed()) {
      const auto X = parse_filtration(read_text(file));
      const Field field = Field::parse(opt.field);
      json j;
      if (!at.empty()) {
        const DegreeVec u = parse_degree(at);
        if (u.dim() != X.ambient_dim()) throw DimensionMismatch("--at has the wrong dimension");
        j = {{"l", l}, {"u", to_json(u)}, {"dim", homology_at(X, u, l, field).dim}};
        if (opt.pretty) {
          out << "H_" << l << " at " << u.to_string() << ": " << j["dim"].get<std::size_t>()
              << '\n';
          return kOk;
        }
      } else {
        const auto M = build_persistence_module(X, l, field, opt.threads);
        json table = json::array();
        for (std::size_t i = 0; i < M.grid().size(); ++i) {
          table.push_back({{"u", to_json(M.grid().point(i))}, {"dim", M.dim_at_index(i)}});
        }
        j = {{"l", l}, {"box", to_json(M.box())}, {"dims", table}};
        if (opt.pretty) {
          for (const auto& row : table) {
            out << DegreeVec(row["u"].get<std::vector<std::uint32_t>>()).to_string() << '\t'
                << row["dim"].get<std::size_t>() << '\n';
          }
          return kOk;
        }
      }
      emit(out, j, opt);
    } else if (module->parsed()) {
      emit(out, to_json(module_from_file(file, l, opt)), opt);
    } else if (present->parsed()) {
      emit(out, to_json(minimal_presentation(module_from_file(file, l, opt))), opt);
    } else if (resolve_cmd->parsed()) {
      json xs = json::array();
      for (const auto& xi : resolve(module_from_file(file, l, opt), max_steps)) {
        xs.push_back(to_json(xi));
      }
      emit(out, {{"resolution", xs}}, opt);
    } else if (barcode_cmd->parsed()) {
      const json j = to_json(barcode(module_from_file(file, l, opt)));
      if (opt.pretty) {
        for (const auto& bar : j["bars"]) out << bar_text(bar) << '\n';
        return kOk;
      }
      emit(out, j, opt);
    } else if (rank_cmd->parsed()) {
      emit(out, to_json(rank_invariant(module_from_file(file, l, opt))), opt);
    } else if (tensor->parsed()) {
      const Presentation p = presentation_from_json(read_json(file));
      const bool ok = tensor_condition(FreeGradedModule(p.field, p.xi0), p.relations);
      emit(out, {{"tensor_condition", ok}}, opt);
      return ok ? kOk : kVerificationFailed;
    } else if (verify->parsed()) {
      const auto family = family_from_json(read_json(file));
      const FamilyReport report = std::visit(
          [](const auto& f) {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, RelationFamily>) {
              return verify_relation_family(f);
            } else {
              return verify_framed_family(f);
            }
          },
          family);
      emit(out, to_json(report), opt);
      return report.ok ? kOk : kVerificationFailed;
    } else if (frame->parsed()) {
      const auto family = family_from_json(read_json(file));
      if (const auto* rel = std::get_if<RelationFamily>(&family)) {
        const FamilyReport report = verify_relation_family(*rel);
        if (!report.ok) {
          emit(out, to_json(report), opt);
          return kVerificationFailed;
        }
        emit(out, to_json(frame_family(*rel)), opt);
      } else {
        const auto& framed = std::get<FramedFamily>(family);
        const FamilyReport report = verify_framed_family(framed);
        if (!report.ok) {
          emit(out, to_json(report), opt);
          return kVerificationFailed;
        }
        emit(out, to_json(unframe_family(framed)), opt);
      }
    } else if (orbits->parsed()) {
      const Multiset xi0 = parse_multiset(xi0_text);
      const Multiset xi1 = parse_multiset(xi1_text, xi0.ambient_dim());
      const OrbitReport report = orbit_count(q, xi0, xi1);
      if (opt.pretty) {
        out << "q = " << report.q << "\npoints = " << report.total
            << "\norbits = " << report.orbit_count << "\ngroup order = " << report.group_order
            << '\n';
        if (report.distinct_line_orbits) {
          out << "distinct-line orbits = " << *report.distinct_line_orbits << '\n';
        }
        for (const auto& [size, count] : report.sizes) {
          out << "  size " << size << ": " << count << '\n';
        }
        return kOk;
      }
      emit(out, to_json(report), opt);
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace mpres::tools
