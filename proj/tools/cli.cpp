#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dessins/classify.hpp"
#include "dessins/dessin.hpp"
#include "dessins/io.hpp"
#include "dessins/numth.hpp"
#include "dessins/ops.hpp"
#include "dessins/verify.hpp"

namespace dessins::cli {

namespace {

using nlohmann::json;

void emit_rows(std::ostream& out, const std::vector<io::ClassRow>& rows, const std::string& format,
               const std::vector<const Dessin*>& dessins, const std::vector<const DessinInvariants*>& invs) {
  if (format == "table") {
    io::emit_table(out, rows);
  } else if (format == "csv") {
    io::emit_csv(out, rows);
  } else if (format == "json") {
    json arr = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      json item;
      item["id"] = rows[i].id;
      item["dessin"] = json::parse(io::dessin_to_json(*dessins[i]));
      item["invariants"] = json::parse(io::invariants_to_json(*invs[i]));
      arr.push_back(std::move(item));
    }
    out << arr.dump() << "\n";
  } else {
    throw CLI::ValidationError("--format", "unsupported format '" + format + "'");
  }
}

void emit_class_list(std::ostream& out, const std::vector<Dessin>& dessins, const std::string& prefix,
                     const std::string& format, bool symmetric_only, int max_order) {
  std::vector<io::ClassRow> rows;
  std::vector<DessinInvariants> invs;
  std::vector<const Dessin*> dptr;
  std::vector<const DessinInvariants*> iptr;
  int id = 0;
  for (const Dessin& d : dessins) {
    DessinInvariants inv = invariants(d, max_order);
    if (symmetric_only && !inv.symmetric) continue;
    invs.push_back(std::move(inv));
    dptr.push_back(&d);
  }
  for (size_t i = 0; i < invs.size(); ++i) {
    rows.push_back(io::make_row(prefix + std::to_string(++id), *dptr[i], invs[i]));
    iptr.push_back(&invs[i]);
  }
  emit_rows(out, rows, format, dptr, iptr);
}

int run_verify(std::ostream& out, const verify::Report& report) {
  json failed = json::array();
  for (const auto& r : report) {
    out << (r.ok ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (!r.ok) failed.push_back(json{{"name", r.name}, {"detail", r.detail}});
  }
  if (!failed.empty()) {
    out << json{{"failed", failed}}.dump() << "\n";
    return 1;
  }
  out << "all " << report.size() << " checks passed\n";
  return 0;
}

Triality parse_triality(const std::string& name) {
  static const std::map<std::string, Triality> kNames = {
      {"id", Triality::identity}, {"bw", Triality::swap_bw},   {"bf", Triality::swap_bf},
      {"wf", Triality::swap_wf},  {"bwf", Triality::cycle_bwf}, {"bfw", Triality::cycle_bfw}};
  auto it = kNames.find(name);
  if (it == kNames.end())
    throw CLI::ValidationError("--perm", "expected one of id, bw, bf, wf, bwf, bfw");
  return it->second;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regular dessins d'enfants as algebraic triples (G, x, y)"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "closed-form classification of abelian dessins");
  classify->require_subcommand(1);
  long long cyc_m = 6;
  std::string cyc_format = "table";
  auto* ccyc = classify->add_subcommand("cyclic", "all dessins on the cyclic group of order m");
  ccyc->add_option("--m", cyc_m, "group order")->required();
  ccyc->add_option("--format", cyc_format, "table|csv|json");
  long long ab_n = 1, ab_m = 1;
  bool ab_symmetric_only = false;
  std::string ab_format = "table";
  auto* cab = classify->add_subcommand("abelian", "all dessins on Z_n (+) Z_m, n | m");
  cab->add_option("--n", ab_n, "first invariant factor")->required();
  cab->add_option("--m", ab_m, "second invariant factor")->required();
  cab->add_flag("--symmetric-only", ab_symmetric_only, "only symmetric classes");
  cab->add_option("--format", ab_format, "table|csv|json");

  // enumerate
  std::string enum_group, enum_format = "table";
  auto* enumerate = app.add_subcommand("enumerate", "brute-force classification for one group");
  enumerate->add_option("--group", enum_group, "group spec, e.g. q8 or metacyclic:8,8,5")->required();
  enumerate->add_option("--format", enum_format, "table|csv|json");

  // invariants
  std::string inv_file, inv_format = "json";
  auto* invar = app.add_subcommand("invariants", "invariants of a dessin from a JSON file");
  invar->add_option("--dessin", inv_file, "dessin JSON file")->required();
  invar->add_option("--format", inv_format, "json|table|dot");

  // op
  auto* op = app.add_subcommand("op", "apply a dessin operation");
  op->require_subcommand(1);
  std::string op_file, op_left, op_right, op_perm = "id";
  long long op_i = 1, op_j = 1;
  auto* op_dual = op->add_subcommand("dual", "swap the vertex colours");
  op_dual->add_option("--dessin", op_file, "dessin JSON file")->required();
  auto* op_tri = op->add_subcommand("triality", "permute the roles (black, white, face)");
  op_tri->add_option("--dessin", op_file, "dessin JSON file")->required();
  op_tri->add_option("--perm", op_perm, "id|bw|bf|wf|bwf|bfw")->required();
  auto* op_wil = op->add_subcommand("wilson", "generalized Wilson operation H_{i,j}");
  op_wil->add_option("--dessin", op_file, "dessin JSON file")->required();
  op_wil->add_option("--i", op_i, "exponent for x")->required();
  op_wil->add_option("--j", op_j, "exponent for y")->required();
  auto* op_join = op->add_subcommand("join", "parallel product of two dessins");
  op_join->add_option("--left", op_left, "dessin JSON file")->required();
  op_join->add_option("--right", op_right, "dessin JSON file")->required();
  auto* op_shadow = op->add_subcommand("shadow", "quotient by the core");
  op_shadow->add_option("--dessin", op_file, "dessin JSON file")->required();
  auto* op_dec = op->add_subcommand("decompose", "Sylow decomposition of a nilpotent dessin");
  op_dec->add_option("--dessin", op_file, "dessin JSON file")->required();
  auto* op_ext = op->add_subcommand("extend", "extended automorphism group of a symmetric dessin");
  op_ext->add_option("--dessin", op_file, "dessin JSON file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-derive known classification identities and report");
  verify_cmd->require_subcommand(1);
  verify_cmd->add_subcommand("c6", "the twelve dessins on C_6 and their orbits");
  verify_cmd->add_subcommand("alt4", "generating pairs and classes of Alt(4)");
  verify_cmd->add_subcommand("q8", "the unique quaternion dessin");
  verify_cmd->add_subcommand("meta64", "the metacyclic group of order 64");
  long long heis_p = 3;
  verify_cmd->add_subcommand("heisenberg", "the order-p^3 exponent-p group")
      ->add_option("--p", heis_p, "odd prime");
  verify_cmd->add_subcommand("join144", "the order-144 join of the Alt(4) classes");
  std::string dec_group;
  verify_cmd->add_subcommand("decomposition", "Sylow decomposition round-trip on one group")
      ->add_option("--group", dec_group, "group spec")
      ->required();
  long long anum_max = 12;
  verify_cmd->add_subcommand("anumber", "abelian counting sweep up to m")
      ->add_option("--max", anum_max, "largest m")
      ->required();

  // census
  int census_max = 64;
  std::string census_constructors_arg;
  auto* census = app.add_subcommand("census", "classify every constructor group up to a bound");
  census->add_option("--max-order", census_max, "largest group order");
  census->add_option("--constructors", census_constructors_arg,
                     "semicolon-separated group specs (default: built-in census)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ccyc->parsed()) {
      std::vector<Dessin> reps;
      for (const CyclicParams& p : cyclic_classes(cyc_m)) reps.push_back(cyclic_dessin(p));
      emit_class_list(out, reps, "C", cyc_format, false, std::max<int>(kDefaultMaxOrder, cyc_m));
      return 0;
    }
    if (cab->parsed()) {
      auto list = classify_abelian(ab_n, ab_m);
      std::vector<Dessin> reps;
      for (const auto& entry : list.classes) reps.push_back(entry.representative);
      emit_class_list(out, reps, "A", ab_format, ab_symmetric_only,
                      std::max<long long>(kDefaultMaxOrder, ab_n * ab_m));
      return 0;
    }
    if (enumerate->parsed()) {
      GroupPtr g = build_group(enum_group);
      auto cls = classify_dessins(g);
      long long aut = cls.representatives.empty()
                          ? 0
                          : cls.pair_count / static_cast<long long>(cls.representatives.size());
      out << "group: " << enum_group << " (order " << g->order() << ")\n";
      out << "generating pairs: " << cls.pair_count << "\n";
      out << "automorphisms: " << aut << "\n";
      out << "classes: " << cls.representatives.size() << "\n";
      emit_class_list(out, cls.representatives, "E", enum_format, false, kDefaultMaxOrder);
      return 0;
    }
    if (invar->parsed()) {
      Dessin d = io::dessin_from_file(inv_file);
      int bound = std::max(kDefaultMaxOrder, d.group->order());
      if (inv_format == "json") {
        out << io::invariants_to_json(invariants(d, bound)) << "\n";
      } else if (inv_format == "table") {
        auto inv = invariants(d, bound);
        io::emit_table(out, {io::make_row("D1", d, inv)});
      } else if (inv_format == "dot") {
        out << graph_to_dot(underlying_graph(d));
      } else {
        throw CLI::ValidationError("--format", "unsupported format '" + inv_format + "'");
      }
      return 0;
    }
    if (op->parsed()) {
      if (op_join->parsed()) {
        Dessin j = join(io::dessin_from_file(op_left), io::dessin_from_file(op_right));
        out << io::dessin_to_json(j) << "\n";
        return 0;
      }
      Dessin d = io::dessin_from_file(op_file);
      if (op_dual->parsed()) {
        out << io::dessin_to_json(dual(d)) << "\n";
      } else if (op_tri->parsed()) {
        out << io::dessin_to_json(triality(d, parse_triality(op_perm))) << "\n";
      } else if (op_wil->parsed()) {
        out << io::dessin_to_json(wilson(d, {op_i, op_j})) << "\n";
      } else if (op_shadow->parsed()) {
        out << io::dessin_to_json(shadow(d)) << "\n";
      } else if (op_dec->parsed()) {
        json arr = json::array();
        for (const Dessin& part : sylow_decompose(d))
          arr.push_back(json::parse(io::dessin_to_json(part)));
        out << arr.dump() << "\n";
      } else if (op_ext->parsed()) {
        GroupPtr ext = extended_group(d, std::max(kDefaultMaxOrder, d.group->order()));
        out << io::group_to_json(*ext) << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const std::string verb = verify_cmd->get_subcommands().at(0)->get_name();
      verify::Report report;
      if (verb == "c6") report = verify::verify_c6();
      else if (verb == "alt4") report = verify::verify_alt4();
      else if (verb == "q8") report = verify::verify_q8();
      else if (verb == "meta64") report = verify::verify_meta64();
      else if (verb == "heisenberg") report = verify::verify_heisenberg(static_cast<int>(heis_p));
      else if (verb == "join144") report = verify::verify_join144();
      else if (verb == "decomposition") report = verify::verify_decomposition(GroupSpec::parse(dec_group));
      else if (verb == "anumber") report = verify::verify_anumber(static_cast<int>(anum_max));
      return run_verify(out, report);
    }
    if (census->parsed()) {
      std::vector<GroupSpec> specs;
      if (census_constructors_arg.empty()) {
        specs = verify::census_constructors(census_max);
      } else {
        std::stringstream ss(census_constructors_arg);
        std::string tok;
        while (std::getline(ss, tok, ';'))
          if (!tok.empty()) specs.push_back(GroupSpec::parse(tok));
      }
      out << "group | order | pairs | aut | classes | symmetric | class\n";
      for (const GroupSpec& spec : specs) {
        GroupPtr g = build_group(spec);
        if (g->order() > census_max) continue;
        auto cls = classify_dessins(g, std::max(kDefaultMaxOrder, g->order()));
        long long aut = cls.representatives.empty()
                            ? 0
                            : cls.pair_count / static_cast<long long>(cls.representatives.size());
        long long sym = 0;
        for (const Dessin& d : cls.representatives) sym += is_symmetric(d);
        auto nc = nilpotency_class(*g);
        out << spec.str() << " | " << g->order() << " | " << cls.pair_count << " | " << aut << " | "
            << cls.representatives.size() << " | " << sym << " | "
            << (nc ? std::to_string(*nc) : std::string("-")) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand handled\n";
  return 2;
}

}  // namespace dessins::cli
