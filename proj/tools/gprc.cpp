#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "gprc/components.hpp"
#include "gprc/error.hpp"
#include "gprc/genperm.hpp"
#include "gprc/rauzy.hpp"
#include "gprc/spin.hpp"
#include "gprc/surface.hpp"
#include "gprc/verify.hpp"

using namespace gprc;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, MathError = 3 };

bool as_json = false;

void emit(const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

json profile_json(const SingularityProfile& prof) {
  json j;
  j["holonomy"] = prof.holonomy == Holonomy::Abelian ? "abelian" : "quadratic";
  j["degrees"] = prof.degrees;
  j["genus"] = prof.genus;
  j["left_degree"] = prof.left_degree;
  j["right_degree"] = prof.right_degree ? json(*prof.right_degree) : json(nullptr);
  j["marked_points"] = prof.marked_points;
  return j;
}

std::string profile_text(const SingularityProfile& prof) {
  std::string s = stratum_name(prof.holonomy, prof.degrees) + " genus " + std::to_string(prof.genus) + " left " +
                  std::to_string(prof.left_degree);
  if (prof.right_degree) s += " right " + std::to_string(*prof.right_degree);
  if (prof.marked_points) s += " marked " + std::to_string(prof.marked_points);
  return s;
}

int print_op(const OpResult& r) {
  if (!r) {
    std::cerr << "undefined: " << undefined_name(r.reason) << "\n";
    emit(json{{"defined", false}, {"reason", undefined_name(r.reason)}}, "undefined");
    return MathError;
  }
  emit(json{{"defined", true}, {"permutation", format(*r.perm)}}, format(*r.perm));
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized permutations, Rauzy classes and strata components"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "machine-readable output");

  std::string perm_text, other_text, spec_text, op_name, suite, out_path;
  bool extended = false, count_only = false, keep_labels = false;
  int jobs = 1;
  std::vector<int> victims;

  auto* c_stratum = app.add_subcommand("stratum", "singularity profile of a permutation");
  c_stratum->add_option("perm", perm_text)->required();

  auto* c_classify = app.add_subcommand("classify", "connected component of a permutation");
  c_classify->add_option("perm", perm_text)->required();

  auto* c_rep = app.add_subcommand("rep", "single-cylinder representative of a component");
  c_rep->add_option("component", spec_text, "e.g. H(4):odd or Q(9,-1):irr")->required();

  auto* c_class = app.add_subcommand("class", "enumerate a Rauzy class");
  c_class->add_option("perm", perm_text)->required();
  c_class->add_flag("--extended", extended);
  c_class->add_flag("--count-only", count_only, "do not keep the members in memory");
  c_class->add_option("--out", out_path, "write the class file");
  c_class->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* c_member = app.add_subcommand("member", "whether target lies in the class of seed");
  c_member->add_option("seed", perm_text)->required();
  c_member->add_option("target", other_text)->required();
  c_member->add_flag("--extended", extended);

  auto* c_spin = app.add_subcommand("spin", "spin parity of a true permutation");
  c_spin->add_option("perm", perm_text)->required();

  auto* c_contract = app.add_subcommand("contract", "erase symbols (contract saddle connections)");
  c_contract->add_option("perm", perm_text)->required();
  c_contract->add_option("symbols", victims)->required();
  c_contract->add_flag("--keep-labels", keep_labels, "keep the labels of the surviving symbols");

  auto* c_op = app.add_subcommand("op", "apply operation a, b or c");
  c_op->add_option("which", op_name)->required()->check(CLI::IsMember({"a", "b", "c"}));
  c_op->add_option("perm", perm_text)->required();

  auto* c_inverse = app.add_subcommand("inverse", "swap the two lines");
  c_inverse->add_option("perm", perm_text)->required();

  auto* c_verify = app.add_subcommand("verify", "run a golden-data suite");
  c_verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  c_verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }

  try {
    if (*c_stratum) {
      auto prof = stratum_of(parse(perm_text));
      emit(profile_json(prof), profile_text(prof));
    } else if (*c_classify) {
      auto id = classify(parse(perm_text));
      emit(json{{"stratum", id.stratum.name()}, {"label", label_name(id.label)}, {"component", format(id)}},
           format(id));
    } else if (*c_rep) {
      auto id = resolve(parse_component(spec_text));
      auto p = representative(id);
      emit(json{{"component", format(id)}, {"permutation", format(p)}}, format(p));
    } else if (*c_class) {
      EnumOptions opts;
      opts.jobs = jobs;
      opts.keep_members = !count_only || !out_path.empty();
      opts.use_cache = cache_dir().has_value();
      auto kind = extended ? ClassKind::Extended : ClassKind::Rauzy;
      auto h = enumerate_class(parse(perm_text), kind, opts);
      if (!out_path.empty()) write_class_file(h, out_path);
      emit(json{{"kind", kind_name(kind)}, {"seed", format(h.seed)}, {"cardinality", h.cardinality}},
           std::to_string(h.cardinality));
    } else if (*c_member) {
      bool in = contains(parse(perm_text), parse(other_text), extended ? ClassKind::Extended : ClassKind::Rauzy);
      emit(json{{"member", in}}, in ? "true" : "false");
    } else if (*c_spin) {
      int parity = spin_parity(parse(perm_text));
      emit(json{{"parity", parity}, {"spin", parity ? "odd" : "even"}}, parity ? "odd" : "even");
    } else if (*c_contract) {
      auto q = erase_symbols(parse_labeled(perm_text), victims, !keep_labels);
      emit(json{{"permutation", format(q)}}, format(q));
    } else if (*c_op) {
      auto p = parse(perm_text);
      if (op_name == "a") return print_op(op_a(p));
      if (op_name == "b") return print_op(op_b(p));
      auto q = op_c(p);
      emit(json{{"defined", true}, {"permutation", format(q)}}, format(q));
    } else if (*c_inverse) {
      auto q = inverse(parse(perm_text));
      emit(json{{"permutation", format(q)}}, format(q));
    } else if (*c_verify) {
      VerifyOptions opts;
      opts.jobs = jobs;
      auto rep = run_suite(suite, opts);
      if (as_json)
        std::cout << rep.json() << "\n";
      else
        std::cout << rep.table();
      return rep.passed() ? Ok : VerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "gprc: " << e.what() << "\n";
    return is_input_error(e.kind()) ? InputError : MathError;
  } catch (const std::exception& e) {
    std::cerr << "gprc: " << e.what() << "\n";
    return MathError;
  }
  return Ok;
}
