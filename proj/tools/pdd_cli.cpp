// Command-line front end. Exit status: 0 all checks pass, 1 a check failed,
// 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "pdd/pipeline.hpp"
#include "pdd/triple_file.hpp"

namespace {

using namespace pdd;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "md";
  bool timing = false;
  std::string out;
};

Bindings parse_params(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not of the form k=v");
    b[item.substr(0, eq)] = substitute_numeric(parse_scalar(item.substr(eq + 1), standard_aliases()), {});
  }
  return b;
}

void emit(const std::string& text, const OutputOptions& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::invalid_argument("cannot write " + o.out);
  f << text;
}

int finish(const std::vector<Report>& reports, const std::string& command, const OutputOptions& o) {
  if (o.format == "json") {
    nlohmann::ordered_json j = reports.size() == 1 ? reports.front().to_json(o.timing)
                                                   : combined_json(command, reports, o.timing);
    emit(j.dump(2) + "\n", o);
  } else {
    emit(combined_markdown(reports, o.timing), o);
  }
  for (const auto& r : reports)
    if (!r.ok()) return kExitFail;
  return 0;
}

std::vector<Report> verify_all(const RunOptions& opt) {
  const auto& ids = catalog_ids();
  std::vector<std::future<Report>> jobs;
  for (const auto& id : ids)
    jobs.push_back(std::async(std::launch::async, [&opt, id] { return verify_entry(catalog(id), opt); }));
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

LieAlgebra algebra_named(const std::string& name) {
  if (name == "P21") return poincare21();
  if (name == "EXT11") return extended11();
  if (name == "ADS") return lambda_family();
  if (name == "ISO31") return poincare31();
  throw std::invalid_argument("unknown algebra " + name + " (P21, EXT11, ADS, ISO31)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfel'd double workbench for the (2+1) Poincare and extended (1+1) Poincare algebras"};
  app.require_subcommand(1);

  OutputOptions out;
  RunOptions run;
  std::vector<std::string> params;
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", out.format, "md or json")->check(CLI::IsMember({"md", "json"}));
    c->add_option("--out", out.out, "write the report to a file");
    c->add_flag("--timing", out.timing, "include per-check timings (breaks byte-identical output)");
  };
  auto add_numeric = [&](CLI::App* c) {
    c->add_option("--params", params, "parameter bindings k=v")->delimiter(',');
    c->add_option("--seed", run.seed, "sampling seed");
    c->add_option("--samples", run.samples, "number of samples")->check(CLI::PositiveNumber);
    c->add_option("--tol", run.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  };

  auto* cat = app.add_subcommand("catalog", "list ids or show an entry");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog ids");
  auto* cat_show = cat->add_subcommand("show", "show one entry");
  std::string show_id;
  cat_show->add_option("id", show_id)->required();
  add_output(cat_show);

  auto* verify = app.add_subcommand("verify", "run the verification pipeline");
  std::string verify_id, verify_file;
  bool verify_every = false;
  verify->add_option("id", verify_id, "catalog id");
  verify->add_option("--file", verify_file, "triple file (JSON)");
  verify->add_flag("--all", verify_every, "every catalog entry");
  add_numeric(verify);
  add_output(verify);

  auto* contract = app.add_subcommand("contract", "vanishing cosmological constant limit");
  std::string contract_id;
  int rescale = 0;
  contract->add_option("id", contract_id)->required();
  contract->add_option("--rescale", rescale, "power of the contraction scale applied first");
  add_output(contract);

  auto* spacetime = app.add_subcommand("spacetime", "fit the projected Poisson brackets");
  std::string spacetime_id;
  spacetime->add_option("id", spacetime_id)->required();
  add_numeric(spacetime);
  add_output(spacetime);

  auto* cls = app.add_subcommand("classify", "witness-based class of a (2+1) entry");
  std::string cls_id;
  cls->add_option("id", cls_id)->required();
  add_output(cls);

  auto* sch = app.add_subcommand("schouten", "Schouten bracket and mCYBE verdict");
  std::string sch_id, sch_r, sch_alg = "P21";
  sch->add_option("id", sch_id, "catalog id (uses its printed r')");
  sch->add_option("--r", sch_r, "bivector literal");
  sch->add_option("--algebra", sch_alg, "P21, EXT11, ADS or ISO31");
  add_output(sch);

  auto* rep = app.add_subcommand("report", "verify every catalog entry into one document");
  add_numeric(rep);
  add_output(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    run.params = parse_params(params);
    if (cat_list->parsed()) {
      for (const auto& id : catalog_ids()) std::cout << id << "\n";
      return 0;
    }
    if (cat_show->parsed()) return finish({catalog_show(catalog(show_id))}, "catalog", out);
    if (verify->parsed()) {
      if (verify_every) return finish(verify_all(run), "verify", out);
      if (!verify_file.empty()) return finish({verify_entry(load_triple_file(verify_file), run)}, "verify", out);
      if (verify_id.empty()) throw std::invalid_argument("verify needs an id, --file or --all");
      return finish({verify_entry(catalog(verify_id), run)}, "verify", out);
    }
    if (contract->parsed()) return finish({contract_report(contract_id, rescale)}, "contract", out);
    if (spacetime->parsed()) return finish({spacetime_report(catalog(spacetime_id), run)}, "spacetime", out);
    if (cls->parsed()) return finish({classify_report(catalog(cls_id))}, "classify", out);
    if (sch->parsed()) {
      if (!sch_id.empty()) {
        const CatalogEntry& e = catalog(sch_id);
        return finish({schouten_report(e.kinematical, e.expected_r_bivector(), e.id)}, "schouten", out);
      }
      if (sch_r.empty()) throw std::invalid_argument("schouten needs an id or --r");
      LieAlgebra L = algebra_named(sch_alg);
      return finish({schouten_report(L, parse_bivector(sch_r, L.basis(), standard_aliases()), sch_r)}, "schouten",
                    out);
    }
    if (rep->parsed()) return finish(verify_all(run), "report", out);
  } catch (const UnknownId& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const TripleFileError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
