#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pogroup/figure.hpp"
#include "pogroup/report.hpp"
#include "pogroup/specfile.hpp"

using namespace pogroup;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorCode::Validation, "cannot open spec file '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_output(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(out, std::ios::trunc);
  if (!os) fail(ErrorCode::Validation, "cannot write '" + out + "'");
  os << content;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::UnresolvedRef: return kExitParse;
    case ErrorCode::ResourceLimit: return kExitResource;
    default: return kExitValidation;
  }
}

struct Common {
  std::string spec_path;
  std::string out;
  std::string cache_dir;
  std::vector<int> radii;
  std::vector<int> slacks;

  std::string text;
  SpecFile spec;
  std::string hash;

  void load() {
    text = read_file(spec_path);
    spec = parse_spec(text);
    hash = input_hash(text);
    if (cache_dir.empty()) {
      const char* env = std::getenv("POGROUP_CACHE_DIR");
      if (env) cache_dir = env;
    }
  }
  Schedule schedule(const std::vector<int>& def_r, const std::vector<int>& def_n) const {
    Schedule s;
    s.radii = radii.empty() ? def_r : radii;
    s.slacks = slacks.empty() ? def_n : slacks;
    return s;
  }
};

void add_common(CLI::App* cmd, Common& c, bool schedule_flags) {
  cmd->add_option("--spec", c.spec_path, "specification file")->required();
  cmd->add_option("--out", c.out, "output file (default: stdout)");
  cmd->add_option("--cache-dir", c.cache_dir, "ball cache directory (or POGROUP_CACHE_DIR)");
  if (schedule_flags) {
    cmd->add_option("--radius,--radii", c.radii, "ball radii of the schedule");
    cmd->add_option("--slack,--slacks", c.slacks, "path slacks of the schedule");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-invariant partial orders on finitely generated groups"};
  app.require_subcommand(1);

  Common c;
  std::string name_arg, g_arg, h_arg, format = "json";
  int bound = 2, budget = 20, radius = 4;
  bool classical = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a spec file");
  add_common(validate, c, false);

  CLI::App* cmd_census = app.add_subcommand("census", "full archimedean order census of a group");
  add_common(cmd_census, c, false);
  cmd_census->add_option("--group", name_arg, "group name")->required();
  cmd_census->add_option("--bound", bound, "enumeration bound (generators and exponents)");

  CLI::App* cmd_sigma = app.add_subcommand("sigma", "coarse-connectivity verdict for an order");
  add_common(cmd_sigma, c, true);
  cmd_sigma->add_option("--order", name_arg, "order name")->required();
  cmd_sigma->add_flag("--classical", classical,
                      "require a character order and run the classical half-space route");

  CLI::App* cmd_compare = app.add_subcommand("compare", "compare two elements under an order");
  add_common(cmd_compare, c, false);
  cmd_compare->add_option("--order", name_arg, "order name")->required();
  cmd_compare->add_option("--lhs", g_arg, "left element word")->required();
  cmd_compare->add_option("--rhs", h_arg, "right element word")->required();

  CLI::App* cmd_thma = app.add_subcommand("theorem-a", "kernel finite generation experiment");
  add_common(cmd_thma, c, true);
  cmd_thma->add_option("--hom", name_arg, "onto homomorphism name")->required();
  cmd_thma->add_option("--bound", bound, "census enumeration bound");
  cmd_thma->add_option("--budget", budget, "maximum census orders to test");

  CLI::App* cmd_figure = app.add_subcommand("figure", "Cayley ball colored by sign class");
  add_common(cmd_figure, c, false);
  cmd_figure->add_option("--order", name_arg, "order name")->required();
  cmd_figure->add_option("--radius", radius, "ball radius");
  cmd_figure->add_option("--format", format, "dot or svg")
      ->check(CLI::IsMember({"dot", "svg"}));

  CLI11_PARSE(app, argc, argv);

  try {
    c.load();

    if (validate->parsed()) {
      Json result;
      result["groups"] = c.spec.group_names;
      result["homs"] = c.spec.hom_names;
      result["subgroups"] = c.spec.subgroup_names;
      result["orders"] = c.spec.order_names;
      Json exps = Json::array();
      for (auto& e : c.spec.experiments) exps.push_back(e.name);
      result["experiments"] = exps;
      result["canonical"] = serialize_spec(c.spec);
      write_output(c.out, report_envelope("validate", c.hash, result, {}).dump(2) + "\n");
      return 0;
    }

    if (cmd_census->parsed()) {
      OrderCensus cns = census(c.spec.group(name_arg), {bound, bound});
      Json rep = report_envelope("census", c.hash, census_json(cns),
                                 {cns.completeness_note});
      write_output(c.out, rep.dump(2) + "\n");
      return 0;
    }

    if (cmd_sigma->parsed()) {
      SigmaOptions opt;
      opt.schedule = c.schedule({4, 6, 8}, {1, 2, 3});
      opt.cache_dir = c.cache_dir;
      const OrderRef& o = c.spec.order(name_arg);
      SigmaVerdict v;
      if (classical) {
        auto chi = order_as_character(*o);
        if (!chi || char_is_zero(*chi))
          fail(ErrorCode::Validation, "--classical needs a nonzero character-type order");
        v = classical_sigma_membership(*chi, opt);
      } else {
        v = sigma_membership(o, opt);
      }
      Json rep = report_envelope("sigma", c.hash, sigma_json(v), v.caveats);
      rep["inconclusive"] = (v.outcome == ConnStatus::Inconclusive);
      write_output(c.out, rep.dump(2) + "\n");
      return 0;
    }

    if (cmd_compare->parsed()) {
      const OrderRef& o = c.spec.order(name_arg);
      Element lhs = parse_word(o->group, g_arg);
      Element rhs = parse_word(o->group, h_arg);
      Comparison cmp = order_compare(o, lhs, rhs);
      Json rep = report_envelope("compare", c.hash, comparison_json(lhs, rhs, cmp), {});
      write_output(c.out, rep.dump(2) + "\n");
      return 0;
    }

    if (cmd_thma->parsed()) {
      TheoremAOptions opt;
      opt.schedule = c.schedule({4, 6, 8}, {1, 2, 3});
      opt.census_bounds = {bound, bound};
      opt.sample_budget = budget;
      opt.cache_dir = c.cache_dir;
      TheoremAReport rep = theorem_a_experiment(c.spec.hom(name_arg), opt);
      Json j = report_envelope("theorem-a", c.hash, theorem_a_json(rep), rep.caveats);
      j["inconclusive"] = (rep.inconclusive_count > 0);
      write_output(c.out, j.dump(2) + "\n");
      return 0;
    }

    if (cmd_figure->parsed()) {
      const OrderRef& o = c.spec.order(name_arg);
      CayleyBall ball =
          cayley_ball_cached(o->group, default_gens(o->group), radius, c.cache_dir);
      std::string content =
          format == "svg" ? figure_svg_grid(o, ball) : figure_dot(o, ball);
      write_output(c.out, content);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
