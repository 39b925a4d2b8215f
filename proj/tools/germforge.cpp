#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "germforge/cli.hpp"

namespace {

const std::map<std::string, std::string> kHelp{
    {"verify", "certify a truncation degree for an ideal of germs"},
    {"standard-basis", "reduced standard basis (jet ring) or Groebner basis (poly ring)"},
    {"division", "remainder and quotients of F by the remaining operands"},
    {"colon-ideal", "colon ideal I : m for a monomial m (first operand)"},
    {"mult-matrix", "multiplication matrix of a variable (first operand) on the quotient"},
    {"normal-set", "monomial basis of the quotient ring"},
    {"intrinsic", "intrinsic part and complement of an ideal"},
    {"alg-objects", "P, RT, T, E/T, S, S_perp and the corners of a singular germ"},
    {"normal-form", "normal form of a singular germ"},
    {"universal-unfolding", "universal unfolding and codimension of a singular germ"},
    {"recognition", "recognition conditions of a normal form, optionally checked on a germ"},
    {"transformation", "contact transformation (X, S) with J^k(f - S g(X, lambda)) = 0"},
    {"transition-set", "bifurcation, hysteresis and double limit point sets of an unfolding"},
    {"persistent-diagrams", "regions of the parameter space and their bifurcation diagrams"},
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germforge: local bifurcation analysis of germs g(x, lambda)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "germforge 1.0");

  germforge::CommandRequest req;
  std::string vars = "x,lambda", params;
  unsigned degree = 0;

  for (const auto& name : germforge::command_names()) {
    auto* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("operands", req.args, "germs, generators or monomials")->required();
    sub->add_option("--degree,-d", degree, "jet degree (germ commands: starting degree of the certification)");
    sub->add_option("--ring", req.ring, "jet or poly")->check(CLI::IsMember({"jet", "poly"}));
    sub->add_option("--order", req.order, "alex, lex or degrevlex")->check(CLI::IsMember({"alex", "lex", "degrevlex"}));
    sub->add_option("--vars", vars, "comma separated variable names");
    sub->add_option("--params", params, "comma separated unfolding parameter names");
    sub->add_flag("--json", req.json, "machine readable output");
    sub->add_flag("--normalize", req.normalize, "scale normal form corners to +-1");
    sub->add_flag("--short-list", req.short_list, "one diagram per distinct signature");
    sub->add_option("--box", req.box, "parameter box [-b, b]^k");
    sub->add_option("--grid", req.grid, "region grid cells per axis");
    sub->add_option("--svg", req.svg, "SVG output file (prefix for several plots)");
    sub->callback([&req, name] { req.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : germforge::kExitParse;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->count("--degree")) req.degree = degree;
  req.vars = split(vars);
  req.params = split(params);

  auto res = germforge::run_command(req);
  std::cout << res.out;
  std::cerr << res.err;
  for (const auto& [path, contents] : res.files) {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return germforge::kExitParse;
    }
    f << contents;
  }
  return res.code;
}
