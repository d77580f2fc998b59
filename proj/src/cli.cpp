#include "drasp4/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "drasp4/parser.hpp"
#include "drasp4/projector.hpp"
#include "drasp4/render.hpp"
#include "drasp4/verify.hpp"

namespace drasp4 {

namespace {

RatFunc scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return RatFunc(j.get<long>());
  if (j.is_string()) return eval_scalar(*parse(j.get<std::string>()));
  throw EvalError("ansatz entries must be integers or scalar expression strings");
}

void print(std::ostream& out, const std::string& s) {
  out << s;
  if (s.empty() || s.back() != '\n') out << '\n';
}

}  // namespace

AffineSigmaData parse_ansatz(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw EvalError(std::string("ansatz is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shift") || !j.contains("c") || !j.contains("g"))
    throw EvalError("ansatz must be an object with keys shift, c, g");
  AffineSigmaData d;
  try {
    for (const auto& s : j.at("shift")) d.shift.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
    for (const auto& c : j.at("c")) d.c.push_back(scalar_from_json(c));
    for (const auto& row : j.at("g")) {
      std::vector<RatFunc> r;
      for (const auto& x : row) r.push_back(scalar_from_json(x));
      d.g.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw EvalError(std::string("malformed ansatz: ") + e.what());
  }
  return d;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the differential reduction algebra of sp(4)", "drasp4"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  std::string mode = "dra";
  std::string expr_a;
  std::string expr_b;
  int sigma_index = 1;
  std::string suite = "all";
  bool json_flag = false;
  int maxdeg = 3;
  std::string ansatz_file;

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("--mode", mode, "ambient or dra")->check(CLI::IsMember({"ambient", "dra"}))->capture_default_str();
  nf->add_option("expr", expr_a)->required();

  auto* dia = app.add_subcommand("diamond", "Diamond product of two reduction-algebra elements");
  dia->add_option("lhs", expr_a)->required();
  dia->add_option("rhs", expr_b)->required();

  auto* proj = app.add_subcommand("project", "Apply the extremal projector to an ambient element (output mod I)");
  proj->add_option("expr", expr_a)->required();

  auto* theta = app.add_subcommand("theta", "Anti-involution of the reduction algebra");
  theta->add_option("expr", expr_a)->required();

  auto* sig = app.add_subcommand("sigma", "sigma_i of a base-ring element in t1, t2, Ha, Hb");
  sig->add_option("i", sigma_index)->required()->check(CLI::IsMember({1, 2}));
  sig->add_option("expr", expr_a)->required();

  auto* lim = app.add_subcommand("limit", "Limit of a dynamical scalar as H tends to infinity");
  lim->add_option("expr", expr_a)->required();

  auto* ver = app.add_subcommand("verify", "Run identity suites");
  std::vector<std::string> accepted = suite_names();
  accepted.emplace_back("all");
  ver->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(accepted))->capture_default_str();
  ver->add_flag("--json", json_flag, "Same as --format json");

  auto* gwa = app.add_subcommand("gwa-check", "Check the generalized Weyl algebra isomorphism");
  gwa->add_option("--maxdeg", maxdeg, "Degree bound of canonical monomials")->check(CLI::Range(0, 4))->capture_default_str();
  gwa->add_option("--ansatz", ansatz_file, "JSON file with a skew-affine ansatz to test instead")
      ->check(CLI::ExistingFile);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = json_flag ? Format::json : parse_format(format_name);
  try {
    if (nf->parsed()) {
      const auto ast = parse(expr_a);
      if (mode == "ambient")
        print(out, render(eval_ambient(*ast), fmt));
      else
        print(out, render(eval_dra(*ast), fmt));
    } else if (dia->parsed()) {
      const DraElem u = eval_dra(*parse(expr_a));
      const DraElem v = eval_dra(*parse(expr_b));
      print(out, render(diamond(u, v), fmt));
    } else if (proj->parsed()) {
      const AmbientElem u = eval_ambient(*parse(expr_a));
      print(out, render(apply_P(CosetElem(red(u, Side::I))).elem(), fmt));
    } else if (theta->parsed()) {
      print(out, render(dra_theta(eval_dra(*parse(expr_a))), fmt));
    } else if (sig->parsed()) {
      print(out, render(sigma_apply(sigma_index, eval_base(*parse(expr_a))), fmt));
    } else if (lim->parsed()) {
      print(out, render(rf_limit_inf(eval_scalar(*parse(expr_a))), fmt));
    } else if (ver->parsed()) {
      const Report r = run_suite(suite);
      print(out, render(r, fmt));
      if (!r.all_pass()) {
        err << "verify: " << r.num_failed() << " of " << r.entries.size() << " entries failed\n";
        return kExitFailed;
      }
    } else if (gwa->parsed()) {
      Report r;
      if (!ansatz_file.empty()) {
        std::ifstream in(ansatz_file);
        std::stringstream buf;
        buf << in.rdbuf();
        r = verify_ansatz(parse_ansatz(buf.str()));
      } else {
        r = verify_gwa_iso(maxdeg);
      }
      print(out, render(r, fmt));
      if (!r.all_pass()) {
        err << "gwa-check: " << r.num_failed() << " of " << r.entries.size() << " entries failed\n";
        return kExitFailed;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ScalarError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GwaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ProjectorError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace drasp4
