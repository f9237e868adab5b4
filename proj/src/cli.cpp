#include "nrt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "nrt/error.hpp"
#include "nrt/expr.hpp"
#include "nrt/nearring.hpp"
#include "nrt/suites.hpp"
#include "nrt/word_core.hpp"

namespace nrt {

namespace {

struct Options {
  std::string variant;
  std::vector<std::string> exprs;
  std::string zeta;
  std::string subgroup;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  int depth = 3;
  std::string json_path;
  std::int64_t zeta1 = 2;
  std::int64_t zeta2 = 3;
};

void add_variant(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "tower variant")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C"}));
}

// Expressions may begin with '-', which CLI11 would read as a short flag.
std::vector<std::string> shield_expressions(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.size() >= 2 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());
  return args;
}

int run_check(const Options& o, Variant v, std::ostream& out, std::ostream& err) {
  SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.max_level = o.depth;
  Report r = run_suite(o.suite, v, cfg, o.zeta1, o.zeta2);
  out << "suite " << r.suite << " variant " << to_string(r.variant) << ": "
      << r.cases_run << " cases, " << r.failures.size() << " failures, "
      << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& w : r.witnesses) out << "  witness " << w << "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = r.failures[i];
    out << "  failed " << f.check << " [" << f.inputs << "] expected " << f.expected
        << " got " << f.got << "\n";
  }
  if (!o.json_path.empty()) {
    std::ofstream file(o.json_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.json_path << "\n";
      return 2;
    }
    file << write_report(r);
  }
  return r.passed ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nearring tower calculator", "nrt"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "print the canonical form");
  add_variant(eval, o);
  eval->add_option("expr", o.exprs)->required()->expected(1);

  auto* mulc = app.add_subcommand("mul", "nearring product a*b = f_b(a)");
  add_variant(mulc, o);
  mulc->add_option("exprs", o.exprs)->required()->expected(2);

  auto* apply = app.add_subcommand("apply", "evaluate f_zeta(x)");
  add_variant(apply, o);
  apply->add_option("--zeta", o.zeta)->required();
  apply->add_option("expr", o.exprs)->required()->expected(1);

  auto* member = app.add_subcommand("member", "membership in W* or H*_zeta");
  add_variant(member, o);
  member->add_option("--subgroup", o.subgroup)->required()->check(CLI::IsMember({"W", "H"}));
  member->add_option("--zeta", o.zeta, "defaults to om(0)");
  member->add_option("expr", o.exprs)->required()->expected(1);

  auto* check = app.add_subcommand("check", "run a verification suite");
  add_variant(check, o);
  check->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", o.seed);
  check->add_option("--count", o.count);
  check->add_option("--depth", o.depth)->check(CLI::Range(0, 8));
  check->add_option("--json", o.json_path, "write the JSON report here");
  check->add_option("--zeta1", o.zeta1);
  check->add_option("--zeta2", o.zeta2);

  try {
    app.parse(shield_expressions(argc, argv));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const Variant v = *parse_variant(o.variant);
    auto arg = [&](std::size_t i) { return parse_element(o.exprs.at(i), v); };
    if (eval->parsed()) {
      out << render(arg(0)) << "\n";
    } else if (mulc->parsed()) {
      out << render(mul(arg(0), arg(1))) << "\n";
    } else if (apply->parsed()) {
      out << render(f_eval(parse_element(o.zeta, v), arg(0))) << "\n";
    } else if (member->parsed()) {
      bool inside = false;
      if (o.subgroup == "W") {
        inside = in_W(arg(0));
      } else {
        if (o.zeta.empty() && v != Variant::C) {
          throw Error(ErrorKind::Usage, "--zeta is required outside variant C");
        }
        const Element zeta = o.zeta.empty() ? make_omega(v, 0) : parse_element(o.zeta, v);
        inside = in_H(zeta, arg(0));
      }
      out << (inside ? "true" : "false") << "\n";
    } else if (check->parsed()) {
      return run_check(o, v, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace nrt
