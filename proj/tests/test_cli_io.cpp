#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nrt/cli.hpp"
#include "nrt/error.hpp"
#include "nrt/expr.hpp"
#include "nrt/sample.hpp"
#include "nrt/word_core.hpp"

using namespace nrt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nrt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("parse_expr") {
  const Variant A = Variant::A, B = Variant::B;
  CHECK(parse_element("-t[1,2] + 1 + t[1,2]", A) == make_int(A, 2));
  CHECK_THROWS_AS(parse_expr("om(0)", A), Error);
  try {
    parse_expr("om(0)", A);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongVariant);
  }
  Element t = parse_element("t[pi(1), 2*pi(1)]", B);
  CHECK(t == make_stable(make_pi(B, 1), make_pi(B, 1, 2)));
  CHECK(level(t) == 1);

  ExprNode ast = parse_expr("3*(1 - t[1,2])", A);
  CHECK(ast.kind == ExprNode::Kind::Scale);
  CHECK(ast.value == 3);
  CHECK(parse_element("3*(1 - t[1,2])", A) ==
        repeated_add(3, sub(make_int(A, 1), make_stable(make_int(A, 1), make_int(A, 2)))));
  CHECK(parse_element("--5", A) == make_int(A, 5));
  CHECK(parse_element("0", B).is_zero());
  CHECK(parse_element(" 2 * om( 1 ) ", Variant::C) == make_omega(Variant::C, 1, 2));
}

TEST_CASE("syntax errors carry positions") {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_expr(text, Variant::A);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("1+") == 2);
  CHECK(position_of("t[1 2]") == 4);
  CHECK(position_of("1)") == 1);
  CHECK(position_of("") == 0);
  CHECK(position_of("x") == 0);
  CHECK_THROWS_AS(parse_element("t[1,1]", Variant::A), Error);
  CHECK_THROWS_AS(parse_element("5", Variant::B), Error);
  CHECK_THROWS_AS(parse_element("99999999999999999999", Variant::A), Error);
}

TEST_CASE("render") {
  const Variant A = Variant::A, B = Variant::B, C = Variant::C;
  CHECK(render(Element(A)) == "0");
  CHECK(render(make_stable(make_int(A, 2), make_int(A, -2))) == "t[2,-2]");
  CHECK(render(parse_element("pi(1)+pi(1)-pi(0)", B)) == "2*pi(1)-pi(0)");
  CHECK(render(parse_element("om(0)+t[1,2]+om(0)", C)) == "t[1,2]+2*om(0)");
}

TEST_CASE("parse and render round trip") {
  for (Variant v : {Variant::A, Variant::B, Variant::C}) {
    SampleConfig cfg;
    cfg.seed = 404;
    for (std::uint64_t pos = 0; pos < 500; ++pos) {
      Element e = sample_element(v, cfg, pos);
      const std::string text = render(e);
      Element back = parse_element(text, v);
      CHECK(identical(back, e));
      CHECK(render(back) == text);
    }
  }
}

TEST_CASE("cli subcommands") {
  auto r = cli({"mul", "--variant", "A", "t[1,-1]", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t[2,-2]\n");

  r = cli({"eval", "--variant", "A", "-t[1,2]+1+t[1,2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  r = cli({"apply", "--variant", "C", "--zeta", "om(0)", "om(1)"});
  CHECK(r.out == "om(2)\n");

  r = cli({"apply", "--variant", "A", "--zeta", "-2", "3"});
  CHECK(r.out == "-6\n");

  r = cli({"member", "--variant", "B", "--subgroup", "W", "t[pi(1),pi(2)]"});
  CHECK(r.out == "true\n");
  r = cli({"member", "--variant", "C", "--subgroup", "H", "5"});
  CHECK(r.out == "false\n");
  r = cli({"member", "--variant", "A", "--subgroup", "H", "--zeta", "2", "6"});
  CHECK(r.out == "true\n");
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"check", "--variant", "C", "--suite", "nonequiprime", "--seed", "7", "--count", "200"})
            .code == 0);
  CHECK(cli({"check", "--variant", "A", "--suite", "left-distrib", "--count", "0"}).code == 1);
  CHECK(cli({"eval", "--variant", "A", "1+"}).code == 2);
  CHECK(cli({"eval", "--variant", "A", "om(0)"}).code == 2);
  CHECK(cli({"eval", "--variant", "D", "1"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"check", "--variant", "A", "--suite", "bogus"}).code == 2);
  CHECK(cli({"check", "--variant", "A", "--suite", "invariant"}).code == 2);
  CHECK(cli({"member", "--variant", "A", "--subgroup", "W", "1"}).code == 2);
  CHECK(cli({"member", "--variant", "A", "--subgroup", "H", "1"}).code == 2);
  CHECK(cli({"apply", "--variant", "A", "--zeta", "0", "1"}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  auto r = cli({"eval", "--variant", "A", "t[1,"});
  CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("cli JSON reports are byte-identical across runs") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path first = dir / "nrt_report_first.json";
  const fs::path second = dir / "nrt_report_second.json";
  for (const auto& p : {first, second}) {
    auto r = cli({"check", "--variant", "B", "--suite", "axioms", "--seed", "12", "--count", "40",
                  "--json", p.string()});
    CHECK(r.code == 0);
  }
  const std::string a = slurp(first);
  CHECK_FALSE(a.empty());
  CHECK(a == slurp(second));
  CHECK(a.find("\"suite\": \"axioms\"") != std::string::npos);
  fs::remove(first);
  fs::remove(second);
}
