#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "pga/parser.hpp"
#include "support/generators.hpp"

using namespace pga;

namespace {

const VarId P("P");
const VarId R("R");
const VarId X("X");
const VarId Y("Y");

const char* kPiranha =
    "P := bernoulli(1/2);\n"
    "if (P = 1) {\n"
    "  R := 1\n"
    "} else {\n"
    "  R := bernoulli(1/2)\n"
    "};\n"
    "observe(R = 1)\n";

}  // namespace

TEST_CASE("the piranha program parses to the expected tree") {
  Program p = parse(kPiranha);
  REQUIRE(p.stmts.size() == 3);

  const auto* first = std::get_if<StmtAssign>(&p.stmts[0].node);
  REQUIRE(first != nullptr);
  CHECK(first->target == P);
  const auto* coin = std::get_if<RhsBernoulli>(&first->value);
  REQUIRE(coin != nullptr);
  CHECK(coin->p == Rational(1, 2));

  const auto* branch = std::get_if<StmtIfElse>(&p.stmts[1].node);
  REQUIRE(branch != nullptr);
  CHECK(branch->guard == Guard::atom(P, Cmp::Eq, 1));
  REQUIRE(branch->then_branch.stmts.size() == 1);
  REQUIRE(branch->else_branch.stmts.size() == 1);
  const auto* then_assign = std::get_if<StmtAssign>(&branch->then_branch.stmts[0].node);
  REQUIRE(then_assign != nullptr);
  CHECK(then_assign->target == R);
  CHECK(std::get<RhsConst>(then_assign->value).value == 1);

  const auto* observe = std::get_if<StmtObserve>(&p.stmts[2].node);
  REQUIRE(observe != nullptr);
  CHECK(observe->guard == Guard::atom(R, Cmp::Eq, 1));
}

TEST_CASE("minimal programs") {
  Program p = parse("X := 0");
  REQUIRE(p.stmts.size() == 1);
  const auto* assign = std::get_if<StmtAssign>(&p.stmts[0].node);
  REQUIRE(assign != nullptr);
  CHECK(assign->target == X);
  CHECK(std::get<RhsConst>(assign->value).value == 0);

  CHECK(parse("skip").stmts.size() == 1);
  CHECK(parse("X := 1;").stmts.size() == 1);  // trailing separator
  CHECK(parse("X := Y + 2").stmts.size() == 1);
}

TEST_CASE("rhs forms") {
  Program p = parse("A := 3; B := A; C := A + 2; D := bernoulli(0.25); E := geometric(1/3)");
  REQUIRE(p.stmts.size() == 5);
  CHECK(std::get<RhsConst>(std::get<StmtAssign>(p.stmts[0].node).value).value == 3);
  CHECK(std::get<RhsVar>(std::get<StmtAssign>(p.stmts[1].node).value).var == VarId("A"));
  auto plus = std::get<RhsVarPlus>(std::get<StmtAssign>(p.stmts[2].node).value);
  CHECK(plus.var == VarId("A"));
  CHECK(plus.increment == 2);
  CHECK(std::get<RhsBernoulli>(std::get<StmtAssign>(p.stmts[3].node).value).p ==
        Rational(1, 4));
  CHECK(std::get<RhsGeometric>(std::get<StmtAssign>(p.stmts[4].node).value).p ==
        Rational(1, 3));
}

TEST_CASE("guards parse with precedence and negation") {
  Program p = parse("observe(X = 1 || Y < 2 && !(X >= 3))");
  const auto* observe = std::get_if<StmtObserve>(&p.stmts[0].node);
  REQUIRE(observe != nullptr);
  Guard expected = Guard::disjunction(
      Guard::atom(X, Cmp::Eq, 1),
      Guard::conjunction(Guard::atom(Y, Cmp::Lt, 2),
                         Guard::negation(Guard::atom(X, Cmp::Ge, 3))));
  CHECK(observe->guard == expected);

  CHECK(std::get<StmtObserve>(parse("observe(true)").stmts[0].node).guard ==
        Guard::always_true());
  CHECK(std::get<StmtObserve>(parse("observe(X != 4)").stmts[0].node).guard ==
        Guard::atom(X, Cmp::Ne, 4));
}

TEST_CASE("comments and whitespace are ignored") {
  Program p = parse("# prior\nX := 1 ;  # set\n\t Y:=X#copy\n");
  CHECK(p.stmts.size() == 2);
}

TEST_CASE("probability literals convert exactly") {
  CHECK(std::get<RhsBernoulli>(std::get<StmtAssign>(parse("X := bernoulli(0.25)").stmts[0].node).value)
            .p == Rational(1, 4));
  CHECK(std::get<RhsBernoulli>(std::get<StmtAssign>(parse("X := bernoulli(0.1)").stmts[0].node).value)
            .p == Rational(1, 10));
  CHECK(std::get<RhsBernoulli>(std::get<StmtAssign>(parse("X := bernoulli(1)").stmts[0].node).value)
            .p == Rational(1));
  CHECK(std::get<RhsGeometric>(std::get<StmtAssign>(parse("X := geometric(0)").stmts[0].node).value)
            .p == Rational(0));
}

TEST_CASE("semantic errors carry a source location") {
  try {
    parse("X := bernoulli(3/2)");
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 16);
    CHECK(std::string(e.what()).find("[0, 1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("X := geometric(1)"), SemanticError);
  CHECK_THROWS_AS(parse("X := geometric(1.5)"), SemanticError);
  CHECK_THROWS_AS(parse("X := bernoulli(1/0)"), SemanticError);
}

TEST_CASE("syntax errors pinpoint the offending token") {
  try {
    parse("X := ;\nY := 1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse("X := 1;\nif (X = 1) { skip }");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);  // missing else
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("   # only a comment"), SyntaxError);
  CHECK_THROWS_AS(parse("X = 1"), SyntaxError);
  CHECK_THROWS_AS(parse("observe X = 1"), SyntaxError);
  CHECK_THROWS_AS(parse("X := 1 Y := 2"), SyntaxError);
  CHECK_THROWS_AS(parse("X := 1 @"), SyntaxError);
  CHECK_THROWS_AS(parse("skip := 1"), SyntaxError);  // keywords are not identifiers
  CHECK_THROWS_AS(parse("if (X | 1) { skip } else { skip }"), SyntaxError);
}

TEST_CASE("free_vars collects reads and writes in order") {
  auto vars = free_vars(parse(kPiranha));
  REQUIRE(vars.size() == 2);
  CHECK(*vars.begin() == P);
  CHECK(*std::next(vars.begin()) == R);

  CHECK(free_vars(parse("skip")).empty());
  auto xy = free_vars(parse("X := Y"));
  CHECK(xy == std::set<VarId>{X, Y});
  CHECK(free_vars(parse("observe(Z = 0)")) == std::set<VarId>{VarId("Z")});
}

TEST_CASE("pretty-printed programs re-parse to the same tree") {
  Program p = parse(kPiranha);
  CHECK(parse(to_source(p)) == p);

  std::mt19937_64 rng(20240817);
  testsupport::ProgramGenOptions opts;
  for (int i = 0; i < 100; ++i) {
    Program q = testsupport::random_program(rng, opts);
    CAPTURE(to_source(q));
    CHECK(parse(to_source(q)) == q);
  }
}

TEST_CASE("deeply nested guards survive the round trip") {
  const char* sources[] = {
      "observe(!(X = 1 || (Y < 2 && !true)))",
      "observe(((X = 1 && Y = 2) || !(X > 3)) && (Y <= 1 || X != 0))",
      "observe(!!(X >= 1))",
      "if (!(X = 0) && (Y = 1 || Y = 2)) { skip } else { X := 1 }",
  };
  for (const char* src : sources) {
    Program p = parse(src);
    CAPTURE(src);
    CHECK(parse(to_source(p)) == p);
  }

  std::mt19937_64 rng(777);
  for (int i = 0; i < 200; ++i) {
    Guard g = testsupport::random_guard(rng, {VarId("X"), VarId("Y"), VarId("Z")}, 5, 4);
    Program p;
    p.stmts.push_back(Stmt{StmtObserve{g}});
    CAPTURE(to_source(p));
    CHECK(parse(to_source(p)) == p);
  }
}

TEST_CASE("mutilated inputs only ever raise parse errors") {
  std::mt19937_64 rng(31337);
  testsupport::ProgramGenOptions opts;
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 60; ++i) {
    std::string source = to_source(testsupport::random_program(rng, opts));
    for (int cut = 0; cut < 8; ++cut) {
      std::string mangled = source.substr(0, testsupport::pick(rng, source.size() + 1));
      if (testsupport::pick(rng, 2) == 0 && !mangled.empty())
        mangled[testsupport::pick(rng, mangled.size())] =
            static_cast<char>("#;(){}=:<>|&!"[testsupport::pick(rng, 13)]);
      try {
        parse(mangled);
        ++parsed;
      } catch (const SyntaxError&) {
        ++rejected;
      } catch (const SemanticError&) {
        ++rejected;
      }
    }
  }
  CHECK(parsed + rejected == 480);
  CHECK(rejected > 0);
}

TEST_CASE("concurrent parses of distinct sources are safe") {
  std::mt19937_64 rng(2718);
  testsupport::ProgramGenOptions opts;
  std::vector<std::string> sources;
  std::vector<Program> expected;
  for (int i = 0; i < 16; ++i) {
    Program p = testsupport::random_program(rng, opts);
    sources.push_back(to_source(p));
    expected.push_back(std::move(p));
  }
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      int good = 0;
      for (int round = 0; round < 50; ++round)
        for (std::size_t i = 0; i < sources.size(); ++i)
          if (parse(sources[i]) == expected[i]) ++good;
      ok[t] = good;
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) CHECK(ok[t] == 50 * 16);
}
