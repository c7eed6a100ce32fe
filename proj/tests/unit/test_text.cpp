#include <doctest.h>

#include <random>

#include "otm/formula.hpp"
#include "otm/modelcheck.hpp"
#include "otm/text.hpp"
#include "support/fixtures.hpp"

using otm::Ordinal;
using fixtures::w;

namespace {

std::size_t error_offset(void (*f)()) {
  try {
    f();
  } catch (const otm::ParseError& e) {
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("text: parse errors carry a byte offset") {
  CHECK(error_offset([] { otm::parse_ordinal("w^2+w*0"); }) == 4);
  CHECK(error_offset([] { otm::parse_ordinal("w+1x"); }) == 3);
  CHECK(error_offset([] { otm::parse_word("1^3,2"); }) == 4);
  CHECK(error_offset([] { otm::parse_program("#tapes 2\nq0 0,0 -> qH 0,0 S,X\n"); }) > 9);
  const std::string what = [] {
    try {
      otm::parse_ordinal("w*1");
    } catch (const otm::ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(what.rfind("offset ", 0) == 0);
}

TEST_CASE("text: program assembly") {
  const otm::Program p = fixtures::right_until_0();
  CHECK(p.state_count() == 2);
  CHECK(p.tape_count() == 2);
  CHECK(p.rule(0, 0b01).moves[0] == otm::Move::right);
  CHECK(p.rule(0, 0b00).next == p.halt());
  CHECK(otm::parse_program(otm::format_program(p)) == p);
}

TEST_CASE("text: program defaults and renumbering") {
  // q1 is named first but #start puts q0 first; qH is the default halt.
  const otm::Program p = otm::parse_program(R"(#tapes 2
#start q0
q1 0,0 -> qH 1,0 S,S
q1 1,0 -> qH 1,0 S,S
q1 0,1 -> qH 1,1 S,S
q1 1,1 -> qH 1,1 S,S
q0 0,0 -> q1 0,0 R,S   ; comment
q0 1,0 -> q1 1,0 R,S
q0 0,1 -> q1 0,1 R,S
q0 1,1 -> q1 1,1 R,S
)");
  CHECK(p.state_count() == 3);
  CHECK(p.state_name(0) == "q0");
  CHECK(p.state_name(1) == "q1");
  CHECK(p.state_name(p.halt()) == "qH");
  CHECK(p.rule(0, 0).next == 1);
}

TEST_CASE("text: malformed programs") {
  const char* missing_row = "#tapes 2\nq0 0,0 -> qH 0,0 S,S\n";
  CHECK_THROWS_AS(otm::parse_program(missing_row), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_program("q0 0,0 -> qH 0,0 S,S\n"), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_program("#tapes 1\n"), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_program("#tapes 9\n"), otm::ParseError);
  const std::string dup = otm::format_program(fixtures::answer(1)) + "q0 0,0 -> qH 0,0 S,S\n";
  CHECK_THROWS_AS(otm::parse_program(dup), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_program("#tapes 2\n#halt qH\nqH 0,0 -> qH 0,0 S,S\n"), otm::ParseError);
}

TEST_CASE("text: random programs survive format and parse") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const otm::Program p = fixtures::random_program(rng, 2 + rng() % 5, 2 + rng() % 3);
    CHECK(otm::parse_program(otm::format_program(p)) == p);
  }
}

TEST_CASE("text: structures") {
  const auto s = otm::parse_structure("bound w^4\nedge 0 w\nedge w w^2\nelement 5\n");
  CHECK(s.bound == otm::pow(w(), 4));
  CHECK(s.domain == std::vector<Ordinal>{Ordinal(0), Ordinal(5), w(), otm::pow(w(), 2)});
  CHECK(otm::decode_edges(s) == std::set<otm::Edge>{{Ordinal(0), w()}, {w(), otm::pow(w(), 2)}});
  const auto back = otm::parse_structure(otm::format_structure(s));
  CHECK(back.bound == s.bound);
  CHECK(back.domain == s.domain);
  CHECK(back.code == s.code);
  CHECK_THROWS_AS(otm::parse_structure("edge 0\n"), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_structure("vertex 0\n"), otm::ParseError);
}

TEST_CASE("text: formulas") {
  const auto f = otm::parse_formula("(all x (all y (implies (all z (iff (in z x) (in z y))) (eq x y))))");
  CHECK(otm::to_string(*f) == otm::to_string(*otm::fol::extensionality()));
  const auto g = otm::parse_formula("(and (in a b) (in b c) (eq a c))");
  CHECK(g->kind == otm::Formula::Kind::conjunction);
  CHECK(g->a->kind == otm::Formula::Kind::conjunction);
  CHECK(otm::parse_formulas("(all x (not (in x x))) ; irreflexive\n(ex y (eq y y))").size() == 2);
  CHECK_THROWS_AS(otm::parse_formula("(and (in a b))"), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_formula("(xor (in a b) (in b a))"), otm::ParseError);
  CHECK_THROWS_AS(otm::parse_formula("(in a b"), otm::ParseError);
  fixtures::FormulaGenerator gen(3);
  for (int i = 0; i < 100; ++i) {
    const auto h = gen.sentence(3, 3);
    CHECK(otm::to_string(*otm::parse_formula(otm::to_string(*h))) == otm::to_string(*h));
  }
}
