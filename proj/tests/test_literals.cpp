#include "doctest.h"
#include "hankel/corpus.hpp"
#include "hankel/errors.hpp"
#include "hankel/literals.hpp"

using namespace hankel;

TEST_CASE("measure literals parse") {
  CHECK(parse_measure("lebesgue").is_lebesgue());
  const Measure a = parse_measure("atomic:[(0.5,1.0), (0.25 , 2)]");
  REQUIRE(a.is_atomic());
  CHECK(a.as_atomic()->atoms.size() == 2);
  CHECK(a.as_atomic()->atoms[0].t == 0.25);
  const Measure d = parse_measure("density:gamma=1,delta=0,c=1");
  REQUIRE(d.as_density());
  CHECK(d.as_density()->gamma == 1.0);
  CHECK(parse_measure("density:delta=-1,gamma=0").as_density()->delta == -1.0);
  CHECK(parse_measure("density:gamma=0").is_lebesgue());
}

TEST_CASE("decimal literals are read exactly") {
  // 0.1 must be the double nearest to 1/10, as strtod would give.
  CHECK(parse_measure("atomic:[(0.1,0.3)]").as_atomic()->atoms[0].t == 0.1);
  CHECK(parse_measure("atomic:[(0.1,0.3)]").as_atomic()->atoms[0].c == 0.3);
  CHECK(parse_measure("density:gamma=-0.5").as_density()->gamma == -0.5);
}

TEST_CASE("measure literal errors carry positions") {
  auto pos = [](const char* s) {
    try {
      parse_measure(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("atomic:[(0.5,1.0)") == 17);
  CHECK(pos("atomic:[(0.5;1.0)]") == 12);
  CHECK(pos("density:gamma=abc") == 14);
  CHECK(pos("density:gamma=1,foo=2") == 16);
  CHECK(pos("cantor") == 0);
  CHECK(pos("lebesgue x") == 9);
  CHECK_THROWS_AS(parse_measure("density:gamma=-2"), ParseError);
  CHECK_THROWS_AS(parse_measure("atomic:[(1.5,1)]"), ParseError);
  CHECK_THROWS_AS(parse_measure("density:delta=1"), ParseError);
}

TEST_CASE("space literals") {
  CHECK(parse_space("bergman:p=4,alpha=1") == SpaceSpec::bergman(4, 1));
  CHECK(parse_space("dirichlet:p=2,alpha=0.5") == SpaceSpec::dirichlet(2, 0.5));
  CHECK(parse_space("hardy:p=1") == SpaceSpec::hardy(1));
  CHECK(parse_space("bloch") == SpaceSpec::bloch());
  CHECK(parse_space("logdirichlet1:gamma=-0.5") == SpaceSpec::log_dirichlet1(-0.5));
  CHECK_THROWS_AS(parse_space("bergman:p=2"), ParseError);
  CHECK_THROWS_AS(parse_space("bergman:p=2,alpha=-1"), ParseError);
  CHECK_THROWS_AS(parse_space("hardy:p=0"), ParseError);
}

TEST_CASE("round trip through canonical literals") {
  for (const auto& nm : named_measures()) CHECK(parse_measure(to_literal(nm.measure)) == nm.measure);
  for (const auto& s : {SpaceSpec::hardy(1.5), SpaceSpec::bergman(4, 1), SpaceSpec::dirichlet(2, 0.5),
                        SpaceSpec::bloch(), SpaceSpec::log_bloch(-0.25), SpaceSpec::log_bergman1(0.5),
                        SpaceSpec::log_dirichlet1(-0.5)})
    CHECK(parse_space(to_literal(s)) == s);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}
