#include <doctest.h>

#include "core/exact.hpp"

using namespace pmx;

TEST_CASE("exact values parse and print in lowest terms") {
  CHECK(ExactValue::parse("3/6").str() == "1/2");
  CHECK(ExactValue::parse("4/2").str() == "2");
  CHECK(ExactValue::parse("-3/4").str() == "-3/4");
  CHECK(ExactValue::parse("inf").str() == "inf");
  CHECK(ExactValue::fraction(1, 2).str() == "1/2");
  CHECK_THROWS_AS(ExactValue::parse("1/0"), InputError);
  CHECK_THROWS_AS(ExactValue::parse("0.5"), InputError);
  CHECK_THROWS_AS(ExactValue::parse(""), InputError);
}

TEST_CASE("the order is total with infinity on top") {
  const ExactValue inf = ExactValue::infinity();
  CHECK(ExactValue(3) < inf);
  CHECK(inf == ExactValue::infinity());
  CHECK(ExactValue::fraction(1, 3) < ExactValue::fraction(1, 2));
  CHECK(ExactValue(2) == ExactValue::parse("4/2"));
}

TEST_CASE("arithmetic is exact and infinity absorbs") {
  CHECK((ExactValue::fraction(1, 2) + ExactValue::fraction(1, 3)).str() == "5/6");
  CHECK((ExactValue(2) - ExactValue::fraction(1, 2)).str() == "3/2");
  CHECK((ExactValue::infinity() + ExactValue(5)).is_infinite());
  CHECK((ExactValue::infinity() - ExactValue(5)).is_infinite());
  CHECK_THROWS_AS(ExactValue::infinity() - ExactValue::infinity(), DomainError);
}

TEST_CASE("lexicographic comparison is strict and exact") {
  using V = std::vector<ExactValue>;
  CHECK(lex_less(V{ExactValue(2), ExactValue(1)}, V{ExactValue(2), ExactValue(2)}));
  CHECK_FALSE(lex_less(V{ExactValue(2)}, V{ExactValue(2)}));
  CHECK(lex_less(V{ExactValue(1)}, V{ExactValue::infinity()}));
  CHECK_THROWS_AS(lex_less(V{ExactValue(1)}, V{}), DomainError);
}
