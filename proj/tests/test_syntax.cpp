#include <doctest.h>

#include "catana/syntax.hpp"

using namespace catana;

TEST_CASE("object syntax renders canonically") {
  auto e = ObjectSyntax::entities();
  auto b = ObjectSyntax::booleans();
  CHECK(ObjectSyntax::unit().key() == "1");
  CHECK(b.key() == "B");
  CHECK(e.key() == "E");
  auto e2 = ObjectSyntax::product(e, e);
  CHECK(e2.key() == "E×E");
  auto bd = ObjectSyntax::exponential(b, e);
  CHECK(bd.key() == "B^E");
  CHECK(ObjectSyntax::product(bd, e).key() == "(B^E)×E");
  auto bdd = ObjectSyntax::exponential(b, e2);
  CHECK(bdd.key() == "B^(E×E)");
  CHECK(ObjectSyntax::product(bdd, bdd).key() == "(B^(E×E))×(B^(E×E))");
}

TEST_CASE("structural equality is the identity criterion") {
  auto e = ObjectSyntax::entities();
  auto p1 = ObjectSyntax::product(e, e);
  auto p2 = ObjectSyntax::product(ObjectSyntax::entities(), ObjectSyntax::entities());
  CHECK(p1 == p2);
  CHECK(p1 != ObjectSyntax::product(p1, e));
  // left-associated powers differ from right-associated ones
  CHECK(ObjectSyntax::product(p1, e) != ObjectSyntax::product(e, p1));
}
