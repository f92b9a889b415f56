#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "raq/left_quasigroup.hpp"
#include "raq/table_io.hpp"

using namespace raq;
using testutil::cyc;
using testutil::dihedral;
using testutil::projection;
using testutil::relabel;
using testutil::table1;

namespace {

// The class with which is_class_c must agree, stated as the raw identity
// L_{a*b} = L_a^-1 L_b^-1 L_a checked entry by entry.
bool classc_by_definition(const LeftQuasigroup& q) {
  int n = q.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z)
        if (q.mul(q.mul(a, b), z) != q.ldiv(a, q.ldiv(b, q.mul(a, z)))) return false;
  return true;
}

const std::vector<std::vector<int>> kClassC4{{2, 4, 1, 3}, {3, 1, 4, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}};
const std::vector<std::vector<int>> kClassC5{
    {3, 4, 1, 5, 2}, {3, 2, 1, 4, 5}, {3, 5, 1, 2, 4}, {3, 2, 1, 4, 5}, {3, 2, 1, 4, 5}};
// Quandle with an abelian but non-central congruence; rows 1,3,4 share a
// translation.
const std::vector<std::vector<int>> kFlat4{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 4}, {1, 2, 3, 4}};

} // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(LeftQuasigroup::from_table({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LeftQuasigroup::from_table({{0, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(LeftQuasigroup::from_table({{1, 0}, {0, 1}}));
}

TEST_CASE("dihedral quandles") {
  auto d3 = dihedral(3);
  CHECK(d3.is_rack());
  CHECK(d3.is_quandle());
  CHECK(d3.is_involutory());
  CHECK(d3.is_latin());
  CHECK(d3.is_medial());
  CHECK(is_connected(d3));
  CHECK(is_faithful(d3));
  CHECK(lmlt(d3).order() == 6);
  CHECK(dis(d3).order() == 3);

  auto d4 = dihedral(4);
  CHECK(d4.is_quandle());
  CHECK(d4.is_involutory());
  CHECK(!d4.is_latin());
  CHECK(d4.is_medial());
  CHECK(!is_connected(d4));
  CHECK(!is_faithful(d4));
  CHECK(lmlt(d4).order() == 4);
  CHECK(dis(d4).order() == 2);
  CHECK(dis(d4).contains(cyc(4, {{0, 2}, {1, 3}})));
  CHECK(cayley_kernel(d4) == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(orbit_partition(d4) == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  // Dis acts freely, so all point stabilizers coincide.
  CHECK(sigma_partition(d4).is_all());
}

TEST_CASE("projection quandles") {
  auto p3 = projection(3);
  CHECK(p3.is_quandle());
  CHECK(p3.is_medial());
  CHECK(!p3.is_latin());
  CHECK(!is_faithful(p3));
  CHECK(!is_connected(p3));
  CHECK(dis(p3).is_trivial());
  CHECK(cayley_kernel(p3).is_all());
  CHECK(orbit_partition(p3).is_singletons());
}

TEST_CASE("a non-faithful quandle with distinct kernel and orbit partitions") {
  auto q = table1(kFlat4);
  CHECK(q.is_quandle());
  CHECK(!is_faithful(q));
  PermGroup d = dis(q);
  CHECK(d.order() == 2);
  CHECK(d.contains(cyc(4, {{2, 3}})));
  CHECK(cayley_kernel(q) == Partition::from_blocks(4, {{0, 2, 3}, {1}}));
  CHECK(orbit_partition(q) == Partition::from_blocks(4, {{0}, {1}, {2, 3}}));
  CHECK(q.is_medial());
}

TEST_CASE("class c tables") {
  for (const auto& rows : {kClassC4, kClassC5}) {
    auto q = table1(rows);
    CHECK(q.is_class_c());
    CHECK(classc_by_definition(q));
    CHECK(!q.is_rack());
    CHECK(!q.is_latin());
  }
  // Involutory racks satisfy the identity because every translation is its
  // own inverse.
  CHECK(dihedral(3).is_class_c());
  CHECK(classc_by_definition(dihedral(4)));
  // A constant-translation rack with a 3-cycle does not.
  auto c3 = table1({{2, 3, 1}, {2, 3, 1}, {2, 3, 1}});
  CHECK(c3.is_rack());
  CHECK(!c3.is_class_c());
  CHECK(!classc_by_definition(c3));
  CHECK(projection(1).is_class_c());
  CHECK(projection(1).is_rack());
}

TEST_CASE("structure report cross checks") {
  auto r = structure_report(dihedral(6));
  CHECK(r.order == 6);
  CHECK(r.is_quandle);
  CHECK(r.is_medial);
  CHECK(r.dis_order == 3);
  CHECK(r.lmlt_order == 6);
  CHECK(!r.is_connected);
  CHECK(r.orbits == Partition::from_blocks(6, {{0, 2, 4}, {1, 3, 5}}));
}

TEST_CASE("congruences and quotients") {
  auto d4 = dihedral(4);
  Partition mod2 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(is_congruence(d4, mod2));
  CHECK(!is_congruence(d4, Partition::from_blocks(4, {{0, 1}, {2, 3}})));
  auto qt = quotient(d4, mod2);
  CHECK(qt.algebra.order() == 2);
  CHECK(qt.algebra == projection(2));
  CHECK(qt.block_of == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(quotient(d4, Partition::from_blocks(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);

  // Congruences are closed under meet and join.
  auto q = table1(kFlat4);
  CHECK(is_congruence(q, cayley_kernel(q)));
  CHECK(is_congruence(q, orbit_partition(q)));
  CHECK(is_congruence(q, cayley_kernel(q).meet(orbit_partition(q))));
}

TEST_CASE("products and subalgebras") {
  auto p = direct_product(dihedral(3), projection(2));
  CHECK(p.order() == 6);
  CHECK(p.is_quandle());
  CHECK(!is_connected(p));
  CHECK(dis(p).order() == 3);
  // (a1,a2)*(b1,b2) componentwise under the pair encoding.
  CHECK(p.mul(0 * 2 + 0, 1 * 2 + 1) == ((2 * 0 - 1 + 3) % 3) * 2 + 1);

  auto sub = subalgebra_generated(dihedral(4), {0, 2});
  CHECK(sub.algebra.order() == 2);
  CHECK(sub.embedding == std::vector<int>{0, 2});
  auto all = subalgebra_generated(dihedral(5), {0, 1});
  CHECK(all.algebra.order() == 5);
  auto one = subalgebra_generated(dihedral(5), {2});
  CHECK(one.algebra.order() == 1);
}

TEST_CASE("isomorphism") {
  auto d6 = dihedral(6);
  std::vector<int> pi{3, 0, 4, 1, 5, 2};
  auto img = relabel(d6, pi);
  auto iso = isomorphism(d6, img);
  REQUIRE(iso.has_value());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK((*iso)[d6.mul(a, b)] == img.mul((*iso)[a], (*iso)[b]));

  CHECK(!isomorphism(dihedral(4), projection(4)).has_value());
  CHECK(!isomorphism(dihedral(3), projection(3)).has_value());
  CHECK(isomorphism(projection(3), projection(3)).has_value());
  CHECK(!isomorphism(table1(kClassC4), dihedral(4)).has_value());
}

TEST_CASE("canonical form") {
  for (const auto& q : {dihedral(3), dihedral(4), table1(kFlat4), table1(kClassC5)}) {
    auto c = canonical_form(q);
    CHECK(isomorphism(q, c).has_value());
    CHECK(is_canonical_table(c.flat(), c.order()));
    // Invariance under relabelling.
    std::vector<int> pi(q.order());
    for (int i = 0; i < q.order(); ++i) pi[i] = (i + 1) % q.order();
    CHECK(canonical_form(relabel(q, pi)) == c);
    // Canonical means no relabelling is lexicographically smaller.
    CHECK(!(c.flat() > q.flat()));
  }
  CHECK(is_canonical_table(projection(3).flat(), 3));
  // Relabelling the odd row of kFlat4 last yields three identity rows first,
  // which is strictly smaller.
  CHECK(!is_canonical_table(table1(kFlat4).flat(), 4));
}

TEST_CASE("table io") {
  std::string text = "# comment\n4\n1 2 3 4\n1 2 4 3  # trailing\n1 2 3 4\n1 2 3 4\n";
  auto q = parse_table(text);
  CHECK(q == table1(kFlat4));
  CHECK(format_table(q) == "4\n1 2 3 4\n1 2 4 3\n1 2 3 4\n1 2 3 4\n");
  CHECK(parse_table(format_table(q)) == q);

  CHECK_THROWS_AS(parse_table("2\n1 2 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table("2\n1 2 1 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table("two"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table(""), std::invalid_argument);
}
