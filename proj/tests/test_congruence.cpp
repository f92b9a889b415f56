#include "doctest.h"

#include "helpers.hpp"
#include "raq/congruence.hpp"

using namespace raq;
using testutil::cyc;
using testutil::dihedral;
using testutil::projection;
using testutil::table1;

namespace {

const std::vector<std::vector<int>> kFlat4{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 4}, {1, 2, 3, 4}};

// beta/alpha as a partition of the quotient by alpha.
Partition push_down(const Quotient& qt, const Partition& beta) {
  std::vector<int> ids(qt.algebra.order(), -1);
  for (std::size_t x = 0; x < qt.block_of.size(); ++x)
    ids[qt.block_of[x]] = beta.block_of(static_cast<int>(x));
  return Partition(std::move(ids));
}

LeftQuasigroup z4_addition() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
  return LeftQuasigroup::from_table(t);
}

} // namespace

TEST_CASE("principal congruences") {
  auto d4 = dihedral(4);
  CHECK(principal_congruence(d4, 1, 1) == Partition::singletons(4));
  CHECK(principal_congruence(d4, 0, 2) == Partition::from_blocks(4, {{0, 2}, {1}, {3}}));
  CHECK(principal_congruence(d4, 0, 1) == Partition::all(4));
  auto d3 = dihedral(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(principal_congruence(d3, a, b) == Partition::all(3));
}

TEST_CASE("congruence lattices") {
  auto lat = congruence_lattice(dihedral(4));
  REQUIRE(lat.size() == 5);
  CHECK(lat[0] == Partition::singletons(4));
  CHECK(lat[4] == Partition::all(4));
  for (const auto& c : lat) CHECK(is_congruence(dihedral(4), c));
  CHECK(std::find(lat.begin(), lat.end(), Partition::from_blocks(4, {{0, 2}, {1, 3}})) !=
        lat.end());
  CHECK(std::find(lat.begin(), lat.end(), Partition::from_blocks(4, {{1, 3}, {0}, {2}})) !=
        lat.end());

  CHECK(congruence_lattice(dihedral(3)).size() == 2);
  CHECK(congruence_lattice(projection(1)).size() == 1);
  // Every equivalence is a congruence of a projection quandle: Bell(3) = 5.
  CHECK(congruence_lattice(projection(3)).size() == 5);
  CHECK_THROWS_AS(congruence_lattice(dihedral(4), 3), std::length_error);
}

TEST_CASE("relative displacement groups") {
  auto d4 = dihedral(4);
  Partition mod2 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(dis_rel(d4, mod2).is_trivial());
  CHECK(dis_rel(d4, Partition::singletons(4)).is_trivial());
  CHECK(dis_rel(dihedral(3), Partition::all(3)).same_group(dis(dihedral(3))));
  CHECK_THROWS_AS(dis_rel(d4, Partition::from_blocks(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);

  CHECK(dis_ker(d4, mod2).same_group(dis(d4)));
  CHECK(dis_ker(d4, Partition::singletons(4)).is_trivial());
  CHECK(dis_ker(d4, Partition::all(4)).same_group(dis(d4)));
}

TEST_CASE("congruences from normal subgroups") {
  auto q4 = table1(kFlat4);
  CHECK(con_of(q4, PermGroup::trivial(4)) == Partition::from_blocks(4, {{0, 2, 3}, {1}}));
  CHECK(con_of(q4, dis(q4)) == Partition::all(4));
  auto d3 = dihedral(3);
  CHECK(con_of(d3, PermGroup::trivial(3)) == Partition::singletons(3));
  CHECK_THROWS_AS(con_of(d3, PermGroup(3, {cyc(3, {{0, 1}})})), std::invalid_argument);

  auto d4 = dihedral(4);
  CHECK(orbit_congruence(d4, dis(d4)) == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(orbit_congruence(d4, PermGroup::trivial(4)) == Partition::singletons(4));
  CHECK(orbit_congruence(dihedral(3), lmlt(dihedral(3))) == Partition::all(3));
}

TEST_CASE("norm subgroups") {
  auto d4 = dihedral(4);
  auto ns = norm_subgroups(d4);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0].is_trivial());
  CHECK(ns[1].same_group(dis(d4)));

  auto d3 = dihedral(3);
  auto ns3 = norm_subgroups(d3);
  REQUIRE(ns3.size() == 2);
  CHECK(ns3[1].order() == 3);
}

TEST_CASE("galois audit on known quandles") {
  auto a3 = galois_audit(dihedral(3));
  CHECK(a3.all_hold);
  CHECK(a3.cdsg);

  auto a4 = galois_audit(dihedral(4));
  CHECK(a4.all_hold);
  CHECK(!a4.cdsg);

  auto aq = galois_audit(table1(kFlat4));
  CHECK(aq.all_hold);
  CHECK(!aq.cdsg);

  for (int n = 2; n <= 6; ++n) {
    auto a = galois_audit(dihedral(n));
    CHECK(a.all_hold);
  }
  CHECK(galois_audit(projection(4)).all_hold);
  CHECK_THROWS_AS(galois_audit(z4_addition()), std::invalid_argument);
}

TEST_CASE("quotient compatibility of the displacement operators") {
  for (const auto& q : {dihedral(4), dihedral(6), table1(kFlat4)}) {
    auto lat = congruence_lattice(q);
    for (const auto& alpha : lat)
      for (const auto& beta : lat) {
        if (!alpha.leq(beta)) continue;
        auto qt = quotient(q, alpha);
        Partition down = push_down(qt, beta);
        CHECK(block_action_image(dis_rel(q, beta), alpha).same_group(dis_rel(qt.algebra, down)));
        CHECK(block_action_image(dis_ker(q, beta), alpha).same_group(dis_ker(qt.algebra, down)));
      }
  }
}

TEST_CASE("intersections of normal subgroups and their congruences") {
  for (const auto& q : {dihedral(4), dihedral(6), table1(kFlat4)}) {
    auto ns = norm_subgroups(q);
    for (const auto& n1 : ns)
      for (const auto& n2 : ns) {
        Partition lhs = con_of(q, intersection(n1, n2));
        CHECK(lhs == con_of(q, n1).meet(con_of(q, n2)));
      }
    for (const auto& n : ns) {
      Partition on = orbit_congruence(q, n);
      CHECK(dis_ker(q, on).orbit_partition() == on);
    }
    for (const auto& alpha : congruence_lattice(q)) {
      PermGroup hi = dis_ker(q, alpha);
      Partition orb = hi.orbit_partition();
      CHECK(orb.leq(alpha));
      CHECK(dis_ker(q, orb).same_group(hi));
      CHECK(dis_rel(q, alpha).is_subgroup_of(hi));
    }
  }
}

TEST_CASE("displacement bound also holds off racks") {
  auto z4 = z4_addition();
  CHECK(!z4.is_rack());
  for (const auto& alpha : congruence_lattice(z4))
    CHECK(dis_rel(z4, alpha).is_subgroup_of(dis_ker(z4, alpha)));
}
