#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "raq/commutator.hpp"
#include "raq/congruence.hpp"
#include "raq/constructions.hpp"
#include "raq/terms.hpp"

using namespace raq;
using testutil::cyc;
using testutil::dihedral;
using testutil::projection;
using testutil::table1;

namespace {

LeftQuasigroup paper4() {
  return table1({{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 4}, {1, 2, 3, 4}});
}

LeftQuasigroup two_orbit3() { return table1({{1, 2, 3}, {1, 2, 3}, {2, 1, 3}}); }

LeftQuasigroup t4() { return affine_quandle({2, 2}, {{0, 1}, {1, 1}}); }

LeftQuasigroup conj6() {
  std::vector<Perm> tr;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) tr.push_back(cyc(4, {{i, j}}));
  return conjugation_quandle(tr);
}

LeftQuasigroup z4_addition() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
  return LeftQuasigroup::from_table(t);
}

std::vector<LeftQuasigroup> racks_up_to_iso(int n) {
  return testutil::brute_force_classes(n, testutil::rows_are_rack);
}

const std::vector<LeftQuasigroup>& rack_corpus() {
  static const std::vector<LeftQuasigroup> corpus = [] {
    std::vector<LeftQuasigroup> out;
    for (int n = 1; n <= 4; ++n)
      for (const auto& q : racks_up_to_iso(n)) out.push_back(q);
    out.push_back(dihedral(5));
    out.push_back(affine_quandle({5}, {{2}}));
    out.push_back(affine_quandle({5}, {{3}}));
    out.push_back(projection(5));
    out.push_back(permutation_rack(cyc(5, {{0, 1, 2, 3, 4}})));
    out.push_back(permutation_rack(cyc(5, {{0, 1}, {2, 3}})));
    out.push_back(table1(
        {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {2, 1, 3, 4, 5}}));
    return out;
  }();
  return corpus;
}

} // namespace

TEST_CASE("small rack census") {
  CHECK(racks_up_to_iso(1).size() == 1);
  CHECK(racks_up_to_iso(2).size() == 2);
  CHECK(racks_up_to_iso(3).size() == 6);
  CHECK(racks_up_to_iso(4).size() == 19);
}

TEST_CASE("semiregular actions") {
  auto p4 = paper4();
  PermGroup d = dis(p4);
  Partition lambda = cayley_kernel(p4);
  CHECK(lambda == Partition::from_blocks(4, {{0, 2, 3}, {1}}));
  CHECK(!semiregular(d, lambda));
  CHECK(semiregular(d, Partition::singletons(4)));
  CHECK(semiregular(dis(dihedral(4)), Partition::all(4)));
  CHECK(!semiregular(dis(two_orbit3()), Partition::all(3)));
  CHECK_THROWS_AS(semiregular(d, Partition::all(3)), std::invalid_argument);
}

TEST_CASE("abelian and central congruences") {
  auto p4 = paper4();
  Partition lambda = cayley_kernel(p4);
  CHECK(is_abelian_congruence(p4, lambda));
  CHECK(!is_central_congruence(p4, lambda));

  auto q3 = two_orbit3();
  CHECK(!is_abelian_congruence(q3, Partition::all(3)));
  CHECK(is_abelian_congruence(q3, Partition::singletons(3)));
  CHECK(is_central_congruence(q3, Partition::singletons(3)));

  auto d4 = dihedral(4);
  CHECK(is_abelian_congruence(d4, Partition::all(4)));
  CHECK(is_central_congruence(d4, Partition::all(4)));
  CHECK_THROWS_AS(is_abelian_congruence(d4, Partition::from_blocks(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);

  auto z4 = z4_addition();
  REQUIRE(!z4.is_rack());
  REQUIRE(!z4.is_class_c());
  CHECK_THROWS_AS(is_abelian_congruence(z4, Partition::all(4)), std::invalid_argument);
  CHECK(is_abelian_congruence(z4, Partition::all(4), true));
}

TEST_CASE("center congruences") {
  CHECK(center_congruence(dihedral(3)) == Partition::all(3));
  CHECK(center_congruence(dihedral(4)) == Partition::all(4));
  CHECK(center_congruence(projection(4)) == Partition::all(4));
  CHECK(center_congruence(paper4()) == Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK(center_congruence(conj6()) == Partition::singletons(6));
  CHECK(center_congruence(two_orbit3()) == Partition::from_blocks(3, {{0, 1}, {2}}));

  std::vector<LeftQuasigroup> medial{dihedral(2), dihedral(3), dihedral(4), dihedral(5),
                                     dihedral(6), t4(), affine_quandle({5}, {{2}}),
                                     projection(3), permutation_rack(cyc(3, {{0, 1, 2}}))};
  for (const auto& q : medial) {
    REQUIRE(q.is_medial());
    CHECK(center_congruence(q) == sigma_partition(q));
  }

  for (const auto& q : {dihedral(3), dihedral(4), paper4(), two_orbit3(), conj6()})
    CHECK(is_central_congruence(q, center_congruence(q)));
}

TEST_CASE("commutators annihilate the cayley kernel") {
  for (const auto& q : {dihedral(4), dihedral(6), paper4()}) {
    Partition lambda = cayley_kernel(q);
    for (const auto& alpha : congruence_lattice(q))
      CHECK(commutator_pair(q, alpha, lambda) == Partition::singletons(q.order()));
  }
}

TEST_CASE("commutator pairs") {
  auto q3 = two_orbit3();
  Partition gamma = Partition::from_blocks(3, {{0, 1}, {2}});
  CHECK(commutator_pair(q3, Partition::all(3), Partition::all(3)) == gamma);
  CHECK(commutator_pair(q3, gamma, gamma) == Partition::singletons(3));
  CHECK(commutator_pair(q3, gamma, Partition::all(3)) == Partition::singletons(3));

  CHECK(commutator_pair(dihedral(3), Partition::all(3), Partition::all(3)) ==
        Partition::singletons(3));

  auto c6 = conj6();
  Partition pairs = Partition::from_blocks(6, {{0, 5}, {1, 4}, {2, 3}});
  CHECK(commutator_pair(c6, Partition::all(6), Partition::all(6)) == pairs);
  CHECK(commutator_pair(c6, pairs, pairs) == Partition::singletons(6));
  auto lat = congruence_lattice(c6);
  REQUIRE(lat.size() == 3);
  for (const auto& a : lat)
    for (const auto& b : lat)
      CHECK(commutator_pair(c6, a, b) == commutator_pair(c6, b, a));
}

TEST_CASE("displacement criteria match the term condition") {
  for (const auto& q : rack_corpus()) {
    int n = q.order();
    Partition zero = Partition::singletons(n);
    for (const auto& alpha : congruence_lattice(q)) {
      bool ab = is_abelian_congruence(q, alpha);
      CHECK(ab == !tc_falsify(q, alpha, alpha, zero, 9).has_value());
      bool ce = is_central_congruence(q, alpha);
      CHECK(ce == !tc_falsify(q, alpha, Partition::all(n), zero, 9).has_value());
    }
  }
}

TEST_CASE("commutator pairs agree with the congruence classification") {
  for (const auto& q : rack_corpus()) {
    int n = q.order();
    Partition zero = Partition::singletons(n);
    for (const auto& alpha : congruence_lattice(q)) {
      CHECK(is_abelian_congruence(q, alpha) == (commutator_pair(q, alpha, alpha) == zero));
      CHECK(is_central_congruence(q, alpha) ==
            (commutator_pair(q, alpha, Partition::all(n)) == zero));
    }
  }
}

TEST_CASE("solvability and nilpotence") {
  auto rd3 = solvability_report(dihedral(3));
  CHECK(rd3.quandle_solvable);
  CHECK(rd3.quandle_nilpotent);
  CHECK(rd3.quandle_solv_len == 1);
  CHECK(rd3.quandle_nilp_len == 1);
  CHECK(rd3.group_solv_len == 1);
  CHECK(rd3.chain_route_used);

  auto rq3 = solvability_report(two_orbit3());
  CHECK(rq3.quandle_solv_len == 2);
  CHECK(rq3.quandle_nilp_len == 2);
  CHECK(rq3.group_solv_len == 1);
  CHECK(rq3.group_nilp_len == 1);

  auto rc6 = solvability_report(conj6());
  CHECK(rc6.quandle_solvable);
  CHECK(!rc6.quandle_nilpotent);
  CHECK(rc6.quandle_solv_len == 2);
  CHECK(rc6.quandle_nilp_len == -1);
  CHECK(rc6.group_solvable);
  CHECK(!rc6.group_nilpotent);
  CHECK(rc6.group_solv_len == 2);

  auto r1 = solvability_report(projection(1));
  CHECK(r1.quandle_solv_len == 0);
  CHECK(r1.quandle_nilp_len == 0);
  CHECK(r1.group_solv_len == 0);

  auto rprod = solvability_report(direct_product(dihedral(4), dihedral(3)));
  CHECK(rprod.quandle_nilpotent);
  CHECK(rprod.quandle_nilp_len == 1);
  CHECK(rprod.chain_route_used);

  auto rbig = solvability_report(direct_product(dihedral(3), conj6()));
  CHECK(!rbig.chain_route_used);
  CHECK(rbig.quandle_solvable);
  CHECK(!rbig.quandle_nilpotent);
  CHECK(rbig.quandle_solv_len == -1);

  auto sub = subalgebra_generated(conj6(), {0, 1});
  REQUIRE(sub.algebra.order() == 3);
  CHECK(solvability_report(sub.algebra).quandle_solvable);
  CHECK(solvability_report(quotient(conj6(), Partition::from_blocks(6, {{0, 5}, {1, 4}, {2, 3}}))
                               .algebra)
            .quandle_solvable);

  CHECK_THROWS_AS(solvability_report(z4_addition()), std::invalid_argument);
}

TEST_CASE("medial racks are nilpotent of length at most two") {
  std::vector<LeftQuasigroup> medial{dihedral(2), dihedral(3), dihedral(4), dihedral(5),
                                     dihedral(6), t4(), affine_quandle({5}, {{2}}),
                                     affine_quandle({3, 3}, {{0, 2}, {1, 0}}), projection(4),
                                     permutation_rack(cyc(4, {{0, 1}, {2, 3}})),
                                     permutation_rack(cyc(3, {{0, 1, 2}}))};
  for (const auto& q : medial) {
    REQUIRE(q.is_medial());
    auto r = solvability_report(q);
    CHECK(r.quandle_nilpotent);
    CHECK(r.quandle_nilp_len <= 2);
  }
}

TEST_CASE("central orbit congruences") {
  int runs = 0;
  for (const auto& q : {dihedral(9), t4(), galkin_quandle(2, 0), galkin_quandle(2, 1), conj6()}) {
    PermGroup z = center(dis(q));
    for (const auto& n : norm_subgroups(q)) {
      if (!n.is_subgroup_of(z)) continue;
      Partition on = orbit_congruence(q, n);
      if (!is_connected(quotient(q, on).algebra)) continue;
      CHECK(is_central_congruence(q, on));
      ++runs;
    }
  }
  CHECK(runs >= 6);
}

TEST_CASE("prime decompositions") {
  auto pd3 = prime_decomposition(dihedral(3));
  CHECK(pd3.primes == std::vector<int>{3});
  REQUIRE(pd3.factors.size() == 1);
  CHECK(isomorphism(pd3.factors[0], dihedral(3)).has_value());
  CHECK(isomorphism(pd3.product, dihedral(3)).has_value());

  auto pt4 = prime_decomposition(t4());
  CHECK(pt4.primes == std::vector<int>{2});
  CHECK(pt4.product.order() == 4);

  auto a15 = affine_quandle({15}, {{2}});
  auto p15 = prime_decomposition(a15);
  REQUIRE(p15.primes.size() == 2);
  for (std::size_t i = 0; i < p15.primes.size(); ++i) {
    if (p15.primes[i] == 3) CHECK(isomorphism(p15.factors[i], dihedral(3)).has_value());
    if (p15.primes[i] == 5)
      CHECK(isomorphism(p15.factors[i], affine_quandle({5}, {{2}})).has_value());
  }
  CHECK(p15.product.order() == 15);

  auto prod = direct_product(t4(), dihedral(3));
  auto pp = prime_decomposition(prod);
  REQUIRE(pp.primes.size() == 2);
  std::vector<int> orders;
  for (const auto& f : pp.factors) orders.push_back(f.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>({3, 4}));

  CHECK_THROWS_WITH_AS(prime_decomposition(conj6()),
                       "prime decomposition needs a nilpotent quandle", std::invalid_argument);
  CHECK_THROWS_WITH_AS(prime_decomposition(paper4()),
                       "prime decomposition needs a connected quandle", std::invalid_argument);
  CHECK_THROWS_WITH_AS(prime_decomposition(permutation_rack(cyc(3, {{0, 1, 2}}))),
                       "prime decomposition needs a quandle", std::invalid_argument);
}

TEST_CASE("cdsg reports") {
  auto rd3 = cdsg_check(dihedral(3));
  CHECK(rd3.cdsg);
  CHECK(rd3.evidence.empty());
  auto rp4 = cdsg_check(paper4());
  CHECK(!rp4.cdsg);
  CHECK(!rp4.evidence.empty());
  CHECK(!cdsg_check(dihedral(4)).cdsg);
}
