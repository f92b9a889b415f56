#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "raq/enumeration.hpp"
#include "raq/perm_group.hpp"

using namespace raq;
using testutil::table1;

namespace {

std::uint64_t count_of(EnumKind kind, int order, EnumFilters filters = {}) {
  EnumSpec spec;
  spec.order = order;
  spec.kind = kind;
  spec.filters = filters;
  spec.count_only = true;
  return enumerate(spec);
}

std::vector<LeftQuasigroup> collect(EnumKind kind, int order, EnumFilters filters = {}) {
  EnumSpec spec;
  spec.order = order;
  spec.kind = kind;
  spec.filters = filters;
  std::vector<LeftQuasigroup> out;
  enumerate(spec, [&](const LeftQuasigroup& q) { out.push_back(q); });
  return out;
}

bool is_two_power(std::uint64_t v) {
  while (v % 2 == 0) v /= 2;
  return v == 1;
}

} // namespace

TEST_CASE("rack and quandle censuses") {
  EnumFilters conn;
  conn.connected = true;
  std::vector<int> orders{1, 2, 3, 4, 5, 6};
  CHECK(census(orders, EnumKind::rack, {}) ==
        std::vector<std::uint64_t>({1, 2, 6, 19, 74, 353}));
  CHECK(census(orders, EnumKind::quandle, {}) ==
        std::vector<std::uint64_t>({1, 1, 3, 7, 22, 73}));
  CHECK(census(orders, EnumKind::quandle, conn) ==
        std::vector<std::uint64_t>({1, 0, 1, 1, 3, 2}));
}

TEST_CASE("enumeration agrees with brute force") {
  for (int n = 1; n <= 4; ++n) {
    auto fast = collect(EnumKind::rack, n);
    auto slow = testutil::brute_force_classes(n, testutil::rows_are_rack);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
  for (int n = 1; n <= 3; ++n) {
    auto fast = collect(EnumKind::leftquasigroup, n);
    auto slow = testutil::brute_force_classes(n, [](const auto&) { return true; });
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
  CHECK(count_of(EnumKind::leftquasigroup, 2) == 3);
  CHECK(count_of(EnumKind::leftquasigroup, 4) == 14022);
}

TEST_CASE("emitted tables are canonical sorted and well formed") {
  auto racks = collect(EnumKind::rack, 5);
  REQUIRE(racks.size() == 74);
  for (std::size_t i = 0; i < racks.size(); ++i) {
    CHECK(racks[i].is_rack());
    CHECK(is_canonical_table(racks[i].flat(), 5));
    if (i > 0) CHECK(racks[i - 1].flat() < racks[i].flat());
  }
}

TEST_CASE("class c census and the printed small tables") {
  EnumFilters nr;
  nr.not_rack = true;
  CHECK(census({1, 2, 3, 4, 5, 6, 7}, EnumKind::classc, nr) ==
        std::vector<std::uint64_t>({0, 0, 0, 1, 1, 8, 20}));

  auto four = table1({{2, 4, 1, 3}, {3, 1, 4, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}});
  REQUIRE(four.is_class_c());
  REQUIRE(!four.is_rack());
  auto reps4 = collect(EnumKind::classc, 4, nr);
  REQUIRE(reps4.size() == 1);
  CHECK(reps4[0] == canonical_form(four));

  auto five = table1({{3, 4, 1, 5, 2},
                      {3, 2, 1, 4, 5},
                      {3, 5, 1, 2, 4},
                      {3, 2, 1, 4, 5},
                      {3, 2, 1, 4, 5}});
  REQUIRE(five.is_class_c());
  REQUIRE(!five.is_rack());
  auto reps5 = collect(EnumKind::classc, 5, nr);
  REQUIRE(reps5.size() == 1);
  CHECK(reps5[0] == canonical_form(five));
}

TEST_CASE("latin filter") {
  EnumFilters latin;
  latin.latin = true;
  CHECK(census({1, 2, 3, 4, 5}, EnumKind::leftquasigroup, latin) ==
        std::vector<std::uint64_t>({1, 1, 5, 35, 1411}));
  CHECK(count_of(EnumKind::quandle, 6, latin) == 0);
  CHECK(count_of(EnumKind::quandle, 5, latin) == 3);
}

TEST_CASE("involutory filter") {
  EnumFilters ic;
  ic.involutory = true;
  ic.connected = true;
  CHECK(count_of(EnumKind::quandle, 2, ic) == 0);
  CHECK(count_of(EnumKind::quandle, 3, ic) == 1);
  CHECK(count_of(EnumKind::quandle, 4, ic) == 0);
  CHECK(count_of(EnumKind::rack, 2, ic) == 1);
  EnumFilters inv;
  inv.involutory = true;
  auto invracks = collect(EnumKind::rack, 4, inv);
  auto cc = collect(EnumKind::classc, 4);
  std::uint64_t ccracks = 0;
  for (const auto& q : cc)
    if (q.is_rack()) ++ccracks;
  CHECK(invracks.size() == ccracks);
  for (const auto& q : invracks) CHECK(q.is_involutory());
}

TEST_CASE("medial and faithful filters agree with brute force") {
  EnumFilters medial, faithful;
  medial.medial = true;
  faithful.faithful = true;
  for (int n = 3; n <= 4; ++n) {
    auto slowm = testutil::brute_force_classes(n, [](const auto& rows) {
      return testutil::rows_are_rack(rows) &&
             LeftQuasigroup::from_table(rows).is_medial();
    });
    CHECK(count_of(EnumKind::rack, n, medial) == slowm.size());
    auto slowf = testutil::brute_force_classes(n, [](const auto& rows) {
      return testutil::rows_are_rack(rows) &&
             is_faithful(LeftQuasigroup::from_table(rows));
    });
    CHECK(count_of(EnumKind::rack, n, faithful) == slowf.size());
  }
}

TEST_CASE("connected racks of two power order have two group displacement groups") {
  EnumFilters conn;
  conn.connected = true;
  std::uint64_t seen = 0;
  for (int n : {4, 8}) {
    EnumSpec spec;
    spec.order = n;
    spec.kind = EnumKind::rack;
    spec.filters = conn;
    enumerate(spec, [&](const LeftQuasigroup& q) {
      ++seen;
      CHECK(is_two_power(dis(q).order()));
    });
  }
  CHECK(seen == 8);
}

TEST_CASE("size tiers and filter validation") {
  EnumSpec spec;
  spec.order = 9;
  spec.kind = EnumKind::rack;
  CHECK_THROWS_AS(enumerate(spec), std::invalid_argument);
  spec.order = 5;
  spec.kind = EnumKind::leftquasigroup;
  CHECK_THROWS_AS(enumerate(spec), std::invalid_argument);
  spec.order = 7;
  spec.filters.latin = true;
  CHECK_THROWS_AS(enumerate(spec), std::invalid_argument);
  spec = EnumSpec{};
  spec.order = 0;
  CHECK_THROWS_AS(enumerate(spec), std::invalid_argument);
  spec = EnumSpec{};
  spec.order = 3;
  spec.kind = EnumKind::quandle;
  spec.filters.not_rack = true;
  CHECK_THROWS_WITH_AS(enumerate(spec), "the not_rack filter contradicts the kind",
                       std::invalid_argument);
}

TEST_CASE("kind names round trip") {
  for (auto k : {EnumKind::leftquasigroup, EnumKind::rack, EnumKind::quandle, EnumKind::classc})
    CHECK(enum_kind_from_string(to_string(k)) == k);
  CHECK(enum_kind_from_string("classc") == EnumKind::classc);
  CHECK_THROWS_AS(enum_kind_from_string("group"), std::invalid_argument);
}

TEST_CASE("count only does not call the sink") {
  EnumSpec spec;
  spec.order = 4;
  spec.kind = EnumKind::quandle;
  spec.count_only = true;
  int calls = 0;
  CHECK(enumerate(spec, [&](const LeftQuasigroup&) { ++calls; }) == 7);
  CHECK(calls == 0);
}
