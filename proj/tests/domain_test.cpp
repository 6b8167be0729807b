#include <doctest.h>

#include <random>
#include <set>

#include "ufx/domain.hpp"
#include "ufx/errors.hpp"

using namespace ufx;

namespace {

const ConstraintId c10{10};
const ConstraintId c14{14};

struct MaStore {
  DomainStore store;
  VarId ma = store.add_variable({"Ma", 1, 4});
};

}  // namespace

TEST_CASE("remove_value records exactly one explanation") {
  MaStore s;
  auto out = s.store.remove_value(s.ma, 4, Explanation{c10});
  CHECK(out.kind == RemovalKind::Removed);
  CHECK(s.store.values(s.ma) == std::vector<Value>{1, 2, 3});
  CHECK(s.store.explanation_for(s.ma, 4) == Explanation{c10});
  CHECK_FALSE(s.store.explanation_for(s.ma, 2).has_value());

  SUBCASE("second removal of the same value is a no-op") {
    const auto stamp = s.store.record(s.ma, 4)->stamp;
    auto again = s.store.remove_value(s.ma, 4, Explanation{c14});
    CHECK(again.kind == RemovalKind::AlreadyAbsent);
    CHECK(s.store.record(s.ma, 4)->stamp == stamp);
    CHECK(s.store.explanation_for(s.ma, 4) == Explanation{c10});
    CHECK(s.store.record_count() == 1);
  }

  SUBCASE("restoring the citing constraint forgets the record") {
    auto back = s.store.restore_citing(c10);
    REQUIRE(back.size() == 1);
    CHECK(back[0].value == 4);
    CHECK_FALSE(s.store.explanation_for(s.ma, 4).has_value());
    CHECK(s.store.size(s.ma) == 4);
  }
}

TEST_CASE("emptying a domain reports a wipeout after recording") {
  MaStore s;
  s.store.remove_value(s.ma, 1, Explanation{ConstraintId{1}});
  s.store.remove_value(s.ma, 2, Explanation{ConstraintId{2}});
  s.store.remove_value(s.ma, 4, Explanation{c10});
  REQUIRE(s.store.values(s.ma) == std::vector<Value>{3});
  auto out = s.store.remove_value(s.ma, 3, Explanation{c14, ConstraintId{5}});
  CHECK(out.kind == RemovalKind::Wipeout);
  CHECK(out.variable == s.ma);
  CHECK(s.store.empty(s.ma));
  CHECK(s.store.explanation_for(s.ma, 3) == Explanation{c14, ConstraintId{5}});
}

TEST_CASE("domain store input errors") {
  MaStore s;
  CHECK_THROWS_AS(s.store.remove_value(VarId{7}, 1, Explanation{c10}), InputError);
  CHECK_THROWS_AS(s.store.remove_value(s.ma, 5, Explanation{c10}), InputError);
  CHECK_THROWS_AS(s.store.remove_value(s.ma, 1, Explanation{}), PreconditionError);
  CHECK_THROWS_AS((void)s.store.explanation_for(VarId{7}, 1), InputError);
  CHECK_THROWS_AS(s.store.add_variable({"Ma", 1, 2}), InputError);
  CHECK_THROWS_AS(s.store.add_variable({"bad", 3, 2}), InputError);
}

TEST_CASE("min and max skip holes") {
  DomainStore store;
  auto v = store.add_variable({"v", -2, 3});
  store.remove_value(v, -2, Explanation{ConstraintId{0}});
  store.remove_value(v, 3, Explanation{ConstraintId{0}});
  store.remove_value(v, 0, Explanation{ConstraintId{1}});
  CHECK(store.min(v) == -1);
  CHECK(store.max(v) == 2);
  CHECK(store.values(v) == std::vector<Value>{-1, 1, 2});
}

TEST_CASE("ledger bijection and stamp order survive random remove/restore traffic") {
  std::mt19937 rng(12345);
  DomainStore store;
  std::vector<VarId> vars;
  for (int i = 0; i < 4; ++i) vars.push_back(store.add_variable({"v" + std::to_string(i), 0, 5}));

  for (int step = 0; step < 2000; ++step) {
    const auto v = vars[rng() % vars.size()];
    if (rng() % 3 != 0) {
      Explanation e;
      const auto k = 1 + rng() % 3;
      for (unsigned i = 0; i < k; ++i) e.insert(ConstraintId{static_cast<std::uint32_t>(rng() % 8)});
      store.remove_value(v, static_cast<Value>(rng() % 6), e);
    } else {
      store.restore_citing(ConstraintId{static_cast<std::uint32_t>(rng() % 8)});
    }

    std::size_t missing = 0;
    for (auto var : vars) {
      for (Value a = 0; a <= 5; ++a) {
        const bool present = store.contains(var, a);
        const bool has_record = store.record(var, a) != nullptr;
        CHECK(present != has_record);
        if (!present) ++missing;
      }
    }
    CHECK(missing == store.record_count());

    auto recs = store.records();
    std::set<std::pair<std::uint32_t, Value>> keys;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(keys.insert({recs[i]->variable.index, recs[i]->value}).second);
      if (i > 0) CHECK(recs[i - 1]->stamp < recs[i]->stamp);
    }
  }
}
