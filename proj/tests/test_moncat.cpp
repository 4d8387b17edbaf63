#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "brauer/corpus.hpp"
#include "brauer/moncat.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

// Monoid-of-objects monoidal category with an idempotent absorbing element:
// objects {1, a}, a⊗a = a, identities only. Valid and symmetric but a has no
// dual (nothing tensors with a to give 1).
StrictMonCat idempotent_moncat() {
  RawMonCat m;
  m.base.objects = {"1", "a"};
  m.base.morphisms = {{"i1", "1", "1"}, {"ia", "a", "a"}};
  m.base.identities = {{"1", "i1"}, {"a", "ia"}};
  m.unit = "1";
  auto prod = [](const std::string& x, const std::string& y) -> std::string {
    return x == "1" && y == "1" ? "1" : "a";
  };
  for (const std::string x : {"1", "a"})
    for (const std::string y : {"1", "a"}) {
      m.tensor_objects.push_back({x, y, prod(x, y)});
      m.tensor_morphisms.push_back({"i" + x, "i" + y, "i" + prod(x, y)});
      m.symmetry.push_back({x, y, "i" + prod(x, y)});
    }
  return validate_monoidal(m);
}

}  // namespace

TEST_CASE("corpus monoidal categories validate and round trip") {
  for (const StrictMonCat& m : {corpus::cyclic3(), corpus::discrete_z2(), corpus::two_group()}) {
    StrictMonCat again = validate_monoidal(m.to_raw());
    CHECK(again.unit_obj() == m.unit_obj());
    for (int x = 0; x < m.base().object_count(); ++x)
      for (int y = 0; y < m.base().object_count(); ++y)
        CHECK(again.tensor_obj(x, y) == m.tensor_obj(x, y));
  }
}

TEST_CASE("tensor folds over object lists") {
  StrictMonCat c = corpus::cyclic3();
  int one = c.base().object_index("1");
  CHECK(c.tensor_obj({}) == c.unit_obj());
  CHECK(c.tensor_obj({one, one, one}) == c.unit_obj());
  CHECK(c.tensor_obj({one, one}) == c.base().object_index("2"));
}

TEST_CASE("validate_monoidal rejects broken coherence") {
  SUBCASE("non-associative tensor") {
    RawMonCat m = corpus::cyclic3().to_raw();
    for (auto& t : m.tensor_objects)
      if (t[0] == "1" && t[1] == "1") t[2] = "0";  // breaks (1⊗1)⊗1 = 1⊗(1⊗1) and more
    CHECK_THROWS_AS(validate_monoidal(m), Error);
  }
  SUBCASE("symmetry fails involution") {
    RawMonCat m = corpus::two_group().to_raw();
    for (auto& t : m.symmetry)
      if (t[0] == "p0" && t[1] == "p1") t[2] = "t1";  // s(p1,p0)∘s(p0,p1) = t1 ≠ id
    try {
      validate_monoidal(m);
      FAIL("expected a symmetry violation");
    } catch (const Error& e) {
      CHECK(e.kind() == "SymmetryViolation");
    }
  }
  SUBCASE("unit law broken") {
    RawMonCat m = corpus::discrete_z2().to_raw();
    for (auto& t : m.tensor_objects)
      if (t[0] == "p0" && t[1] == "p1") t[2] = "p0";
    CHECK_THROWS_AS(validate_monoidal(m), Error);
  }
}

TEST_CASE("duals in the cyclic group category") {
  StrictMonCat c = corpus::cyclic3();
  int one = c.base().object_index("1");
  int two = c.base().object_index("2");

  auto d = find_dual(c, one);
  REQUIRE(d.has_value());
  CHECK(d->dual == two);
  CHECK(triangles_hold(c, *d));

  // oracle: exhaustive scan over all candidate (dual, ev, coev) triples
  int witnesses = 0;
  for (int y = 0; y < c.base().object_count(); ++y)
    for (int ev : c.base().hom(c.tensor_obj(one, y), c.unit_obj()))
      for (int coev : c.base().hom(c.unit_obj(), c.tensor_obj(y, one)))
        if (triangles_hold(c, DualData{one, y, ev, coev})) ++witnesses;
  CHECK(witnesses == 1);
}

TEST_CASE("check_rigid") {
  RigidityReport cyc = check_rigid(corpus::cyclic3());
  CHECK(cyc.all_dualizable());
  CHECK(cyc.report.ok());

  RigidityReport tg = check_rigid(corpus::two_group());
  CHECK(tg.all_dualizable());
  CHECK(tg.report.ok());

  RigidityReport idem = check_rigid(idempotent_moncat());
  CHECK_FALSE(idem.all_dualizable());
  CHECK_FALSE(idem.duals[1].has_value());  // a has no dual
  CHECK(idem.duals[0].has_value());        // the unit always has one
}

TEST_CASE("triangles_hold is an independent re-check") {
  StrictMonCat tg = corpus::two_group();
  int p1 = tg.base().object_index("p1");
  // p1 is self-dual; ev = coev = t0 also passes both triangles (t1∘t1 = id),
  // but mixing t0 with i0 fails.
  int i0 = tg.base().morphism_index("i0");
  int t0 = tg.base().morphism_index("t0");
  CHECK(triangles_hold(tg, DualData{p1, p1, i0, i0}));
  CHECK(triangles_hold(tg, DualData{p1, p1, t0, t0}));
  CHECK_FALSE(triangles_hold(tg, DualData{p1, p1, t0, i0}));
}

TEST_CASE("find_dual returns the least witness") {
  StrictMonCat tg = corpus::two_group();
  int p1 = tg.base().object_index("p1");
  auto d = find_dual(tg, p1);
  REQUIRE(d.has_value());
  // "i0" < "t0", so the identity pair is picked
  CHECK(tg.base().morphism_id(d->ev) == "i0");
  CHECK(tg.base().morphism_id(d->coev) == "i0");
}

TEST_CASE("lax monoidal functor check") {
  StrictMonCat c = corpus::cyclic3();
  LaxMonFunctor f;
  f.underlying = identity_functor(c.base());
  const int n = c.base().object_count();
  f.mu.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) f.mu[x * n + y] = c.base().identity(c.tensor_obj(x, y));
  f.unit_mor = c.base().identity(c.unit_obj());
  CHECK(check_lax_monoidal(c, c, f).ok());

  LaxMonFunctor bad = f;
  bad.unit_mor = c.base().identity(c.base().object_index("1"));  // ill-typed unit
  CHECK_FALSE(check_lax_monoidal(c, c, bad).ok());
}
