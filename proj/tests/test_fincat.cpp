#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "brauer/corpus.hpp"
#include "brauer/fincat.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

// Independent trace-class oracle: connected components of the graph on
// endomorphisms with an edge g∘f — f∘g for every opposed pair, by plain BFS.
std::vector<std::vector<int>> trace_components(const FinCat& c) {
  std::vector<int> endos = c.endomorphisms();
  auto is_endo = [&](int m) { return c.src(m) == c.dst(m); };
  std::vector<std::vector<int>> adj(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (c.src(g) != c.dst(f) || c.dst(g) != c.src(f)) continue;
      int gf = c.compose(g, f), fg = c.compose(f, g);
      adj[gf].push_back(fg);
      adj[fg].push_back(gf);
    }
  std::vector<int> comp(c.morphism_count(), -1);
  std::vector<std::vector<int>> out;
  for (int e : endos) {
    if (comp[e] >= 0) continue;
    std::vector<int> stack{e}, members;
    comp[e] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int m = stack.back();
      stack.pop_back();
      members.push_back(m);
      for (int n : adj[m])
        if (comp[n] < 0) {
          comp[n] = comp[e];
          stack.push_back(n);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
    (void)is_endo;
  }
  return out;
}

void check_traces_match(const FinCat& c) {
  TraceSet t = trace_set(c);
  auto comps = trace_components(c);
  REQUIRE(t.class_count == static_cast<int>(comps.size()));
  // same partition
  for (const auto& members : comps) {
    std::set<int> classes;
    for (int m : members) classes.insert(t.class_of(m));
    CHECK(classes.size() == 1);
  }
}

}  // namespace

TEST_CASE("validate_category accepts the corpus and fills identity composites") {
  FinCat term = corpus::terminal();
  CHECK(term.object_count() == 1);
  CHECK(term.morphism_count() == 1);

  FinCat wa = corpus::walking_arrow();
  CHECK(wa.morphism_count() == 3);
  int a = wa.morphism_index("a");
  CHECK(wa.compose(wa.identity(wa.dst(a)), a) == a);
  CHECK(wa.compose(a, wa.identity(wa.src(a))) == a);
  CHECK(wa.hom(wa.object_index("x"), wa.object_index("y")).size() == 1);
  CHECK(wa.hom(wa.object_index("y"), wa.object_index("x")).empty());
}

TEST_CASE("validate_category rejects broken tables") {
  SUBCASE("dangling reference") {
    RawCategory c;
    c.objects = {"x"};
    c.morphisms = {{"f", "x", "nowhere"}};
    c.identities = {{"x", "f"}};
    CHECK_THROWS_WITH_AS(validate_category(c), doctest::Contains("nowhere"), Error);
  }
  SUBCASE("non-associative composition") {
    // one object, morphisms {e, f, g}; f∘f = g, everything else collapses to e
    // so that (f∘f)∘f != f∘(f∘f).
    RawCategory c;
    c.objects = {"x"};
    c.morphisms = {{"e", "x", "x"}, {"f", "x", "x"}, {"g", "x", "x"}};
    c.identities = {{"x", "e"}};
    c.composition = {{"f", "f", "g"}, {"g", "f", "e"}, {"f", "g", "f"},
                     {"g", "g", "e"}};
    try {
      validate_category(c);
      FAIL("expected AssocViolation");
    } catch (const Error& e) {
      CHECK(e.kind() == "AssocViolation");
    }
  }
  SUBCASE("identity law violation") {
    RawCategory c;
    c.objects = {"x"};
    c.morphisms = {{"e", "x", "x"}, {"f", "x", "x"}};
    c.identities = {{"x", "e"}};
    c.composition = {{"e", "e", "e"}, {"e", "f", "e"}, {"f", "e", "f"}, {"f", "f", "f"}};
    try {
      validate_category(c);
      FAIL("expected IdentityViolation");
    } catch (const Error& e) {
      CHECK(e.kind() == "IdentityViolation");
    }
  }
  SUBCASE("missing composite") {
    RawCategory c;
    c.objects = {"x"};
    c.morphisms = {{"e", "x", "x"}, {"f", "x", "x"}};
    c.identities = {{"x", "e"}};
    CHECK_THROWS_AS(validate_category(c), Error);
  }
}

TEST_CASE("isomorphism predicates") {
  FinCat iso = corpus::walking_iso();
  CHECK(iso.is_iso(iso.morphism_index("a")));
  CHECK(iso.objects_isomorphic(0, 1));
  FinCat wa = corpus::walking_arrow();
  CHECK_FALSE(wa.is_iso(wa.morphism_index("a")));
  CHECK_FALSE(wa.objects_isomorphic(wa.object_index("x"), wa.object_index("y")));
}

TEST_CASE("to_raw round trip") {
  FinCat iso = corpus::walking_iso();
  FinCat again = validate_category(iso.to_raw());
  CHECK(again.morphism_count() == iso.morphism_count());
  for (int m = 0; m < iso.morphism_count(); ++m)
    CHECK(again.morphism_id(m) == iso.morphism_id(m));
}

TEST_CASE("close_presentation") {
  SUBCASE("idempotent monoid") {
    Presentation p;
    p.objects = {"x"};
    p.generators = {{"p", "x", "x"}};
    p.relations = {{{"p", "p"}, {"p"}}};
    FinCat c = close_presentation(p, 8);
    CHECK(c.morphism_count() == 2);
    int pm = c.morphism_index("p");
    CHECK(c.compose(pm, pm) == pm);
  }
  SUBCASE("two-element group") {
    Presentation p;
    p.objects = {"g"};
    p.generators = {{"s", "g", "g"}};
    p.relations = {{{"s", "s"}, {}}};
    FinCat c = close_presentation(p, 8);
    CHECK(c.morphism_count() == 2);
    int s = c.morphism_index("s");
    CHECK(c.compose(s, s) == c.identity(0));
  }
  SUBCASE("free monoid exceeds any bound") {
    Presentation p;
    p.objects = {"x"};
    p.generators = {{"f", "x", "x"}};
    try {
      close_presentation(p, 8);
      FAIL("expected BoundExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == "BoundExceeded");
    }
  }
  SUBCASE("composite words in application order") {
    Presentation p;
    p.objects = {"x", "y", "z"};
    p.generators = {{"f", "x", "y"}, {"g", "y", "z"}};
    FinCat c = close_presentation(p, 8);
    // the path f-then-g is the composite g∘f
    int fg = c.morphism_index("f.g");
    REQUIRE(fg >= 0);
    CHECK(fg == c.compose(c.morphism_index("g"), c.morphism_index("f")));
    CHECK(c.morphism_index("id_x") == c.identity(c.object_index("x")));
  }
}

TEST_CASE("functor checks and composition") {
  FinCat term = corpus::terminal();
  FinCat iso = corpus::walking_iso();
  Functor inc{&term, &iso, {iso.object_index("x")}, {iso.morphism_index("id_x")}};
  CHECK(check_functor(inc).ok());

  Functor bad = inc;
  bad.morphism_map[0] = iso.morphism_index("a");  // not identity-preserving
  CHECK_FALSE(check_functor(bad).ok());

  Functor idf = identity_functor(iso);
  CHECK(check_functor(idf).ok());
  Functor both = compose_functors(idf, inc);
  CHECK(check_functor(both).ok());
  CHECK(both.object_map == inc.object_map);
}

TEST_CASE("trace classes agree with the component oracle") {
  for (const FinCat& c : {corpus::terminal(), corpus::walking_arrow(), corpus::walking_iso(),
                          corpus::group_z2()})
    check_traces_match(c);

  CHECK(trace_set(corpus::terminal()).class_count == 1);
  CHECK(trace_set(corpus::walking_arrow()).class_count == 2);
  CHECK(trace_set(corpus::walking_iso()).class_count == 1);  // id_x ~ id_y via a, b
  CHECK(trace_set(corpus::group_z2()).class_count == 2);
}

TEST_CASE("trace class representative is the least identifier") {
  FinCat iso = corpus::walking_iso();
  TraceSet t = trace_set(iso);
  REQUIRE(t.class_count == 1);
  CHECK(iso.morphism_id(t.representative[0]) == "id_x");
}

TEST_CASE("right adjoint search") {
  FinCat term = corpus::terminal();
  FinCat wa = corpus::walking_arrow();
  FinCat z2 = corpus::group_z2();

  SUBCASE("inclusion of x into the walking arrow has a right adjoint") {
    Functor f{&term, &wa, {wa.object_index("x")}, {wa.morphism_index("id_x")}};
    auto adj = find_right_adjoint(f);
    REQUIRE(adj.has_value());
    CHECK(check_adjunction(*adj).ok());
    for (int d = 0; d < wa.object_count(); ++d) CHECK(comma_has_terminal(f, d));
    // the terminal object of (F ↓ d) is x itself in both comma categories
    CHECK(adj->right.object_map[wa.object_index("x")] == 0);
    CHECK(adj->right.object_map[wa.object_index("y")] == 0);
  }
  SUBCASE("inclusion into the group has none") {
    Functor f{&term, &z2, {0}, {z2.morphism_index("e")}};
    CHECK_FALSE(find_right_adjoint(f).has_value());
    CHECK_FALSE(comma_has_terminal(f, 0));
  }
  SUBCASE("identity functor is its own adjoint") {
    Functor f = identity_functor(wa);
    auto adj = find_right_adjoint(f);
    REQUIRE(adj.has_value());
    CHECK(check_adjunction(*adj).ok());
    CHECK(adj->right.object_map == f.object_map);
  }
}
