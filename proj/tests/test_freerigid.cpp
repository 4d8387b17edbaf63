#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <iostream>
#include <set>

#include "brauer/cobordism.hpp"
#include "brauer/corpus.hpp"
#include "brauer/freerigid.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

LabeledWord lw(std::initializer_list<std::pair<int, int>> entries) {
  LabeledWord w;
  for (auto [x, s] : entries) w.entries.emplace_back(x, static_cast<int8_t>(s));
  return w;
}

}  // namespace

TEST_CASE("words: dual, concat, signs") {
  FinCat wa = corpus::walking_arrow();
  int x = wa.object_index("x"), y = wa.object_index("y");
  LabeledWord w = lw({{x, 1}, {y, -1}});
  CHECK(w.to_string(wa) == "[x+;y-]");
  CHECK(fr_dual(w) == lw({{y, 1}, {x, -1}}));
  CHECK(fr_dual(fr_dual(w)) == w);
  CHECK(w.signs() == parse_signs("+-"));
  CHECK(word_concat(w, w).length() == 4);
}

TEST_CASE("validation catches ill-typed labels") {
  FinCat wa = corpus::walking_arrow();
  BrauerContext ctx = make_context(wa);
  int x = wa.object_index("x"), y = wa.object_index("y");
  BrauerMor f;
  f.source = lw({{x, 1}});
  f.target = lw({{y, 1}});
  f.pairs = {{0, 1}};
  f.labels = {wa.morphism_index("a")};
  fr_validate(ctx, f);  // a: x -> y along the flow: fine

  BrauerMor bad = f;
  bad.labels = {wa.morphism_index("id_x")};
  try {
    fr_validate(ctx, bad);
    FAIL("expected LabelTypeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == "LabelTypeMismatch");
  }

  BrauerMor loops = fr_identity(wa, LabeledWord{});
  loops.loops = {7};
  CHECK_THROWS_AS(fr_validate(ctx, loops), Error);
}

TEST_CASE("cap and cup are well-typed and satisfy the zig-zag") {
  for (const FinCat& c : {corpus::walking_arrow(), corpus::group_z2()}) {
    BrauerContext ctx = make_context(c);
    for (int l = 0; l < c.morphism_count(); ++l) {
      BrauerMor cap = fr_ev(c, l);
      BrauerMor cup = fr_coev(c, l);
      fr_validate(ctx, cap);
      fr_validate(ctx, cup);
      // identity-labeled cups/caps satisfy the triangle for the generator word
      if (!c.is_identity(l)) continue;
      LabeledWord w = lw({{c.src(l), 1}});
      LabeledWord dw = fr_dual(w);
      BrauerMor t1 = fr_compose(ctx, fr_tensor(cap, fr_identity(c, w)),
                                fr_tensor(fr_identity(c, w), cup));
      CHECK(t1 == fr_identity(c, w));
      BrauerMor t2 = fr_compose(ctx, fr_tensor(fr_identity(c, dw), cap),
                                fr_tensor(cup, fr_identity(c, dw)));
      CHECK(t2 == fr_identity(c, dw));
    }
  }
}

TEST_CASE("composing cup with cap makes a loop of the composite's trace class") {
  FinCat wa = corpus::walking_arrow();
  BrauerContext ctx = make_context(wa);
  int idx = wa.morphism_index("id_x");
  // coev labeled id_x: ∅ -> (x-, x+); then the cap (x-, x+) -> ∅ labeled id_x
  BrauerMor cup = fr_coev(wa, idx);
  BrauerMor cap;
  cap.source = cup.target;
  cap.pairs = {{0, 1}};
  cap.labels = {idx};
  fr_validate(ctx, cap);
  BrauerMor loop = fr_compose(ctx, cap, cup);
  CHECK(loop.source.length() == 0);
  CHECK(loop.target.length() == 0);
  REQUIRE(loop.loops.size() == 1);
  CHECK(loop.loops[0] == ctx.traces.class_of(idx));
}

TEST_CASE("category laws, exhaustively on short words") {
  for (const FinCat& c : {corpus::terminal(), corpus::walking_arrow(), corpus::group_z2()}) {
    BrauerContext ctx = make_context(c);
    auto words = all_labeled_words(c, c.object_count() > 1 ? 2 : 2);
    // identity laws
    for (const auto& w1 : words)
      for (const auto& w2 : words)
        for (const auto& f : fr_enumerate_homs(ctx, w1, w2, 1)) {
          CHECK(fr_compose(ctx, fr_identity(c, w2), f) == f);
          CHECK(fr_compose(ctx, f, fr_identity(c, w1)) == f);
        }
    // associativity on a restricted square of words
    std::vector<LabeledWord> small(words.begin(),
                                   words.begin() + std::min<std::size_t>(words.size(), 5));
    for (const auto& w1 : small)
      for (const auto& w2 : small)
        for (const auto& w3 : small)
          for (const auto& w4 : small)
            for (const auto& f : fr_enumerate_homs(ctx, w1, w2, 1))
              for (const auto& g : fr_enumerate_homs(ctx, w2, w3, 0))
                for (const auto& h : fr_enumerate_homs(ctx, w3, w4, 0))
                  CHECK(fr_compose(ctx, h, fr_compose(ctx, g, f)) ==
                        fr_compose(ctx, fr_compose(ctx, h, g), f));
  }
}

TEST_CASE("interchange of tensor and composition") {
  FinCat c = corpus::group_z2();
  BrauerContext ctx = make_context(c);
  auto words = all_labeled_words(c, 1);
  for (const auto& a1 : words)
    for (const auto& a2 : words)
      for (const auto& b1 : words)
        for (const auto& b2 : words)
          for (const auto& f1 : fr_enumerate_homs(ctx, a1, a2, 1))
            for (const auto& f2 : fr_enumerate_homs(ctx, b1, b2, 0))
              for (const auto& g1 : fr_enumerate_homs(ctx, a2, a1, 0))
                for (const auto& g2 : fr_enumerate_homs(ctx, b2, b1, 0))
                  CHECK(fr_compose(ctx, fr_tensor(g1, g2), fr_tensor(f1, f2)) ==
                        fr_tensor(fr_compose(ctx, g1, f1), fr_compose(ctx, g2, f2)));
}

TEST_CASE("symmetry: involution and naturality") {
  FinCat c = corpus::walking_arrow();
  BrauerContext ctx = make_context(c);
  auto words = all_labeled_words(c, 1);
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      BrauerMor s12 = fr_symmetry(c, w1, w2);
      BrauerMor s21 = fr_symmetry(c, w2, w1);
      CHECK(fr_compose(ctx, s21, s12) == fr_identity(c, word_concat(w1, w2)));
      for (const auto& f : fr_enumerate_homs(ctx, w1, w1, 0))
        for (const auto& g : fr_enumerate_homs(ctx, w2, w2, 0))
          CHECK(fr_compose(ctx, s12, fr_tensor(f, g)) ==
                fr_compose(ctx, fr_tensor(g, f), s12));
    }
}

TEST_CASE("enumeration is canonical and bounded") {
  FinCat c = corpus::group_z2();
  BrauerContext ctx = make_context(c);
  LabeledWord w = lw({{0, 1}, {0, -1}});
  auto loop_free = fr_enumerate_loopfree(ctx, w, w);
  // matchings: straight-through or cap+cup; each strand has 2 labels
  CHECK(loop_free.size() == 8);
  auto all = fr_enumerate_homs(ctx, w, w, 1);
  // 2 trace classes: multisets of size <= 1 are {}, {e}, {s}
  CHECK(all.size() == 8 * 3);
  std::set<BrauerMor> dedup(all.begin(), all.end());
  CHECK(dedup.size() == all.size());
  for (const auto& f : all) fr_validate(ctx, f);
}

TEST_CASE("multisets_up_to counts") {
  CHECK(multisets_up_to(1, 3).size() == 4);
  CHECK(multisets_up_to(2, 2).size() == 6);
  CHECK(multisets_up_to(3, 0).size() == 1);
  CHECK(multisets_up_to(2, 1) ==
        std::vector<std::vector<int>>{{}, {0}, {1}});
}

TEST_CASE("hom from the unit decomposes by bijections") {
  FinCat wa = corpus::walking_arrow();
  BrauerContext ctx = make_context(wa);
  int x = wa.object_index("x"), y = wa.object_index("y");

  SUBCASE("single strand, one label") {
    HomFromUnit h = fr_hom_from_unit(ctx, {y}, {x}, 0);
    CHECK(h.report.ok());
    CHECK(h.loop_free.size() == 1);
    CHECK(h.formula_count == 1);
    CHECK(h.all.size() == 1);
  }
  SUBCASE("empty when the hom set is empty") {
    HomFromUnit h = fr_hom_from_unit(ctx, {x}, {y}, 0);
    CHECK(h.report.ok());
    CHECK(h.loop_free.empty());
    CHECK(h.formula_count == 0);
  }
  SUBCASE("mismatched arity is empty") {
    HomFromUnit h = fr_hom_from_unit(ctx, {x, y}, {x}, 1);
    CHECK(h.report.ok());
    CHECK(h.loop_free.empty());
    CHECK(h.all.empty());
  }
  SUBCASE("two strands in the group category") {
    FinCat z2 = corpus::group_z2();
    BrauerContext zctx = make_context(z2);
    HomFromUnit h = fr_hom_from_unit(zctx, {0, 0}, {0, 0}, 0);
    CHECK(h.report.ok());
    // 2 bijections × 2 labels per strand = 8
    CHECK(h.loop_free.size() == 8);
    CHECK(h.formula_count == 8);
  }
}

TEST_CASE("end of the unit is the free commutative monoid on trace classes") {
  struct Case {
    FinCat cat;
    int bound;
    std::size_t expected;
  };
  for (auto& [cat, bound, expected] :
       std::vector<Case>{{corpus::terminal(), 3, 4},
                         {corpus::walking_arrow(), 2, 6},
                         {corpus::walking_iso(), 2, 3},
                         {corpus::group_z2(), 2, 6}}) {
    BrauerContext ctx = make_context(cat);
    EndUnit eu = fr_end_unit(ctx, bound);
    CHECK(eu.report.ok());
    CHECK(eu.elements.size() == expected);
  }
}

TEST_CASE("the envelope of the terminal category matches circle counting") {
  Report rep = fr_vs_cob(2, 2);
  if (!rep.ok()) rep.render_text(std::cerr);
  CHECK(rep.ok());
}

TEST_CASE("loop trace class is rotation invariant") {
  FinCat c = corpus::group_z2();
  BrauerContext ctx = make_context(c);
  auto words = all_labeled_words(c, 2);
  int seen = 0;
  for (const auto& w1 : words)
    for (const auto& w2 : words)
      for (const auto& f : fr_enumerate_homs(ctx, w1, w2, 0))
        for (const auto& g : fr_enumerate_homs(ctx, w2, w1, 0)) {
          std::vector<std::vector<int>> cycles;
          fr_compose_traced(ctx, g, f, &cycles);
          for (const auto& seq : cycles) {
            ++seen;
            const int k = static_cast<int>(seq.size());
            std::set<int> classes;
            for (int r = 0; r < k; ++r) {
              int acc = seq[r];
              for (int t = 1; t < k; ++t) acc = c.compose(seq[(r + t) % k], acc);
              classes.insert(ctx.traces.class_of(acc));
            }
            CHECK(classes.size() == 1);
          }
        }
  CHECK(seen > 0);
}

TEST_CASE("fully faithful transfer") {
  FinCat term = corpus::terminal();
  FinCat iso = corpus::walking_iso();
  FinCat z2 = corpus::group_z2();
  BrauerContext tctx = make_context(term);
  BrauerContext ictx = make_context(iso);
  BrauerContext zctx = make_context(z2);

  SUBCASE("identity functor passes") {
    Functor f = identity_functor(term);
    CHECK(fr_fully_faithful_check(tctx, tctx, f, 2, 1).ok());
  }
  SUBCASE("terminal into walking isomorphism passes") {
    Functor f{&term, &iso, {iso.object_index("x")}, {iso.morphism_index("id_x")}};
    Report rep = fr_fully_faithful_check(tctx, ictx, f, 2, 1);
    if (!rep.ok()) rep.render_text(std::cerr);
    CHECK(rep.ok());
  }
  SUBCASE("terminal into the group fails with the 2-vs-3 count") {
    Functor f{&term, &z2, {0}, {z2.morphism_index("e")}};
    Report rep = fr_fully_faithful_check(tctx, zctx, f, 2, 1);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& e : rep.entries())
      if (e.check == "ff/envelope-hom-bijective" && !e.pass &&
          e.detail.find("2 vs 3") != std::string::npos)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("diagram evaluation in a rigid target") {
  FinCat term = corpus::terminal();
  BrauerContext ctx = make_context(term);

  SUBCASE("cyclic group target: everything passes") {
    StrictMonCat m = corpus::cyclic3();
    Functor f0{&term, &m.base(), {m.base().object_index("1")}, {m.base().morphism_index("id1")}};
    auto d = find_dual(m, f0.object_map[0]);
    REQUIRE(d.has_value());
    Report rep = fr_universal_map(ctx, m, f0, {*d}, 2, 1);
    if (!rep.ok()) rep.render_text(std::cerr);
    CHECK(rep.ok());

    DiagramEvaluator ev(ctx, m, f0, {*d});
    CHECK(ev.loop_scalar(0) == m.base().identity(m.unit_obj()));
    LabeledWord w = lw({{0, 1}, {0, -1}});
    CHECK(ev.eval_object(w) == m.tensor_obj(f0.object_map[0], d->dual));
    CHECK(ev.eval(fr_identity(term, w)) == m.base().identity(ev.eval_object(w)));
  }
  SUBCASE("two-group target") {
    StrictMonCat m = corpus::two_group();
    Functor f0{&term, &m.base(), {m.base().object_index("p1")}, {m.base().morphism_index("i1")}};
    auto d = find_dual(m, f0.object_map[0]);
    REQUIRE(d.has_value());
    Report rep = fr_universal_map(ctx, m, f0, {*d}, 2, 1);
    if (!rep.ok()) rep.render_text(std::cerr);
    CHECK(rep.ok());
  }
  SUBCASE("ill-typed duals are rejected") {
    StrictMonCat m = corpus::two_group();
    Functor f0{&term, &m.base(), {m.base().object_index("p1")}, {m.base().morphism_index("i1")}};
    int p1 = m.base().object_index("p1");
    DualData broken{p1, p1, m.base().morphism_index("t0"), m.base().morphism_index("i0")};
    REQUIRE_FALSE(triangles_hold(m, broken));
    try {
      fr_universal_map(ctx, m, f0, {broken}, 1, 0);
      FAIL("expected IllTypedDual");
    } catch (const Error& e) {
      CHECK(e.kind() == "IllTypedDual");
    }
  }
}

TEST_CASE("truncated envelope is a finite category with saturating loops") {
  FinCat term = corpus::terminal();
  BrauerContext ctx = make_context(term);
  FinCat t = fr_truncate(ctx, 1, 1);  // validates internally
  CHECK(t.object_count() == 3);       // ∅, (+), (-)
  CHECK(t.morphism_count() > 0);

  FinCat wa = corpus::walking_arrow();
  BrauerContext wctx = make_context(wa);
  FinCat tw = fr_truncate(wctx, 1, 1);
  CHECK(tw.object_count() == 1 + 2 * wa.object_count());
}
