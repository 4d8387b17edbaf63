#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "brauer/cobordism.hpp"
#include "doctest.h"

using namespace brauer;

TEST_CASE("sign parsing") {
  CHECK(parse_signs("+-+") == SignedWord{1, -1, 1});
  CHECK(render_signs(parse_signs("--")) == "--");
  CHECK(parse_signs("").empty());
  CHECK_THROWS_AS(parse_signs("+x"), Error);
}

TEST_CASE("validation catches broken matchings") {
  SUBCASE("orientation-incompatible pair") {
    Cob1Mor f;
    f.source = parse_signs("++");
    f.pairs = {{0, 1}};  // both epsilon +1
    CHECK_THROWS_AS(cob_validate(f), Error);
  }
  SUBCASE("point used twice") {
    Cob1Mor f;
    f.source = parse_signs("+-");
    f.target = parse_signs("+-");
    f.pairs = {{0, 1}, {0, 1}, {2, 3}};
    CHECK_THROWS_AS(cob_validate(f), Error);
  }
  SUBCASE("identity validates") { cob_validate(cob_identity(parse_signs("+-+"))); }
}

TEST_CASE("identity laws") {
  SignedWord w = parse_signs("+-");
  for (const Cob1Mor& f : cob_enumerate_homs(w, parse_signs("-+"), 1)) {
    CHECK(cob_compose(cob_identity(f.target), f) == f);
    CHECK(cob_compose(f, cob_identity(f.source)) == f);
  }
}

TEST_CASE("symmetry is an involution") {
  SignedWord w1 = parse_signs("+-");
  SignedWord w2 = parse_signs("+");
  Cob1Mor s12 = cob_symmetry(w1, w2);
  Cob1Mor s21 = cob_symmetry(w2, w1);
  SignedWord both = w1;
  both.insert(both.end(), w2.begin(), w2.end());
  CHECK(cob_compose(s21, s12) == cob_identity(both));
}

TEST_CASE("triangle identities for the sign-word dual") {
  for (int8_t s : {static_cast<int8_t>(1), static_cast<int8_t>(-1)}) {
    SignedWord x{s};
    // (ev ⊗ id) ∘ (id ⊗ coev) = id with no circles created
    Cob1Mor lhs = cob_compose(cob_tensor(cob_ev(s), cob_identity(x)),
                              cob_tensor(cob_identity(x), cob_coev(s)));
    CHECK(lhs == cob_identity(x));
    SignedWord xd = cob_dual(x);
    Cob1Mor rhs = cob_compose(cob_tensor(cob_identity(xd), cob_ev(s)),
                              cob_tensor(cob_coev(s), cob_identity(xd)));
    CHECK(rhs == cob_identity(xd));
  }
}

TEST_CASE("composing a cup with a cap creates a circle") {
  Cob1Mor cup = cob_coev(static_cast<int8_t>(1));  // ∅ -> -+
  Cob1Mor cap = cob_ev(static_cast<int8_t>(-1));   // -+ -> ∅
  Cob1Mor c = cob_compose(cap, cup);
  CHECK(c.source.empty());
  CHECK(c.target.empty());
  CHECK(c.pairs.empty());
  CHECK(c.circles == 1);
}

TEST_CASE("enumeration counts match the factorial oracle") {
  auto factorial = [](int n) {
    int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
  };
  struct Case {
    const char *src, *dst;
  };
  for (const auto& [src, dst] : {Case{"", ""}, Case{"+", "+"}, Case{"+-", "-+"}, Case{"++", "++"},
                                 Case{"+-", ""}, Case{"+", "-"}}) {
    SignedWord a = parse_signs(src), b = parse_signs(dst);
    Cob1Mor proto;
    proto.source = a;
    proto.target = b;
    int plus = 0, minus = 0;
    for (int p = 0; p < static_cast<int>(a.size() + b.size()); ++p)
      (proto.epsilon(p) > 0 ? plus : minus)++;
    auto homs = cob_enumerate_homs(a, b, 2);
    std::size_t expected = plus == minus ? static_cast<std::size_t>(factorial(plus)) * 3 : 0;
    CHECK(homs.size() == expected);
    for (const auto& f : homs) cob_validate(f);
    // canonical order, no duplicates
    for (std::size_t i = 1; i < homs.size(); ++i)
      CHECK(!(homs[i] == homs[i - 1]));
  }
  CHECK(cob_enumerate_homs(parse_signs("+"), parse_signs("+"), 0).size() == 1);
}

TEST_CASE("associativity of composition, exhaustively on short words") {
  std::vector<SignedWord> words = {parse_signs(""), parse_signs("+"), parse_signs("+-")};
  for (const auto& w1 : words)
    for (const auto& w2 : words)
      for (const auto& w3 : words)
        for (const auto& w4 : words)
          for (const auto& f : cob_enumerate_homs(w1, w2, 1))
            for (const auto& g : cob_enumerate_homs(w2, w3, 1))
              for (const auto& h : cob_enumerate_homs(w3, w4, 1))
                CHECK(cob_compose(h, cob_compose(g, f)) == cob_compose(cob_compose(h, g), f));
}

TEST_CASE("interchange of tensor and composition") {
  std::vector<SignedWord> words = {parse_signs(""), parse_signs("+"), parse_signs("-")};
  for (const auto& a1 : words)
    for (const auto& a2 : words)
      for (const auto& b1 : words)
        for (const auto& b2 : words)
          for (const auto& f1 : cob_enumerate_homs(a1, a2, 1))
            for (const auto& f2 : cob_enumerate_homs(b1, b2, 1))
              for (const auto& g1 : cob_enumerate_homs(a2, a1, 1))
                for (const auto& g2 : cob_enumerate_homs(b2, b1, 1))
                  CHECK(cob_compose(cob_tensor(g1, g2), cob_tensor(f1, f2)) ==
                        cob_tensor(cob_compose(g1, f1), cob_compose(g2, f2)));
}

TEST_CASE("symmetry naturality") {
  SignedWord a = parse_signs("+");
  SignedWord b = parse_signs("-");
  for (const auto& f : cob_enumerate_homs(a, a, 1))
    for (const auto& g : cob_enumerate_homs(b, b, 1))
      CHECK(cob_compose(cob_symmetry(a, b), cob_tensor(f, g)) ==
            cob_compose(cob_tensor(g, f), cob_symmetry(a, b)));
}

TEST_CASE("all_sign_words ordering") {
  auto words = all_sign_words(2);
  REQUIRE(words.size() == 7);
  CHECK(words[0].empty());
  CHECK(render_signs(words[1]) == "+");
  CHECK(render_signs(words[2]) == "-");
  CHECK(render_signs(words[3]) == "++");
  CHECK(render_signs(words[6]) == "--");
}

TEST_CASE("to_string is stable") {
  Cob1Mor s = cob_symmetry(parse_signs("+"), parse_signs("-"));
  CHECK(s.to_string() == "+->-+|s0-t1,s1-t0|c0");
}
