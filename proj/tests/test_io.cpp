#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "brauer/corpus.hpp"
#include "brauer/io.hpp"
#include "doctest.h"

using namespace brauer;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return (fs::path(BRAUER_DATA_DIR) / name).string(); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = (fs::temp_directory_path() / ("brauer_io_test_" + std::to_string(counter++) + ".json"))
               .string();
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("bundled category files match the builders") {
  struct Case {
    const char* file;
    FinCat cat;
  };
  for (auto& [file, cat] : std::vector<Case>{{"terminal.json", corpus::terminal()},
                                             {"walking_arrow.json", corpus::walking_arrow()},
                                             {"walking_iso.json", corpus::walking_iso()},
                                             {"group_z2.json", corpus::group_z2()}}) {
    FinCat loaded = validate_category(load_category_file(data(file)));
    REQUIRE(loaded.morphism_count() == cat.morphism_count());
    for (int m = 0; m < cat.morphism_count(); ++m) {
      CHECK(loaded.morphism_id(m) == cat.morphism_id(m));
      CHECK(loaded.src(m) == cat.src(m));
      CHECK(loaded.dst(m) == cat.dst(m));
    }
  }
}

TEST_CASE("bundled monoidal files match the builders") {
  struct Case {
    const char* file;
    StrictMonCat mon;
  };
  for (auto& [file, mon] : std::vector<Case>{{"cyclic3.json", corpus::cyclic3()},
                                             {"discrete_z2.json", corpus::discrete_z2()},
                                             {"two_group.json", corpus::two_group()}}) {
    StrictMonCat loaded = validate_monoidal(load_monoidal_file(data(file)));
    CHECK(loaded.unit_obj() == mon.unit_obj());
    for (int x = 0; x < mon.base().object_count(); ++x)
      for (int y = 0; y < mon.base().object_count(); ++y) {
        CHECK(loaded.tensor_obj(x, y) == mon.tensor_obj(x, y));
        CHECK(loaded.symmetry(x, y) == mon.symmetry(x, y));
      }
  }
}

TEST_CASE("bundled diagram files match the builders") {
  LoadedDiagram file = load_diagram_file(data("diagram_arrow.json"));
  LoadedDiagram built = corpus::arrow_diagram();
  REQUIRE(file.diagram.transitions.size() == built.diagram.transitions.size());
  for (std::size_t f = 0; f < file.diagram.transitions.size(); ++f) {
    CHECK(file.diagram.transitions[f].object_map == built.diagram.transitions[f].object_map);
    CHECK(file.diagram.transitions[f].morphism_map == built.diagram.transitions[f].morphism_map);
  }

  LoadedMonDiagram mfile = load_monoidal_diagram_file(data("diagram_group.json"));
  CHECK(mfile.diagram.unit_fiber_object == 0);
  CHECK(mfile.diagram.mu.size() == 4);
}

TEST_CASE("category round trip through a temporary file") {
  FinCat iso = corpus::walking_iso();
  TempFile tmp("{}");
  save_category_file(iso.to_raw(), tmp.path);
  FinCat again = validate_category(load_category_file(tmp.path));
  CHECK(again.morphism_count() == iso.morphism_count());
  CHECK(peek_file_type(tmp.path) == "category");
}

TEST_CASE("labeled morphism round trip") {
  FinCat wa = corpus::walking_arrow();
  TraceSet traces = trace_set(wa);
  BrauerContext ctx{&wa, traces};
  BrauerMor cap = fr_ev(wa, wa.morphism_index("a"));
  cap.loops = {traces.class_of(wa.morphism_index("id_y"))};
  TempFile tmp("{}");
  save_labeled_file(wa, traces, cap, tmp.path);
  LoadedLabeled again = load_labeled_file(tmp.path);
  CHECK(again.mor == cap);
}

TEST_CASE("cobordism round trip") {
  Cob1Mor s = cob_symmetry(parse_signs("+-"), parse_signs("+"));
  s.circles = 2;
  TempFile tmp("{}");
  save_cobordism_file(s, tmp.path);
  CHECK(load_cobordism_file(tmp.path) == s);
}

TEST_CASE("presentations load and close") {
  Presentation p = load_presentation_file(data("present_z2.json"));
  FinCat c = close_presentation(p, 8);
  CHECK(c.morphism_count() == 2);

  Presentation q = load_presentation_file(data("present_idempotent.json"));
  FinCat d = close_presentation(q, 8);
  CHECK(d.morphism_count() == 2);
  int pm = d.morphism_index("p");
  CHECK(d.compose(pm, pm) == pm);
}

TEST_CASE("unknown keys are rejected with the key name") {
  TempFile tmp(R"({"type":"category","objects":["x"],"morphisms":[],"identities":{},"extra":1})");
  try {
    load_category_file(tmp.path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == "ParseError");
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
}

TEST_CASE("missing keys and malformed JSON are ParseErrors") {
  TempFile missing(R"({"type":"category","objects":["x"]})");
  CHECK_THROWS_AS(load_category_file(missing.path), Error);

  TempFile garbage("{ not json");
  CHECK_THROWS_AS(peek_file_type(garbage.path), Error);

  TempFile wrong_type(R"({"type":"cobordism","source":"+","target":"+","pairs":[["s0","t0"]]})");
  CHECK_THROWS_AS(load_category_file(wrong_type.path), Error);
  CHECK(load_cobordism_file(wrong_type.path).pairs.size() == 1);
}

TEST_CASE("labeled loader resolves loop representatives and rejects bad points") {
  LoadedLabeled cap = load_labeled_file(data("labeled_cap.json"));
  BrauerContext ctx = make_context(*cap.category);
  fr_validate(ctx, cap.mor);
  CHECK(cap.mor.source.length() == 2);
  CHECK(cap.mor.target.length() == 0);

  TempFile bad(R"({"type":"cobordism","source":"+","target":"+","pairs":[["s0","t9"]]})");
  CHECK_THROWS_AS(load_cobordism_file(bad.path), Error);
}

TEST_CASE("every bundled file has a readable type") {
  for (const auto& entry : fs::directory_iterator(BRAUER_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CHECK_FALSE(peek_file_type(entry.path().string()).empty());
  }
}
