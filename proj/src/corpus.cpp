#include "brauer/corpus.hpp"

#include <filesystem>

#include "brauer/freerigid.hpp"

namespace brauer::corpus {

namespace {

std::string num(int n) { return std::to_string(n); }

}  // namespace

FinCat terminal() {
  RawCategory c;
  c.objects = {"*"};
  c.morphisms = {{"id", "*", "*"}};
  c.identities = {{"*", "id"}};
  return validate_category(c);
}

FinCat walking_arrow() {
  RawCategory c;
  c.objects = {"x", "y"};
  c.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"a", "x", "y"}};
  c.identities = {{"x", "id_x"}, {"y", "id_y"}};
  return validate_category(c);
}

FinCat walking_iso() {
  RawCategory c;
  c.objects = {"x", "y"};
  c.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"a", "x", "y"}, {"b", "y", "x"}};
  c.identities = {{"x", "id_x"}, {"y", "id_y"}};
  c.composition = {{"b", "a", "id_x"}, {"a", "b", "id_y"}};
  return validate_category(c);
}

FinCat group_z2() {
  RawCategory c;
  c.objects = {"g"};
  c.morphisms = {{"e", "g", "g"}, {"s", "g", "g"}};
  c.identities = {{"g", "e"}};
  c.composition = {{"s", "s", "e"}};
  return validate_category(c);
}

StrictMonCat cyclic3() {
  RawMonCat m;
  for (int i = 0; i < 3; ++i) {
    m.base.objects.push_back(num(i));
    m.base.morphisms.push_back({"id" + num(i), num(i), num(i)});
    m.base.identities.emplace_back(num(i), "id" + num(i));
  }
  m.unit = "0";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = (i + j) % 3;
      m.tensor_objects.push_back({num(i), num(j), num(k)});
      m.tensor_morphisms.push_back({"id" + num(i), "id" + num(j), "id" + num(k)});
      m.symmetry.push_back({num(i), num(j), "id" + num(k)});
    }
  return validate_monoidal(m);
}

StrictMonCat discrete_z2() {
  RawMonCat m;
  for (int i = 0; i < 2; ++i) {
    m.base.objects.push_back("p" + num(i));
    m.base.morphisms.push_back({"i" + num(i), "p" + num(i), "p" + num(i)});
    m.base.identities.emplace_back("p" + num(i), "i" + num(i));
  }
  m.unit = "p0";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int k = (i + j) % 2;
      m.tensor_objects.push_back({"p" + num(i), "p" + num(j), "p" + num(k)});
      m.tensor_morphisms.push_back({"i" + num(i), "i" + num(j), "i" + num(k)});
      m.symmetry.push_back({"p" + num(i), "p" + num(j), "i" + num(k)});
    }
  return validate_monoidal(m);
}

StrictMonCat two_group() {
  RawMonCat m;
  // morphism f(i, b): endomorphism of p_i, b = 0 identity, b = 1 twist
  auto mor = [](int i, int b) { return (b ? "t" : "i") + num(i); };
  for (int i = 0; i < 2; ++i) {
    m.base.objects.push_back("p" + num(i));
    m.base.morphisms.push_back({mor(i, 0), "p" + num(i), "p" + num(i)});
    m.base.morphisms.push_back({mor(i, 1), "p" + num(i), "p" + num(i)});
    m.base.identities.emplace_back("p" + num(i), mor(i, 0));
    m.base.composition.push_back({mor(i, 1), mor(i, 1), mor(i, 0)});
  }
  m.unit = "p0";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int k = (i + j) % 2;
      m.tensor_objects.push_back({"p" + num(i), "p" + num(j), "p" + num(k)});
      m.symmetry.push_back({"p" + num(i), "p" + num(j), mor(k, 0)});
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          m.tensor_morphisms.push_back({mor(i, b), mor(j, c), mor(k, (b + c) % 2)});
    }
  return validate_monoidal(m);
}

LoadedDiagram arrow_diagram() {
  LoadedDiagram out;
  out.index = std::make_unique<FinCat>(walking_arrow());
  const FinCat& idx = *out.index;
  out.diagram.index = out.index.get();

  FinCat fib_x = walking_arrow();
  FinCat fib_y = group_z2();
  out.diagram.fibers.resize(2);
  out.diagram.fibers[idx.object_index("x")] = fib_x;
  out.diagram.fibers[idx.object_index("y")] = fib_y;

  out.diagram.transitions.resize(idx.morphism_count());
  auto ident = [](const FinCat& c) {
    TableMap t;
    for (int x = 0; x < c.object_count(); ++x) t.object_map.push_back(x);
    for (int m = 0; m < c.morphism_count(); ++m) t.morphism_map.push_back(m);
    return t;
  };
  out.diagram.transitions[idx.morphism_index("id_x")] = ident(fib_x);
  out.diagram.transitions[idx.morphism_index("id_y")] = ident(fib_y);
  TableMap along_a;
  along_a.object_map.assign(fib_x.object_count(), fib_y.object_index("g"));
  along_a.morphism_map.assign(fib_x.morphism_count(), fib_y.morphism_index("e"));
  along_a.morphism_map[fib_x.morphism_index("a")] = fib_y.morphism_index("s");
  out.diagram.transitions[idx.morphism_index("a")] = along_a;
  return out;
}

LoadedMonDiagram group_diagram() {
  LoadedMonDiagram out;
  out.index_mon = std::make_unique<StrictMonCat>(discrete_z2());
  const StrictMonCat& im = *out.index_mon;
  out.diagram.index_mon = out.index_mon.get();
  out.diagram.diagram.index = &im.base();
  const int n = im.base().object_count();
  for (int i = 0; i < n; ++i) out.diagram.diagram.fibers.push_back(terminal());
  for (int f = 0; f < im.base().morphism_count(); ++f)
    out.diagram.diagram.transitions.push_back({{0}, {0}});
  out.diagram.mu.assign(static_cast<std::size_t>(n) * n, TableMap{{0}, {0}});
  out.diagram.unit_fiber_object = 0;
  return out;
}

void write_data_files(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto at = [&](const std::string& name) { return (fs::path(dir) / name).string(); };

  save_category_file(terminal().to_raw(), at("terminal.json"));
  save_category_file(walking_arrow().to_raw(), at("walking_arrow.json"));
  save_category_file(walking_iso().to_raw(), at("walking_iso.json"));
  save_category_file(group_z2().to_raw(), at("group_z2.json"));
  save_monoidal_file(cyclic3().to_raw(), at("cyclic3.json"));
  save_monoidal_file(discrete_z2().to_raw(), at("discrete_z2.json"));
  save_monoidal_file(two_group().to_raw(), at("two_group.json"));

  save_diagram_file(arrow_diagram().diagram, at("diagram_arrow.json"));
  save_monoidal_diagram_file(group_diagram().diagram, at("diagram_group.json"));

  Presentation z2;
  z2.objects = {"g"};
  z2.generators = {{"s", "g", "g"}};
  z2.relations = {{{"s", "s"}, {}}};
  save_presentation_file(z2, at("present_z2.json"));

  Presentation idem;
  idem.objects = {"x"};
  idem.generators = {{"p", "x", "x"}};
  idem.relations = {{{"p", "p"}, {"p"}}};
  save_presentation_file(idem, at("present_idempotent.json"));

  FinCat wa = walking_arrow();
  TraceSet traces = trace_set(wa);
  BrauerMor cap = fr_ev(wa, wa.morphism_index("a"));
  save_labeled_file(wa, traces, cap, at("labeled_cap.json"));

  save_cobordism_file(cob_symmetry(parse_signs("+"), parse_signs("-")), at("cob_symmetry.json"));
}

}  // namespace brauer::corpus
