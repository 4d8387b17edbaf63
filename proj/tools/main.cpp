// Command-line front end: file ingestion, command dispatch, report rendering.
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brauer/acceptance.hpp"
#include "brauer/corpus.hpp"
#include "brauer/freerigid.hpp"
#include "brauer/grothendieck.hpp"
#include "brauer/io.hpp"

namespace {

using namespace brauer;

struct Output {
  std::string format = "text";
  std::string out_path;

  int emit(const Report& rep) const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw Error("ParseError", out_path + ": cannot open for writing");
      os = &file;
    }
    if (format == "records")
      rep.render_records(*os);
    else
      rep.render_text(*os);
    return rep.ok() ? 0 : 1;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_option("--out", out.out_path, "Write the report to this file");
}

// "name=image" entries; names may be object or morphism identifiers.
// Identities of mapped objects are filled in automatically.
Functor build_functor(const FinCat& c, const FinCat& d, const std::vector<std::string>& maps) {
  Functor f;
  f.source = &c;
  f.target = &d;
  f.object_map.assign(c.object_count(), -1);
  f.morphism_map.assign(c.morphism_count(), -1);
  for (const auto& entry : maps) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw Error("ParseError", "--map entry '" + entry + "' is not of the form name=image");
    std::string name = entry.substr(0, eq), image = entry.substr(eq + 1);
    if (int x = c.object_index(name); x >= 0) {
      int y = d.object_index(image);
      if (y < 0) throw Error("ParseError", "--map: unknown target object '" + image + "'");
      f.object_map[x] = y;
    } else if (int m = c.morphism_index(name); m >= 0) {
      int n = d.morphism_index(image);
      if (n < 0) throw Error("ParseError", "--map: unknown target morphism '" + image + "'");
      f.morphism_map[m] = n;
    } else {
      throw Error("ParseError", "--map: '" + name + "' is neither an object nor a morphism");
    }
  }
  for (int x = 0; x < c.object_count(); ++x) {
    if (f.object_map[x] < 0)
      throw Error("ParseError", "--map: no image for object '" + c.object_id(x) + "'");
    if (f.morphism_map[c.identity(x)] < 0)
      f.morphism_map[c.identity(x)] = d.identity(f.object_map[x]);
  }
  for (int m = 0; m < c.morphism_count(); ++m)
    if (f.morphism_map[m] < 0)
      throw Error("ParseError", "--map: no image for morphism '" + c.morphism_id(m) + "'");
  return f;
}

std::vector<int> object_list(const FinCat& c, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) {
    int x = c.object_index(n);
    if (x < 0) throw Error("ParseError", "unknown object '" + n + "'");
    out.push_back(x);
  }
  return out;
}

Report cmd_validate(const std::vector<std::string>& files) {
  Report rep;
  for (const auto& path : files) {
    try {
      std::string type = peek_file_type(path);
      if (type == "category")
        validate_category(load_category_file(path));
      else if (type == "monoidal")
        validate_monoidal(load_monoidal_file(path));
      else if (type == "presentation")
        close_presentation(load_presentation_file(path), 64);
      else if (type == "diagram")
        validate_diagram(load_diagram_file(path).diagram);
      else if (type == "monoidal-diagram")
        monoidal_grothendieck(load_monoidal_diagram_file(path).diagram);
      else if (type == "labeled") {
        LoadedLabeled l = load_labeled_file(path);
        BrauerContext ctx = make_context(*l.category);
        fr_validate(ctx, l.mor);
      } else if (type == "cobordism")
        cob_validate(load_cobordism_file(path));
      else
        throw Error("ParseError", path + ": unknown file type '" + type + "'");
      rep.add("validate/" + path, true, type);
    } catch (const Error& e) {
      rep.add("validate/" + path, false, e.what());
    }
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in finite categories, their indexed unions, and the "
               "labeled oriented-matching envelope"};
  app.require_subcommand(1);

  Output out;
  int exit_code = 0;

  // validate
  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Validate structured input files");
  validate->add_option("files", files, "Input files")->required();
  add_output_flags(validate, out);
  validate->callback([&] { exit_code = out.emit(cmd_validate(files)); });

  // present
  std::string pres_file, pres_out;
  int size_bound = 64;
  auto* present = app.add_subcommand("present", "Close a presentation into explicit tables");
  present->add_option("file", pres_file)->required();
  present->add_option("--bound", size_bound, "Hom-set size bound");
  present->add_option("--save", pres_out, "Write the resulting category file here");
  add_output_flags(present, out);
  present->callback([&] {
    FinCat c = close_presentation(load_presentation_file(pres_file), size_bound);
    Report rep;
    rep.add("present/closed", true,
            std::to_string(c.object_count()) + " objects, " + std::to_string(c.morphism_count()) +
                " morphisms");
    if (!pres_out.empty()) save_category_file(c.to_raw(), pres_out);
    exit_code = out.emit(rep);
  });

  // trace
  std::string trace_file;
  auto* trace = app.add_subcommand("trace", "Trace classes of a category's endomorphisms");
  trace->add_option("file", trace_file)->required();
  add_output_flags(trace, out);
  trace->callback([&] {
    FinCat c = validate_category(load_category_file(trace_file));
    TraceSet t = trace_set(c);
    Report rep;
    for (int cls = 0; cls < t.class_count; ++cls) {
      std::string members;
      for (int m = 0; m < c.morphism_count(); ++m)
        if (t.class_of_mor[m] == cls) members += (members.empty() ? "" : " ") + c.morphism_id(m);
      rep.add("trace/class-" + c.morphism_id(t.representative[cls]), true, members);
    }
    rep.add("trace/count", true, std::to_string(t.class_count) + " classes");
    exit_code = out.emit(rep);
  });

  // adjoint
  std::string adj_src, adj_dst;
  std::vector<std::string> adj_map;
  auto* adjoint = app.add_subcommand("adjoint", "Search for a right adjoint of a functor");
  adjoint->add_option("source", adj_src)->required();
  adjoint->add_option("target", adj_dst)->required();
  adjoint->add_option("--map", adj_map, "name=image entries defining the functor")->required();
  add_output_flags(adjoint, out);
  adjoint->callback([&] {
    FinCat c = validate_category(load_category_file(adj_src));
    FinCat d = validate_category(load_category_file(adj_dst));
    Functor f = build_functor(c, d, adj_map);
    Report rep;
    rep.merge(check_functor(f));
    if (auto adj = find_right_adjoint(f)) {
      rep.add("adjoint/found", true);
      rep.merge(check_adjunction(*adj));
      std::string images;
      for (int y = 0; y < d.object_count(); ++y)
        images += (images.empty() ? "" : " ") + d.object_id(y) + "->" +
                  c.object_id(adj->right.object_map[y]);
      rep.add("adjoint/right-on-objects", true, images);
    } else {
      rep.add("adjoint/found", false, "some comma category has no terminal object");
    }
    exit_code = out.emit(rep);
  });

  // groth
  std::string groth_file;
  auto* groth = app.add_subcommand("groth", "Build an indexed union and verify its hom formula");
  groth->add_option("file", groth_file)->required();
  add_output_flags(groth, out);
  groth->callback([&] {
    Report rep;
    std::string type = peek_file_type(groth_file);
    if (type == "diagram") {
      LoadedDiagram d = load_diagram_file(groth_file);
      GrothCat g = grothendieck(d.diagram);
      rep.add("groth/built", true,
              std::to_string(g.cat.object_count()) + " objects, " +
                  std::to_string(g.cat.morphism_count()) + " morphisms");
      rep.merge(hom_formula_check_all(g));
      rep.merge(unit_cocone(g).report);
    } else if (type == "monoidal-diagram") {
      LoadedMonDiagram d = load_monoidal_diagram_file(groth_file);
      GrothCat g;
      monoidal_grothendieck(d.diagram, &g);
      rep.add("groth/built-monoidal", true,
              std::to_string(g.cat.object_count()) + " objects, " +
                  std::to_string(g.cat.morphism_count()) + " morphisms");
      rep.merge(hom_formula_check_all(g));
      rep.merge(unit_cocone(g).report);
    } else {
      throw Error("ParseError", groth_file + ": expected a diagram or monoidal-diagram file");
    }
    exit_code = out.emit(rep);
  });

  // rigid
  std::string rigid_file;
  auto* rigid = app.add_subcommand("rigid", "Search duals for every object of a monoidal category");
  rigid->add_option("file", rigid_file)->required();
  add_output_flags(rigid, out);
  rigid->callback([&] {
    StrictMonCat m = validate_monoidal(load_monoidal_file(rigid_file));
    RigidityReport rr = check_rigid(m);
    Report rep = rr.report;
    rep.add("rigid/all-dualizable", rr.all_dualizable());
    rep.add("rigid/idempotent-completion-caveat", true,
            "duals are searched in the category as given, not in its idempotent completion");
    exit_code = out.emit(rep);
  });

  // compose
  std::vector<std::string> comp_files;
  std::string comp_out;
  auto* compose = app.add_subcommand("compose", "Compose two labeled or cobordism morphisms");
  compose->add_option("files", comp_files, "First-applied then second-applied morphism")
      ->expected(2)
      ->required();
  compose->add_option("--save", comp_out, "Write the composite to this file");
  add_output_flags(compose, out);
  compose->callback([&] {
    Report rep;
    std::string type = peek_file_type(comp_files[0]);
    if (type == "cobordism") {
      Cob1Mor f = load_cobordism_file(comp_files[0]);
      Cob1Mor g = load_cobordism_file(comp_files[1]);
      Cob1Mor gf = cob_compose(g, f);
      rep.add("compose/result", true, gf.to_string());
      if (!comp_out.empty()) save_cobordism_file(gf, comp_out);
    } else {
      LoadedLabeled lf = load_labeled_file(comp_files[0]);
      LoadedLabeled lg = load_labeled_file(comp_files[1]);
      RawCategory a = lf.category->to_raw();
      RawCategory b = lg.category->to_raw();
      if (a.objects != b.objects || a.morphisms.size() != b.morphisms.size())
        throw Error("ParseError", "the two files carry different base categories");
      BrauerContext ctx = make_context(*lf.category);
      BrauerMor gf = fr_compose(ctx, lg.mor, lf.mor);
      rep.add("compose/result", true, gf.to_string(*lf.category));
      if (!comp_out.empty()) save_labeled_file(*lf.category, ctx.traces, gf, comp_out);
    }
    exit_code = out.emit(rep);
  });

  // hom
  std::string hom_file;
  std::vector<std::string> pos_names, neg_names;
  int max_loops = 1;
  auto* hom = app.add_subcommand("hom", "Morphisms from the unit word, with their decomposition");
  hom->add_option("file", hom_file)->required();
  hom->add_option("--pos", pos_names, "Positively oriented objects")->delimiter(',');
  hom->add_option("--neg", neg_names, "Negatively oriented objects")->delimiter(',');
  hom->add_option("--loops", max_loops, "Loop bound");
  add_output_flags(hom, out);
  hom->callback([&] {
    FinCat c = validate_category(load_category_file(hom_file));
    BrauerContext ctx = make_context(c);
    HomFromUnit h =
        fr_hom_from_unit(ctx, object_list(c, pos_names), object_list(c, neg_names), max_loops);
    Report rep = h.report;
    for (std::size_t k = 0; k < h.all.size(); ++k)
      rep.add("hom/element-" + std::to_string(k), true, h.all[k].to_string(c));
    exit_code = out.emit(rep);
  });

  // end-unit
  std::string eu_file;
  int eu_loops = 2;
  auto* end_unit = app.add_subcommand("end-unit", "Endomorphisms of the unit word");
  end_unit->add_option("file", eu_file)->required();
  end_unit->add_option("--loops", eu_loops, "Loop bound");
  add_output_flags(end_unit, out);
  end_unit->callback([&] {
    FinCat c = validate_category(load_category_file(eu_file));
    BrauerContext ctx = make_context(c);
    EndUnit eu = fr_end_unit(ctx, eu_loops);
    Report rep = eu.report;
    rep.add("end-unit/count", true, std::to_string(eu.elements.size()) + " elements at bound " +
                                        std::to_string(eu_loops));
    exit_code = out.emit(rep);
  });

  // vs-cob
  int vs_maxlen = 2, vs_bound = 2;
  auto* vs_cob = app.add_subcommand("vs-cob",
                                    "Compare the envelope of the terminal category with the "
                                    "circle-counting matching category");
  vs_cob->add_option("--maxlen", vs_maxlen, "Word length bound");
  vs_cob->add_option("--bound", vs_bound, "Circle/loop bound");
  add_output_flags(vs_cob, out);
  vs_cob->callback([&] { exit_code = out.emit(fr_vs_cob(vs_maxlen, vs_bound)); });

  // ff-check
  std::string ff_src, ff_dst;
  std::vector<std::string> ff_map;
  int ff_maxlen = 2, ff_loops = 1;
  auto* ff = app.add_subcommand("ff-check", "Fully-faithfulness transfer to the envelopes");
  ff->add_option("source", ff_src)->required();
  ff->add_option("target", ff_dst)->required();
  ff->add_option("--map", ff_map, "name=image entries defining the functor")->required();
  ff->add_option("--maxlen", ff_maxlen, "Word length bound");
  ff->add_option("--loops", ff_loops, "Loop bound");
  add_output_flags(ff, out);
  ff->callback([&] {
    FinCat c = validate_category(load_category_file(ff_src));
    FinCat d = validate_category(load_category_file(ff_dst));
    Functor f = build_functor(c, d, ff_map);
    BrauerContext cctx = make_context(c);
    BrauerContext dctx = make_context(d);
    exit_code = out.emit(fr_fully_faithful_check(cctx, dctx, f, ff_maxlen, ff_loops));
  });

  // universal
  std::string uni_cat, uni_mon;
  std::vector<std::string> uni_map;
  int uni_bound = 2, uni_loops = 1;
  auto* universal = app.add_subcommand(
      "universal", "Evaluate labeled diagrams in a rigid monoidal category and verify the laws");
  universal->add_option("category", uni_cat)->required();
  universal->add_option("monoidal", uni_mon)->required();
  universal->add_option("--map", uni_map, "name=image entries defining the labeling functor")
      ->required();
  universal->add_option("--bound", uni_bound, "Diagram word length bound");
  universal->add_option("--loops", uni_loops, "Loop bound");
  add_output_flags(universal, out);
  universal->callback([&] {
    FinCat c = validate_category(load_category_file(uni_cat));
    StrictMonCat m = validate_monoidal(load_monoidal_file(uni_mon));
    Functor f0 = build_functor(c, m.base(), uni_map);
    BrauerContext ctx = make_context(c);
    Report rep;
    std::vector<DualData> duals;
    bool have_duals = true;
    for (int x = 0; x < c.object_count(); ++x) {
      auto d = find_dual(m, f0.object_map[x]);
      if (!d) {
        rep.add("universal/dual-for-" + c.object_id(x), false,
                "no dual found for '" + m.base().object_id(f0.object_map[x]) + "'");
        have_duals = false;
        continue;
      }
      duals.push_back(*d);
    }
    if (have_duals) rep.merge(fr_universal_map(ctx, m, f0, duals, uni_bound, uni_loops));
    exit_code = out.emit(rep);
  });

  // cob-enum
  std::string cob_src, cob_dst;
  int cob_bound = 1;
  auto* cob_enum = app.add_subcommand("cob-enum", "Enumerate matchings between two sign words");
  cob_enum->add_option("--src", cob_src, "Source sign word such as +-+ (empty by default)");
  cob_enum->add_option("--dst", cob_dst, "Target sign word");
  cob_enum->add_option("--bound", cob_bound, "Circle bound");
  add_output_flags(cob_enum, out);
  cob_enum->callback([&] {
    auto homs = cob_enumerate_homs(parse_signs(cob_src), parse_signs(cob_dst), cob_bound);
    Report rep;
    for (std::size_t k = 0; k < homs.size(); ++k)
      rep.add("cob/element-" + std::to_string(k), true, homs[k].to_string());
    rep.add("cob/count", true, std::to_string(homs.size()) + " morphisms");
    exit_code = out.emit(rep);
  });

  // accept
  std::string data_dir = BRAUER_DATA_DIR;
  auto* accept = app.add_subcommand("accept", "Run the full acceptance suite");
  accept->add_option("--data", data_dir, "Data directory with the bundled corpus");
  add_output_flags(accept, out);
  accept->callback([&] {
    AcceptanceResult res = run_acceptance_suite(data_dir);
    exit_code = out.emit(res.report);
    if (out.format == "text" && out.out_path.empty())
      for (const auto& [name, secs] : res.timings)
        std::cout << "time " << name << " " << secs << " s\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == "ParseError" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
