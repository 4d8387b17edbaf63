#include "brauer/io.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

namespace brauer {

namespace {

using json = nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  if (!j.is_object()) throw Error("ParseError", path + ": top level must be an object");
  return j;
}

void check_keys(const json& j, const std::set<std::string>& required,
                const std::set<std::string>& optional, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!required.count(key) && !optional.count(key))
      throw Error("ParseError", where + ": unknown key '" + key + "'");
  for (const auto& key : required)
    if (!j.contains(key)) throw Error("ParseError", where + ": missing key '" + key + "'");
}

void check_type(const json& j, const std::string& expected, const std::string& where) {
  if (j.at("type").get<std::string>() != expected)
    throw Error("ParseError", where + ": expected type '" + expected + "', got '" +
                                  j.at("type").get<std::string>() + "'");
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error("ParseError", where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error("ParseError", where + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

RawCategory category_from_json(const json& j, const std::string& where) {
  check_keys(j, {"objects", "morphisms", "identities"}, {"type", "composition"}, where);
  RawCategory c;
  c.objects = string_list(j.at("objects"), where + ".objects");
  for (const auto& m : j.at("morphisms")) {
    check_keys(m, {"id", "src", "dst"}, {}, where + ".morphisms");
    c.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                           m.at("dst").get<std::string>()});
  }
  for (const auto& [obj, mor] : j.at("identities").items())
    c.identities.emplace_back(obj, mor.get<std::string>());
  if (j.contains("composition"))
    for (const auto& t : j.at("composition")) {
      auto v = string_list(t, where + ".composition");
      if (v.size() != 3)
        throw Error("ParseError", where + ".composition: entries must be [g, f, gf] triples");
      c.composition.push_back({v[0], v[1], v[2]});
    }
  return c;
}

json category_to_json(const RawCategory& c) {
  json j;
  j["objects"] = c.objects;
  j["morphisms"] = json::array();
  for (const auto& m : c.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  j["identities"] = json::object();
  for (const auto& [obj, mor] : c.identities) j["identities"][obj] = mor;
  j["composition"] = json::array();
  for (const auto& t : c.composition) j["composition"].push_back({t[0], t[1], t[2]});
  return j;
}

// nested map {"x": {"y": "z"}} -> triples [x, y, z]
std::vector<std::array<std::string, 3>> nested_table(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error("ParseError", where + ": expected a nested object table");
  std::vector<std::array<std::string, 3>> out;
  for (const auto& [x, row] : j.items()) {
    if (!row.is_object()) throw Error("ParseError", where + "." + x + ": expected an object");
    for (const auto& [y, z] : row.items()) out.push_back({x, y, z.get<std::string>()});
  }
  return out;
}

json nested_to_json(const std::vector<std::array<std::string, 3>>& table) {
  json j = json::object();
  for (const auto& [x, y, z] : table) j[x][y] = z;
  return j;
}

RawMonCat monoidal_from_json(const json& j, const std::string& where) {
  check_keys(j, {"category", "unit", "tensor_objects", "tensor_morphisms", "symmetry"}, {"type"},
             where);
  RawMonCat m;
  m.base = category_from_json(j.at("category"), where + ".category");
  m.unit = j.at("unit").get<std::string>();
  m.tensor_objects = nested_table(j.at("tensor_objects"), where + ".tensor_objects");
  m.tensor_morphisms = nested_table(j.at("tensor_morphisms"), where + ".tensor_morphisms");
  m.symmetry = nested_table(j.at("symmetry"), where + ".symmetry");
  return m;
}

TableMap table_map_from_json(const json& j, const FinCat& from, const FinCat& to,
                             const std::string& where) {
  check_keys(j, {"objects", "morphisms"}, {}, where);
  TableMap t;
  t.object_map.assign(from.object_count(), -1);
  t.morphism_map.assign(from.morphism_count(), -1);
  for (const auto& [x, y] : j.at("objects").items()) {
    int xi = from.object_index(x);
    int yi = to.object_index(y.get<std::string>());
    if (xi < 0 || yi < 0) throw Error("ParseError", where + ".objects: unknown object in '" + x + "'");
    t.object_map[xi] = yi;
  }
  for (const auto& [f, g] : j.at("morphisms").items()) {
    int fi = from.morphism_index(f);
    int gi = to.morphism_index(g.get<std::string>());
    if (fi < 0 || gi < 0)
      throw Error("ParseError", where + ".morphisms: unknown morphism in '" + f + "'");
    t.morphism_map[fi] = gi;
  }
  for (int x = 0; x < from.object_count(); ++x)
    if (t.object_map[x] < 0)
      throw Error("ParseError", where + ".objects: no image for '" + from.object_id(x) + "'");
  for (int m = 0; m < from.morphism_count(); ++m)
    if (t.morphism_map[m] < 0)
      throw Error("ParseError", where + ".morphisms: no image for '" + from.morphism_id(m) + "'");
  return t;
}

// Shared by plain and monoidal diagram loaders once the index FinCat exists.
OplaxDiagram diagram_body(const json& j, const FinCat& index, const std::string& where) {
  OplaxDiagram d;
  d.index = &index;
  d.fibers.reserve(index.object_count());
  const json& fibers = j.at("fibers");
  for (int i = 0; i < index.object_count(); ++i) {
    const std::string& id = index.object_id(i);
    if (!fibers.contains(id))
      throw Error("ParseError", where + ".fibers: missing fiber for '" + id + "'");
    d.fibers.push_back(validate_category(category_from_json(fibers.at(id), where + ".fibers." + id)));
  }
  if (fibers.size() != static_cast<std::size_t>(index.object_count()))
    throw Error("ParseError", where + ".fibers: extra fiber entries");
  const json& trans = j.at("transitions");
  for (int f = 0; f < index.morphism_count(); ++f) {
    const std::string& id = index.morphism_id(f);
    if (!trans.contains(id))
      throw Error("ParseError", where + ".transitions: missing transition for '" + id + "'");
    d.transitions.push_back(table_map_from_json(trans.at(id), d.fibers[index.src(f)],
                                                d.fibers[index.dst(f)],
                                                where + ".transitions." + id));
  }
  if (trans.size() != static_cast<std::size_t>(index.morphism_count()))
    throw Error("ParseError", where + ".transitions: extra transition entries");
  return d;
}

std::pair<int, int8_t> labeled_entry(const FinCat& c, const json& e, const std::string& where) {
  auto v = string_list(e, where);
  if (v.size() != 2 || (v[1] != "+" && v[1] != "-"))
    throw Error("ParseError", where + ": entries must be [object, \"+\"|\"-\"] pairs");
  int x = c.object_index(v[0]);
  if (x < 0) throw Error("ParseError", where + ": unknown object '" + v[0] + "'");
  return {x, static_cast<int8_t>(v[1] == "+" ? 1 : -1)};
}

// "s3" or "t2" -> absolute point index
int parse_point(const std::string& s, int source_len, int target_len, const std::string& where) {
  if (s.size() < 2 || (s[0] != 's' && s[0] != 't'))
    throw Error("ParseError", where + ": bad point '" + s + "'");
  int k;
  try {
    k = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw Error("ParseError", where + ": bad point '" + s + "'");
  }
  int limit = s[0] == 's' ? source_len : target_len;
  if (k < 0 || k >= limit) throw Error("ParseError", where + ": point '" + s + "' out of range");
  return s[0] == 's' ? k : source_len + k;
}

std::string render_point(int p, int source_len) {
  return p < source_len ? "s" + std::to_string(p) : "t" + std::to_string(p - source_len);
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("ParseError", path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace

RawCategory load_category_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "objects", "morphisms", "identities"}, {"composition"}, path);
  check_type(j, "category", path);
  return category_from_json(j, path);
}

void save_category_file(const RawCategory& c, const std::string& path) {
  json j = category_to_json(c);
  j["type"] = "category";
  write_file(j, path);
}

RawMonCat load_monoidal_file(const std::string& path) {
  json j = parse_file(path);
  if (!j.contains("type")) throw Error("ParseError", path + ": missing key 'type'");
  check_type(j, "monoidal", path);
  return monoidal_from_json(j, path);
}

void save_monoidal_file(const RawMonCat& m, const std::string& path) {
  json j;
  j["type"] = "monoidal";
  j["category"] = category_to_json(m.base);
  j["unit"] = m.unit;
  j["tensor_objects"] = nested_to_json(m.tensor_objects);
  j["tensor_morphisms"] = nested_to_json(m.tensor_morphisms);
  j["symmetry"] = nested_to_json(m.symmetry);
  write_file(j, path);
}

Presentation load_presentation_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "objects", "generators"}, {"relations"}, path);
  check_type(j, "presentation", path);
  Presentation p;
  p.objects = string_list(j.at("objects"), path + ".objects");
  for (const auto& g : j.at("generators")) {
    check_keys(g, {"id", "src", "dst"}, {}, path + ".generators");
    p.generators.push_back({g.at("id").get<std::string>(), g.at("src").get<std::string>(),
                            g.at("dst").get<std::string>()});
  }
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2)
        throw Error("ParseError", path + ".relations: entries must be [word, word] pairs");
      p.relations.emplace_back(string_list(r[0], path + ".relations"),
                               string_list(r[1], path + ".relations"));
    }
  return p;
}

void save_presentation_file(const Presentation& p, const std::string& path) {
  json j;
  j["type"] = "presentation";
  j["objects"] = p.objects;
  j["generators"] = json::array();
  for (const auto& g : p.generators)
    j["generators"].push_back({{"id", g.id}, {"src", g.src}, {"dst", g.dst}});
  j["relations"] = json::array();
  for (const auto& [lhs, rhs] : p.relations) j["relations"].push_back({lhs, rhs});
  write_file(j, path);
}

namespace {

json diagram_body_to_json(const OplaxDiagram& d) {
  const FinCat& idx = *d.index;
  json j;
  j["fibers"] = json::object();
  for (int i = 0; i < idx.object_count(); ++i)
    j["fibers"][idx.object_id(i)] = category_to_json(d.fibers[i].to_raw());
  j["transitions"] = json::object();
  for (int f = 0; f < idx.morphism_count(); ++f) {
    const FinCat& a = d.fibers[idx.src(f)];
    const FinCat& b = d.fibers[idx.dst(f)];
    json t;
    t["objects"] = json::object();
    t["morphisms"] = json::object();
    for (int x = 0; x < a.object_count(); ++x)
      t["objects"][a.object_id(x)] = b.object_id(d.transitions[f].object_map[x]);
    for (int m = 0; m < a.morphism_count(); ++m)
      t["morphisms"][a.morphism_id(m)] = b.morphism_id(d.transitions[f].morphism_map[m]);
    j["transitions"][idx.morphism_id(f)] = std::move(t);
  }
  return j;
}

json monoidal_to_json(const RawMonCat& m) {
  json j;
  j["category"] = category_to_json(m.base);
  j["unit"] = m.unit;
  j["tensor_objects"] = nested_to_json(m.tensor_objects);
  j["tensor_morphisms"] = nested_to_json(m.tensor_morphisms);
  j["symmetry"] = nested_to_json(m.symmetry);
  return j;
}

}  // namespace

void save_diagram_file(const OplaxDiagram& d, const std::string& path) {
  json j = diagram_body_to_json(d);
  j["type"] = "diagram";
  j["index"] = category_to_json(d.index->to_raw());
  write_file(j, path);
}

void save_monoidal_diagram_file(const LaxMonDiagram& d, const std::string& path) {
  json j = diagram_body_to_json(d.diagram);
  j["type"] = "monoidal-diagram";
  j["index"] = monoidal_to_json(d.index_mon->to_raw());
  const FinCat& idx = d.index_mon->base();
  const int n = idx.object_count();
  j["mu"] = json::object();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      const FinCat& fi = d.diagram.fibers[i];
      const FinCat& fj = d.diagram.fibers[jj];
      const FinCat& fij = d.diagram.fibers[d.index_mon->tensor_obj(i, jj)];
      const TableMap& t = d.mu[i * n + jj];
      json cell;
      cell["objects"] = json::object();
      cell["morphisms"] = json::object();
      for (int x = 0; x < fi.object_count(); ++x)
        for (int y = 0; y < fj.object_count(); ++y)
          cell["objects"][fi.object_id(x)][fj.object_id(y)] =
              fij.object_id(t.object_map[x * fj.object_count() + y]);
      for (int a = 0; a < fi.morphism_count(); ++a)
        for (int b = 0; b < fj.morphism_count(); ++b)
          cell["morphisms"][fi.morphism_id(a)][fj.morphism_id(b)] =
              fij.morphism_id(t.morphism_map[a * fj.morphism_count() + b]);
      j["mu"][idx.object_id(i)][idx.object_id(jj)] = std::move(cell);
    }
  j["unit_fiber"] =
      d.diagram.fibers[d.index_mon->unit_obj()].object_id(d.unit_fiber_object);
  write_file(j, path);
}

LoadedDiagram load_diagram_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "index", "fibers", "transitions"}, {}, path);
  check_type(j, "diagram", path);
  LoadedDiagram out;
  out.index = std::make_unique<FinCat>(
      validate_category(category_from_json(j.at("index"), path + ".index")));
  out.diagram = diagram_body(j, *out.index, path);
  return out;
}

LoadedMonDiagram load_monoidal_diagram_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "index", "fibers", "transitions", "mu", "unit_fiber"}, {}, path);
  check_type(j, "monoidal-diagram", path);
  LoadedMonDiagram out;
  out.index_mon = std::make_unique<StrictMonCat>(
      validate_monoidal(monoidal_from_json(j.at("index"), path + ".index")));
  const FinCat& idx = out.index_mon->base();
  out.diagram.index_mon = out.index_mon.get();
  out.diagram.diagram = diagram_body(j, idx, path);
  const OplaxDiagram& d = out.diagram.diagram;

  const int n = idx.object_count();
  out.diagram.mu.resize(static_cast<std::size_t>(n) * n);
  const json& mu = j.at("mu");
  for (int i = 0; i < n; ++i) {
    const std::string& iid = idx.object_id(i);
    if (!mu.contains(iid)) throw Error("ParseError", path + ".mu: missing row for '" + iid + "'");
    for (int jj = 0; jj < n; ++jj) {
      const std::string& jid = idx.object_id(jj);
      if (!mu.at(iid).contains(jid))
        throw Error("ParseError", path + ".mu." + iid + ": missing entry for '" + jid + "'");
      const json& cell = mu.at(iid).at(jid);
      const std::string where = path + ".mu." + iid + "." + jid;
      check_keys(cell, {"objects", "morphisms"}, {}, where);
      const FinCat& fi = d.fibers[i];
      const FinCat& fj = d.fibers[jj];
      const FinCat& fij = d.fibers[out.index_mon->tensor_obj(i, jj)];
      TableMap t;
      t.object_map.assign(static_cast<std::size_t>(fi.object_count()) * fj.object_count(), -1);
      t.morphism_map.assign(static_cast<std::size_t>(fi.morphism_count()) * fj.morphism_count(), -1);
      for (const auto& [x, row] : cell.at("objects").items()) {
        int xi = fi.object_index(x);
        if (xi < 0) throw Error("ParseError", where + ".objects: unknown object '" + x + "'");
        for (const auto& [y, z] : row.items()) {
          int yi = fj.object_index(y);
          int zi = fij.object_index(z.get<std::string>());
          if (yi < 0 || zi < 0)
            throw Error("ParseError", where + ".objects: unknown object in row '" + x + "'");
          t.object_map[xi * fj.object_count() + yi] = zi;
        }
      }
      for (const auto& [f, row] : cell.at("morphisms").items()) {
        int fiX = fi.morphism_index(f);
        if (fiX < 0) throw Error("ParseError", where + ".morphisms: unknown morphism '" + f + "'");
        for (const auto& [g, h] : row.items()) {
          int gi = fj.morphism_index(g);
          int hi = fij.morphism_index(h.get<std::string>());
          if (gi < 0 || hi < 0)
            throw Error("ParseError", where + ".morphisms: unknown morphism in row '" + f + "'");
          t.morphism_map[fiX * fj.morphism_count() + gi] = hi;
        }
      }
      for (int v : t.object_map)
        if (v < 0) throw Error("ParseError", where + ".objects: incomplete table");
      for (int v : t.morphism_map)
        if (v < 0) throw Error("ParseError", where + ".morphisms: incomplete table");
      out.diagram.mu[i * n + jj] = std::move(t);
    }
  }
  const std::string uf = j.at("unit_fiber").get<std::string>();
  out.diagram.unit_fiber_object = d.fibers[out.index_mon->unit_obj()].object_index(uf);
  if (out.diagram.unit_fiber_object < 0)
    throw Error("ParseError", path + ".unit_fiber: unknown object '" + uf + "'");
  return out;
}

LoadedLabeled load_labeled_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "category", "source", "target", "pairs", "labels"}, {"loops"}, path);
  check_type(j, "labeled", path);
  LoadedLabeled out;
  out.category = std::make_unique<FinCat>(
      validate_category(category_from_json(j.at("category"), path + ".category")));
  const FinCat& c = *out.category;
  for (const auto& e : j.at("source")) out.mor.source.entries.push_back(labeled_entry(c, e, path + ".source"));
  for (const auto& e : j.at("target")) out.mor.target.entries.push_back(labeled_entry(c, e, path + ".target"));
  const int ns = out.mor.source.length();
  const int nt = out.mor.target.length();
  for (const auto& p : j.at("pairs")) {
    auto v = string_list(p, path + ".pairs");
    if (v.size() != 2) throw Error("ParseError", path + ".pairs: entries must be pairs");
    out.mor.pairs.emplace_back(parse_point(v[0], ns, nt, path + ".pairs"),
                               parse_point(v[1], ns, nt, path + ".pairs"));
  }
  for (const auto& l : j.at("labels")) {
    int m = c.morphism_index(l.get<std::string>());
    if (m < 0) throw Error("ParseError", path + ".labels: unknown morphism '" + l.get<std::string>() + "'");
    out.mor.labels.push_back(m);
  }
  if (out.mor.labels.size() != out.mor.pairs.size())
    throw Error("ParseError", path + ": labels must align with pairs");
  if (j.contains("loops")) {
    TraceSet traces = trace_set(c);
    for (const auto& l : j.at("loops")) {
      int m = c.morphism_index(l.get<std::string>());
      if (m < 0 || traces.class_of_mor[m] < 0)
        throw Error("ParseError", path + ".loops: '" + l.get<std::string>() + "' is not an endomorphism");
      out.mor.loops.push_back(traces.class_of(m));
    }
  }
  fr_canonicalize(out.mor);
  return out;
}

void save_labeled_file(const FinCat& c, const TraceSet& traces, const BrauerMor& f,
                       const std::string& path) {
  json j;
  j["type"] = "labeled";
  j["category"] = category_to_json(c.to_raw());
  auto word = [&](const LabeledWord& w) {
    json a = json::array();
    for (auto [x, s] : w.entries) a.push_back({c.object_id(x), s > 0 ? "+" : "-"});
    return a;
  };
  j["source"] = word(f.source);
  j["target"] = word(f.target);
  const int ns = f.source.length();
  j["pairs"] = json::array();
  j["labels"] = json::array();
  for (std::size_t k = 0; k < f.pairs.size(); ++k) {
    j["pairs"].push_back({render_point(f.pairs[k].first, ns), render_point(f.pairs[k].second, ns)});
    j["labels"].push_back(c.morphism_id(f.labels[k]));
  }
  j["loops"] = json::array();
  for (int cls : f.loops) j["loops"].push_back(c.morphism_id(traces.representative[cls]));
  write_file(j, path);
}

Cob1Mor load_cobordism_file(const std::string& path) {
  json j = parse_file(path);
  check_keys(j, {"type", "source", "target", "pairs"}, {"circles"}, path);
  check_type(j, "cobordism", path);
  Cob1Mor f;
  try {
    f.source = parse_signs(j.at("source").get<std::string>());
    f.target = parse_signs(j.at("target").get<std::string>());
  } catch (const Error& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  const int ns = static_cast<int>(f.source.size());
  const int nt = static_cast<int>(f.target.size());
  for (const auto& p : j.at("pairs")) {
    auto v = string_list(p, path + ".pairs");
    if (v.size() != 2) throw Error("ParseError", path + ".pairs: entries must be pairs");
    f.pairs.emplace_back(parse_point(v[0], ns, nt, path + ".pairs"),
                         parse_point(v[1], ns, nt, path + ".pairs"));
  }
  if (j.contains("circles")) f.circles = j.at("circles").get<int>();
  cob_canonicalize(f);
  return f;
}

void save_cobordism_file(const Cob1Mor& f, const std::string& path) {
  json j;
  j["type"] = "cobordism";
  j["source"] = render_signs(f.source);
  j["target"] = render_signs(f.target);
  const int ns = static_cast<int>(f.source.size());
  j["pairs"] = json::array();
  for (const auto& [p, q] : f.pairs)
    j["pairs"].push_back({render_point(p, ns), render_point(q, ns)});
  j["circles"] = f.circles;
  write_file(j, path);
}

std::string peek_file_type(const std::string& path) {
  json j = parse_file(path);
  if (!j.contains("type") || !j.at("type").is_string())
    throw Error("ParseError", path + ": missing string key 'type'");
  return j.at("type").get<std::string>();
}

}  // namespace brauer
