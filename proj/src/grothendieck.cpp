#include "brauer/grothendieck.hpp"

#include <algorithm>
#include <set>

namespace brauer {

void validate_diagram(const OplaxDiagram& d) {
  const FinCat& idx = *d.index;
  if (static_cast<int>(d.fibers.size()) != idx.object_count())
    throw Error("DanglingReference", "diagram needs one fiber per index object");
  if (static_cast<int>(d.transitions.size()) != idx.morphism_count())
    throw Error("DanglingReference", "diagram needs one transition per index morphism");

  for (int f = 0; f < idx.morphism_count(); ++f) {
    const FinCat& a = d.fibers[idx.src(f)];
    const FinCat& b = d.fibers[idx.dst(f)];
    const TableMap& t = d.transitions[f];
    if (static_cast<int>(t.object_map.size()) != a.object_count() ||
        static_cast<int>(t.morphism_map.size()) != a.morphism_count())
      throw Error("DanglingReference", "transition for '" + idx.morphism_id(f) + "' has wrong table sizes");
    Functor fun{&a, &b, t.object_map, t.morphism_map};
    if (!check_functor(fun).ok())
      throw Error("DanglingReference", "transition for '" + idx.morphism_id(f) + "' is not a functor");
  }
  for (int i = 0; i < idx.object_count(); ++i) {
    const TableMap& t = d.transitions[idx.identity(i)];
    for (int x = 0; x < d.fibers[i].object_count(); ++x)
      if (t.object_map[x] != x)
        throw Error("CoherenceViolation", "transition of id_'" + idx.object_id(i) + "' is not the identity");
    for (int m = 0; m < d.fibers[i].morphism_count(); ++m)
      if (t.morphism_map[m] != m)
        throw Error("CoherenceViolation", "transition of id_'" + idx.object_id(i) + "' is not the identity");
  }
  for (int g = 0; g < idx.morphism_count(); ++g)
    for (int f = 0; f < idx.morphism_count(); ++f) {
      if (idx.dst(f) != idx.src(g)) continue;
      const TableMap& tf = d.transitions[f];
      const TableMap& tg = d.transitions[g];
      const TableMap& tgf = d.transitions[idx.compose(g, f)];
      const FinCat& a = d.fibers[idx.src(f)];
      for (int x = 0; x < a.object_count(); ++x)
        if (tgf.object_map[x] != tg.object_map[tf.object_map[x]])
          throw Error("CoherenceViolation", "strict functoriality fails on objects at ['" +
                                                idx.morphism_id(g) + "', '" + idx.morphism_id(f) + "']");
      for (int m = 0; m < a.morphism_count(); ++m)
        if (tgf.morphism_map[m] != tg.morphism_map[tf.morphism_map[m]])
          throw Error("CoherenceViolation", "strict functoriality fails on morphisms at ['" +
                                                idx.morphism_id(g) + "', '" + idx.morphism_id(f) + "']");
    }
}

int GrothCat::encode_mor(int f, int phi, int x) const {
  auto it = mor_encode.find({f, phi, x});
  return it == mor_encode.end() ? -1 : it->second;
}

Functor GrothCat::projection() const {
  Functor p;
  p.source = &cat;
  p.target = diagram->index;
  for (const auto& [i, x] : obj_decode) p.object_map.push_back(i);
  for (const auto& [f, phi, x] : mor_decode) p.morphism_map.push_back(f);
  return p;
}

GrothCat grothendieck(const OplaxDiagram& d) {
  validate_diagram(d);
  const FinCat& idx = *d.index;
  GrothCat g;
  g.diagram = &d;

  RawCategory raw;
  g.obj_encode.assign(idx.object_count(), {});
  for (int i = 0; i < idx.object_count(); ++i)
    for (int x = 0; x < d.fibers[i].object_count(); ++x) {
      g.obj_encode[i].push_back(static_cast<int>(raw.objects.size()));
      g.obj_decode.emplace_back(i, x);
      raw.objects.push_back("(" + idx.object_id(i) + "," + d.fibers[i].object_id(x) + ")");
    }

  auto mor_name = [&](int f, int phi, int x) {
    return "(" + idx.morphism_id(f) + "," + d.fibers[idx.dst(f)].morphism_id(phi) + ")@" +
           d.fibers[idx.src(f)].object_id(x);
  };
  for (int f = 0; f < idx.morphism_count(); ++f) {
    int i = idx.src(f), j = idx.dst(f);
    const FinCat& fib_j = d.fibers[j];
    for (int x = 0; x < d.fibers[i].object_count(); ++x) {
      int fx = d.transitions[f].object_map[x];
      for (int y = 0; y < fib_j.object_count(); ++y)
        for (int phi : fib_j.hom(fx, y)) {
          int id = static_cast<int>(raw.morphisms.size());
          g.mor_encode[{f, phi, x}] = id;
          g.mor_decode.push_back({f, phi, x});
          raw.morphisms.push_back({mor_name(f, phi, x),
                                   raw.objects[g.encode_obj(i, x)],
                                   raw.objects[g.encode_obj(j, y)]});
        }
    }
  }
  for (int i = 0; i < idx.object_count(); ++i)
    for (int x = 0; x < d.fibers[i].object_count(); ++x)
      raw.identities.emplace_back(raw.objects[g.encode_obj(i, x)],
                                  raw.morphisms[g.encode_mor(idx.identity(i), d.fibers[i].identity(x), x)].id);

  const int gm = static_cast<int>(g.mor_decode.size());
  for (int a = 0; a < gm; ++a) {
    auto [f, phi, x] = g.mor_decode[a];
    int j = idx.dst(f);
    int y = d.fibers[j].dst(phi);
    for (int b = 0; b < gm; ++b) {
      auto [gg, psi, x2] = g.mor_decode[b];
      if (idx.src(gg) != j || x2 != y) continue;
      int k = idx.dst(gg);
      int comp_f = idx.compose(gg, f);
      int comp_phi = d.fibers[k].compose(psi, d.transitions[gg].morphism_map[phi]);
      raw.composition.push_back({raw.morphisms[b].id, raw.morphisms[a].id,
                                 raw.morphisms[g.encode_mor(comp_f, comp_phi, x)].id});
    }
  }
  g.cat = validate_category(raw);
  return g;
}

Report hom_formula_check(const GrothCat& g, int i, int x, int j, int y) {
  Report rep;
  const FinCat& idx = *g.diagram->index;
  const FinCat& fib_j = g.diagram->fibers[j];
  const auto& lhs = g.cat.hom(g.encode_obj(i, x), g.encode_obj(j, y));

  std::set<int> rhs_images;
  bool all_present = true, injective = true;
  std::size_t rhs_count = 0;
  for (int f : idx.hom(i, j)) {
    int fx = g.diagram->transitions[f].object_map[x];
    for (int phi : fib_j.hom(fx, y)) {
      ++rhs_count;
      int m = g.encode_mor(f, phi, x);
      if (m < 0 || std::find(lhs.begin(), lhs.end(), m) == lhs.end()) all_present = false;
      if (!rhs_images.insert(m).second) injective = false;
    }
  }
  std::string name = "hom-formula/" + g.cat.object_id(g.encode_obj(i, x)) + "->" +
                     g.cat.object_id(g.encode_obj(j, y));
  bool pass = all_present && injective && rhs_count == lhs.size();
  rep.add(name, pass,
          std::to_string(lhs.size()) + " morphisms vs " + std::to_string(rhs_count) + " indexed components");
  return rep;
}

Report hom_formula_check_all(const GrothCat& g) {
  Report rep;
  bool all = true;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < g.obj_decode.size(); ++a)
    for (std::size_t b = 0; b < g.obj_decode.size(); ++b) {
      auto [i, x] = g.obj_decode[a];
      auto [j, y] = g.obj_decode[b];
      Report one = hom_formula_check(g, i, x, j, y);
      if (!one.ok()) {
        all = false;
        rep.merge(one);
      }
      ++pairs;
    }
  rep.add("hom-formula/all-pairs", all, std::to_string(pairs) + " object pairs checked");
  return rep;
}

UnitCocone unit_cocone(const GrothCat& g) {
  UnitCocone out;
  const FinCat& idx = *g.diagram->index;
  for (int i = 0; i < idx.object_count(); ++i) {
    const FinCat& fib = g.diagram->fibers[i];
    Functor inc;
    inc.source = &fib;
    inc.target = &g.cat;
    for (int x = 0; x < fib.object_count(); ++x) inc.object_map.push_back(g.encode_obj(i, x));
    for (int m = 0; m < fib.morphism_count(); ++m)
      inc.morphism_map.push_back(g.encode_mor(idx.identity(i), m, fib.src(m)));
    bool ok = check_functor(inc).ok();
    out.report.add("cocone/inclusion-" + idx.object_id(i), ok);
    out.inclusions.push_back(std::move(inc));
  }

  // connecting morphism for f: i -> j at x: (f, id_{F(f)x})
  auto conn = [&](int f, int x) {
    int fx = g.diagram->transitions[f].object_map[x];
    return g.encode_mor(f, g.diagram->fibers[idx.dst(f)].identity(fx), x);
  };

  bool natural = true;
  for (int f = 0; f < idx.morphism_count(); ++f) {
    int i = idx.src(f);
    const FinCat& fib = g.diagram->fibers[i];
    for (int m = 0; m < fib.morphism_count(); ++m) {
      int x = fib.src(m), x2 = fib.dst(m);
      int lhs = g.cat.compose(conn(f, x2), out.inclusions[i].morphism_map[m]);
      int rhs = g.cat.compose(out.inclusions[idx.dst(f)].morphism_map[g.diagram->transitions[f].morphism_map[m]],
                              conn(f, x));
      if (lhs != rhs) natural = false;
    }
  }
  out.report.add("cocone/naturality", natural);

  bool compat = true;
  for (int i = 0; i < idx.object_count(); ++i)
    for (int x = 0; x < g.diagram->fibers[i].object_count(); ++x)
      if (conn(idx.identity(i), x) != g.cat.identity(g.encode_obj(i, x))) compat = false;
  for (int f = 0; f < idx.morphism_count(); ++f)
    for (int h = 0; h < idx.morphism_count(); ++h) {
      if (idx.dst(h) != idx.src(f)) continue;
      int i = idx.src(h);
      for (int x = 0; x < g.diagram->fibers[i].object_count(); ++x) {
        int hx = g.diagram->transitions[h].object_map[x];
        if (conn(idx.compose(f, h), x) != g.cat.compose(conn(f, hx), conn(h, x))) compat = false;
      }
    }
  out.report.add("cocone/compatibility", compat);
  return out;
}

StrictMonCat monoidal_grothendieck(const LaxMonDiagram& d, GrothCat* out_decode) {
  const OplaxDiagram& diag = d.diagram;
  const StrictMonCat& im = *d.index_mon;
  if (diag.index != &im.base())
    throw Error("CoherenceViolation", "diagram index and monoidal index disagree");
  validate_diagram(diag);
  const FinCat& idx = *diag.index;
  const int n = idx.object_count();
  if (static_cast<int>(d.mu.size()) != n * n)
    throw Error("DanglingReference", "lax structure needs one mu table per pair of index objects");

  auto mu_obj = [&](int i, int j, int x, int y) {
    return d.mu[i * n + j].object_map[x * diag.fibers[j].object_count() + y];
  };
  auto mu_mor = [&](int i, int j, int phi, int psi) {
    return d.mu[i * n + j].morphism_map[phi * diag.fibers[j].morphism_count() + psi];
  };

  // shape and typing
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const FinCat& fi = diag.fibers[i];
      const FinCat& fj = diag.fibers[j];
      const FinCat& fij = diag.fibers[im.tensor_obj(i, j)];
      const TableMap& t = d.mu[i * n + j];
      if (static_cast<int>(t.object_map.size()) != fi.object_count() * fj.object_count() ||
          static_cast<int>(t.morphism_map.size()) != fi.morphism_count() * fj.morphism_count())
        throw Error("DanglingReference", "mu table at ('" + idx.object_id(i) + "', '" + idx.object_id(j) +
                                             "') has wrong sizes");
      for (int phi = 0; phi < fi.morphism_count(); ++phi)
        for (int psi = 0; psi < fj.morphism_count(); ++psi) {
          int m = mu_mor(i, j, phi, psi);
          if (fij.src(m) != mu_obj(i, j, fi.src(phi), fj.src(psi)) ||
              fij.dst(m) != mu_obj(i, j, fi.dst(phi), fj.dst(psi)))
            throw Error("CoherenceViolation", "mu is ill-typed at ('" + idx.object_id(i) + "', '" +
                                                  idx.object_id(j) + "')");
        }
      // functoriality of mu
      for (int phi = 0; phi < fi.morphism_count(); ++phi)
        for (int psi = 0; psi < fj.morphism_count(); ++psi) {
          for (int phi2 = 0; phi2 < fi.morphism_count(); ++phi2) {
            if (fi.src(phi2) != fi.dst(phi)) continue;
            for (int psi2 = 0; psi2 < fj.morphism_count(); ++psi2) {
              if (fj.src(psi2) != fj.dst(psi)) continue;
              if (mu_mor(i, j, fi.compose(phi2, phi), fj.compose(psi2, psi)) !=
                  fij.compose(mu_mor(i, j, phi2, psi2), mu_mor(i, j, phi, psi)))
                throw Error("CoherenceViolation", "mu is not functorial at ('" + idx.object_id(i) + "', '" +
                                                      idx.object_id(j) + "')");
            }
          }
        }
      for (int x = 0; x < fi.object_count(); ++x)
        for (int y = 0; y < fj.object_count(); ++y)
          if (mu_mor(i, j, fi.identity(x), fj.identity(y)) != fij.identity(mu_obj(i, j, x, y)))
            throw Error("CoherenceViolation", "mu does not preserve identities at ('" + idx.object_id(i) +
                                                  "', '" + idx.object_id(j) + "')");
    }

  // strict naturality in the index
  for (int f = 0; f < idx.morphism_count(); ++f)
    for (int g2 = 0; g2 < idx.morphism_count(); ++g2) {
      int i = idx.src(f), i2 = idx.dst(f), j = idx.src(g2), j2 = idx.dst(g2);
      int fg = im.tensor_mor(f, g2);
      const TableMap& tf = diag.transitions[f];
      const TableMap& tg = diag.transitions[g2];
      const TableMap& tfg = diag.transitions[fg];
      for (int x = 0; x < diag.fibers[i].object_count(); ++x)
        for (int y = 0; y < diag.fibers[j].object_count(); ++y)
          if (tfg.object_map[mu_obj(i, j, x, y)] != mu_obj(i2, j2, tf.object_map[x], tg.object_map[y]))
            throw Error("CoherenceViolation", "mu naturality fails on objects at ('" + idx.morphism_id(f) +
                                                  "', '" + idx.morphism_id(g2) + "')");
      for (int phi = 0; phi < diag.fibers[i].morphism_count(); ++phi)
        for (int psi = 0; psi < diag.fibers[j].morphism_count(); ++psi)
          if (tfg.morphism_map[mu_mor(i, j, phi, psi)] !=
              mu_mor(i2, j2, tf.morphism_map[phi], tg.morphism_map[psi]))
            throw Error("CoherenceViolation", "mu naturality fails on morphisms at ('" + idx.morphism_id(f) +
                                                  "', '" + idx.morphism_id(g2) + "')");
    }

  // strict associativity, unit and symmetry
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const FinCat& fi = diag.fibers[i];
        const FinCat& fj = diag.fibers[j];
        const FinCat& fk = diag.fibers[k];
        for (int x = 0; x < fi.object_count(); ++x)
          for (int y = 0; y < fj.object_count(); ++y)
            for (int z = 0; z < fk.object_count(); ++z)
              if (mu_obj(im.tensor_obj(i, j), k, mu_obj(i, j, x, y), z) !=
                  mu_obj(i, im.tensor_obj(j, k), x, mu_obj(j, k, y, z)))
                throw Error("CoherenceViolation", "mu associativity fails on objects");
        for (int a = 0; a < fi.morphism_count(); ++a)
          for (int b = 0; b < fj.morphism_count(); ++b)
            for (int c = 0; c < fk.morphism_count(); ++c)
              if (mu_mor(im.tensor_obj(i, j), k, mu_mor(i, j, a, b), c) !=
                  mu_mor(i, im.tensor_obj(j, k), a, mu_mor(j, k, b, c)))
                throw Error("CoherenceViolation", "mu associativity fails on morphisms");
      }
  const int unit_i = im.unit_obj();
  const FinCat& unit_fib = diag.fibers[unit_i];
  if (d.unit_fiber_object < 0 || d.unit_fiber_object >= unit_fib.object_count())
    throw Error("DanglingReference", "unit fiber object is not an object of F(1)");
  for (int i = 0; i < n; ++i) {
    const FinCat& fi = diag.fibers[i];
    for (int x = 0; x < fi.object_count(); ++x) {
      if (mu_obj(unit_i, i, d.unit_fiber_object, x) != x || mu_obj(i, unit_i, x, d.unit_fiber_object) != x)
        throw Error("CoherenceViolation", "mu unit law fails on objects at '" + idx.object_id(i) + "'");
    }
    int uid = unit_fib.identity(d.unit_fiber_object);
    for (int phi = 0; phi < fi.morphism_count(); ++phi)
      if (mu_mor(unit_i, i, uid, phi) != phi || mu_mor(i, unit_i, phi, uid) != phi)
        throw Error("CoherenceViolation", "mu unit law fails on morphisms at '" + idx.object_id(i) + "'");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TableMap& ts = diag.transitions[im.symmetry(i, j)];
      const FinCat& fi = diag.fibers[i];
      const FinCat& fj = diag.fibers[j];
      for (int x = 0; x < fi.object_count(); ++x)
        for (int y = 0; y < fj.object_count(); ++y)
          if (ts.object_map[mu_obj(i, j, x, y)] != mu_obj(j, i, y, x))
            throw Error("CoherenceViolation", "mu symmetry compatibility fails on objects at ('" +
                                                  idx.object_id(i) + "', '" + idx.object_id(j) + "')");
      for (int phi = 0; phi < fi.morphism_count(); ++phi)
        for (int psi = 0; psi < fj.morphism_count(); ++psi)
          if (ts.morphism_map[mu_mor(i, j, phi, psi)] != mu_mor(j, i, psi, phi))
            throw Error("CoherenceViolation", "mu symmetry compatibility fails on morphisms at ('" +
                                                  idx.object_id(i) + "', '" + idx.object_id(j) + "')");
    }

  GrothCat g = grothendieck(diag);
  const int gn = g.cat.object_count();
  const int gm = g.cat.morphism_count();
  std::vector<int> tobj(static_cast<std::size_t>(gn) * gn, -1);
  std::vector<int> tmor(static_cast<std::size_t>(gm) * gm, -1);
  std::vector<int> sym(static_cast<std::size_t>(gn) * gn, -1);
  for (int a = 0; a < gn; ++a)
    for (int b = 0; b < gn; ++b) {
      auto [i, x] = g.obj_decode[a];
      auto [j, y] = g.obj_decode[b];
      tobj[a * gn + b] = g.encode_obj(im.tensor_obj(i, j), mu_obj(i, j, x, y));
      int ij = im.tensor_obj(i, j);
      int sphi = diag.fibers[im.tensor_obj(j, i)].identity(mu_obj(j, i, y, x));
      sym[a * gn + b] = g.encode_mor(im.symmetry(i, j), sphi, mu_obj(i, j, x, y));
      (void)ij;
    }
  for (int a = 0; a < gm; ++a)
    for (int b = 0; b < gm; ++b) {
      auto [f, phi, x] = g.mor_decode[a];
      auto [g2, psi, x2] = g.mor_decode[b];
      int i = idx.src(f), j = idx.src(g2);
      tmor[static_cast<std::size_t>(a) * gm + b] =
          g.encode_mor(im.tensor_mor(f, g2), mu_mor(idx.dst(f), idx.dst(g2), phi, psi), mu_obj(i, j, x, x2));
    }
  int unit = g.encode_obj(unit_i, d.unit_fiber_object);
  if (out_decode) *out_decode = g;
  return assemble_monoidal(std::move(g.cat), std::move(tobj), std::move(tmor), unit, std::move(sym));
}

}  // namespace brauer
