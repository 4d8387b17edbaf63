#include "brauer/moncat.hpp"

#include <algorithm>

namespace brauer {

int StrictMonCat::tensor_obj(const std::vector<int>& xs) const {
  int acc = unit_;
  for (int x : xs) acc = tensor_obj(acc, x);
  return acc;
}

RawMonCat StrictMonCat::to_raw() const {
  RawMonCat raw;
  raw.base = base_.to_raw();
  const int n = base_.object_count(), m = base_.morphism_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      raw.tensor_objects.push_back({base_.object_id(x), base_.object_id(y), base_.object_id(tensor_obj(x, y))});
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      raw.tensor_morphisms.push_back({base_.morphism_id(f), base_.morphism_id(g), base_.morphism_id(tensor_mor(f, g))});
  raw.unit = base_.object_id(unit_);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      raw.symmetry.push_back({base_.object_id(x), base_.object_id(y), base_.morphism_id(symmetry(x, y))});
  return raw;
}

namespace {

void check_moncat_laws(const StrictMonCat& mc) {
  const FinCat& c = mc.base();
  const int n = c.object_count(), m = c.morphism_count();

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int fg = mc.tensor_mor(f, g);
      if (c.src(fg) != mc.tensor_obj(c.src(f), c.src(g)) || c.dst(fg) != mc.tensor_obj(c.dst(f), c.dst(g)))
        throw Error("CoherenceViolation",
                    "tensor of ['" + c.morphism_id(f) + "', '" + c.morphism_id(g) + "'] is ill-typed");
    }

  for (int x = 0; x < n; ++x) {
    if (mc.tensor_obj(mc.unit_obj(), x) != x || mc.tensor_obj(x, mc.unit_obj()) != x)
      throw Error("CoherenceViolation", "unit law fails on object '" + c.object_id(x) + "'");
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mc.tensor_obj(mc.tensor_obj(x, y), z) != mc.tensor_obj(x, mc.tensor_obj(y, z)))
          throw Error("CoherenceViolation", "object associativity fails at ('" + c.object_id(x) + "', '" +
                                                c.object_id(y) + "', '" + c.object_id(z) + "')");
  }

  int idu = c.identity(mc.unit_obj());
  for (int f = 0; f < m; ++f) {
    if (mc.tensor_mor(idu, f) != f || mc.tensor_mor(f, idu) != f)
      throw Error("CoherenceViolation", "morphism unit law fails at '" + c.morphism_id(f) + "'");
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (mc.tensor_mor(mc.tensor_mor(f, g), h) != mc.tensor_mor(f, mc.tensor_mor(g, h)))
          throw Error("CoherenceViolation", "morphism associativity fails at ('" + c.morphism_id(f) + "', '" +
                                                c.morphism_id(g) + "', '" + c.morphism_id(h) + "')");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mc.tensor_mor(c.identity(x), c.identity(y)) != c.identity(mc.tensor_obj(x, y)))
        throw Error("CoherenceViolation",
                    "id ⊗ id ≠ id at ('" + c.object_id(x) + "', '" + c.object_id(y) + "')");

  for (int f2 = 0; f2 < m; ++f2)
    for (int f1 = 0; f1 < m; ++f1) {
      if (c.dst(f1) != c.src(f2)) continue;
      for (int g2 = 0; g2 < m; ++g2)
        for (int g1 = 0; g1 < m; ++g1) {
          if (c.dst(g1) != c.src(g2)) continue;
          int lhs = mc.tensor_mor(c.compose(f2, f1), c.compose(g2, g1));
          int rhs = c.compose(mc.tensor_mor(f2, g2), mc.tensor_mor(f1, g1));
          if (lhs != rhs)
            throw Error("CoherenceViolation", "tensor functoriality fails at ('" + c.morphism_id(f2) + "'∘'" +
                                                  c.morphism_id(f1) + "', '" + c.morphism_id(g2) + "'∘'" +
                                                  c.morphism_id(g1) + "')");
        }
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = mc.symmetry(x, y);
      if (c.src(s) != mc.tensor_obj(x, y) || c.dst(s) != mc.tensor_obj(y, x))
        throw Error("SymmetryViolation",
                    "symmetry at ('" + c.object_id(x) + "', '" + c.object_id(y) + "') is ill-typed");
      if (c.compose(mc.symmetry(y, x), s) != c.identity(mc.tensor_obj(x, y)))
        throw Error("SymmetryViolation",
                    "s_{y,x} ∘ s_{x,y} ≠ id at ('" + c.object_id(x) + "', '" + c.object_id(y) + "')");
    }
  for (int x = 0; x < n; ++x)
    if (mc.symmetry(x, mc.unit_obj()) != c.identity(x) || mc.symmetry(mc.unit_obj(), x) != c.identity(x))
      throw Error("SymmetryViolation", "unit symmetry is not the identity at '" + c.object_id(x) + "'");

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int lhs = c.compose(mc.symmetry(c.dst(f), c.dst(g)), mc.tensor_mor(f, g));
      int rhs = c.compose(mc.tensor_mor(g, f), mc.symmetry(c.src(f), c.src(g)));
      if (lhs != rhs)
        throw Error("SymmetryViolation",
                    "symmetry naturality fails at ('" + c.morphism_id(f) + "', '" + c.morphism_id(g) + "')");
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // s_{x⊗y,z} = (s_{x,z} ⊗ id_y) ∘ (id_x ⊗ s_{y,z})
        int lhs = mc.symmetry(mc.tensor_obj(x, y), z);
        int rhs = c.compose(mc.tensor_mor(mc.symmetry(x, z), c.identity(y)),
                            mc.tensor_mor(c.identity(x), mc.symmetry(y, z)));
        if (lhs != rhs)
          throw Error("SymmetryViolation", "hexagon fails at ('" + c.object_id(x) + "'⊗'" + c.object_id(y) +
                                               "', '" + c.object_id(z) + "')");
        // s_{x,y⊗z} = (id_y ⊗ s_{x,z}) ∘ (s_{x,y} ⊗ id_z)
        int lhs2 = mc.symmetry(x, mc.tensor_obj(y, z));
        int rhs2 = c.compose(mc.tensor_mor(c.identity(y), mc.symmetry(x, z)),
                             mc.tensor_mor(mc.symmetry(x, y), c.identity(z)));
        if (lhs2 != rhs2)
          throw Error("SymmetryViolation", "hexagon fails at ('" + c.object_id(x) + "', '" + c.object_id(y) +
                                               "'⊗'" + c.object_id(z) + "')");
      }
}

}  // namespace

StrictMonCat assemble_monoidal(FinCat base, std::vector<int> tobj, std::vector<int> tmor,
                               int unit, std::vector<int> sym) {
  StrictMonCat mc;
  mc.base_ = std::move(base);
  mc.tobj_ = std::move(tobj);
  mc.tmor_ = std::move(tmor);
  mc.unit_ = unit;
  mc.sym_ = std::move(sym);
  check_moncat_laws(mc);
  return mc;
}

StrictMonCat validate_monoidal(const RawMonCat& raw) {
  FinCat base = validate_category(raw.base);
  const int n = base.object_count(), m = base.morphism_count();
  std::vector<int> tobj(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> tmor(static_cast<std::size_t>(m) * m, -1);
  std::vector<int> sym(static_cast<std::size_t>(n) * n, -1);

  auto obj = [&](const std::string& id) {
    int x = base.object_index(id);
    if (x < 0) throw Error("DanglingReference", "unknown object '" + id + "' in monoidal tables");
    return x;
  };
  auto mor = [&](const std::string& id) {
    int f = base.morphism_index(id);
    if (f < 0) throw Error("DanglingReference", "unknown morphism '" + id + "' in monoidal tables");
    return f;
  };
  for (const auto& t : raw.tensor_objects) tobj[obj(t[0]) * n + obj(t[1])] = obj(t[2]);
  for (const auto& t : raw.tensor_morphisms) tmor[mor(t[0]) * m + mor(t[1])] = mor(t[2]);
  int unit = obj(raw.unit);
  for (const auto& t : raw.symmetry) sym[obj(t[0]) * n + obj(t[1])] = mor(t[2]);

  // identity tensor entries may be omitted; fill id ⊗ id, 1-unit rows are NOT
  // auto-filled for morphisms since strict unitality pins them to f itself
  for (int f = 0; f < m; ++f) {
    int idu = base.identity(unit);
    if (tmor[static_cast<std::size_t>(idu) * m + f] < 0) tmor[static_cast<std::size_t>(idu) * m + f] = f;
    if (tmor[static_cast<std::size_t>(f) * m + idu] < 0) tmor[static_cast<std::size_t>(f) * m + idu] = f;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (tobj[x * n + y] < 0)
        throw Error("DanglingReference", "tensor of objects ('" + base.object_id(x) + "', '" +
                                             base.object_id(y) + "') is not declared");
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (tmor[static_cast<std::size_t>(f) * m + g] < 0)
        throw Error("DanglingReference", "tensor of morphisms ('" + base.morphism_id(f) + "', '" +
                                             base.morphism_id(g) + "') is not declared");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sym[x * n + y] < 0)
        throw Error("DanglingReference", "symmetry at ('" + base.object_id(x) + "', '" + base.object_id(y) +
                                             "') is not declared");

  return assemble_monoidal(std::move(base), std::move(tobj), std::move(tmor), unit, std::move(sym));
}

bool triangles_hold(const StrictMonCat& mc, const DualData& d) {
  const FinCat& c = mc.base();
  int x = d.object, xs = d.dual;
  if (d.ev < 0 || d.coev < 0 || xs < 0) return false;
  if (c.src(d.ev) != mc.tensor_obj(x, xs) || c.dst(d.ev) != mc.unit_obj()) return false;
  if (c.src(d.coev) != mc.unit_obj() || c.dst(d.coev) != mc.tensor_obj(xs, x)) return false;
  // (ev ⊗ id_x) ∘ (id_x ⊗ coev) = id_x
  int t1 = c.compose(mc.tensor_mor(d.ev, c.identity(x)), mc.tensor_mor(c.identity(x), d.coev));
  if (t1 != c.identity(x)) return false;
  // (id_{x*} ⊗ ev) ∘ (coev ⊗ id_{x*}) = id_{x*}
  int t2 = c.compose(mc.tensor_mor(c.identity(xs), d.ev), mc.tensor_mor(d.coev, c.identity(xs)));
  return t2 == c.identity(xs);
}

std::optional<DualData> find_dual(const StrictMonCat& mc, int x) {
  const FinCat& c = mc.base();
  std::optional<DualData> best;
  auto better = [&](const DualData& a, const DualData& b) {
    return std::tuple(c.object_id(a.dual), c.morphism_id(a.ev), c.morphism_id(a.coev)) <
           std::tuple(c.object_id(b.dual), c.morphism_id(b.ev), c.morphism_id(b.coev));
  };
  for (int y = 0; y < c.object_count(); ++y)
    for (int ev : c.hom(mc.tensor_obj(x, y), mc.unit_obj()))
      for (int coev : c.hom(mc.unit_obj(), mc.tensor_obj(y, x))) {
        DualData d{x, y, ev, coev};
        if (!triangles_hold(mc, d)) continue;
        if (!best || better(d, *best)) best = d;
      }
  return best;
}

bool RigidityReport::all_dualizable() const {
  return std::all_of(duals.begin(), duals.end(), [](const auto& d) { return d.has_value(); });
}

RigidityReport check_rigid(const StrictMonCat& mc) {
  RigidityReport out;
  const FinCat& c = mc.base();
  out.duals.resize(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) {
    out.duals[x] = find_dual(mc, x);
    if (out.duals[x]) {
      out.report.add("rigid/" + c.object_id(x), true,
                     "dual '" + c.object_id(out.duals[x]->dual) + "', ev '" + c.morphism_id(out.duals[x]->ev) +
                         "', coev '" + c.morphism_id(out.duals[x]->coev) + "'");
    } else {
      out.report.add("rigid/" + c.object_id(x), false, "no dual found by exhaustive search");
    }
  }
  return out;
}

Report check_lax_monoidal(const StrictMonCat& cc, const StrictMonCat& dd, const LaxMonFunctor& lf) {
  Report rep;
  rep.merge(check_functor(lf.underlying));
  if (!rep.ok()) return rep;
  const FinCat& c = cc.base();
  const FinCat& d = dd.base();
  const auto& fo = lf.underlying.object_map;
  const auto& fm = lf.underlying.morphism_map;
  const int n = c.object_count();

  bool typed = true;
  for (int x = 0; x < n && typed; ++x)
    for (int y = 0; y < n && typed; ++y) {
      int mu = lf.mu[x * n + y];
      if (d.src(mu) != dd.tensor_obj(fo[x], fo[y]) || d.dst(mu) != fo[cc.tensor_obj(x, y)]) typed = false;
    }
  if (d.src(lf.unit_mor) != dd.unit_obj() || d.dst(lf.unit_mor) != fo[cc.unit_obj()]) typed = false;
  rep.add("lax/typing", typed);
  if (!typed) return rep;

  bool natural = true;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g) {
      int lhs = d.compose(lf.mu[c.dst(f) * n + c.dst(g)], dd.tensor_mor(fm[f], fm[g]));
      int rhs = d.compose(fm[cc.tensor_mor(f, g)], lf.mu[c.src(f) * n + c.src(g)]);
      if (lhs != rhs) natural = false;
    }
  rep.add("lax/naturality", natural);

  bool assoc = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = d.compose(lf.mu[cc.tensor_obj(x, y) * n + z],
                            dd.tensor_mor(lf.mu[x * n + y], d.identity(fo[z])));
        int rhs = d.compose(lf.mu[x * n + cc.tensor_obj(y, z)],
                            dd.tensor_mor(d.identity(fo[x]), lf.mu[y * n + z]));
        if (lhs != rhs) assoc = false;
      }
  rep.add("lax/associativity", assoc);

  bool unit_ok = true;
  for (int x = 0; x < n; ++x) {
    int lhs = d.compose(lf.mu[cc.unit_obj() * n + x], dd.tensor_mor(lf.unit_mor, d.identity(fo[x])));
    if (lhs != fm[c.identity(x)]) unit_ok = false;
    int rhs = d.compose(lf.mu[x * n + cc.unit_obj()], dd.tensor_mor(d.identity(fo[x]), lf.unit_mor));
    if (rhs != fm[c.identity(x)]) unit_ok = false;
  }
  rep.add("lax/unit", unit_ok);

  bool symm = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = d.compose(lf.mu[y * n + x], dd.symmetry(fo[x], fo[y]));
      int rhs = d.compose(fm[cc.symmetry(x, y)], lf.mu[x * n + y]);
      if (lhs != rhs) symm = false;
    }
  rep.add("lax/symmetry", symm);
  return rep;
}

}  // namespace brauer
