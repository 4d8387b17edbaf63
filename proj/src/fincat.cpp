#include "brauer/fincat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace brauer {

namespace {

std::string triple_str(const FinCat& c, int h, int g, int f) {
  return c.morphism_id(h) + " , " + c.morphism_id(g) + " , " + c.morphism_id(f);
}

}  // namespace

int FinCat::object_index(std::string_view id) const {
  auto it = obj_index_.find(std::string(id));
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCat::morphism_index(std::string_view id) const {
  auto it = mor_index_.find(std::string(id));
  return it == mor_index_.end() ? -1 : it->second;
}

std::vector<int> FinCat::endomorphisms() const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (src(m) == dst(m)) out.push_back(m);
  return out;
}

bool FinCat::is_iso(int m) const {
  for (int u : hom(dst(m), src(m))) {
    if (compose(u, m) == identity(src(m)) && compose(m, u) == identity(dst(m))) return true;
  }
  return false;
}

bool FinCat::objects_isomorphic(int x, int y) const {
  if (x == y) return true;
  for (int m : hom(x, y))
    if (is_iso(m)) return true;
  return false;
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (const auto& m : mors_) raw.morphisms.push_back({m.id, objects_[m.src], objects_[m.dst]});
  for (int x = 0; x < object_count(); ++x)
    raw.identities.emplace_back(objects_[x], mors_[identity_[x]].id);
  for (int g = 0; g < morphism_count(); ++g)
    for (int f = 0; f < morphism_count(); ++f)
      if (compose(g, f) >= 0)
        raw.composition.push_back({mors_[g].id, mors_[f].id, mors_[compose(g, f)].id});
  return raw;
}

FinCat validate_category(const RawCategory& raw) {
  FinCat c;
  c.objects_ = raw.objects;
  for (int x = 0; x < c.object_count(); ++x) {
    if (!c.obj_index_.emplace(c.objects_[x], x).second)
      throw Error("DanglingReference", "duplicate object id '" + c.objects_[x] + "'");
  }
  for (const auto& rm : raw.morphisms) {
    int s = c.object_index(rm.src), d = c.object_index(rm.dst);
    if (s < 0) throw Error("DanglingReference", "morphism '" + rm.id + "' has unknown source '" + rm.src + "'");
    if (d < 0) throw Error("DanglingReference", "morphism '" + rm.id + "' has unknown target '" + rm.dst + "'");
    int idx = c.morphism_count();
    if (!c.mor_index_.emplace(rm.id, idx).second)
      throw Error("DanglingReference", "duplicate morphism id '" + rm.id + "'");
    c.mors_.push_back({rm.id, s, d});
  }
  const int n = c.object_count(), m = c.morphism_count();
  c.homs_.assign(static_cast<std::size_t>(n) * n, {});
  for (int i = 0; i < m; ++i) c.homs_[c.src(i) * n + c.dst(i)].push_back(i);

  c.identity_.assign(n, -1);
  for (const auto& [obj, mor] : raw.identities) {
    int x = c.object_index(obj);
    if (x < 0) throw Error("DanglingReference", "identity declared for unknown object '" + obj + "'");
    int i = c.morphism_index(mor);
    if (i < 0) throw Error("DanglingReference", "identity of '" + obj + "' names unknown morphism '" + mor + "'");
    if (c.src(i) != x || c.dst(i) != x)
      throw Error("DanglingReference", "identity of '" + obj + "' is not an endomorphism of it");
    c.identity_[x] = i;
  }
  for (int x = 0; x < n; ++x)
    if (c.identity_[x] < 0) throw Error("DanglingReference", "no identity declared for object '" + c.objects_[x] + "'");

  c.compose_.assign(static_cast<std::size_t>(m) * m, -1);
  for (const auto& t : raw.composition) {
    int g = c.morphism_index(t[0]), f = c.morphism_index(t[1]), gf = c.morphism_index(t[2]);
    if (g < 0 || f < 0 || gf < 0)
      throw Error("DanglingReference", "composition entry [" + t[0] + ", " + t[1] + ", " + t[2] + "] names an unknown morphism");
    if (c.dst(f) != c.src(g))
      throw Error("DanglingReference", "composition entry [" + t[0] + ", " + t[1] + "] is not composable");
    if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
      throw Error("DanglingReference", "composite of [" + t[0] + ", " + t[1] + "] lands outside hom(" +
                                           c.objects_[c.src(f)] + ", " + c.objects_[c.dst(g)] + ")");
    c.compose_[g * m + f] = gf;
  }

  // Fill in identity composites when the tables omit them, then require totality.
  for (int f = 0; f < m; ++f) {
    int& left = c.compose_[c.identity_[c.dst(f)] * m + f];
    if (left < 0) left = f;
    int& right = c.compose_[f * m + c.identity_[c.src(f)]];
    if (right < 0) right = f;
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.dst(f) == c.src(g) && c.compose(g, f) < 0)
        throw Error("DanglingReference",
                    "no composite declared for [" + c.morphism_id(g) + ", " + c.morphism_id(f) + "]");

  for (int f = 0; f < m; ++f) {
    if (c.compose(c.identity_[c.dst(f)], f) != f || c.compose(f, c.identity_[c.src(f)]) != f)
      throw Error("IdentityViolation", "identity law fails at morphism '" + c.morphism_id(f) + "'");
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (c.dst(g) != c.src(h)) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (c.dst(f) != c.src(g)) continue;
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          throw Error("AssocViolation", "associativity fails at [" + triple_str(c, h, g, f) + "]");
      }
    }
  return c;
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

struct Path {
  int src_obj = -1;          // meaningful for the empty path
  std::vector<int> gens;     // application order

  int length() const { return static_cast<int>(gens.size()); }
};

struct PresCtx {
  std::vector<std::string> objects;
  std::vector<Presentation::Generator> gens;
  std::vector<int> gen_src, gen_dst;
  std::vector<std::pair<Path, Path>> relations;
  int max_rel_len = 0;

  int obj_of(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(objects.size()); ++i)
      if (objects[i] == id) return i;
    return -1;
  }

  int path_dst(const Path& p) const { return p.gens.empty() ? p.src_obj : gen_dst[p.gens.back()]; }
  int object_at(const Path& p, int cut) const { return cut == 0 ? p.src_obj : gen_dst[p.gens[cut - 1]]; }

  std::string render(const Path& p) const {
    if (p.gens.empty()) return "id_" + objects[p.src_obj];
    std::string out;
    for (std::size_t i = 0; i < p.gens.size(); ++i) {
      if (i) out += ".";
      out += gens[p.gens[i]].id;
    }
    return out;
  }

  // Shortest, then lexicographic on generator identifiers.
  bool less(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    for (int i = 0; i < a.length(); ++i) {
      const std::string& ga = gens[a.gens[i]].id;
      const std::string& gb = gens[b.gens[i]].id;
      if (ga != gb) return ga < gb;
    }
    return false;
  }

  std::string key(const Path& p) const {
    std::string k = std::to_string(p.src_obj) + "|";
    for (int g : p.gens) k += std::to_string(g) + ",";
    return k;
  }

  // Least word equivalent to p under relation rewriting, explored up to a
  // length cap. The cap is generous relative to the relation lengths so that
  // desk-scale presentations normalize exactly.
  Path normal(const Path& p) const {
    const int cap = p.length() + 2 * max_rel_len + 2;
    std::deque<Path> queue{p};
    std::set<std::string> seen{key(p)};
    Path best = p;
    while (!queue.empty()) {
      Path w = queue.front();
      queue.pop_front();
      if (less(w, best)) best = w;
      auto try_push = [&](Path next) {
        if (next.length() > cap) return;
        auto k = key(next);
        if (seen.insert(k).second) queue.push_back(std::move(next));
      };
      auto apply = [&](const Path& from, const Path& to) {
        if (from.gens.empty()) {
          // insert `to` wherever the path sits at the relation's object
          for (int cut = 0; cut <= w.length(); ++cut) {
            if (object_at(w, cut) != from.src_obj) continue;
            Path next;
            next.src_obj = w.src_obj;
            next.gens.assign(w.gens.begin(), w.gens.begin() + cut);
            next.gens.insert(next.gens.end(), to.gens.begin(), to.gens.end());
            next.gens.insert(next.gens.end(), w.gens.begin() + cut, w.gens.end());
            try_push(std::move(next));
          }
        } else {
          for (int i = 0; i + from.length() <= w.length(); ++i) {
            if (!std::equal(from.gens.begin(), from.gens.end(), w.gens.begin() + i)) continue;
            Path next;
            next.src_obj = w.src_obj;
            next.gens.assign(w.gens.begin(), w.gens.begin() + i);
            next.gens.insert(next.gens.end(), to.gens.begin(), to.gens.end());
            next.gens.insert(next.gens.end(), w.gens.begin() + i + from.length(), w.gens.end());
            try_push(std::move(next));
          }
        }
      };
      for (const auto& [lhs, rhs] : relations) {
        apply(lhs, rhs);
        apply(rhs, lhs);
      }
    }
    return best;
  }
};

}  // namespace

FinCat close_presentation(const Presentation& pres, int size_bound) {
  if (size_bound < 1) throw Error("BoundExceeded", "size_bound must be at least 1");
  PresCtx ctx;
  ctx.objects = pres.objects;
  ctx.gens = pres.generators;
  for (const auto& g : pres.generators) {
    int s = ctx.obj_of(g.src), d = ctx.obj_of(g.dst);
    if (s < 0 || d < 0) throw Error("DanglingReference", "generator '" + g.id + "' references an unknown object");
    ctx.gen_src.push_back(s);
    ctx.gen_dst.push_back(d);
  }
  auto resolve_word = [&](const Presentation::Word& w) {
    Path p;
    for (const auto& gid : w) {
      int gi = -1;
      for (int i = 0; i < static_cast<int>(ctx.gens.size()); ++i)
        if (ctx.gens[i].id == gid) gi = i;
      if (gi < 0) throw Error("DanglingReference", "relation word names unknown generator '" + gid + "'");
      if (!p.gens.empty() && ctx.gen_src[gi] != ctx.path_dst(p))
        throw Error("DanglingReference", "relation word is not a composable path at '" + gid + "'");
      if (p.gens.empty()) p.src_obj = ctx.gen_src[gi];
      p.gens.push_back(gi);
    }
    return p;
  };
  for (const auto& [lw, rw] : pres.relations) {
    Path l = resolve_word(lw), r = resolve_word(rw);
    if (l.gens.empty() && r.gens.empty())
      throw Error("DanglingReference", "relation between two empty words needs a path to anchor it");
    if (l.gens.empty()) l.src_obj = r.src_obj;
    if (r.gens.empty()) r.src_obj = l.src_obj;
    if (l.src_obj != r.src_obj || ctx.path_dst(l) != ctx.path_dst(r))
      throw Error("DanglingReference", "relation sides are not parallel");
    ctx.max_rel_len = std::max({ctx.max_rel_len, l.length(), r.length()});
    ctx.relations.emplace_back(std::move(l), std::move(r));
  }

  const int n = static_cast<int>(ctx.objects.size());
  // reps[x*n+y]: normal forms of the morphisms x -> y found so far
  std::vector<std::vector<Path>> reps(static_cast<std::size_t>(n) * n);
  std::set<std::string> known;
  auto add = [&](Path p) -> bool {
    auto k = ctx.key(p);
    if (!known.insert(k).second) return false;
    int x = p.src_obj, y = ctx.path_dst(p);
    auto& cell = reps[x * n + y];
    cell.push_back(std::move(p));
    if (static_cast<int>(cell.size()) > size_bound)
      throw Error("BoundExceeded", "hom(" + ctx.objects[x] + ", " + ctx.objects[y] + ") exceeds the size bound " +
                                       std::to_string(size_bound));
    return true;
  };

  for (int x = 0; x < n; ++x) {
    Path idp;
    idp.src_obj = x;
    add(ctx.normal(idp));
  }
  for (int g = 0; g < static_cast<int>(ctx.gens.size()); ++g) {
    Path p;
    p.src_obj = ctx.gen_src[g];
    p.gens = {g};
    add(ctx.normal(p));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    // snapshot to avoid iterating while inserting
    std::vector<Path> all;
    for (const auto& cell : reps) all.insert(all.end(), cell.begin(), cell.end());
    for (const auto& f : all) {
      for (const auto& g : all) {
        if (g.src_obj != ctx.path_dst(f)) continue;
        Path w;
        w.src_obj = f.src_obj;
        w.gens = f.gens;
        w.gens.insert(w.gens.end(), g.gens.begin(), g.gens.end());
        if (add(ctx.normal(w))) grew = true;
      }
    }
  }

  RawCategory raw;
  raw.objects = ctx.objects;
  std::map<std::string, std::string> norm_to_id;  // normal-form key -> morphism id
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto cell = reps[x * n + y];
      std::sort(cell.begin(), cell.end(), [&](const Path& a, const Path& b) { return ctx.less(a, b); });
      for (const auto& p : cell) {
        std::string id = ctx.render(p);
        raw.morphisms.push_back({id, ctx.objects[x], ctx.objects[y]});
        norm_to_id[ctx.key(p)] = id;
        if (p.gens.empty()) raw.identities.emplace_back(ctx.objects[x], id);
      }
    }
  std::vector<Path> all;
  for (const auto& cell : reps) all.insert(all.end(), cell.begin(), cell.end());
  for (const auto& f : all)
    for (const auto& g : all) {
      if (g.src_obj != ctx.path_dst(f)) continue;
      Path w;
      w.src_obj = f.src_obj;
      w.gens = f.gens;
      w.gens.insert(w.gens.end(), g.gens.begin(), g.gens.end());
      raw.composition.push_back({norm_to_id.at(ctx.key(g)), norm_to_id.at(ctx.key(f)),
                                 norm_to_id.at(ctx.key(ctx.normal(w)))});
    }
  return validate_category(raw);
}

// ---------------------------------------------------------------------------
// Functors

Report check_functor(const Functor& f) {
  Report rep;
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  bool shapes = static_cast<int>(f.object_map.size()) == c.object_count() &&
                static_cast<int>(f.morphism_map.size()) == c.morphism_count();
  rep.add("functor/shape", shapes);
  if (!shapes) return rep;
  bool typed = true;
  for (int m = 0; m < c.morphism_count() && typed; ++m) {
    int fm = f.morphism_map[m];
    if (fm < 0 || fm >= d.morphism_count() || d.src(fm) != f.object_map[c.src(m)] ||
        d.dst(fm) != f.object_map[c.dst(m)]) {
      typed = false;
      rep.add("functor/typing", false, "image of '" + c.morphism_id(m) + "' is ill-typed");
    }
  }
  if (typed) rep.add("functor/typing", true);
  if (!typed) return rep;
  bool ids = true;
  for (int x = 0; x < c.object_count(); ++x)
    if (f.morphism_map[c.identity(x)] != d.identity(f.object_map[x])) {
      ids = false;
      rep.add("functor/identities", false, "identity of '" + c.object_id(x) + "' not preserved");
    }
  if (ids) rep.add("functor/identities", true);
  bool comps = true;
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h = 0; h < c.morphism_count(); ++h) {
      if (c.dst(h) != c.src(g)) continue;
      if (f.morphism_map[c.compose(g, h)] != d.compose(f.morphism_map[g], f.morphism_map[h])) {
        comps = false;
        rep.add("functor/composites", false,
                "composite [" + c.morphism_id(g) + ", " + c.morphism_id(h) + "] not preserved");
      }
    }
  if (comps) rep.add("functor/composites", true);
  return rep;
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.source = &c;
  f.target = &c;
  f.object_map.resize(c.object_count());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  f.morphism_map.resize(c.morphism_count());
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor out;
  out.source = f.source;
  out.target = g.target;
  for (int x : f.object_map) out.object_map.push_back(g.object_map[x]);
  for (int m : f.morphism_map) out.morphism_map.push_back(g.morphism_map[m]);
  return out;
}

// ---------------------------------------------------------------------------
// Trace set

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

TraceSet trace_set(const FinCat& c) {
  const int m = c.morphism_count();
  UnionFind uf(m);
  for (int f = 0; f < m; ++f) {
    for (int g : c.hom(c.dst(f), c.src(f))) {
      uf.unite(c.compose(g, f), c.compose(f, g));
    }
  }
  TraceSet t;
  t.base = &c;
  t.class_of_mor.assign(m, -1);
  // roots of endomorphism classes, keyed by least morphism identifier
  std::map<std::string, std::pair<int, std::vector<int>>> by_rep;  // rep id -> (rep idx, members)
  std::map<int, std::pair<std::string, int>> root_rep;             // root -> (least id, idx)
  for (int e = 0; e < m; ++e) {
    if (c.src(e) != c.dst(e)) continue;
    int r = uf.find(e);
    auto it = root_rep.find(r);
    if (it == root_rep.end() || c.morphism_id(e) < it->second.first)
      root_rep[r] = {c.morphism_id(e), e};
  }
  for (int e = 0; e < m; ++e) {
    if (c.src(e) != c.dst(e)) continue;
    int r = uf.find(e);
    by_rep[root_rep[r].first].second.push_back(e);
    by_rep[root_rep[r].first].first = root_rep[r].second;
  }
  for (const auto& [rep_id, entry] : by_rep) {
    int cls = t.class_count++;
    t.representative.push_back(entry.first);
    for (int e : entry.second) t.class_of_mor[e] = cls;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Adjunctions

namespace {

struct CommaObj {
  int c;  // object of the functor's source
  int h;  // morphism F(c) -> d
};

std::vector<CommaObj> comma_objects(const Functor& f, int d) {
  std::vector<CommaObj> out;
  const FinCat& c = *f.source;
  const FinCat& t = *f.target;
  for (int x = 0; x < c.object_count(); ++x)
    for (int h : t.hom(f.object_map[x], d)) out.push_back({x, h});
  return out;
}

bool is_comma_terminal(const Functor& f, const std::vector<CommaObj>& objs, const CommaObj& cand) {
  const FinCat& c = *f.source;
  const FinCat& t = *f.target;
  for (const auto& o : objs) {
    int count = 0;
    for (int u : c.hom(o.c, cand.c))
      if (t.compose(cand.h, f.morphism_map[u]) == o.h) ++count;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

bool comma_has_terminal(const Functor& f, int d) {
  auto objs = comma_objects(f, d);
  for (const auto& cand : objs)
    if (is_comma_terminal(f, objs, cand)) return true;
  return false;
}

std::optional<Adjunction> find_right_adjoint(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& t = *f.target;
  std::vector<int> gobj(t.object_count(), -1);
  std::vector<int> counit(t.object_count(), -1);
  for (int d = 0; d < t.object_count(); ++d) {
    auto objs = comma_objects(f, d);
    std::optional<CommaObj> best;
    for (const auto& cand : objs) {
      if (!is_comma_terminal(f, objs, cand)) continue;
      if (!best || std::pair(c.object_id(cand.c), t.morphism_id(cand.h)) <
                       std::pair(c.object_id(best->c), t.morphism_id(best->h)))
        best = cand;
    }
    if (!best) return std::nullopt;
    gobj[d] = best->c;
    counit[d] = best->h;
  }
  // unique factorization through the terminal comma object
  auto factor = [&](int d, int x, int h) {
    // unique u: x -> gobj[d] with counit[d] ∘ F(u) = h
    for (int u : c.hom(x, gobj[d]))
      if (t.compose(counit[d], f.morphism_map[u]) == h) return u;
    throw Error("AssocViolation", "comma factorization vanished; functor data inconsistent");
  };
  Adjunction adj;
  adj.left = f;
  adj.right.source = &t;
  adj.right.target = &c;
  adj.right.object_map = gobj;
  adj.right.morphism_map.resize(t.morphism_count());
  for (int k = 0; k < t.morphism_count(); ++k) {
    int d = t.src(k), d2 = t.dst(k);
    adj.right.morphism_map[k] = factor(d2, gobj[d], t.compose(k, counit[d]));
  }
  adj.counit = counit;
  adj.unit.resize(c.object_count());
  for (int x = 0; x < c.object_count(); ++x)
    adj.unit[x] = factor(f.object_map[x], x, t.identity(f.object_map[x]));
  return adj;
}

Report check_adjunction(const Adjunction& adj) {
  Report rep;
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  rep.merge(check_functor(F));
  rep.merge(check_functor(G));
  if (!rep.ok()) return rep;

  bool unit_typed = true;
  for (int x = 0; x < c.object_count(); ++x) {
    int u = adj.unit[x];
    if (c.src(u) != x || c.dst(u) != G.object_map[F.object_map[x]]) unit_typed = false;
  }
  rep.add("adjunction/unit-typing", unit_typed);
  bool counit_typed = true;
  for (int y = 0; y < d.object_count(); ++y) {
    int e = adj.counit[y];
    if (d.src(e) != F.object_map[G.object_map[y]] || d.dst(e) != y) counit_typed = false;
  }
  rep.add("adjunction/counit-typing", counit_typed);
  if (!unit_typed || !counit_typed) return rep;

  bool unit_nat = true;
  for (int m = 0; m < c.morphism_count(); ++m) {
    int x = c.src(m), y = c.dst(m);
    int lhs = c.compose(adj.unit[y], m);
    int rhs = c.compose(G.morphism_map[F.morphism_map[m]], adj.unit[x]);
    if (lhs != rhs) {
      unit_nat = false;
      rep.add("adjunction/unit-naturality", false, "fails at '" + c.morphism_id(m) + "'");
    }
  }
  if (unit_nat) rep.add("adjunction/unit-naturality", true);

  bool counit_nat = true;
  for (int k = 0; k < d.morphism_count(); ++k) {
    int y = d.src(k), z = d.dst(k);
    int lhs = d.compose(k, adj.counit[y]);
    int rhs = d.compose(adj.counit[z], F.morphism_map[G.morphism_map[k]]);
    if (lhs != rhs) {
      counit_nat = false;
      rep.add("adjunction/counit-naturality", false, "fails at '" + d.morphism_id(k) + "'");
    }
  }
  if (counit_nat) rep.add("adjunction/counit-naturality", true);

  bool tri1 = true;
  for (int x = 0; x < c.object_count(); ++x) {
    int fx = F.object_map[x];
    if (d.compose(adj.counit[fx], F.morphism_map[adj.unit[x]]) != d.identity(fx)) {
      tri1 = false;
      rep.add("adjunction/triangle-left", false, "fails at object '" + c.object_id(x) + "'");
    }
  }
  if (tri1) rep.add("adjunction/triangle-left", true);

  bool tri2 = true;
  for (int y = 0; y < d.object_count(); ++y) {
    int gy = G.object_map[y];
    if (c.compose(G.morphism_map[adj.counit[y]], adj.unit[gy]) != c.identity(gy)) {
      tri2 = false;
      rep.add("adjunction/triangle-right", false, "fails at object '" + d.object_id(y) + "'");
    }
  }
  if (tri2) rep.add("adjunction/triangle-right", true);
  return rep;
}

}  // namespace brauer
