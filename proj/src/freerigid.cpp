#include "brauer/freerigid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "glue.hpp"

namespace brauer {

BrauerContext make_context(const FinCat& c) {
  BrauerContext ctx;
  ctx.cat = &c;
  ctx.traces = trace_set(c);
  return ctx;
}

SignedWord LabeledWord::signs() const {
  SignedWord w;
  for (const auto& [obj, sign] : entries) w.push_back(sign);
  return w;
}

std::string LabeledWord::to_string(const FinCat& c) const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ";";
    s += c.object_id(entries[i].first);
    s += entries[i].second > 0 ? '+' : '-';
  }
  return s + "]";
}

LabeledWord labeled_word(std::vector<std::pair<int, int8_t>> entries) {
  LabeledWord w;
  w.entries = std::move(entries);
  return w;
}

LabeledWord word_concat(const LabeledWord& a, const LabeledWord& b) {
  LabeledWord w = a;
  w.entries.insert(w.entries.end(), b.entries.begin(), b.entries.end());
  return w;
}

LabeledWord fr_dual(const LabeledWord& w) {
  LabeledWord out;
  for (auto it = w.entries.rbegin(); it != w.entries.rend(); ++it)
    out.entries.emplace_back(it->first, static_cast<int8_t>(-it->second));
  return out;
}

int BrauerMor::epsilon(int point) const {
  const int ns = source.length();
  return point < ns ? source.entries[point].second : -target.entries[point - ns].second;
}

int BrauerMor::object_at(int point) const {
  const int ns = source.length();
  return point < ns ? source.entries[point].first : target.entries[point - ns].first;
}

std::string BrauerMor::to_string(const FinCat& c) const {
  const int ns = source.length();
  std::string s = source.to_string(c) + ">" + target.to_string(c) + "|";
  auto pt = [&](int p) { return p < ns ? "s" + std::to_string(p) : "t" + std::to_string(p - ns); };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    s += pt(pairs[i].first) + "-" + pt(pairs[i].second) + ":" + c.morphism_id(labels[i]);
  }
  s += "|loops:";
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(loops[i]);
  }
  return s;
}

void fr_canonicalize(BrauerMor& f) {
  std::vector<std::pair<std::pair<int, int>, int>> zipped;
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    auto p = f.pairs[i];
    if (p.first > p.second) std::swap(p.first, p.second);
    zipped.emplace_back(p, f.labels[i]);
  }
  std::sort(zipped.begin(), zipped.end());
  f.pairs.clear();
  f.labels.clear();
  for (auto& [p, l] : zipped) {
    f.pairs.push_back(p);
    f.labels.push_back(l);
  }
  std::sort(f.loops.begin(), f.loops.end());
}

void fr_validate(const BrauerContext& ctx, const BrauerMor& f) {
  const FinCat& c = *ctx.cat;
  const int total = f.source.length() + f.target.length();
  std::vector<int> seen(total, 0);
  if (f.pairs.size() != f.labels.size())
    throw Error("LabelTypeMismatch", "pair list and label list have different lengths");
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    auto [p, q] = f.pairs[i];
    if (p < 0 || q < 0 || p >= total || q >= total || p == q)
      throw Error("DanglingReference", "pair references an invalid point");
    ++seen[p];
    ++seen[q];
    if (f.epsilon(p) + f.epsilon(q) != 0)
      throw Error("DanglingReference",
                  "pair (" + std::to_string(p) + ", " + std::to_string(q) + ") is not orientation compatible");
    int tail = f.epsilon(p) > 0 ? p : q;
    int head = f.epsilon(p) > 0 ? q : p;
    int l = f.labels[i];
    if (l < 0 || l >= c.morphism_count() || c.src(l) != f.object_at(tail) || c.dst(l) != f.object_at(head))
      throw Error("LabelTypeMismatch",
                  "strand (" + std::to_string(p) + ", " + std::to_string(q) + ") needs a label in hom(" +
                      c.object_id(f.object_at(tail)) + ", " + c.object_id(f.object_at(head)) + ")");
  }
  for (int p = 0; p < total; ++p)
    if (seen[p] != 1)
      throw Error("DanglingReference",
                  "point " + std::to_string(p) + " appears in " + std::to_string(seen[p]) + " pairs");
  for (int cls : f.loops)
    if (cls < 0 || cls >= ctx.traces.class_count)
      throw Error("DanglingReference", "loop names unknown trace class " + std::to_string(cls));
}

BrauerMor fr_identity(const FinCat& c, const LabeledWord& w) {
  BrauerMor f;
  f.source = w;
  f.target = w;
  const int n = w.length();
  for (int k = 0; k < n; ++k) {
    f.pairs.emplace_back(k, n + k);
    f.labels.push_back(c.identity(w.entries[k].first));
  }
  fr_canonicalize(f);
  return f;
}

BrauerMor fr_compose_traced(const BrauerContext& ctx, const BrauerMor& g, const BrauerMor& f,
                            std::vector<std::vector<int>>* cycle_labels) {
  const FinCat& c = *ctx.cat;
  if (!(f.target == g.source))
    throw Error("BoundaryMismatch", "cannot compose: middle boundary " + f.target.to_string(c) + " vs " +
                                        g.source.to_string(c));
  auto glued = detail::glue_matchings(f.source.signs(), f.target.signs(), g.target.signs(), f.pairs, g.pairs);
  auto strand_label = [&](const detail::Strand& s) {
    return s.layer == 0 ? f.labels[s.pair] : g.labels[s.pair];
  };
  auto compose_chain = [&](const std::vector<detail::Strand>& strands) {
    int acc = strand_label(strands.front());
    for (std::size_t i = 1; i < strands.size(); ++i) {
      int next = strand_label(strands[i]);
      if (c.src(next) != c.dst(acc))
        throw Error("LabelTypeMismatch", "labels do not compose along a glued strand");
      acc = c.compose(next, acc);
    }
    return acc;
  };
  BrauerMor out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& path : glued.open_paths) {
    out.pairs.emplace_back(path.tail, path.head);
    out.labels.push_back(compose_chain(path.strands));
  }
  out.loops = f.loops;
  out.loops.insert(out.loops.end(), g.loops.begin(), g.loops.end());
  for (const auto& cycle : glued.cycles) {
    int endo = compose_chain(cycle);
    if (c.src(endo) != c.dst(endo))
      throw Error("LabelTypeMismatch", "closed loop composite is not an endomorphism");
    out.loops.push_back(ctx.traces.class_of(endo));
    if (cycle_labels) {
      std::vector<int> seq;
      for (const auto& s : cycle) seq.push_back(strand_label(s));
      cycle_labels->push_back(std::move(seq));
    }
  }
  fr_canonicalize(out);
  return out;
}

BrauerMor fr_compose(const BrauerContext& ctx, const BrauerMor& g, const BrauerMor& f) {
  return fr_compose_traced(ctx, g, f, nullptr);
}

BrauerMor fr_tensor(const BrauerMor& f, const BrauerMor& g) {
  BrauerMor out;
  out.source = word_concat(f.source, g.source);
  out.target = word_concat(f.target, g.target);
  const int fs = f.source.length(), ft = f.target.length(), gs = g.source.length();
  auto shift_f = [&](int p) { return p < fs ? p : p + gs; };
  auto shift_g = [&](int p) { return p < gs ? p + fs : p + fs + ft; };
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    out.pairs.emplace_back(shift_f(f.pairs[i].first), shift_f(f.pairs[i].second));
    out.labels.push_back(f.labels[i]);
  }
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    out.pairs.emplace_back(shift_g(g.pairs[i].first), shift_g(g.pairs[i].second));
    out.labels.push_back(g.labels[i]);
  }
  out.loops = f.loops;
  out.loops.insert(out.loops.end(), g.loops.begin(), g.loops.end());
  fr_canonicalize(out);
  return out;
}

BrauerMor fr_symmetry(const FinCat& c, const LabeledWord& w1, const LabeledWord& w2) {
  BrauerMor out;
  out.source = word_concat(w1, w2);
  out.target = word_concat(w2, w1);
  const int n1 = w1.length(), n2 = w2.length();
  for (int k = 0; k < n1; ++k) {
    out.pairs.emplace_back(k, n1 + n2 + n2 + k);
    out.labels.push_back(c.identity(w1.entries[k].first));
  }
  for (int j = 0; j < n2; ++j) {
    out.pairs.emplace_back(n1 + j, n1 + n2 + j);
    out.labels.push_back(c.identity(w2.entries[j].first));
  }
  fr_canonicalize(out);
  return out;
}

BrauerMor fr_ev(const FinCat& c, int label) {
  BrauerMor out;
  out.source = labeled_word({{c.src(label), 1}, {c.dst(label), -1}});
  out.pairs = {{0, 1}};
  out.labels = {label};
  return out;
}

BrauerMor fr_coev(const FinCat& c, int label) {
  BrauerMor out;
  out.target = labeled_word({{c.src(label), -1}, {c.dst(label), 1}});
  out.pairs = {{0, 1}};
  out.labels = {label};
  return out;
}

namespace {

void matchings_rec(const std::vector<int>& plus, const std::vector<int>& minus, std::vector<bool>& used,
                   std::size_t i, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (i == plus.size()) {
    out.push_back(acc);
    return;
  }
  for (std::size_t j = 0; j < minus.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc.emplace_back(plus[i], minus[j]);
    matchings_rec(plus, minus, used, i + 1, acc, out);
    acc.pop_back();
    used[j] = false;
  }
}

}  // namespace

std::vector<BrauerMor> fr_enumerate_loopfree(const BrauerContext& ctx, const LabeledWord& w1,
                                             const LabeledWord& w2) {
  const FinCat& c = *ctx.cat;
  BrauerMor proto;
  proto.source = w1;
  proto.target = w2;
  const int total = w1.length() + w2.length();
  std::vector<int> plus, minus;
  for (int p = 0; p < total; ++p) (proto.epsilon(p) > 0 ? plus : minus).push_back(p);
  std::vector<BrauerMor> out;
  if (plus.size() != minus.size()) return out;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<bool> used(minus.size(), false);
  std::vector<std::pair<int, int>> acc;
  matchings_rec(plus, minus, used, 0, acc, matchings);
  for (const auto& m : matchings) {
    // label choices per strand: hom(object at tail, object at head)
    std::vector<const std::vector<int>*> choices;
    bool possible = true;
    for (const auto& [tail, head] : m) {
      const auto& hom = c.hom(proto.object_at(tail), proto.object_at(head));
      if (hom.empty()) {
        possible = false;
        break;
      }
      choices.push_back(&hom);
    }
    if (!possible) continue;
    std::vector<std::size_t> odo(m.size(), 0);
    while (true) {
      BrauerMor f = proto;
      f.pairs = m;
      for (std::size_t i = 0; i < m.size(); ++i) f.labels.push_back((*choices[i])[odo[i]]);
      fr_canonicalize(f);
      out.push_back(std::move(f));
      std::size_t k = 0;
      while (k < odo.size()) {
        if (++odo[k] < choices[k]->size()) break;
        odo[k] = 0;
        ++k;
      }
      if (k == odo.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [&](const BrauerMor& a, const BrauerMor& b) {
    return std::tie(a.pairs, a.labels) < std::tie(b.pairs, b.labels);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> multisets_up_to(int class_count, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> level{{}};
  out.push_back({});
  for (int size = 1; size <= max_size; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& ms : level) {
      int lo = ms.empty() ? 0 : ms.back();
      for (int cls = lo; cls < class_count; ++cls) {
        auto ext = ms;
        ext.push_back(cls);
        next.push_back(std::move(ext));
      }
    }
    for (const auto& ms : next) out.push_back(ms);
    level = std::move(next);
  }
  return out;
}

std::vector<BrauerMor> fr_enumerate_homs(const BrauerContext& ctx, const LabeledWord& w1,
                                         const LabeledWord& w2, int max_loops) {
  auto base = fr_enumerate_loopfree(ctx, w1, w2);
  auto loop_sets = multisets_up_to(ctx.traces.class_count, max_loops);
  std::vector<BrauerMor> out;
  for (const auto& f : base)
    for (const auto& ls : loop_sets) {
      BrauerMor g = f;
      g.loops = ls;
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<LabeledWord> all_labeled_words(const FinCat& c, int maxlen) {
  std::vector<std::pair<int, int8_t>> alphabet;
  for (int x = 0; x < c.object_count(); ++x) {
    alphabet.emplace_back(x, static_cast<int8_t>(1));
    alphabet.emplace_back(x, static_cast<int8_t>(-1));
  }
  std::vector<LabeledWord> out{LabeledWord{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (const auto& e : alphabet) {
        LabeledWord w = out[i];
        w.entries.push_back(e);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

HomFromUnit fr_hom_from_unit(const BrauerContext& ctx, const std::vector<int>& pos,
                             const std::vector<int>& neg, int max_loops) {
  const FinCat& c = *ctx.cat;
  HomFromUnit out;
  for (int m : pos) out.word.entries.emplace_back(m, static_cast<int8_t>(1));
  for (int n : neg) out.word.entries.emplace_back(n, static_cast<int8_t>(-1));
  out.loop_free = fr_enumerate_loopfree(ctx, LabeledWord{}, out.word);
  out.all = fr_enumerate_homs(ctx, LabeledWord{}, out.word, max_loops);
  out.multiset_count = multisets_up_to(ctx.traces.class_count, max_loops).size();

  const std::size_t i = pos.size(), j = neg.size();
  out.formula_count = 0;
  std::set<BrauerMor> formula_side;  // canonical encodings built from (σ, labels)
  auto emit_sigma = [&](const std::vector<int>& sigma) {
    // sigma[p] = index into neg paired with pos entry p
    std::size_t prod = 1;
    std::vector<const std::vector<int>*> homs;
    for (std::size_t p = 0; p < i; ++p) {
      const auto& h = c.hom(neg[sigma[p]], pos[p]);
      prod *= h.size();
      homs.push_back(&h);
    }
    out.formula_count += prod;
    if (prod == 0) return;
    std::vector<std::size_t> odo(i, 0);
    while (true) {
      BrauerMor f;
      f.target = out.word;
      for (std::size_t p = 0; p < i; ++p) {
        f.pairs.emplace_back(static_cast<int>(p), static_cast<int>(i + sigma[p]));
        f.labels.push_back((*homs[p])[odo[p]]);
      }
      fr_canonicalize(f);
      formula_side.insert(std::move(f));
      std::size_t k = 0;
      while (k < odo.size()) {
        if (++odo[k] < homs[k]->size()) break;
        odo[k] = 0;
        ++k;
      }
      if (odo.empty() || k == odo.size()) break;
    }
  };
  if (i == j) {
    std::vector<int> sigma(i);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      emit_sigma(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (i == 0) {
      // empty word: the single empty matching
      // (already handled: the permutation loop ran once with empty sigma)
    }
  }
  out.report.add("hom-from-unit/loop-free-count",
                 out.loop_free.size() == out.formula_count,
                 std::to_string(out.loop_free.size()) + " enumerated vs " + std::to_string(out.formula_count) +
                     " from the bijection formula");
  std::set<BrauerMor> enum_side(out.loop_free.begin(), out.loop_free.end());
  out.report.add("hom-from-unit/loop-free-bijection", enum_side == formula_side);
  out.report.add("hom-from-unit/total-count",
                 out.all.size() == out.loop_free.size() * out.multiset_count,
                 std::to_string(out.all.size()) + " = " + std::to_string(out.loop_free.size()) + " x " +
                     std::to_string(out.multiset_count));
  if (i != j)
    out.report.add("hom-from-unit/mismatched-arity-empty", out.loop_free.empty(),
                   "no bijections between " + std::to_string(i) + " and " + std::to_string(j) + " strands");
  return out;
}

namespace {

std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

}  // namespace

EndUnit fr_end_unit(const BrauerContext& ctx, int max_loops) {
  EndUnit out;
  out.elements = multisets_up_to(ctx.traces.class_count, max_loops);
  std::set<std::vector<int>> elems(out.elements.begin(), out.elements.end());

  // the enumerated End(∅) must agree with the multiset model
  auto homs = fr_enumerate_homs(ctx, LabeledWord{}, LabeledWord{}, max_loops);
  bool agrees = homs.size() == out.elements.size();
  for (const auto& h : homs)
    if (!elems.count(h.loops)) agrees = false;
  out.report.add("end-unit/enumeration", agrees,
                 std::to_string(homs.size()) + " endomorphisms of the unit at bound " + std::to_string(max_loops));

  bool unital = true, commutative = true, closed = true;
  for (const auto& a : out.elements) {
    if (multiset_union(a, {}) != a) unital = false;
    for (const auto& b : out.elements) {
      if (static_cast<int>(a.size() + b.size()) > max_loops) continue;
      auto u = multiset_union(a, b);
      if (!elems.count(u)) closed = false;
      if (u != multiset_union(b, a)) commutative = false;
      // composition in the envelope is multiset union
      BrauerMor fa, fb;
      fa.loops = a;
      fb.loops = b;
      if (fr_compose(ctx, fa, fb).loops != u) closed = false;
    }
  }
  out.report.add("end-unit/unital", unital);
  out.report.add("end-unit/commutative", commutative);
  out.report.add("end-unit/composition-is-union", closed);
  return out;
}

// ---------------------------------------------------------------------------
// Comparison with the cobordism category

namespace {

FinCat terminal_category() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"id", "*", "*"}};
  raw.identities = {{"*", "id"}};
  raw.composition = {{"id", "id", "id"}};
  return validate_category(raw);
}

LabeledWord lift_word(const SignedWord& w) {
  LabeledWord out;
  for (int8_t s : w) out.entries.emplace_back(0, s);
  return out;
}

Cob1Mor forget_labels(const BrauerMor& f) {
  Cob1Mor out;
  out.source = f.source.signs();
  out.target = f.target.signs();
  out.pairs = f.pairs;
  out.circles = static_cast<int>(f.loops.size());
  return out;
}

bool cob_less(const Cob1Mor& a, const Cob1Mor& b) {
  return std::tie(a.source, a.target, a.pairs, a.circles) < std::tie(b.source, b.target, b.pairs, b.circles);
}

}  // namespace

Report fr_vs_cob(int maxlen, int max_circles) {
  Report rep;
  FinCat term = terminal_category();
  BrauerContext ctx = make_context(term);
  auto words = all_sign_words(maxlen);

  bool hom_bijections = true;
  std::size_t hom_sets = 0;
  std::map<std::pair<SignedWord, SignedWord>, std::vector<BrauerMor>> fr_homs;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      auto fr = fr_enumerate_homs(ctx, lift_word(w1), lift_word(w2), max_circles);
      auto cob = cob_enumerate_homs(w1, w2, max_circles);
      std::vector<Cob1Mor> mapped;
      for (const auto& f : fr) mapped.push_back(forget_labels(f));
      std::sort(mapped.begin(), mapped.end(), cob_less);
      if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) hom_bijections = false;
      std::sort(cob.begin(), cob.end(), cob_less);
      if (mapped != cob) hom_bijections = false;
      fr_homs[{w1, w2}] = std::move(fr);
      ++hom_sets;
    }
  rep.add("vs-cob/hom-bijections", hom_bijections, std::to_string(hom_sets) + " hom sets compared");

  bool comp_ok = true;
  std::size_t composites = 0;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      const auto& fs = fr_homs[{w1, w2}];
      if (fs.empty()) continue;
      for (const auto& w3 : words) {
        const auto& gs = fr_homs[{w2, w3}];
        for (const auto& f : fs)
          for (const auto& g : gs) {
            if (forget_labels(fr_compose(ctx, g, f)) != cob_compose(forget_labels(g), forget_labels(f)))
              comp_ok = false;
            ++composites;
          }
      }
    }
  rep.add("vs-cob/composition", comp_ok, std::to_string(composites) + " composable pairs checked");

  bool tensor_ok = true;
  std::size_t tensors = 0;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      for (const auto& w3 : words)
        for (const auto& w4 : words) {
          if (static_cast<int>(w1.size() + w3.size()) > maxlen ||
              static_cast<int>(w2.size() + w4.size()) > maxlen)
            continue;
          for (const auto& f : fr_homs[{w1, w2}])
            for (const auto& g : fr_homs[{w3, w4}]) {
              if (forget_labels(fr_tensor(f, g)) != cob_tensor(forget_labels(f), forget_labels(g)))
                tensor_ok = false;
              ++tensors;
            }
        }
    }
  rep.add("vs-cob/tensor", tensor_ok, std::to_string(tensors) + " tensor pairs checked");

  bool structure_ok = true;
  for (const auto& w1 : words) {
    if (forget_labels(fr_identity(term, lift_word(w1))) != cob_identity(w1)) structure_ok = false;
    for (const auto& w2 : words) {
      if (static_cast<int>(w1.size() + w2.size()) > maxlen) continue;
      if (forget_labels(fr_symmetry(term, lift_word(w1), lift_word(w2))) != cob_symmetry(w1, w2))
        structure_ok = false;
    }
  }
  rep.add("vs-cob/identities-and-symmetries", structure_ok);

  auto end_unit = fr_end_unit(ctx, max_circles);
  rep.add("vs-cob/end-of-unit",
          end_unit.elements.size() == cob_enumerate_homs({}, {}, max_circles).size(),
          std::to_string(end_unit.elements.size()) + " elements on both sides");
  return rep;
}

// ---------------------------------------------------------------------------
// Fully-faithfulness transfer

Report fr_fully_faithful_check(const BrauerContext& cctx, const BrauerContext& dctx, const Functor& f,
                               int maxlen, int max_loops) {
  Report rep;
  const FinCat& c = *cctx.cat;
  const FinCat& d = *dctx.cat;
  rep.merge(check_functor(f));
  if (!rep.ok()) return rep;

  bool faithful = true, full = true;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      const auto& src_hom = c.hom(x, y);
      std::set<int> images;
      for (int m : src_hom) images.insert(f.morphism_map[m]);
      if (images.size() != src_hom.size()) faithful = false;
      if (images.size() != d.hom(f.object_map[x], f.object_map[y]).size()) full = false;
    }
  rep.add("ff/faithful", faithful);
  rep.add("ff/full", full);

  // induced trace map
  std::vector<int> tmap(cctx.traces.class_count, -1);
  bool well_defined = true;
  for (int e = 0; e < c.morphism_count(); ++e) {
    if (c.src(e) != c.dst(e)) continue;
    int cls = cctx.traces.class_of(e);
    int img = dctx.traces.class_of(f.morphism_map[e]);
    if (tmap[cls] < 0)
      tmap[cls] = img;
    else if (tmap[cls] != img)
      well_defined = false;
  }
  std::set<int> image_classes(tmap.begin(), tmap.end());
  bool injective = image_classes.size() == tmap.size() && !image_classes.count(-1);
  bool surjective = injective && static_cast<int>(tmap.size()) == dctx.traces.class_count;
  rep.add("ff/trace-map-well-defined", well_defined);
  rep.add("ff/trace-map-bijective", injective && surjective,
          std::to_string(cctx.traces.class_count) + " -> " + std::to_string(dctx.traces.class_count) +
              " classes");

  // induced maps on envelope hom sets
  auto map_word = [&](const LabeledWord& w) {
    LabeledWord out;
    for (auto [obj, sign] : w.entries) out.entries.emplace_back(f.object_map[obj], sign);
    return out;
  };
  auto map_mor = [&](const BrauerMor& m) {
    BrauerMor out;
    out.source = map_word(m.source);
    out.target = map_word(m.target);
    out.pairs = m.pairs;
    for (int l : m.labels) out.labels.push_back(f.morphism_map[l]);
    for (int cls : m.loops) out.loops.push_back(tmap[cls]);
    fr_canonicalize(out);
    return out;
  };

  bool hom_bijective = true;
  std::string witness;
  auto words = all_labeled_words(c, maxlen);
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      auto src_homs = fr_enumerate_homs(cctx, w1, w2, max_loops);
      auto dst_homs = fr_enumerate_homs(dctx, map_word(w1), map_word(w2), max_loops);
      std::set<BrauerMor> images;
      for (const auto& m : src_homs) images.insert(map_mor(m));
      std::set<BrauerMor> dst_set(dst_homs.begin(), dst_homs.end());
      bool inj = images.size() == src_homs.size();
      bool bij = inj && images == dst_set;
      if (!bij && hom_bijective) {
        hom_bijective = false;
        witness = "hom(" + w1.to_string(c) + ", " + w2.to_string(c) + "): " +
                  std::to_string(src_homs.size()) + " vs " + std::to_string(dst_homs.size()) +
                  " elements" + (inj ? "" : " (not injective)");
      }
    }
  rep.add("ff/envelope-hom-bijective", hom_bijective, witness);
  return rep;
}

// ---------------------------------------------------------------------------
// Universal map

DiagramEvaluator::DiagramEvaluator(const BrauerContext& ctx, const StrictMonCat& m, const Functor& f0,
                                   std::vector<DualData> duals)
    : ctx_(&ctx), m_(&m), f0_(&f0), duals_(std::move(duals)) {
  const FinCat& c = *ctx.cat;
  if (static_cast<int>(duals_.size()) != c.object_count())
    throw Error("IllTypedDual", "need one DualData per object of the base category");
  for (int x = 0; x < c.object_count(); ++x) {
    if (duals_[x].object != f0.object_map[x])
      throw Error("IllTypedDual", "DualData for '" + c.object_id(x) + "' is not for its image object");
    if (!triangles_hold(m, duals_[x]))
      throw Error("IllTypedDual", "DualData for '" + c.object_id(x) + "' fails a triangle identity");
  }
}

int DiagramEvaluator::entry_object(std::pair<int, int8_t> e) const {
  return e.second > 0 ? f0_->object_map[e.first] : duals_[e.first].dual;
}

int DiagramEvaluator::eval_object(const LabeledWord& w) const {
  int acc = m_->unit_obj();
  for (const auto& e : w.entries) acc = m_->tensor_obj(acc, entry_object(e));
  return acc;
}

DiagramEvaluator::WordDual DiagramEvaluator::entry_dual(std::pair<int, int8_t> e) const {
  const FinCat& mb = m_->base();
  const DualData& d = duals_[e.first];
  if (e.second > 0) return {d.object, d.dual, d.ev, d.coev};
  // dual of x^∨ is x, with ev/coev re-routed through the symmetry
  int ev = mb.compose(d.ev, m_->symmetry(d.dual, d.object));
  int coev = mb.compose(m_->symmetry(d.dual, d.object), d.coev);
  return {d.dual, d.object, ev, coev};
}

DiagramEvaluator::WordDual DiagramEvaluator::word_dual(const LabeledWord& w) const {
  const FinCat& mb = m_->base();
  WordDual acc{m_->unit_obj(), m_->unit_obj(), mb.identity(m_->unit_obj()), mb.identity(m_->unit_obj())};
  for (const auto& e : w.entries) {
    WordDual b = entry_dual(e);
    WordDual next;
    next.object = m_->tensor_obj(acc.object, b.object);
    next.dual = m_->tensor_obj(b.dual, acc.dual);
    // ev_{A⊗B} = ev_A ∘ (id_A ⊗ ev_B ⊗ id_{A∨})
    next.ev = mb.compose(acc.ev, m_->tensor_mor(m_->tensor_mor(mb.identity(acc.object), b.ev),
                                                mb.identity(acc.dual)));
    // coev_{A⊗B} = (id_{B∨} ⊗ coev_A ⊗ id_B) ∘ coev_B
    next.coev = mb.compose(m_->tensor_mor(m_->tensor_mor(mb.identity(b.dual), acc.coev),
                                          mb.identity(b.object)),
                           b.coev);
    acc = next;
  }
  return acc;
}

int DiagramEvaluator::permutation_mor(const std::vector<int>& objects, const std::vector<int>& perm) const {
  const FinCat& mb = m_->base();
  std::vector<int> cur(objects.size());
  std::iota(cur.begin(), cur.end(), 0);  // cur[i] = source slot at position i
  auto obj_at = [&](std::size_t i) { return objects[cur[i]]; };
  int acc = mb.identity(m_->tensor_obj(objects));
  for (std::size_t j = 0; j < perm.size(); ++j) {
    std::size_t t = j;
    while (cur[t] != perm[j]) ++t;
    for (std::size_t i = t; i > j; --i) {
      // swap positions i-1 and i via id ⊗ s ⊗ id
      int pre = m_->unit_obj();
      for (std::size_t k = 0; k + 1 < i; ++k) pre = m_->tensor_obj(pre, obj_at(k));
      int post = m_->unit_obj();
      for (std::size_t k = i + 1; k < cur.size(); ++k) post = m_->tensor_obj(post, obj_at(k));
      int swap_mor = m_->tensor_mor(m_->tensor_mor(mb.identity(pre), m_->symmetry(obj_at(i - 1), obj_at(i))),
                                    mb.identity(post));
      acc = mb.compose(swap_mor, acc);
      std::swap(cur[i - 1], cur[i]);
    }
  }
  return acc;
}

int DiagramEvaluator::loop_scalar(int trace_class) const {
  const FinCat& c = *ctx_->cat;
  const FinCat& mb = m_->base();
  int endo = ctx_->traces.representative[trace_class];
  const DualData& d = duals_[c.src(endo)];
  int h = mb.compose(m_->symmetry(d.dual, d.object), d.coev);          // 1 -> F ⊗ F∨
  h = mb.compose(m_->tensor_mor(f0_->morphism_map[endo], mb.identity(d.dual)), h);
  return mb.compose(d.ev, h);
}

int DiagramEvaluator::eval(const BrauerMor& f) const {
  const FinCat& c = *ctx_->cat;
  const FinCat& mb = m_->base();
  const int ns = f.source.length();

  // bend the source into the target: U = dual(source) ++ target
  LabeledWord bent = word_concat(fr_dual(f.source), f.target);
  auto bend_point = [&](int p) { return p < ns ? ns - 1 - p : p; };
  std::vector<std::pair<std::pair<int, int>, int>> pairs;
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    int p = bend_point(f.pairs[i].first), q = bend_point(f.pairs[i].second);
    if (p > q) std::swap(p, q);
    pairs.push_back({{p, q}, f.labels[i]});
  }
  std::sort(pairs.begin(), pairs.end());

  // tensor of cups, then the permutation rearranging them into word order
  int h = mb.identity(m_->unit_obj());
  std::vector<int> arrangement;  // word positions, in cup emission order
  for (const auto& [pq, label] : pairs) {
    auto [p, q] = pq;
    const DualData& dn = duals_[c.src(label)];
    int cup;
    if (bent.entries[p].second < 0) {
      // p is the strand tail (n,-), q the head (m,+): 1 -> Fn∨ ⊗ Fm
      cup = mb.compose(m_->tensor_mor(mb.identity(dn.dual), f0_->morphism_map[label]), dn.coev);
    } else {
      // p is the head (m,+), q the tail (n,-): 1 -> Fm ⊗ Fn∨
      cup = mb.compose(m_->symmetry(dn.dual, dn.object), dn.coev);
      cup = mb.compose(m_->tensor_mor(f0_->morphism_map[label], mb.identity(dn.dual)), cup);
    }
    h = m_->tensor_mor(h, cup);
    arrangement.push_back(p);
    arrangement.push_back(q);
  }
  std::vector<int> arr_objects;
  for (int pos : arrangement) arr_objects.push_back(entry_object(bent.entries[pos]));
  std::vector<int> perm(bent.length());
  for (int j = 0; j < bent.length(); ++j) {
    for (std::size_t i = 0; i < arrangement.size(); ++i)
      if (arrangement[i] == j) perm[j] = static_cast<int>(i);
  }
  h = mb.compose(permutation_mor(arr_objects, perm), h);

  for (int cls : f.loops) h = m_->tensor_mor(loop_scalar(cls), h);

  // unbend: A -> B from 1 -> A∨ ⊗ B
  WordDual wd = word_dual(f.source);
  int b_obj = eval_object(f.target);
  int lifted = m_->tensor_mor(mb.identity(wd.object), h);       // A -> A ⊗ A∨ ⊗ B
  return mb.compose(m_->tensor_mor(wd.ev, mb.identity(b_obj)), lifted);
}

Report fr_universal_map(const BrauerContext& ctx, const StrictMonCat& m, const Functor& f0,
                        const std::vector<DualData>& duals, int diagram_bound, int max_loops) {
  Report rep;
  DiagramEvaluator ev(ctx, m, f0, duals);
  const FinCat& c = *ctx.cat;
  const FinCat& mb = m.base();
  auto words = all_labeled_words(c, diagram_bound);

  bool ids_ok = true;
  for (const auto& w : words)
    if (ev.eval(fr_identity(c, w)) != mb.identity(ev.eval_object(w))) ids_ok = false;
  rep.add("universal/identities", ids_ok);

  std::map<std::pair<LabeledWord, LabeledWord>, std::vector<BrauerMor>> homs;
  for (const auto& w1 : words)
    for (const auto& w2 : words) homs[{w1, w2}] = fr_enumerate_homs(ctx, w1, w2, max_loops);

  bool typing_ok = true;
  for (const auto& [key, hs] : homs)
    for (const auto& f : hs) {
      int img = ev.eval(f);
      if (mb.src(img) != ev.eval_object(f.source) || mb.dst(img) != ev.eval_object(f.target))
        typing_ok = false;
    }
  rep.add("universal/typing", typing_ok);

  bool funct_ok = true;
  std::size_t composites = 0;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      const auto& fs = homs[{w1, w2}];
      if (fs.empty()) continue;
      for (const auto& w3 : words) {
        const auto& gs = homs[{w2, w3}];
        for (const auto& f : fs)
          for (const auto& g : gs) {
            if (ev.eval(fr_compose(ctx, g, f)) != mb.compose(ev.eval(g), ev.eval(f))) funct_ok = false;
            ++composites;
          }
      }
    }
  rep.add("universal/functoriality", funct_ok, std::to_string(composites) + " composable pairs checked");

  bool mon_ok = true;
  std::size_t tensors = 0;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      for (const auto& w3 : words)
        for (const auto& w4 : words) {
          if (w1.length() + w3.length() > diagram_bound || w2.length() + w4.length() > diagram_bound)
            continue;
          for (const auto& f : homs[{w1, w2}])
            for (const auto& g : homs[{w3, w4}]) {
              if (ev.eval(fr_tensor(f, g)) != m.tensor_mor(ev.eval(f), ev.eval(g))) mon_ok = false;
              ++tensors;
            }
        }
    }
  rep.add("universal/monoidality", mon_ok, std::to_string(tensors) + " tensor pairs checked");

  bool sym_ok = true;
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      if (w1.length() + w2.length() > diagram_bound) continue;
      BrauerMor s = fr_symmetry(c, w1, w2);
      if (ev.eval(s) != m.symmetry(ev.eval_object(w1), ev.eval_object(w2))) sym_ok = false;
    }
  rep.add("universal/symmetry", sym_ok);
  return rep;
}

// ---------------------------------------------------------------------------
// Truncation to an explicit finite category

FinCat fr_truncate(const BrauerContext& ctx, int maxlen, int loop_cap) {
  const FinCat& c = *ctx.cat;
  auto words = all_labeled_words(c, maxlen);

  // per-class loop count vectors, each count capped
  std::vector<std::vector<int>> loop_lists;
  std::vector<int> counts(ctx.traces.class_count, 0);
  while (true) {
    std::vector<int> ms;
    for (int cls = 0; cls < ctx.traces.class_count; ++cls)
      for (int r = 0; r < counts[cls]; ++r) ms.push_back(cls);
    loop_lists.push_back(std::move(ms));
    int k = ctx.traces.class_count - 1;
    while (k >= 0) {
      if (++counts[k] <= loop_cap) break;
      counts[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(loop_lists.begin(), loop_lists.end(),
            [](const auto& a, const auto& b) { return std::pair(a.size(), a) < std::pair(b.size(), b); });

  auto clamp_loops = [&](std::vector<int> loops) {
    std::vector<int> out;
    int run = 0;
    for (std::size_t i = 0; i < loops.size(); ++i) {
      run = (i > 0 && loops[i] == loops[i - 1]) ? run + 1 : 1;
      if (run <= loop_cap) out.push_back(loops[i]);
    }
    return out;
  };

  std::map<BrauerMor, std::string> names;
  std::vector<BrauerMor> mors;
  RawCategory raw;
  for (const auto& w : words) raw.objects.push_back(w.to_string(c));
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      for (const auto& base : fr_enumerate_loopfree(ctx, w1, w2))
        for (const auto& ls : loop_lists) {
          BrauerMor f = base;
          f.loops = ls;
          std::string id = f.to_string(c);
          raw.morphisms.push_back({id, w1.to_string(c), w2.to_string(c)});
          names[f] = id;
          mors.push_back(std::move(f));
        }
    }
  for (const auto& w : words) {
    BrauerMor idm = fr_identity(c, w);
    raw.identities.emplace_back(w.to_string(c), names.at(idm));
  }
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (!(f.target == g.source)) continue;
      BrauerMor gf = fr_compose(ctx, g, f);
      gf.loops = clamp_loops(std::move(gf.loops));
      raw.composition.push_back({names.at(g), names.at(f), names.at(gf)});
    }
  return validate_category(raw);
}

}  // namespace brauer
