#include "brauer/cobordism.hpp"

#include <algorithm>
#include <numeric>

#include "glue.hpp"

namespace brauer {

SignedWord parse_signs(const std::string& s) {
  SignedWord w;
  for (char c : s) {
    if (c == '+')
      w.push_back(1);
    else if (c == '-')
      w.push_back(-1);
    else
      throw Error("ParseError", std::string("invalid sign character '") + c + "'");
  }
  return w;
}

std::string render_signs(const SignedWord& w) {
  std::string s;
  for (int8_t v : w) s += v > 0 ? '+' : '-';
  return s;
}

int Cob1Mor::epsilon(int point) const {
  const int ns = static_cast<int>(source.size());
  return point < ns ? source[point] : -target[point - ns];
}

std::string Cob1Mor::to_string() const {
  const int ns = static_cast<int>(source.size());
  std::string s = render_signs(source) + ">" + render_signs(target) + "|";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    auto pt = [&](int p) {
      return p < ns ? "s" + std::to_string(p) : "t" + std::to_string(p - ns);
    };
    s += pt(pairs[i].first) + "-" + pt(pairs[i].second);
  }
  s += "|c" + std::to_string(circles);
  return s;
}

void cob_canonicalize(Cob1Mor& f) {
  for (auto& p : f.pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(f.pairs.begin(), f.pairs.end());
}

void cob_validate(const Cob1Mor& f) {
  const int total = static_cast<int>(f.source.size() + f.target.size());
  std::vector<int> seen(total, 0);
  for (const auto& [p, q] : f.pairs) {
    if (p < 0 || q < 0 || p >= total || q >= total || p == q)
      throw Error("DanglingReference", "pair references an invalid point");
    ++seen[p];
    ++seen[q];
    if (f.epsilon(p) + f.epsilon(q) != 0)
      throw Error("DanglingReference", "pair (" + std::to_string(p) + ", " + std::to_string(q) +
                                           ") is not orientation compatible");
  }
  for (int p = 0; p < total; ++p)
    if (seen[p] != 1)
      throw Error("DanglingReference", "point " + std::to_string(p) + " appears in " +
                                           std::to_string(seen[p]) + " pairs");
  if (f.circles < 0) throw Error("DanglingReference", "negative circle count");
}

Cob1Mor cob_identity(const SignedWord& w) {
  Cob1Mor f;
  f.source = w;
  f.target = w;
  const int n = static_cast<int>(w.size());
  for (int k = 0; k < n; ++k) f.pairs.emplace_back(k, n + k);
  cob_canonicalize(f);
  return f;
}

Cob1Mor cob_compose(const Cob1Mor& g, const Cob1Mor& f) {
  if (f.target != g.source)
    throw Error("BoundaryMismatch", "cannot compose: middle boundary " + render_signs(f.target) +
                                        " vs " + render_signs(g.source));
  auto glued = detail::glue_matchings(f.source, f.target, g.target, f.pairs, g.pairs);
  Cob1Mor out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& path : glued.open_paths) out.pairs.emplace_back(path.tail, path.head);
  out.circles = f.circles + g.circles + static_cast<int>(glued.cycles.size());
  cob_canonicalize(out);
  return out;
}

Cob1Mor cob_tensor(const Cob1Mor& f, const Cob1Mor& g) {
  Cob1Mor out;
  out.source = f.source;
  out.source.insert(out.source.end(), g.source.begin(), g.source.end());
  out.target = f.target;
  out.target.insert(out.target.end(), g.target.begin(), g.target.end());
  const int fs = static_cast<int>(f.source.size());
  const int ft = static_cast<int>(f.target.size());
  const int gs = static_cast<int>(g.source.size());
  auto shift_f = [&](int p) { return p < fs ? p : p + gs; };
  auto shift_g = [&](int p) { return p < gs ? p + fs : p + fs + ft; };
  for (const auto& [p, q] : f.pairs) out.pairs.emplace_back(shift_f(p), shift_f(q));
  for (const auto& [p, q] : g.pairs) out.pairs.emplace_back(shift_g(p), shift_g(q));
  out.circles = f.circles + g.circles;
  cob_canonicalize(out);
  return out;
}

Cob1Mor cob_symmetry(const SignedWord& w1, const SignedWord& w2) {
  Cob1Mor out;
  out.source = w1;
  out.source.insert(out.source.end(), w2.begin(), w2.end());
  out.target = w2;
  out.target.insert(out.target.end(), w1.begin(), w1.end());
  const int n1 = static_cast<int>(w1.size());
  const int n2 = static_cast<int>(w2.size());
  for (int k = 0; k < n1; ++k) out.pairs.emplace_back(k, n1 + n2 + n2 + k);
  for (int j = 0; j < n2; ++j) out.pairs.emplace_back(n1 + j, n1 + n2 + j);
  cob_canonicalize(out);
  return out;
}

SignedWord cob_dual(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (auto& v : out) v = static_cast<int8_t>(-v);
  return out;
}

Cob1Mor cob_ev(int8_t sign) {
  Cob1Mor out;
  out.source = {sign, static_cast<int8_t>(-sign)};
  out.pairs = {{0, 1}};
  return out;
}

Cob1Mor cob_coev(int8_t sign) {
  Cob1Mor out;
  out.target = {static_cast<int8_t>(-sign), sign};
  out.pairs = {{0, 1}};
  return out;
}

namespace {

// All perfect matchings pairing each plus point with a minus point, in
// lexicographic order of the resulting assignment.
void enumerate_matchings(const std::vector<int>& plus, const std::vector<int>& minus,
                         std::vector<bool>& used, std::size_t i, std::vector<std::pair<int, int>>& acc,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
  if (i == plus.size()) {
    out.push_back(acc);
    return;
  }
  for (std::size_t j = 0; j < minus.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc.emplace_back(plus[i], minus[j]);
    enumerate_matchings(plus, minus, used, i + 1, acc, out);
    acc.pop_back();
    used[j] = false;
  }
}

}  // namespace

std::vector<Cob1Mor> cob_enumerate_homs(const SignedWord& w1, const SignedWord& w2, int max_circles) {
  Cob1Mor proto;
  proto.source = w1;
  proto.target = w2;
  const int total = static_cast<int>(w1.size() + w2.size());
  std::vector<int> plus, minus;
  for (int p = 0; p < total; ++p) (proto.epsilon(p) > 0 ? plus : minus).push_back(p);
  std::vector<Cob1Mor> out;
  if (plus.size() != minus.size()) return out;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<bool> used(minus.size(), false);
  std::vector<std::pair<int, int>> acc;
  enumerate_matchings(plus, minus, used, 0, acc, matchings);
  std::vector<Cob1Mor> base;
  for (auto& m : matchings) {
    Cob1Mor f = proto;
    f.pairs = std::move(m);
    cob_canonicalize(f);
    base.push_back(std::move(f));
  }
  std::sort(base.begin(), base.end(),
            [](const Cob1Mor& a, const Cob1Mor& b) { return a.pairs < b.pairs; });
  base.erase(std::unique(base.begin(), base.end()), base.end());
  for (auto& f : base)
    for (int c = 0; c <= max_circles; ++c) {
      Cob1Mor g = f;
      g.circles = c;
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<SignedWord> all_sign_words(int maxlen) {
  std::vector<SignedWord> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int8_t s : {static_cast<int8_t>(1), static_cast<int8_t>(-1)}) {
        SignedWord w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

}  // namespace brauer
