#pragma once

// Strand-gluing walk shared by the cobordism and labeled-diagram composites.
// Points of the lower morphism f: A -> B are numbered A then B; points of the
// upper morphism g: B -> C are numbered B then C. Composite points are A then
// C. Every traversal is emitted in flow order: each strand is crossed from
// its epsilon=+1 endpoint to its epsilon=-1 endpoint.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brauer::detail {

struct Strand {
  int layer;  // 0: f, 1: g
  int pair;   // index into that morphism's pair list
};

struct GluedPath {
  int tail = -1;  // composite point with epsilon +1
  int head = -1;  // composite point with epsilon -1
  std::vector<Strand> strands;  // in flow order
};

struct GlueResult {
  std::vector<GluedPath> open_paths;      // discovery order: by tail point
  std::vector<std::vector<Strand>> cycles;  // each in flow order, from the least middle point
};

inline GlueResult glue_matchings(const std::vector<int8_t>& a, const std::vector<int8_t>& b,
                                 const std::vector<int8_t>& c,
                                 const std::vector<std::pair<int, int>>& fpairs,
                                 const std::vector<std::pair<int, int>>& gpairs) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const int nc = static_cast<int>(c.size());

  std::vector<int> fpartner(na + nb, -1), fpair_of(na + nb, -1);
  for (int i = 0; i < static_cast<int>(fpairs.size()); ++i) {
    fpartner[fpairs[i].first] = fpairs[i].second;
    fpartner[fpairs[i].second] = fpairs[i].first;
    fpair_of[fpairs[i].first] = fpair_of[fpairs[i].second] = i;
  }
  std::vector<int> gpartner(nb + nc, -1), gpair_of(nb + nc, -1);
  for (int i = 0; i < static_cast<int>(gpairs.size()); ++i) {
    gpartner[gpairs[i].first] = gpairs[i].second;
    gpartner[gpairs[i].second] = gpairs[i].first;
    gpair_of[gpairs[i].first] = gpair_of[gpairs[i].second] = i;
  }

  auto eps_f = [&](int p) { return p < na ? a[p] : static_cast<int8_t>(-b[p - na]); };
  auto eps_g = [&](int p) { return p < nb ? b[p] : static_cast<int8_t>(-c[p - nb]); };

  GlueResult out;
  std::vector<bool> mid_seen(nb, false);

  // Walks from an outer point with epsilon +1 until it leaves the middle.
  auto walk_open = [&](int layer, int point) {
    GluedPath path;
    path.tail = layer == 0 ? point : na + (point - nb);
    while (true) {
      if (layer == 0) {
        path.strands.push_back({0, fpair_of[point]});
        int q = fpartner[point];
        if (q < na) {
          path.head = q;
          return path;
        }
        mid_seen[q - na] = true;
        layer = 1;
        point = q - na;
      } else {
        path.strands.push_back({1, gpair_of[point]});
        int q = gpartner[point];
        if (q >= nb) {
          path.head = na + (q - nb);
          return path;
        }
        mid_seen[q] = true;
        layer = 0;
        point = na + q;
      }
    }
  };

  for (int k = 0; k < na; ++k)
    if (eps_f(k) > 0) out.open_paths.push_back(walk_open(0, k));
  for (int m = 0; m < nc; ++m)
    if (eps_g(nb + m) > 0) out.open_paths.push_back(walk_open(1, nb + m));

  for (int l = 0; l < nb; ++l) {
    if (mid_seen[l]) continue;
    // pick the layer in which this middle point is a strand tail
    int layer = eps_f(na + l) > 0 ? 0 : 1;
    std::vector<Strand> cycle;
    int cur_layer = layer;
    int point = cur_layer == 0 ? na + l : l;
    while (true) {
      if (cur_layer == 0) {
        mid_seen[point - na] = true;
        cycle.push_back({0, fpair_of[point]});
        int q = fpartner[point];
        cur_layer = 1;
        point = q - na;
      } else {
        mid_seen[point] = true;
        cycle.push_back({1, gpair_of[point]});
        int q = gpartner[point];
        cur_layer = 0;
        point = na + q;
      }
      int mid = cur_layer == 0 ? point - na : point;
      if (mid == l && cur_layer == layer) break;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace brauer::detail
