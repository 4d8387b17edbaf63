#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/report.hpp"

namespace brauer {

// A word of oriented points, +1 or -1 per entry.
using SignedWord = std::vector<int8_t>;

SignedWord parse_signs(const std::string& s);   // "+-+" -> {+1,-1,+1}
std::string render_signs(const SignedWord& w);

// Points of a morphism's boundary: source entry k is point k, target entry l
// is point |source| + l.
//
// A morphism of the π0 oriented 1-D cobordism category: an orientation
// compatible perfect matching on the boundary points plus a circle count.
// epsilon(point) is +source[k] on the source side and -target[l] on the
// target side; every pair must have epsilon sum zero. The pair list is kept
// canonical (least endpoint first in each pair, pairs sorted); structural
// equality is the equality of morphisms.
struct Cob1Mor {
  SignedWord source, target;
  std::vector<std::pair<int, int>> pairs;
  int circles = 0;

  bool operator==(const Cob1Mor&) const = default;
  int epsilon(int point) const;
  std::string to_string() const;
};

// Checks the matching and orientation invariants, throwing on violation.
void cob_validate(const Cob1Mor& f);
void cob_canonicalize(Cob1Mor& f);

Cob1Mor cob_identity(const SignedWord& w);
Cob1Mor cob_compose(const Cob1Mor& g, const Cob1Mor& f);  // g after f
Cob1Mor cob_tensor(const Cob1Mor& f, const Cob1Mor& g);
Cob1Mor cob_symmetry(const SignedWord& w1, const SignedWord& w2);
SignedWord cob_dual(const SignedWord& w);
Cob1Mor cob_ev(int8_t sign);    // (s, -s) -> ∅ for a single generator of sign s
Cob1Mor cob_coev(int8_t sign);  // ∅ -> (-s, s)

// All morphisms w1 -> w2 with at most max_circles circles, in canonical
// order, no duplicates.
std::vector<Cob1Mor> cob_enumerate_homs(const SignedWord& w1, const SignedWord& w2, int max_circles);

// All sign words of length <= maxlen, shortest first then lexicographic
// with '+' before '-'.
std::vector<SignedWord> all_sign_words(int maxlen);

}  // namespace brauer
