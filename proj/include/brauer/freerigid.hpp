#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/cobordism.hpp"
#include "brauer/fincat.hpp"
#include "brauer/moncat.hpp"
#include "brauer/report.hpp"

namespace brauer {

// A base category together with its trace-class quotient, which is what loop
// labels live in.
struct BrauerContext {
  const FinCat* cat = nullptr;
  TraceSet traces;
};

BrauerContext make_context(const FinCat& c);

// A word of labeled oriented points: (object of C, sign).
struct LabeledWord {
  std::vector<std::pair<int, int8_t>> entries;

  bool operator==(const LabeledWord&) const = default;
  auto operator<=>(const LabeledWord&) const = default;
  int length() const { return static_cast<int>(entries.size()); }
  SignedWord signs() const;
  std::string to_string(const FinCat& c) const;
};

LabeledWord labeled_word(std::vector<std::pair<int, int8_t>> entries);
LabeledWord word_concat(const LabeledWord& a, const LabeledWord& b);
LabeledWord fr_dual(const LabeledWord& w);  // reverse and flip signs

// A morphism of the labeled oriented-Brauer envelope of C: an orientation
// compatible matching whose strands carry C-morphisms (from the object at the
// epsilon=+1 endpoint to the object at the epsilon=-1 endpoint), plus a
// multiset of trace classes for closed loops. Canonical encoding throughout:
// sorted pair list with aligned labels, sorted loop class list.
struct BrauerMor {
  LabeledWord source, target;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> labels;  // aligned with pairs
  std::vector<int> loops;   // sorted trace class ids

  bool operator==(const BrauerMor&) const = default;
  auto operator<=>(const BrauerMor&) const = default;
  int epsilon(int point) const;
  int object_at(int point) const;
  std::string to_string(const FinCat& c) const;
};

// Matching, orientation and label-typing checks; throws DanglingReference or
// LabelTypeMismatch with the offending witness.
void fr_validate(const BrauerContext& ctx, const BrauerMor& f);
void fr_canonicalize(BrauerMor& f);

BrauerMor fr_identity(const FinCat& c, const LabeledWord& w);
BrauerMor fr_compose(const BrauerContext& ctx, const BrauerMor& g, const BrauerMor& f);
// Same, additionally reporting the flow-ordered label sequence of every
// closed loop created by the gluing (used by the rotation-invariance checks).
BrauerMor fr_compose_traced(const BrauerContext& ctx, const BrauerMor& g, const BrauerMor& f,
                            std::vector<std::vector<int>>* cycle_labels);
BrauerMor fr_tensor(const BrauerMor& f, const BrauerMor& g);
BrauerMor fr_symmetry(const FinCat& c, const LabeledWord& w1, const LabeledWord& w2);
// Cup/cap on generators. For a label l: n -> m, the cap is
// (n,+),(m,-) -> ∅ and the cup is ∅ -> (n,-),(m,+); in both the strand
// carries l from its ε=+1 endpoint (at n) to its ε=-1 endpoint (at m).
BrauerMor fr_ev(const FinCat& c, int label);
BrauerMor fr_coev(const FinCat& c, int label);

// All morphisms w1 -> w2 with no loops / with at most max_loops loops, in
// canonical deterministic order.
std::vector<BrauerMor> fr_enumerate_loopfree(const BrauerContext& ctx, const LabeledWord& w1,
                                             const LabeledWord& w2);
std::vector<BrauerMor> fr_enumerate_homs(const BrauerContext& ctx, const LabeledWord& w1,
                                         const LabeledWord& w2, int max_loops);

// All multisets over {0..class_count-1} of size <= max_size, as sorted
// vectors ordered by (size, lex).
std::vector<std::vector<int>> multisets_up_to(int class_count, int max_size);

// All labeled words of length <= maxlen, shortest first then lexicographic.
std::vector<LabeledWord> all_labeled_words(const FinCat& c, int maxlen);

// Morphisms from the unit to (m_1,+)...(m_i,+)(n_1,-)...(n_j,-), together
// with the bijection-indexed decomposition of the loop-free part.
struct HomFromUnit {
  LabeledWord word;
  std::vector<BrauerMor> all;
  std::vector<BrauerMor> loop_free;
  std::size_t formula_count = 0;   // sum over bijections of hom-set products
  std::size_t multiset_count = 0;  // truncated multisets over the trace set
  Report report;
};

HomFromUnit fr_hom_from_unit(const BrauerContext& ctx, const std::vector<int>& pos,
                             const std::vector<int>& neg, int max_loops);

// End(∅) truncated at max_loops, with its free-commutative-monoid structure
// verified on the truncation.
struct EndUnit {
  std::vector<std::vector<int>> elements;
  Report report;
};

EndUnit fr_end_unit(const BrauerContext& ctx, int max_loops);

// Checks that the envelope of the terminal category is the π0 cobordism
// category: a label-forgetting bijection on all hom sets between words of
// length <= maxlen, compatible with composition, tensor and symmetry.
Report fr_vs_cob(int maxlen, int max_circles);

// Fully-faithfulness transfer: checks F full/faithful, the induced trace map
// bijective, and then bijectivity of the induced maps on envelope hom sets
// within the given bounds.
Report fr_fully_faithful_check(const BrauerContext& cctx, const BrauerContext& dctx,
                               const Functor& f, int maxlen, int max_loops);

// Bounded verification of the universal property: evaluates every diagram
// between words of length <= diagram_bound in M (via f0 and the supplied
// duals, loops as End(1) scalars) and checks functoriality and monoidality.
// Throws Error(IllTypedDual) if a supplied dual fails its triangle re-check.
Report fr_universal_map(const BrauerContext& ctx, const StrictMonCat& m, const Functor& f0,
                        const std::vector<DualData>& duals, int diagram_bound, int max_loops);

// Evaluator behind fr_universal_map, exposed for direct use in tests.
class DiagramEvaluator {
 public:
  DiagramEvaluator(const BrauerContext& ctx, const StrictMonCat& m, const Functor& f0,
                   std::vector<DualData> duals);

  int eval_object(const LabeledWord& w) const;
  int eval(const BrauerMor& f) const;
  int loop_scalar(int trace_class) const;

 private:
  struct WordDual {
    int object, dual, ev, coev;
  };
  WordDual entry_dual(std::pair<int, int8_t> e) const;
  WordDual word_dual(const LabeledWord& w) const;
  int entry_object(std::pair<int, int8_t> e) const;
  int permutation_mor(const std::vector<int>& objects, const std::vector<int>& perm) const;

  const BrauerContext* ctx_;
  const StrictMonCat* m_;
  const Functor* f0_;
  std::vector<DualData> duals_;
};

// The envelope truncated to words of length <= maxlen with per-class loop
// counts capped at loop_cap (composition saturates each class count), as an
// explicit finite category.
FinCat fr_truncate(const BrauerContext& ctx, int maxlen, int loop_cap);

}  // namespace brauer
