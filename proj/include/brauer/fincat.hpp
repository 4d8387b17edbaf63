#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/report.hpp"

namespace brauer {

// Unresolved category tables as they appear in input files. Everything is
// referenced by string identifier; validate_category resolves and checks.
struct RawCategory {
  struct RawMor {
    std::string id, src, dst;
  };
  std::vector<std::string> objects;
  std::vector<RawMor> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<std::array<std::string, 3>> composition;          // [g, f, gf]
};

// A finite category with total composition tables. Objects and morphisms are
// dense indices; string identifiers are kept for I/O and error messages.
// Immutable after construction.
class FinCat {
 public:
  struct MorInfo {
    std::string id;
    int src = -1;
    int dst = -1;
  };

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mors_.size()); }

  const std::string& object_id(int x) const { return objects_[x]; }
  const std::string& morphism_id(int m) const { return mors_[m].id; }
  int src(int m) const { return mors_[m].src; }
  int dst(int m) const { return mors_[m].dst; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int m) const { return identity_[mors_[m].src] == m && mors_[m].src == mors_[m].dst; }

  int object_index(std::string_view id) const;    // -1 if absent
  int morphism_index(std::string_view id) const;  // -1 if absent

  const std::vector<int>& hom(int x, int y) const { return homs_[x * object_count() + y]; }

  // g after f; both must be composable (dst(f) == src(g)).
  int compose(int g, int f) const { return compose_[g * morphism_count() + f]; }

  // All endomorphism indices, in morphism order.
  std::vector<int> endomorphisms() const;

  bool is_iso(int m) const;
  bool objects_isomorphic(int x, int y) const;

  RawCategory to_raw() const;

  friend FinCat validate_category(const RawCategory& raw);

 private:
  std::vector<std::string> objects_;
  std::vector<MorInfo> mors_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> homs_;
  std::vector<int> compose_;  // -1 where not composable
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
};

// Resolves identifiers and exhaustively checks totality, associativity and
// identity laws. Throws Error with kind DanglingReference, AssocViolation or
// IdentityViolation naming the offending witness.
FinCat validate_category(const RawCategory& raw);

// A category presentation: free category on the generator graph modulo the
// congruence generated by the relations. Words are stored in application
// order: {"a","b"} is the path a-then-b, i.e. the composite b ∘ a.
struct Presentation {
  struct Generator {
    std::string id, src, dst;
  };
  using Word = std::vector<std::string>;
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<std::pair<Word, Word>> relations;  // parallel words
};

// Closes the presentation into explicit tables. Morphism identifiers are
// canonical normal-form words (shortest, then lexicographic), identities are
// named "id_<object>" and nonidentity words join generator ids with ".".
// Throws Error(BoundExceeded) if some hom set grows past size_bound.
FinCat close_presentation(const Presentation& pres, int size_bound);

struct Functor {
  const FinCat* source = nullptr;
  const FinCat* target = nullptr;
  std::vector<int> object_map;    // per source object
  std::vector<int> morphism_map;  // per source morphism
};

// Checks typing, identity and composite preservation exhaustively.
Report check_functor(const Functor& f);
Functor identity_functor(const FinCat& c);
Functor compose_functors(const Functor& g, const Functor& f);

// The quotient of all endomorphisms by the equivalence generated by
// g∘f ~ f∘g over opposed pairs f: x→y, g: y→x. Class ids are dense and
// ordered by their representative (least morphism identifier in the class).
struct TraceSet {
  const FinCat* base = nullptr;
  std::vector<int> class_of_mor;       // per morphism; -1 for non-endomorphisms
  std::vector<int> representative;     // per class: a morphism index
  int class_count = 0;

  int class_of(int endo) const { return class_of_mor[endo]; }
};

TraceSet trace_set(const FinCat& c);

struct Adjunction {
  Functor left;              // F: C -> D
  Functor right;             // G: D -> C
  std::vector<int> unit;     // per object c of C: morphism c -> G(F c)
  std::vector<int> counit;   // per object d of D: morphism F(G d) -> d
};

// Searches every comma category (F ↓ d) for a terminal object and assembles
// the right adjoint when all of them have one. Ties are broken by least
// object identifier, then least morphism identifier.
std::optional<Adjunction> find_right_adjoint(const Functor& f);

// Verifies naturality of unit and counit and both triangle identities by
// exhaustive enumeration; every failing witness becomes a report entry.
Report check_adjunction(const Adjunction& adj);

// Oracle used by tests and invariant checks: does the comma category (F ↓ d)
// have a terminal object? Pure enumeration, independent of the search above.
bool comma_has_terminal(const Functor& f, int d);

}  // namespace brauer
