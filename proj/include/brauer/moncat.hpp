#pragma once

#include <optional>
#include <vector>

#include "brauer/fincat.hpp"
#include "brauer/report.hpp"

namespace brauer {

struct RawMonCat {
  RawCategory base;
  // nested tables keyed by identifier
  std::vector<std::array<std::string, 3>> tensor_objects;    // [x, y, x⊗y]
  std::vector<std::array<std::string, 3>> tensor_morphisms;  // [f, g, f⊗g]
  std::string unit;
  std::vector<std::array<std::string, 3>> symmetry;          // [x, y, s_{x,y}]
};

// A strict symmetric monoidal structure on a FinCat. All coherence data are
// equalities of table entries; validate_monoidal checks them exhaustively.
class StrictMonCat {
 public:
  const FinCat& base() const { return base_; }
  int unit_obj() const { return unit_; }
  int tensor_obj(int x, int y) const { return tobj_[x * base_.object_count() + y]; }
  int tensor_mor(int f, int g) const { return tmor_[f * base_.morphism_count() + g]; }
  int symmetry(int x, int y) const { return sym_[x * base_.object_count() + y]; }

  int tensor_obj(const std::vector<int>& xs) const;  // left fold; unit on empty

  RawMonCat to_raw() const;

  friend StrictMonCat validate_monoidal(const RawMonCat& raw);
  friend StrictMonCat assemble_monoidal(FinCat base, std::vector<int> tobj, std::vector<int> tmor,
                                        int unit, std::vector<int> sym);

 private:
  FinCat base_;
  std::vector<int> tobj_;
  std::vector<int> tmor_;
  int unit_ = -1;
  std::vector<int> sym_;
};

// Resolves and checks every StrictMonCat invariant: totality and typing of
// the tensor tables, strict associativity and unitality, functoriality of the
// tensor, and the symmetry laws (involution, naturality, unit, hexagons).
// Throws Error with a named witness on the first violation.
StrictMonCat validate_monoidal(const RawMonCat& raw);

// Same checks, on already-resolved tables (used by constructions that build
// monoidal structure programmatically).
StrictMonCat assemble_monoidal(FinCat base, std::vector<int> tobj, std::vector<int> tmor,
                               int unit, std::vector<int> sym);

struct DualData {
  int object = -1;
  int dual = -1;
  int ev = -1;    // object ⊗ dual -> 1
  int coev = -1;  // 1 -> dual ⊗ object
};

// Independent re-check of the two zig-zag identities for the given data.
bool triangles_hold(const StrictMonCat& m, const DualData& d);

// Exhaustive search over candidate duals and (ev, coev) pairs; returns the
// least witness in (object id, ev id, coev id) lexicographic order.
std::optional<DualData> find_dual(const StrictMonCat& m, int x);

struct RigidityReport {
  Report report;
  std::vector<std::optional<DualData>> duals;  // per object
  bool all_dualizable() const;
};

RigidityReport check_rigid(const StrictMonCat& m);

// A lax symmetric monoidal functor between strict monoidal categories, with
// strict coherence equalities.
struct LaxMonFunctor {
  Functor underlying;
  std::vector<int> mu;  // [x * n + y]: F(x) ⊗ F(y) -> F(x ⊗ y) in the target
  int unit_mor = -1;    // 1 -> F(1)
};

Report check_lax_monoidal(const StrictMonCat& c, const StrictMonCat& d, const LaxMonFunctor& f);

}  // namespace brauer
