#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "brauer/fincat.hpp"
#include "brauer/moncat.hpp"
#include "brauer/report.hpp"

namespace brauer {

// Object and morphism maps by table, without owning pointers; resolved
// against the relevant fibers when used.
struct TableMap {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

// A strictly functorial diagram of finite categories indexed by a finite
// category: F(id) = id and F(g ∘ f) = F(g) ∘ F(f) as table data.
struct OplaxDiagram {
  const FinCat* index = nullptr;
  std::vector<FinCat> fibers;        // per index object
  std::vector<TableMap> transitions; // per index morphism: F(i) -> F(j)
};

// Checks fiber/transition shapes, per-transition functoriality, and strict
// functoriality of the assignment. Throws on violation.
void validate_diagram(const OplaxDiagram& d);

// The Grothendieck construction with its decode tables. Objects are pairs
// (i, x in F(i)); a morphism (i,x) -> (j,y) is (f: i -> j, phi: F(f)x -> y).
struct GrothCat {
  FinCat cat;
  const OplaxDiagram* diagram = nullptr;
  std::vector<std::pair<int, int>> obj_decode;          // (index object, fiber object)
  std::vector<std::array<int, 3>> mor_decode;           // (index morphism f, fiber morphism phi, source fiber object x)
  std::vector<std::vector<int>> obj_encode;             // [i][x] -> groth object
  std::map<std::array<int, 3>, int> mor_encode;
  int encode_obj(int i, int x) const { return obj_encode[i][x]; }
  int encode_mor(int f, int phi, int x) const;          // -1 if absent

  // projection to the index
  Functor projection() const;
};

GrothCat grothendieck(const OplaxDiagram& d);

// Verifies the bijection hom((i,x),(j,y)) ≅ ⊔_{f: i->j} hom_{F(j)}(F(f)x, y)
// by constructing both sides and the canonical comparison.
Report hom_formula_check(const GrothCat& g, int i, int x, int j, int y);
Report hom_formula_check_all(const GrothCat& g);

// Canonical fiber inclusions x ↦ (i,x) with the connecting morphisms
// (f, id): (i,x) -> (j, F(f)x); checks naturality and cocone compatibility.
struct UnitCocone {
  std::vector<Functor> inclusions;  // per index object; targets point at the GrothCat
  Report report;
};

UnitCocone unit_cocone(const GrothCat& g);

// A lax symmetric monoidal diagram: the index carries a strict monoidal
// structure, and mu gives functors F(i) x F(j) -> F(i ⊗ j), strictly
// coherent.
struct LaxMonDiagram {
  OplaxDiagram diagram;
  const StrictMonCat* index_mon = nullptr;  // base must equal *diagram.index
  // mu[i * n + j]: object table [x * |F(j)| + y], morphism table likewise
  std::vector<TableMap> mu;
  int unit_fiber_object = -1;  // object of F(1)
};

// Builds the strict monoidal structure on the Grothendieck construction.
// Throws Error(CoherenceViolation) with a witness if mu fails strict
// naturality, associativity, unitality or symmetry compatibility.
StrictMonCat monoidal_grothendieck(const LaxMonDiagram& d, GrothCat* out_decode = nullptr);

}  // namespace brauer
