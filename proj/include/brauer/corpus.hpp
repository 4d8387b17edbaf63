#pragma once

#include <string>

#include "brauer/fincat.hpp"
#include "brauer/io.hpp"
#include "brauer/moncat.hpp"

namespace brauer::corpus {

// Small categories used by tests, the CLI examples and the acceptance suite.
// The bundled data files are generated from these builders and verified
// against them.

FinCat terminal();       // one object, identity only
FinCat walking_arrow();  // x, y, a: x -> y
FinCat walking_iso();    // x, y, a: x -> y, b: y -> x, inverse to each other
FinCat group_z2();       // one object g, morphisms e (identity) and s, s∘s = e

// Discrete objects 0,1,2 with tensor = addition mod 3; identities only.
StrictMonCat cyclic3();
// Discrete objects p0, p1 with tensor = addition mod 2; identities only.
StrictMonCat discrete_z2();
// Objects p0, p1 (tensor mod 2); End(p_i) = {i<n>, t<n>} with t∘t = id and
// t_i ⊗ t_j = id_{p_{i+j}}, t ⊗ id = id ⊗ t = t. Rigid: every object is
// self-dual with identity ev/coev.
StrictMonCat two_group();

// Diagram over the walking arrow: fiber(x) = walking arrow, fiber(y) = the
// two-element group, the transition along a collapses a to s.
LoadedDiagram arrow_diagram();
// Lax monoidal diagram over the discrete two-object group with terminal
// fibers; its Grothendieck construction is the index itself.
LoadedMonDiagram group_diagram();

// Writes every bundled data file into dir (categories, monoidal categories,
// both diagrams, a presentation, a labeled morphism, a cobordism).
void write_data_files(const std::string& dir);

}  // namespace brauer::corpus
