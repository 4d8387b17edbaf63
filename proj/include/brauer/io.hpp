#pragma once

#include <memory>
#include <string>

#include "brauer/cobordism.hpp"
#include "brauer/fincat.hpp"
#include "brauer/freerigid.hpp"
#include "brauer/grothendieck.hpp"
#include "brauer/moncat.hpp"

namespace brauer {

// All loaders parse JSON files with a mandatory "type" field, reject unknown
// keys, and throw Error(ParseError) with the file path and offending key or
// location in the message.

RawCategory load_category_file(const std::string& path);
void save_category_file(const RawCategory& c, const std::string& path);

RawMonCat load_monoidal_file(const std::string& path);
void save_monoidal_file(const RawMonCat& m, const std::string& path);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path);

// Diagram files carry their index category inline; the owning pointer keeps
// OplaxDiagram::index stable under moves.
struct LoadedDiagram {
  std::unique_ptr<FinCat> index;
  OplaxDiagram diagram;
};

LoadedDiagram load_diagram_file(const std::string& path);
void save_diagram_file(const OplaxDiagram& d, const std::string& path);

struct LoadedMonDiagram {
  std::unique_ptr<StrictMonCat> index_mon;
  LaxMonDiagram diagram;
};

LoadedMonDiagram load_monoidal_diagram_file(const std::string& path);
void save_monoidal_diagram_file(const LaxMonDiagram& d, const std::string& path);

// Labeled envelope morphism with its base category inline. Loop entries are
// endomorphism identifiers, resolved to trace classes on load.
struct LoadedLabeled {
  std::unique_ptr<FinCat> category;
  BrauerMor mor;
};

LoadedLabeled load_labeled_file(const std::string& path);
void save_labeled_file(const FinCat& c, const TraceSet& traces, const BrauerMor& f,
                       const std::string& path);

Cob1Mor load_cobordism_file(const std::string& path);
void save_cobordism_file(const Cob1Mor& f, const std::string& path);

// "type" field of the file at path (for dispatching validation).
std::string peek_file_type(const std::string& path);

}  // namespace brauer
