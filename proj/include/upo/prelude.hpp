#pragma once

#include <string>

#include "upo/model.hpp"

namespace upo {

// Source text of the built-in upper ontology: the continuant/occurrent
// backbone, the ICE kind classes, the aboutness property tree under
// is_about, and the temporal vocabulary. Loaded implicitly by the CLI
// unless --no-prelude is given.
const std::string& prelude_text();

// The prelude parsed once per process. Copy it to use as a parse base.
const Ontology& prelude_ontology();

}  // namespace upo
