#pragma once

// Everything: scalars, matrices, presentations, the catalog, analyses,
// classifier, audit and JSON I/O.
#include "tvbrep/audit.hpp"
#include "tvbrep/catalog.hpp"
#include "tvbrep/classifier.hpp"
#include "tvbrep/json_io.hpp"
#include "tvbrep/phi_extensions.hpp"
#include "tvbrep/structure_analysis.hpp"
