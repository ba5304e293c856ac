#pragma once

#include "qsat/graph.hpp"

namespace qsat {

// Three bundled N = M = 10, k = 3 reference instances. They anchor the
// acceptance suite and are written out by the `paper-instances` CLI
// subcommand as instance_a.json / instance_b.json / instance_c.json.
//
//   a: product-satisfiable (clause-coverable, generic kernel dimension 16)
//   b: satisfiable but not product-satisfiable (kernel dimension 23)
//   c: unsatisfiable (kernel dimension 0)
Graph bundled_instance(char id);

}  // namespace qsat
