#pragma once

#include <string>
#include <vector>

#include "ringlab/classify.hpp"

namespace ringlab {

// One named invariant checked against a ring.
struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, diagnostic on failure
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool ok = true;
};

// Runs the full invariant suite on one ring: ring axioms, ideal closures,
// radical routes, annihilator sidedness, unit group closure, the
// coprimality characterization agreement over all pairs, minimality route
// agreement over all classes, generator invariance, pair behavior modulo
// the radical, chain laws over the sampled chains, classification route
// agreement, the implication lattice, and the implication audit.
PropertyReport verify_properties(const FiniteRing& R, const AnalysisCaps& caps);

}  // namespace ringlab
