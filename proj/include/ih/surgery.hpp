#pragma once

#include <optional>
#include <string>

#include "ih/intersection.hpp"

namespace ih {

/**
 * A cycle of the subspace that is allowable there but obstructed at an
 * isolated singular apex of the ambient space.  Near the apex the cycle
 * must be the cone over a cycle in the apex's link.
 */
struct SurgeryProblem {
    StratifiedComplex x; // subspace carrying the cycle
    StratifiedComplex y; // ambient space the cycle should become allowable in
    std::string apex;
    Chain xi; // cycle in x
};

/**
 * The link cycle eta with cone(eta) = xi restricted to the star of the
 * apex; the zero chain when xi avoids the apex.  Fails with a subdivision
 * hint when the restriction is not a cone over a cycle.
 */
Chain extract_link_cycle(const SurgeryProblem& p);

/// Outcome of repair_cycle, with the re-checked allowability verdicts.
struct RepairOutcome {
    Chain repaired;           // xi with the cone excised and the bounding chain glued
    Chain link_cycle;         // eta
    Chain bounding;           // zeta with boundary eta, found in the ambient link
    bool middle_allowable_in_y = false;
    bool log_allowable_in_y = false;
};

/**
 * If eta bounds in the ambient link, returns xi - cone(eta) + zeta: a cycle
 * homologous to xi that avoids the apex.  Absent when eta does not bound
 * (the extension obstruction).  zeta is the pivot-minimal solution of the
 * boundary equation, so repeated runs agree exactly.
 */
std::optional<RepairOutcome> repair_cycle(const SurgeryProblem& p);

// One barycentric subdivision of the problem (complexes and cycle), for
// inputs whose cycle is not cone-shaped near the apex.
SurgeryProblem subdivide_problem(const SurgeryProblem& p);

} // namespace ih
