#pragma once

#include "cwc/set_systems.hpp"

namespace cwc {

// Steiner triple system of order n (n = 1 or 3 mod 6): n(n-1)/6 triples
// covering every pair exactly once. Bose construction for n = 3 (mod 6),
// Skolem for n = 1 (mod 6); both deterministic. n = 1 and n = 3 give the
// degenerate systems with 0 and 1 blocks.
SetSystem steiner_triple_system(int n);

// Exhaustive pair-coverage check; throws ValidationError on any defect.
void validate_steiner(const SetSystem& s);

}  // namespace cwc
