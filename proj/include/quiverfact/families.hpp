#pragma once

#include <string_view>

#include "quiverfact/quiver.hpp"

namespace qf {

enum class FamilyKind { Complete, CompleteWithLoops, Cycle, Path, TruncatedBethe };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    unsigned n = 1;
    unsigned depth = 0;  // truncated_bethe only
};

/// Standard families as bidirectional quivers.
///   complete:n, complete_with_loops:n, path:n   vertices "1".."n"
///   cycle:n (n >= 3)                            "1".."n" clockwise
///   bethe:n:d (n >= 2, d >= 0)                  radius-d ball of the Bethe
///                                               lattice of coordination n,
///                                               BFS order, root "0"
Quiver make_family(const FamilySpec& spec);

/// Parses "complete:4", "loops:3" (alias "complete_with_loops:3"),
/// "cycle:5", "path:4", "bethe:3:2" (alias "truncated_bethe:3:2").
FamilySpec parse_family_spec(std::string_view text);

}  // namespace qf
