#pragma once

#include <optional>
#include <string>

#include "ordtop/embed.hpp"

namespace ordtop {

// Built-in named spaces: "L-base" (ℝ ×_l long segment), "E-successors"
// (successors below Ω plus the top Ω), "long-segment". Used by the CLI as
// `example:<name>`.
std::optional<SpaceDesc> fixture_space(const std::string& name);

// The partition schedule belonging to the E-successors fixture.
PartitionSchedule fixture_e_successors_schedule();

}  // namespace ordtop
