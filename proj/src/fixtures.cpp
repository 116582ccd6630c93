#include "ordtop/fixtures.hpp"

namespace ordtop {

std::optional<SpaceDesc> fixture_space(const std::string& name) {
  if (name == "L-base")
    return SpaceDesc::lex_product(SpaceDesc::real_line(),
                                  SpaceDesc::long_segment(Ordinal::Omega()));
  if (name == "E-successors") {
    Ordinal W = Ordinal::Omega();
    return SpaceDesc::ordinal_sub(
        add(W, Ordinal(1)), {Piece::successors(Ordinal(), W), Piece::singleton(W)});
  }
  if (name == "long-segment") return SpaceDesc::long_segment(Ordinal::Omega());
  return std::nullopt;
}

PartitionSchedule fixture_e_successors_schedule() {
  Ordinal W = Ordinal::Omega();
  return PartitionSchedule::offsets(Ordinal(), W, Point::ordinal(W));
}

}  // namespace ordtop
