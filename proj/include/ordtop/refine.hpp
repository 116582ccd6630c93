#pragma once

#include "ordtop/spectrum.hpp"

namespace ordtop {

// Record of one first-countable refinement.
struct RefinementReport {
  SpaceDesc input;
  RuleSet rules_added;
  SpaceDesc output;
  Spectrum spectrum_before, spectrum_after;
  bool coarseness_witness = false;

  RefinementReport() : input(SpaceDesc::real_line()), output(SpaceDesc::real_line()) {}
};

// The two refinement rules: a right ray at every point of uncountable left
// character and a left ray at every point of uncountable right character.
// Input-independent; matching is input-dependent.
RuleSet refinement_rules_for(const SpaceDesc& y);

// Refine y to a first-countable GO space by adding the rays above. The
// output spectrum has no Uncountable side and the input topology is coarser.
RefinementReport refine_first_countable(const SpaceDesc& y);

}  // namespace ordtop
