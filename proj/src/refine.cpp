#include "ordtop/refine.hpp"

namespace ordtop {

RuleSet refinement_rules_for(const SpaceDesc&) {
  return RuleSet{
      Rule{RuleKind::RightRayWhere, Pred{PredTarget::Left, SideClass::Uncountable}},
      Rule{RuleKind::LeftRayWhere, Pred{PredTarget::Right, SideClass::Uncountable}},
  };
}

RefinementReport refine_first_countable(const SpaceDesc& y) {
  RefinementReport rep;
  rep.input = y;
  rep.rules_added = refinement_rules_for(y);
  rep.output = apply_rules(y, rep.rules_added);
  rep.spectrum_before = character_spectrum(y);
  rep.spectrum_after = character_spectrum(rep.output);
  rep.coarseness_witness = is_coarser(rep.input, rep.output);
  for (const auto& c : rep.spectrum_after) {
    if (c.left.cls == SideClass::Uncountable || c.right.cls == SideClass::Uncountable)
      throw DomainError("refinement failed to remove an uncountable side at class " + c.key);
  }
  return rep;
}

}  // namespace ordtop
