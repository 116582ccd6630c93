#include "ordtop/json_io.hpp"

#include <algorithm>

namespace ordtop {

namespace {

std::string side_name(SideClass c) { return to_string(c); }

SideClass side_from_name(const std::string& s) {
  if (s == "Empty") return SideClass::Empty;
  if (s == "Neighbor") return SideClass::Neighbor;
  if (s == "Countable") return SideClass::Countable;
  if (s == "Uncountable") return SideClass::Uncountable;
  throw DomainError("unknown side class: " + s);
}

std::string require_string(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw DomainError(std::string("expected string field '") + field + "'");
  return j[field].get<std::string>();
}

}  // namespace

Json to_json(const Ordinal& x) { return print_ordinal(x); }

Ordinal ordinal_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("ordinal fields are grammar strings");
  return parse_ordinal(j.get<std::string>());
}

Json to_json(const Piece& p) {
  Json j;
  switch (p.kind) {
    case PieceKind::Full:
      j["kind"] = "full";
      j["a"] = to_json(p.a);
      j["b"] = to_json(p.b);
      break;
    case PieceKind::Singleton:
      j["kind"] = "singleton";
      j["a"] = to_json(p.a);
      break;
    case PieceKind::SuccessorsOnly:
      j["kind"] = "successorsonly";
      j["a"] = to_json(p.a);
      j["b"] = to_json(p.b);
      break;
    case PieceKind::LimitsOnly:
      j["kind"] = "limitsonly";
      j["a"] = to_json(p.a);
      j["b"] = to_json(p.b);
      break;
    case PieceKind::OffsetClass:
      j["kind"] = "offsetclass";
      j["a"] = to_json(p.a);
      j["b"] = to_json(p.b);
      j["k"] = p.k;
      break;
  }
  return j;
}

Piece piece_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  Piece p;
  if (kind == "full") {
    p = Piece::full(ordinal_from_json(j.at("a")), ordinal_from_json(j.at("b")));
  } else if (kind == "singleton") {
    return Piece::singleton(ordinal_from_json(j.at("a")));
  } else if (kind == "successorsonly") {
    p = Piece::successors(ordinal_from_json(j.at("a")), ordinal_from_json(j.at("b")));
  } else if (kind == "limitsonly") {
    p = Piece::limits(ordinal_from_json(j.at("a")), ordinal_from_json(j.at("b")));
  } else if (kind == "offsetclass") {
    p = Piece::offset(ordinal_from_json(j.at("a")), ordinal_from_json(j.at("b")),
                      j.at("k").get<uint64_t>());
    if (p.k == 0) throw DomainError("OffsetClass requires k >= 1");
  } else {
    throw DomainError("unknown piece kind: " + kind);
  }
  if (!(p.a < p.b)) throw DomainError("piece with empty range [a,b)");
  return p;
}

Json to_json(const Point& p) {
  Json j;
  switch (p.kind) {
    case PointKind::OrdPoint:
      j["kind"] = "ordpoint";
      j["value"] = to_json(p.ord);
      break;
    case PointKind::Pair:
      j["kind"] = "pair";
      j["first"] = to_json(*p.first);
      j["second"] = to_json(*p.second);
      break;
    case PointKind::LongPoint:
      j["kind"] = "longpoint";
      j["alpha"] = to_json(p.ord);
      j["q"] = p.q.str();
      break;
    case PointKind::LongInfinity:
      j["kind"] = "longinfinity";
      break;
    case PointKind::Rat:
      j["kind"] = "rat";
      j["q"] = p.q.str();
      break;
  }
  return j;
}

Point point_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "ordpoint") return Point::ordinal(ordinal_from_json(j.at("value")));
  if (kind == "pair") return Point::pair(point_from_json(j.at("first")), point_from_json(j.at("second")));
  if (kind == "longpoint")
    return Point::long_point(ordinal_from_json(j.at("alpha")),
                             parse_rational(require_string(j, "q")));
  if (kind == "longinfinity") return Point::long_infinity();
  if (kind == "rat") return Point::rat(parse_rational(require_string(j, "q")));
  throw DomainError("unknown point kind: " + kind);
}

Json to_json(const Rule& r) {
  Json j;
  switch (r.kind) {
    case RuleKind::IsolateWhere: j["kind"] = "isolatewhere"; break;
    case RuleKind::RightRayWhere: j["kind"] = "rightraywhere"; break;
    case RuleKind::LeftRayWhere: j["kind"] = "leftraywhere"; break;
  }
  Json pred;
  switch (r.pred.target) {
    case PredTarget::Left: pred["target"] = "left"; break;
    case PredTarget::Right: pred["target"] = "right"; break;
    case PredTarget::Total: pred["target"] = "total"; break;
  }
  pred["class"] = side_name(r.pred.cls);
  j["pred"] = pred;
  return j;
}

Rule rule_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  Rule r;
  if (kind == "isolatewhere") r.kind = RuleKind::IsolateWhere;
  else if (kind == "rightraywhere") r.kind = RuleKind::RightRayWhere;
  else if (kind == "leftraywhere") r.kind = RuleKind::LeftRayWhere;
  else throw DomainError("unknown rule kind: " + kind);
  const Json& pred = j.at("pred");
  std::string target = require_string(pred, "target");
  if (target == "left") r.pred.target = PredTarget::Left;
  else if (target == "right") r.pred.target = PredTarget::Right;
  else if (target == "total") r.pred.target = PredTarget::Total;
  else throw DomainError("unknown pred target: " + target);
  r.pred.cls = side_from_name(require_string(pred, "class"));
  return r;
}

Json to_json(const SpaceDesc& s) {
  Json j;
  switch (s.kind()) {
    case SpaceKind::OrdinalSub: {
      j["kind"] = "ordinalsub";
      j["bound"] = to_json(s.bound());
      Json pieces = Json::array();
      for (const auto& p : s.pieces()) pieces.push_back(to_json(p));
      j["pieces"] = pieces;
      break;
    }
    case SpaceKind::LexProduct:
      j["kind"] = "lexproduct";
      j["first"] = to_json(s.first());
      j["second"] = to_json(s.second());
      break;
    case SpaceKind::LongSegment:
      j["kind"] = "longsegment";
      j["kappa"] = to_json(s.kappa());
      break;
    case SpaceKind::RationalSegment:
      j["kind"] = "rationalsegment";
      j["hasmin"] = s.has_min_flag();
      j["hasmax"] = s.has_max_flag();
      break;
    case SpaceKind::RealLine:
      j["kind"] = "realline";
      break;
    case SpaceKind::GoSpace: {
      j["kind"] = "gospace";
      j["base"] = to_json(s.base());
      Json rules = Json::array();
      for (const auto& r : s.rules()) rules.push_back(to_json(r));
      j["rules"] = rules;
      break;
    }
  }
  return j;
}

SpaceDesc space_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "ordinalsub") {
    std::vector<Piece> pieces;
    for (const auto& p : j.at("pieces")) pieces.push_back(piece_from_json(p));
    return SpaceDesc::ordinal_sub(ordinal_from_json(j.at("bound")), std::move(pieces));
  }
  if (kind == "lexproduct")
    return SpaceDesc::lex_product(space_from_json(j.at("first")), space_from_json(j.at("second")));
  if (kind == "longsegment") return SpaceDesc::long_segment(ordinal_from_json(j.at("kappa")));
  if (kind == "rationalsegment")
    return SpaceDesc::rational_segment(j.at("hasmin").get<bool>(), j.at("hasmax").get<bool>());
  if (kind == "realline") return SpaceDesc::real_line();
  if (kind == "gospace") {
    RuleSet rules;
    for (const auto& r : j.at("rules")) rules.push_back(rule_from_json(r));
    return SpaceDesc::go_space(space_from_json(j.at("base")), std::move(rules));
  }
  throw DomainError("unknown space kind: " + kind);
}

namespace {

Json component_to_json(const Schedule::Component& c) {
  if (c.is_const) {
    Json j;
    j["kind"] = "constant";
    j["point"] = to_json(c.constant);
    return j;
  }
  return to_json(*c.sched);
}

Schedule::Component component_from_json(const Json& j) {
  if (require_string(j, "kind") == "constant")
    return Schedule::Component::of(point_from_json(j.at("point")));
  return Schedule::Component::of(schedule_from_json(j));
}

}  // namespace

Json to_json(const Schedule& s) {
  Json j;
  switch (s.kind) {
    case SchedKind::AffineOrd:
      j["kind"] = "affineord";
      j["stride"] = to_json(s.stride);
      j["offset"] = to_json(s.offset);
      break;
    case SchedKind::RatApproach:
      j["kind"] = "ratapproach";
      j["target"] = s.target.str();
      j["direction"] = s.direction == RatDirection::Up ? "up" : "down";
      break;
    case SchedKind::PairSchedule:
      j["kind"] = "pairschedule";
      j["first"] = component_to_json(*s.first);
      j["second"] = component_to_json(*s.second);
      break;
  }
  return j;
}

Schedule schedule_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "affineord")
    return Schedule::affine(ordinal_from_json(j.at("stride")), ordinal_from_json(j.at("offset")));
  if (kind == "ratapproach") {
    std::string dir = require_string(j, "direction");
    if (dir != "up" && dir != "down") throw DomainError("unknown direction: " + dir);
    return Schedule::rat_approach(parse_rational(require_string(j, "target")),
                                  dir == "up" ? RatDirection::Up : RatDirection::Down);
  }
  if (kind == "pairschedule")
    return Schedule::pair(component_from_json(j.at("first")), component_from_json(j.at("second")));
  throw DomainError("unknown schedule kind: " + kind);
}

PartitionSchedule partition_schedule_from_json(const Json& j) {
  PartitionSchedule ps;
  ps.target = point_from_json(j.at("target"));
  if (j.contains("offsetfamily")) {
    const Json& f = j.at("offsetfamily");
    ps.offset_family = true;
    ps.a = ordinal_from_json(f.at("a"));
    ps.b = ordinal_from_json(f.at("b"));
    return ps;
  }
  for (const auto& lst : j.at("list")) {
    std::vector<Piece> pieces;
    for (const auto& p : lst) pieces.push_back(piece_from_json(p));
    ps.list.push_back(std::move(pieces));
  }
  if (j.contains("tail")) {
    std::vector<Piece> pieces;
    for (const auto& p : j.at("tail")) pieces.push_back(piece_from_json(p));
    ps.tail = std::move(pieces);
  }
  return ps;
}

Json to_json(const SideCharacter& ch) {
  Json j;
  j["left"] = side_name(ch.left);
  j["right"] = side_name(ch.right);
  return j;
}

Json to_json(const PointClass& c) {
  Json j;
  j["class"] = c.key;
  j["description"] = c.desc;
  j["left"] = side_name(c.left.cls);
  j["right"] = side_name(c.right.cls);
  j["witness"] = to_json(c.witness);
  return j;
}

Json to_json(const Spectrum& sp) {
  Spectrum sorted = sp;
  std::sort(sorted.begin(), sorted.end(),
            [](const PointClass& a, const PointClass& b) { return a.key < b.key; });
  Json arr = Json::array();
  for (const auto& c : sorted) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const RefinementReport& r) {
  Json j;
  j["input"] = to_json(r.input);
  j["rulesadded"] = Json::array();
  for (const auto& rule : r.rules_added) j["rulesadded"].push_back(to_json(rule));
  j["output"] = to_json(r.output);
  j["spectrumbefore"] = to_json(r.spectrum_before);
  j["spectrumafter"] = to_json(r.spectrum_after);
  j["coarsenesswitness"] = r.coarseness_witness;
  j["firstcountable"] = true;
  for (const auto& c : r.spectrum_after) {
    if (c.left.cls == SideClass::Uncountable || c.right.cls == SideClass::Uncountable)
      j["firstcountable"] = false;
  }
  return j;
}

Json to_json(const StepTrace& t) {
  Json j;
  j["action"] = t.action;
  if (!t.detail.empty()) j["detail"] = t.detail;
  if (!t.children.empty()) {
    Json arr = Json::array();
    for (const auto& c : t.children) arr.push_back(to_json(c));
    j["children"] = arr;
  }
  return j;
}

Json to_json(const CBProfile& p) {
  Json j;
  Json arr = Json::array();
  for (const auto& lvl : p.ranks) {
    Json l;
    l["index"] = lvl.index;
    l["summary"] = lvl.summary;
    Json chars = Json::array();
    for (const auto& ch : lvl.char_multiset) chars.push_back(to_json(ch));
    l["characters"] = chars;
    arr.push_back(l);
  }
  j["ranks"] = arr;
  j["terminal"] = p.reached_empty ? "empty" : "unresolved";
  return j;
}

}  // namespace ordtop
