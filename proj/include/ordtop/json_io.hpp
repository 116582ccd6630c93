#pragma once

#include <json.hpp>

#include "ordtop/embed.hpp"
#include "ordtop/oracle.hpp"
#include "ordtop/refine.hpp"
#include "ordtop/schedule.hpp"

namespace ordtop {

using Json = nlohmann::ordered_json;

Json to_json(const Ordinal& x);
Json to_json(const Piece& p);
Json to_json(const Point& p);
Json to_json(const Rule& r);
Json to_json(const SpaceDesc& s);
Json to_json(const Schedule& s);
Json to_json(const SideCharacter& ch);
Json to_json(const PointClass& c);
Json to_json(const Spectrum& sp);
Json to_json(const RefinementReport& r);
Json to_json(const StepTrace& t);
Json to_json(const CBProfile& p);

Ordinal ordinal_from_json(const Json& j);
Piece piece_from_json(const Json& j);
Point point_from_json(const Json& j);
Rule rule_from_json(const Json& j);
SpaceDesc space_from_json(const Json& j);
Schedule schedule_from_json(const Json& j);
PartitionSchedule partition_schedule_from_json(const Json& j);

}  // namespace ordtop
