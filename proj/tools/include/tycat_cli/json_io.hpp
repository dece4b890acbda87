#pragma once

#include <nlohmann/json.hpp>

#include "tycat/fusion.hpp"
#include "tycat/graphs.hpp"
#include "tycat/moddata.hpp"

namespace tycat::io {

using nlohmann::json;

std::string rat_str(const Rational& r);
Rational parse_rat(const std::string& s);

json to_json(const FinAbGroup& G);
FinAbGroup group_from_json(const json& j);

json to_json(const CycNum& x);
CycNum cyc_from_json(const json& j);

json to_json(const QuadForm& q);
QuadForm qform_from_json(const json& j);
json to_json(const Bichar& b);
Bichar bichar_from_json(const FinAbGroup& G, const json& j);

json to_json(const Label& l);
Label label_from_json(const json& j);

json to_json(const ModularData& md);
ModularData md_from_json(const json& j);

json to_json(const FusionRing& r);
json to_json(const FusionReport& r);
json to_json(const Hypergroup& h);
json to_json(const CharTable& t);
json to_json(const BipartiteGraph& g);

}  // namespace tycat::io
