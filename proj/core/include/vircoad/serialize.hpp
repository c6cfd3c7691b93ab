/*
 * Copyright 2026 the vircoad authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VIRCOAD_SERIALIZE_HPP
#define VIRCOAD_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "vircoad/agd.hpp"
#include "vircoad/density.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/extalg.hpp"
#include "vircoad/laurent.hpp"
#include "vircoad/sturm.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

using json = nlohmann::json;

/// Wire formats:
///   TrigPoly       {"a0": r, "cos": [...], "sin": [...]}
///   HalfTrigPoly   {"half": true, "cos": [...], "sin": [...]}
///   CircleDiffeo   {"shift": r, "p": TrigPoly}
///   Density        {"lambda": r, "antiperiodic": b, "value": carrier}
///   SturmLiouville {"a": r, "u": TrigPoly}
///   MatrixSL       {"u": TrigPoly, "v": TrigPoly, "c": [c1, c2, c3]}
///   LaurentPoly2   [[i, j, num, den], ...]
///   HbarSeries     {"order": K, "terms": [[m, LaurentPoly2], ...]}
/// All from_* functions throw ParseError on malformed input.

json to_json(const TrigPoly& f);
json to_json(const HalfTrigPoly& f);
json to_json(const CircleDiffeo& f);
json to_json(const Density& a);
json to_json(const SturmLiouville& L);
json to_json(const MatrixSL& L);
json to_json(const LaurentPoly2& f);
json to_json(const HbarSeries& s);

TrigPoly trig_from_json(const json& j);
HalfTrigPoly half_trig_from_json(const json& j);
CircleDiffeo diffeo_from_json(const json& j, const Config& cfg = default_config());
Density density_from_json(const json& j);
SturmLiouville sturm_from_json(const json& j);
MatrixSL matrix_sl_from_json(const json& j);
LaurentPoly2 laurent_from_json(const json& j);

json parse_json(const std::string& text);

}  // namespace vircoad

#endif
