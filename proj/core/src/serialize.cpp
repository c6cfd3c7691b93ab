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

#include "vircoad/serialize.hpp"

#include "vircoad/errors.hpp"

namespace vircoad {

namespace {

std::vector<double> coeffs_of(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("expected array field \"") + key + "\"");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ParseError("coefficient arrays must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

double number_of(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("expected numeric field \"") + key + "\"");
    return j[key].get<double>();
}

}  // namespace

json to_json(const TrigPoly& f) {
    json cs = json::array(), sn = json::array();
    for (int k = 1; k <= f.degree(); ++k) {
        cs.push_back(f.cos_coeff(k));
        sn.push_back(f.sin_coeff(k));
    }
    return json{{"a0", f.a0()}, {"cos", cs}, {"sin", sn}};
}

json to_json(const HalfTrigPoly& f) {
    json cs = json::array(), sn = json::array();
    for (int k = 0; k < f.size(); ++k) {
        cs.push_back(f.cos_coeff(k));
        sn.push_back(f.sin_coeff(k));
    }
    return json{{"half", true}, {"cos", cs}, {"sin", sn}};
}

json to_json(const CircleDiffeo& f) {
    return json{{"shift", f.shift()}, {"p", to_json(f.periodic_part())}};
}

json to_json(const Density& a) {
    json value = a.antiperiodic() ? to_json(a.antiperiodic_value()) : to_json(a.periodic_value());
    return json{{"lambda", a.weight()}, {"antiperiodic", a.antiperiodic()}, {"value", value}};
}

json to_json(const SturmLiouville& L) {
    return json{{"a", L.a}, {"u", to_json(L.u.periodic_value())}};
}

json to_json(const MatrixSL& L) {
    return json{{"u", to_json(L.u.periodic_value())},
                {"v", to_json(L.v.periodic_value())},
                {"c", json::array({L.c[0], L.c[1], L.c[2]})}};
}

json to_json(const LaurentPoly2& f) {
    json out = json::array();
    for (const auto& [key, c] : f.terms()) {
        out.push_back(json::array({key.first, key.second,
                                   boost::multiprecision::numerator(c).str(),
                                   boost::multiprecision::denominator(c).str()}));
    }
    return out;
}

json to_json(const HbarSeries& s) {
    json terms = json::array();
    for (int m = 0; m <= s.order; ++m)
        terms.push_back(json::array({m, to_json(s.at(m))}));
    return json{{"order", s.order}, {"terms", terms}};
}

TrigPoly trig_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("TrigPoly: expected an object");
    if (j.value("half", false)) throw ParseError("TrigPoly: got an anti-periodic carrier");
    return TrigPoly(number_of(j, "a0"), coeffs_of(j, "cos"), coeffs_of(j, "sin"));
}

HalfTrigPoly half_trig_from_json(const json& j) {
    if (!j.is_object() || !j.value("half", false))
        throw ParseError("HalfTrigPoly: expected an object with \"half\": true");
    return HalfTrigPoly(coeffs_of(j, "cos"), coeffs_of(j, "sin"));
}

CircleDiffeo diffeo_from_json(const json& j, const Config& cfg) {
    if (!j.is_object() || !j.contains("p")) throw ParseError("CircleDiffeo: expected {shift, p}");
    return CircleDiffeo(number_of(j, "shift"), trig_from_json(j["p"]), cfg);
}

Density density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("value"))
        throw ParseError("Density: expected {lambda, antiperiodic, value}");
    const double lambda = number_of(j, "lambda");
    const bool anti = j.value("antiperiodic", j["value"].is_object() &&
                                                  j["value"].value("half", false));
    if (anti) return Density(lambda, half_trig_from_json(j["value"]));
    return Density(lambda, trig_from_json(j["value"]));
}

SturmLiouville sturm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("u")) throw ParseError("SturmLiouville: expected {a, u}");
    return SturmLiouville(number_of(j, "a"), trig_from_json(j["u"]));
}

MatrixSL matrix_sl_from_json(const json& j) {
    if (!j.is_object() || !j.contains("c") || !j["c"].is_array() || j["c"].size() != 3)
        throw ParseError("MatrixSL: expected {u, v, c: [c1,c2,c3]}");
    std::array<double, 3> c{};
    for (int i = 0; i < 3; ++i) {
        if (!j["c"][static_cast<size_t>(i)].is_number())
            throw ParseError("MatrixSL: central charges must be numbers");
        c[static_cast<size_t>(i)] = j["c"][static_cast<size_t>(i)].get<double>();
    }
    return MatrixSL(trig_from_json(j["u"]), trig_from_json(j["v"]), c);
}

LaurentPoly2 laurent_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("LaurentPoly2: expected an array of [i, j, num, den]");
    LaurentPoly2 out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4) throw ParseError("LaurentPoly2: bad term");
        if (!t[0].is_number_integer() || !t[1].is_number_integer())
            throw ParseError("LaurentPoly2: exponents must be integers");
        Rational num, den;
        try {
            if (t[2].is_string())
                num = Rational(boost::multiprecision::cpp_int(t[2].get<std::string>()));
            else
                num = Rational(t[2].get<long long>());
            if (t[3].is_string())
                den = Rational(boost::multiprecision::cpp_int(t[3].get<std::string>()));
            else
                den = Rational(t[3].get<long long>());
        } catch (const std::exception&) {
            throw ParseError("LaurentPoly2: bad rational coefficient");
        }
        if (den == 0) throw ParseError("LaurentPoly2: zero denominator");
        out.add_term(t[0].get<int>(), t[1].get<int>(), num / den);
    }
    return out;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON: " + text.substr(0, 80));
    return j;
}

}  // namespace vircoad
