#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "freeprod.hpp"
#include "moments.hpp"

namespace spindle {

using Json = nlohmann::json;

inline Json spec_to_json(const AlgebraSpec& spec) {
    return Json{{"name", spec.name}, {"blocks", spec.blocks}};
}

inline AlgebraSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw Error("algebra spec json needs a blocks array");
    return AlgebraSpec(j.value("name", std::string("spec")),
                       j.at("blocks").get<std::vector<long>>());
}

inline Json loop_vector_to_json(const LoopVector& v) {
    Json terms = Json::array();
    for (const auto& [l, c] : v.terms) {
        Json jl = Json::array();
        for (const Edge& e : l) jl.push_back(Json::array({e.block, e.idx}));
        terms.push_back(Json{{"loop", jl}, {"coeff", surd_str(c)}});
    }
    return Json{{"degree", v.degree}, {"terms", terms}};
}

inline LoopVector loop_vector_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw Error("loop vector json needs degree and terms");
    LoopVector v(j.at("degree").get<int>());
    for (const Json& t : j.at("terms")) {
        Loop l;
        for (const Json& p : t.at("loop"))
            l.push_back(Edge{p.at(0).get<int>(), p.at(1).get<int>()});
        v.add(l, parse_surd(t.at("coeff").get<std::string>()));
    }
    return v;
}

inline Json profile_to_json(const MomentProfile& mu) {
    Json ms = Json::array();
    for (const Rational& m : mu.moments) ms.push_back(rat_str(m));
    return Json{{"name", mu.name}, {"moments", ms}};
}

inline MomentProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("moments"))
        throw Error("moment profile json needs a moments array");
    MomentProfile mu{j.value("name", std::string("profile")), {}};
    for (const Json& m : j.at("moments")) mu.moments.push_back(parse_rational(m.get<std::string>()));
    return mu;
}

inline Json basis_label_to_json(const BasisLabel& label) {
    Json parts = Json::array();
    for (const LabelPart& part : label.parts)
        parts.push_back(Json{{"p", partition_str(part.p)},
                             {"pIdx", part.p_idx},
                             {"kIdx", part.k_idx}});
    return Json{{"I", label.interval}, {"parts", parts}};
}

inline BasisLabel basis_label_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("I") || !j.contains("parts"))
        throw Error("basis label json needs I and parts");
    BasisLabel label;
    label.interval = j.at("I").get<std::vector<int>>();
    std::size_t at = 0;
    for (const Json& p : j.at("parts")) {
        int k = label.interval.at(at++);
        label.parts.push_back(LabelPart{parse_partition(p.at("p").get<std::string>(), k),
                                        p.at("pIdx").get<std::vector<int>>(),
                                        p.at("kIdx").get<std::vector<int>>()});
    }
    return label;
}

}  // namespace spindle
