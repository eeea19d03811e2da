#include "sgf/measure.hpp"

#include <json.hpp>

namespace sgf {

// Schema: {length, atoms: [[parts...], numerator, denominator], truncation_mass}
std::string measure_to_json(const SignatureMeasure& m) {
    nlohmann::json j;
    j["length"] = m.length();
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& [s, w] : m.atoms()) {
        nlohmann::json a = nlohmann::json::array();
        a.push_back(s.parts());
        a.push_back(numerator(w).str());
        a.push_back(denominator(w).str());
        atoms.push_back(a);
    }
    j["atoms"] = atoms;
    j["truncation_mass"] = {numerator(m.truncation_mass()).str(),
                            denominator(m.truncation_mass()).str()};
    return j.dump();
}

SignatureMeasure measure_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SignatureMeasure m(j.at("length").get<int>());
    for (const auto& a : j.at("atoms")) {
        Signature s{a.at(0).get<std::vector<int>>()};
        Rat w = Rat(Int(a.at(1).get<std::string>()), Int(a.at(2).get<std::string>()));
        m.add(s, w);
    }
    if (j.contains("truncation_mass")) {
        const auto& t = j["truncation_mass"];
        m.set_truncation_mass(Rat(Int(t.at(0).get<std::string>()), Int(t.at(1).get<std::string>())));
    }
    return m;
}

}  // namespace sgf
