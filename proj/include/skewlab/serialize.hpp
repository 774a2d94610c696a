#ifndef SKEWLAB_SERIALIZE_HPP
#define SKEWLAB_SERIALIZE_HPP

#include <memory>
#include <string>

#include "json.hpp"
#include "skewlab/sigma_linear.hpp"

namespace skewlab::serialize {

using json = nlohmann::ordered_json;

// {p, n, poly: [c_0, ..., c_n]}
json field_descriptor_to_json(const fields::FieldRef& f);
// Interns through get_field and verifies the polynomial matches.
fields::FieldRef field_descriptor_from_json(const json& j);

// Coordinate array [c_0, ..., c_{n-1}] over F_p.
json fq_element_to_json(const fields::FqElement& x);
fields::FqElement fq_element_from_json(const fields::FieldRef& f, const json& j);

// {n, generators: [[twist-text, ...], ...]} using the ore text form.
template <typename H>
json presentation_to_json(const sigma_linear::SigmaLinearSet<H>& V) {
    json j;
    j["n"] = V.arity();
    json gens = json::array();
    for (const auto& g : V.generators()) {
        json row = json::array();
        for (const auto& c : g.components()) row.push_back(c.str());
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    return j;
}

template <typename H>
sigma_linear::SigmaLinearSet<H> presentation_from_json(std::shared_ptr<const H> h,
                                                       const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw std::invalid_argument("presentation needs fields n and generators");
    if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
        throw std::invalid_argument("presentation arity must be an integer");
    const int64_t n = j["n"].get<int64_t>();
    if (n <= 0) throw std::invalid_argument("presentation arity must be positive");
    if (!j["generators"].is_array())
        throw std::invalid_argument("presentation generators must be an array");
    std::vector<sigma_linear::NTwist<H>> gens;
    for (const auto& row : j["generators"]) {
        if (!row.is_array() || int64_t(row.size()) != n)
            throw std::invalid_argument("generator row arity mismatch");
        std::vector<ore::OrePoly<H>> comps;
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw std::invalid_argument("generator entries must be twist text");
            comps.push_back(ore::parse_ore(h, cell.get<std::string>()));
        }
        gens.push_back(sigma_linear::NTwist<H>(h, std::move(comps)));
    }
    return sigma_linear::SigmaLinearSet<H>(std::move(h), size_t(n), std::move(gens));
}

}  // namespace skewlab::serialize

#endif
