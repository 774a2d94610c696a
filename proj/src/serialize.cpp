#include "skewlab/serialize.hpp"

#include "skewlab/fq.hpp"

namespace skewlab::serialize {

json field_descriptor_to_json(const fields::FieldRef& f) {
    if (!f) throw std::invalid_argument("null field descriptor");
    json j;
    j["p"] = f->p();
    j["n"] = f->n();
    j["poly"] = f->poly();
    return j;
}

fields::FieldRef field_descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n"))
        throw std::invalid_argument("field descriptor needs p and n");
    const int64_t p = j.at("p").get<int64_t>();
    const int64_t n = j.at("n").get<int64_t>();
    fields::FieldRef f = fields::get_field(p, n);
    if (j.contains("poly")) {
        const auto poly = j.at("poly").get<std::vector<int64_t>>();
        if (poly != f->poly())
            throw std::invalid_argument("field descriptor polynomial mismatch");
    }
    return f;
}

json fq_element_to_json(const fields::FqElement& x) {
    return json(x.coords());
}

fields::FqElement fq_element_from_json(const fields::FieldRef& f, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("element must be a coordinate array");
    auto coords = j.get<std::vector<int64_t>>();
    if (int64_t(coords.size()) != f->n())
        throw std::invalid_argument("coordinate count does not match field degree");
    return fields::FqElement(f, std::move(coords));
}

}  // namespace skewlab::serialize
