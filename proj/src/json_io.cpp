#include "ulrich/json_io.hpp"

#include "ulrich/bundle.hpp"

#include <limits>
#include <stdexcept>

namespace ulrich {

Json int_to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi)
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

Json ring_to_json(const RingDescriptor& d) {
    Json j;
    if (d.kind == RingKind::quadric) {
        j["type"] = "quadric";
        j["n"] = d.quadric_dim;
    } else {
        j["type"] = "multiprojective";
        j["dims"] = d.factor_dims;
    }
    return j;
}

RingDescriptor ring_from_json(const Json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "quadric")
        return RingDescriptor::quadric(j.at("n").get<int>());
    if (type == "multiprojective")
        return RingDescriptor::multiprojective(j.at("dims").get<std::vector<int>>());
    throw std::invalid_argument("unknown ring type: " + type);
}

Json coeffs_to_json(const CohClass& x) {
    Json coeffs = Json::object();
    for (int idx : x.ring()->emission_order())
        if (x.coefficient(idx) != 0)
            coeffs[x.ring()->basis_key(idx)] = int_to_json(x.coefficient(idx));
    return coeffs;
}

CohClass coeffs_from_json(const RingPtr& ring, const Json& j) {
    CohClass x(ring);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = ring->index_of_key(it.key());
        if (idx < 0)
            throw std::invalid_argument("unknown basis key: " + it.key());
        x.set_coefficient(idx, int_from_json(it.value()));
    }
    return x;
}

Json coh_to_json(const CohClass& x) {
    Json j;
    j["ring"] = ring_to_json(x.ring()->descriptor());
    j["coeffs"] = coeffs_to_json(x);
    return j;
}

CohClass coh_from_json(const Json& j) {
    auto ring = Ring::get(ring_from_json(j.at("ring")));
    return coeffs_from_json(ring, j.at("coeffs"));
}

Json bundle_to_json(const BundleClass& e) {
    Json j;
    j["ring"] = ring_to_json(e.ring->descriptor());
    j["rank"] = e.rank;
    j["chern"] = coeffs_to_json(e.chern);
    return j;
}

BundleClass bundle_from_json(const Json& j) {
    auto ring = Ring::get(ring_from_json(j.at("ring")));
    auto chern = coeffs_from_json(ring, j.at("chern"));
    return BundleClass(ring, j.at("rank").get<int>(), std::move(chern));
}

} // namespace ulrich
