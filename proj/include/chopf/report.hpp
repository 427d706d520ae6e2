#pragma once

// Check reports. A check passes iff every residual it produced is exactly
// zero; the residuals are retained either way so failures can be inspected.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "chopf/freealg.hpp"
#include "chopf/tensor.hpp"

namespace chopf {

struct NamedResidual {
    std::string label;
    std::variant<RingMatrix, FreeElem> value;

    bool is_zero() const {
        if (const auto* m = std::get_if<RingMatrix>(&value)) return m->is_zero();
        return std::get<FreeElem>(value).is_zero();
    }
};

struct CheckReport {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json context;  // colour assignment and other parameters
    std::vector<NamedResidual> residuals;
};

inline CheckReport make_report(std::string name, nlohmann::ordered_json context,
                               std::vector<NamedResidual> residuals) {
    CheckReport r;
    r.name = std::move(name);
    r.context = std::move(context);
    r.passed = true;
    for (const auto& res : residuals)
        if (!res.is_zero()) r.passed = false;
    r.residuals = std::move(residuals);
    return r;
}

}  // namespace chopf
