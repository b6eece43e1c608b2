#pragma once

#include "ulrich/json_io.hpp"

#include <string>
#include <vector>

namespace ulrich {

enum class Provenance { paper, trivial, derived };

std::string provenance_name(Provenance p);

// One named check: an expected value with its provenance, the computed
// value, and the verdict. Values are stored as JSON for uniform rendering.
struct Check {
    std::string id;
    Json expected;
    Provenance tag = Provenance::derived;
    Json computed;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
    void add(std::string id, Json expected, Provenance tag, Json computed);
    // convenience for boolean checks
    void add_flag(std::string id, Provenance tag, bool ok);

    Json to_json() const;
    std::string to_markdown() const;
};

} // namespace ulrich
