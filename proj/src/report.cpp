#include "ulrich/report.hpp"

#include "ulrich/config.hpp"

#include <sstream>

namespace ulrich {

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::paper: return "PAPER";
    case Provenance::trivial: return "TRIVIAL";
    case Provenance::derived: return "DERIVED";
    }
    return "?";
}

bool VerificationReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void VerificationReport::add(std::string id, Json expected, Provenance tag, Json computed) {
    Check c;
    c.id = std::move(id);
    c.pass = (expected == computed);
    c.expected = std::move(expected);
    c.tag = tag;
    c.computed = std::move(computed);
    checks.push_back(std::move(c));
}

void VerificationReport::add_flag(std::string id, Provenance tag, bool ok) {
    add(std::move(id), Json(true), tag, Json(ok));
}

Json VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["checks"] = Json::array();
    for (const auto& c : checks) {
        Json jc;
        jc["id"] = c.id;
        jc["expected"] = c.expected;
        jc["tag"] = provenance_name(c.tag);
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        j["checks"].push_back(std::move(jc));
    }
    j["pass"] = pass();
    return j;
}

static std::string cell(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string VerificationReport::to_markdown() const {
    std::ostringstream os;
    os << "## suite: " << suite << "\n\n";
    os << "| check | expected | tag | computed | pass |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& c : checks)
        os << "| " << c.id << " | " << cell(c.expected) << " | " << provenance_name(c.tag)
           << " | " << cell(c.computed) << " | " << (c.pass ? "yes" : "NO") << " |\n";
    os << "\noverall: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace ulrich
