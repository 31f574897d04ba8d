#include "charcat/core/report.hpp"

#include <sstream>

#include "charcat/core/config.hpp"
#include "charcat/core/errors.hpp"

namespace charcat {

void Config::validate() const {
    if (exhaustive_limit == 0 || iso_limit == 0 || aut_budget == 0 || sample_count == 0 ||
        pair_budget == 0 || tuple_budget == 0 || max_word_arity == 0)
        throw InvalidInput("config budgets must be positive");
}

const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

LawResult& Report::law(const std::string& name) {
    for (auto& l : laws_)
        if (l.law == name) return l;
    LawResult l;
    l.law = name;
    laws_.push_back(std::move(l));
    return laws_.back();
}

void Report::record(const std::string& name, bool ok, const std::vector<std::string>& witness,
                    const std::string& detail) {
    auto& l = law(name);
    ++l.checked;
    if (!ok && l.pass) {
        l.pass = false;
        l.witness = witness;
        l.detail = detail;
    }
}

bool Report::ok() const {
    for (const auto& l : laws_)
        if (!l.pass) return false;
    return true;
}

bool Report::passed(const std::string& name) const {
    const auto* l = find(name);
    return l != nullptr && l->pass;
}

const LawResult* Report::find(const std::string& name) const {
    for (const auto& l : laws_)
        if (l.law == name) return &l;
    return nullptr;
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& l : laws_)
        if (!l.pass) out.push_back(l.law);
    return out;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& l : other.laws_) {
        auto& mine = law(prefix + l.law);
        mine.checked += l.checked;
        if (!l.pass && mine.pass) {
            mine.pass = false;
            mine.witness = l.witness;
            mine.detail = l.detail;
        }
    }
    exhaustive = exhaustive && other.exhaustive;
    for (const auto& n : other.notes) notes.push_back(prefix + n);
}

nlohmann::json Report::to_json() const {
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : laws_) {
        nlohmann::json j{{"law", l.law}, {"pass", l.pass}, {"checked", l.checked}};
        if (!l.pass) {
            j["witness"] = l.witness;
            if (!l.detail.empty()) j["detail"] = l.detail;
        }
        laws.push_back(std::move(j));
    }
    nlohmann::json out{{"subject", subject_}, {"ok", ok()}, {"exhaustive", exhaustive},
                       {"seed", seed}, {"laws", std::move(laws)}};
    if (!notes.empty()) out["notes"] = notes;
    return out;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << subject_ << ": " << (ok() ? "PASS" : "FAIL");
    for (const auto& l : laws_) {
        if (l.pass) continue;
        os << "\n  " << l.law << " fails at (";
        for (std::size_t i = 0; i < l.witness.size(); ++i) os << (i ? ", " : "") << l.witness[i];
        os << ")";
        if (!l.detail.empty()) os << " " << l.detail;
    }
    return os.str();
}

} // namespace charcat
