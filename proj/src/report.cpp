#include "orelim/report.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

#include "orelim/errors.hpp"

namespace orelim {

using nlohmann::json;

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
        case CheckStatus::skipped_degenerate: return "skipped-degenerate";
    }
    return "?";
}

namespace {

json report_json(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["parameters"] = json::object();
    for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
    j["status"] = status_name(r.status);
    if (r.witness) {
        j["witness"] = {{"i", r.witness->i},
                        {"j", r.witness->j},
                        {"expected", r.witness->expected},
                        {"actual", r.witness->actual}};
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

std::string report_to_json(const CheckReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<CheckReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

CheckReport timed_check(const std::string& name,
                        std::map<std::string, std::string> parameters,
                        const std::function<void(CheckReport&)>& fn) {
    CheckReport r;
    r.name = name;
    r.parameters = std::move(parameters);
    auto start = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const MathError& e) {
        r.status = CheckStatus::skipped_degenerate;
        r.parameters["reason"] = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return r;
}

}  // namespace orelim
