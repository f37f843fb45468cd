#ifndef ORELIM_REPORT_HPP
#define ORELIM_REPORT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orelim {

enum class CheckStatus { pass, fail, hypothesis_not_met, skipped_degenerate };

std::string status_name(CheckStatus s);

struct Witness {
    int i = 0;
    int j = 0;
    std::string expected;
    std::string actual;
};

// One verification outcome. fail => witness present; pass => witness absent.
struct CheckReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    CheckStatus status = CheckStatus::pass;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;

    bool failed() const { return status == CheckStatus::fail; }
};

std::string report_to_json(const CheckReport& r);
std::string reports_to_json(const std::vector<CheckReport>& rs);

// Runs fn, records elapsed time, and turns a thrown MathError into a
// skipped-degenerate report.
CheckReport timed_check(const std::string& name,
                        std::map<std::string, std::string> parameters,
                        const std::function<void(CheckReport&)>& fn);

}  // namespace orelim

#endif
