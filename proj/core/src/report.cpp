#include "curvachay/report.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace curvachay {

std::string ClaimRecord::to_json_line() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["status"] = status;
    j["witness_ref"] = witness_ref;
    return j.dump();
}

int VerifyReport::violations() const {
    int count = 0;
    for (const auto& r : records) count += r.status == "violated";
    return count;
}

void VerifyReport::add(std::string claim, std::string lhs, std::string rhs, bool ok, std::string witness) {
    records.push_back({std::move(claim), std::move(lhs), std::move(rhs), ok ? "ok" : "violated",
                       std::move(witness)});
}

void VerifyReport::skip(std::string claim, std::string witness) {
    records.push_back({std::move(claim), "", "", "skipped", std::move(witness)});
}

void VerifyReport::merge(VerifyReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
}

void VerifyReport::write_jsonl(std::ostream& os) const {
    for (const auto& r : records) os << r.to_json_line() << '\n';
}

}  // namespace curvachay
