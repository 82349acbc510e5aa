#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvachay {

/// One verification record; serialized as a JSON line.
struct ClaimRecord {
    std::string claim;
    std::string lhs;
    std::string rhs;
    std::string status;       // "ok" | "violated" | "skipped"
    std::string witness_ref;  // presentation text, vertex/edge, ...

    std::string to_json_line() const;
};

struct VerifyReport {
    std::vector<ClaimRecord> records;

    int violations() const;
    int checked() const { return static_cast<int>(records.size()); }
    void add(std::string claim, std::string lhs, std::string rhs, bool ok, std::string witness);
    void skip(std::string claim, std::string witness);
    void merge(VerifyReport other);
    void write_jsonl(std::ostream& os) const;
};

}  // namespace curvachay
