#pragma once

// Machine-readable outcome of a verification run.
//
// Wall time is kept out of the canonical JSON so that reports are
// byte-identical across runs and worker counts; callers may attach it.

#include <string>
#include <vector>

#include "maclab/serialize.hpp"

namespace maclab {

// Preview marks a check whose identities were only compared at sample
// points; it never counts as passed.
enum class Status { Passed, Failed, NotStabilized, Preview };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Passed:
            return "PASSED";
        case Status::Failed:
            return "FAILED";
        case Status::NotStabilized:
            return "NOT_STABILIZED";
        case Status::Preview:
            return "PREVIEW";
    }
    return "FAILED";
}

struct Witness {
    std::string index;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string check;
    Json parameters = Json::object();
    Status status = Status::Passed;
    std::vector<Witness> witnesses;
    // informational counters, e.g. number of coefficients compared
    Json details = Json::object();

    bool passed() const { return status == Status::Passed; }

    bool settled() const { return status == Status::Failed || status == Status::NotStabilized; }

    void fail(Witness w, Status s = Status::Failed) {
        if (!settled()) status = s;
        witnesses.push_back(std::move(w));
    }
    void mark_preview() {
        if (status == Status::Passed) status = Status::Preview;
    }
    // Merges a sub-check; the first failure kind wins, and preview beats passed.
    void absorb(const VerificationReport& sub) {
        for (const auto& w : sub.witnesses)
            witnesses.push_back({sub.check + ":" + w.index, w.expected, w.actual});
        if (!settled() && sub.status != Status::Passed) status = sub.status;
    }

    Json to_json() const {
        Json j;
        j["check"] = check;
        j["parameters"] = parameters;
        j["status"] = status_name(status);
        Json ws = Json::array();
        for (const auto& w : witnesses) ws.push_back({{"index", w.index}, {"expected", w.expected}, {"actual", w.actual}});
        j["witnesses"] = ws;
        if (!details.empty()) j["details"] = details;
        return j;
    }
};

}  // namespace maclab
