#pragma once

#include "rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>

namespace logjets {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Assembles the audit record emitted by every subcommand: stable claim ids,
// per-claim status (verified, failed, or reported for informational
// cross-source comparisons), and a payload. Failed claims must carry a
// witness inside their payload.
class ReportBuilder {
public:
    explicit ReportBuilder(std::string command)
        : start_(std::chrono::steady_clock::now()) {
        root_["tool_version"] = kToolVersion;
        root_["command"] = std::move(command);
        root_["parameters"] = Json::object();
    }

    void parameter(const std::string& key, Json value) { root_["parameters"][key] = std::move(value); }

    void verified(const std::string& claim_id, const std::string& anchor, Json payload = Json::object()) {
        push(claim_id, anchor, "verified", std::move(payload));
    }

    void failed(const std::string& claim_id, const std::string& anchor, Json payload) {
        if (!payload.contains("witness")) payload["witness"] = "missing";
        push(claim_id, anchor, "failed", std::move(payload));
        ++fails_;
    }

    void check(const std::string& claim_id, const std::string& anchor, bool ok, Json payload = Json::object()) {
        if (ok)
            verified(claim_id, anchor, std::move(payload));
        else
            failed(claim_id, anchor, std::move(payload));
    }

    void reported(const std::string& claim_id, const std::string& anchor, Json payload) {
        push(claim_id, anchor, "reported", std::move(payload));
    }

    int finish() {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
        std::stable_sort(results_.begin(), results_.end(), [](const Json& a, const Json& b) {
            return a.at("claim_id").get_ref<const std::string&>() <
                   b.at("claim_id").get_ref<const std::string&>();
        });
        root_["results"] = results_;
        root_["elapsed_ms"] = elapsed.count();
        std::cerr << results_.size() << " claims, " << fails_ << " failed\n";
        std::cout << root_.dump(2) << std::endl;
        return fails_ > 0 ? 1 : 0;
    }

    int failures() const { return fails_; }

private:
    void push(const std::string& claim_id, const std::string& anchor, const char* status,
              Json payload) {
        Json rec;
        rec["claim_id"] = claim_id;
        rec["anchor"] = anchor;
        rec["status"] = status;
        rec["payload"] = std::move(payload);
        results_.push_back(std::move(rec));
        std::cerr << claim_id << ": " << status << '\n';
    }

    std::chrono::steady_clock::time_point start_;
    Json root_;
    Json results_ = Json::array();
    int fails_ = 0;
};

inline Json rational_json(const Rational& q) { return Json(to_text(q)); }

} // namespace logjets
