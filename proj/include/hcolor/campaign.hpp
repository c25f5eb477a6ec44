#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hcolor/factory.hpp"
#include "hcolor/theorems.hpp"

namespace hcolor {

/// Runs `task(i)` for i in [0, count) on up to `threads` workers.
/// Tasks must write only to their own slot of any shared output.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

unsigned default_threads();

struct CampaignConfig {
    Statement which = Statement::T3cycle;
    int n = 3;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::ProperlyColored;
    std::size_t general_budget = 2000;  // rejection attempts per sample in general mode
    unsigned threads = 0;               // 0: hardware concurrency
};

struct InstanceSummary {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool sampled = false;  // false when the general sampler ran out of budget
    std::size_t attempts = 0;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<InstanceSummary> instances;
    std::size_t sampled = 0;
    std::size_t hypothesis_pass = 0;
    std::size_t conclusion_pass = 0;
    std::size_t violations = 0;
    std::size_t sampler_attempts = 0;
    std::vector<HColoredGraph> falsifying;
    double wall_seconds = 0.0;

    double acceptance_rate() const {
        return sampler_attempts == 0 ? 0.0 : static_cast<double>(sampled) / static_cast<double>(sampler_attempts);
    }
};

/// Samples `samples` hypothesis-satisfying instances and verifies each.
/// Aggregates are identical for any thread count.
CampaignResult run_campaign(const CampaignConfig& config);

nlohmann::json campaign_to_json(const CampaignResult& result);

}  // namespace hcolor
