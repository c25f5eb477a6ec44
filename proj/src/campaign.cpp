#include "hcolor/campaign.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "hcolor/errors.hpp"
#include "hcolor/io.hpp"
#include "hcolor/random.hpp"

namespace hcolor {

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
    if (threads == 0) threads = default_threads();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        task(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

CampaignResult run_campaign(const CampaignConfig& config) {
    if (!in_range(config.which, config.n))
        throw DomainError("order " + std::to_string(config.n) + " is outside the range of " + to_string(config.which));
    const auto start = std::chrono::steady_clock::now();

    CampaignResult result;
    result.config = config;
    result.instances.resize(config.samples);
    std::vector<std::optional<HColoredGraph>> falsifying(config.samples);

    parallel_for(config.samples, config.threads, [&](std::size_t i) {
        auto& summary = result.instances[i];
        summary.index = i;
        summary.seed = derive_seed(config.seed, i);
        auto outcome = sample_hypothesis_satisfying(config.n, summary.seed, config.which, config.mode,
                                                    config.general_budget);
        summary.attempts = outcome.attempts;
        if (!outcome.instance) return;
        summary.sampled = true;
        const auto verdict = verify_theorem(*outcome.instance, config.which);
        summary.hypotheses_hold = verdict.hypotheses_hold;
        summary.conclusion_holds = verdict.conclusion_holds;
        if (verdict.violation()) falsifying[i] = std::move(outcome.instance);
    });

    // Reduction in index order, independent of worker timing.
    for (std::size_t i = 0; i < config.samples; ++i) {
        const auto& s = result.instances[i];
        result.sampler_attempts += s.attempts;
        result.sampled += s.sampled ? 1 : 0;
        result.hypothesis_pass += s.hypotheses_hold ? 1 : 0;
        result.conclusion_pass += s.conclusion_holds ? 1 : 0;
        if (falsifying[i]) {
            ++result.violations;
            result.falsifying.push_back(*falsifying[i]);
        }
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

nlohmann::json campaign_to_json(const CampaignResult& result) {
    using nlohmann::json;
    const auto& c = result.config;
    json out;
    out["config"] = {{"which", to_string(c.which)},
                     {"n", c.n},
                     {"samples", c.samples},
                     {"seed", c.seed},
                     {"mode", c.mode == SampleMode::ProperlyColored ? "pc" : "general"},
                     {"general_budget", c.general_budget}};
    out["seed"] = c.seed;
    out["aggregate"] = {{"instances", result.sampled},
                        {"hypothesis_pass", result.hypothesis_pass},
                        {"conclusion_pass", result.conclusion_pass},
                        {"violations", result.violations},
                        {"sampler_attempts", result.sampler_attempts},
                        {"acceptance_rate", result.acceptance_rate()}};
    json per = json::array();
    for (const auto& s : result.instances) {
        per.push_back({{"index", s.index},
                       {"seed", s.seed},
                       {"sampled", s.sampled},
                       {"attempts", s.attempts},
                       {"hypotheses_hold", s.hypotheses_hold},
                       {"conclusion_holds", s.conclusion_holds}});
    }
    out["instances"] = per;
    json falsifying = json::array();
    for (const auto& inst : result.falsifying) falsifying.push_back(instance_to_json(inst));
    out["falsifying"] = falsifying;
    out["wall_seconds"] = result.wall_seconds;
    return out;
}

}  // namespace hcolor
