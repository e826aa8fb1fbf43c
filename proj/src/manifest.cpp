#include "spinconf/manifest.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <thread>

#include <json.hpp>

namespace spinconf::cli {

bool VerificationManifest::all_pass() const {
    for (const auto& e : checks)
        if (e.status == "fail") return false;
    return true;
}

std::string VerificationManifest::to_json(int indent) const {
    nlohmann::json j;
    j["run_id"] = run_id;
    j["timestamp"] = timestamp;
    j["config"] = {{"spin", config.spin.get_str()},
                   {"n", config.n},
                   {"d", exactla::rational_str(config.d)},
                   {"dmax", config.dmax},
                   {"seed", config.seed},
                   {"eps_sign", eps_sign}};
    j["overall"] = all_pass() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : checks)
        arr.push_back({{"name", e.name},
                       {"claim", e.claim},
                       {"status", e.status},
                       {"residual_info", e.residual_info},
                       {"runtime_ms", e.runtime_ms}});
    j["checks"] = arr;
    return j.dump(indent);
}

std::vector<ManifestEntry> run_tasks(std::vector<Task> tasks) {
    unsigned workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("SPINCONF_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) workers = static_cast<unsigned>(v);
    }
    if (workers < 1) workers = 1;
    workers = std::min<unsigned>(workers, tasks.size() ? tasks.size() : 1);

    std::vector<std::vector<ManifestEntry>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<Check> cs;
            std::string error;
            try {
                cs = tasks[k].run();
            } catch (const std::exception& e) {
                error = e.what();
            }
            long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (!error.empty()) {
                results[k].push_back({tasks[k].name, "construction succeeds", "fail", error, ms});
                continue;
            }
            for (const auto& c : cs)
                results[k].push_back(
                    {c.name, c.claim, c.pass ? "pass" : "fail", c.detail, ms});
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<ManifestEntry> out;
    for (auto& r : results)
        for (auto& e : r) out.push_back(std::move(e));
    return out;
}

}  // namespace spinconf::cli
