#include "petersson/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

namespace petersson::cache {

namespace {

struct State {
    std::mutex mutex;
    bool enabled = false;
    bool dirty = false;
    std::string path;
    std::map<unsigned, std::string> bernoulli;
    std::map<std::string, std::string> cohen;
};

State& state() {
    static State s;
    return s;
}

std::string cohen_key(unsigned r, std::uint64_t N) { return std::to_string(r) + "," + std::to_string(N); }

}  // namespace

void configure(const std::string& p) {
    State& s = state();
    std::lock_guard lk(s.mutex);
    s.enabled = true;
    s.dirty = false;
    s.path = p;
    s.bernoulli.clear();
    s.cohen.clear();
    std::ifstream in(p);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return;  // unreadable cache is treated as empty
    }
    if (!j.is_object() || j.value("version", 0) != 1) return;
    if (j.contains("bernoulli"))
        for (auto& [k, v] : j["bernoulli"].items()) s.bernoulli[(unsigned)std::stoul(k)] = v.get<std::string>();
    if (j.contains("cohenH"))
        for (auto& [k, v] : j["cohenH"].items()) s.cohen[k] = v.get<std::string>();
}

bool enabled() {
    State& s = state();
    std::lock_guard lk(s.mutex);
    return s.enabled;
}

const std::string& path() { return state().path; }

void reset() {
    State& s = state();
    std::lock_guard lk(s.mutex);
    s.enabled = false;
    s.dirty = false;
    s.path.clear();
    s.bernoulli.clear();
    s.cohen.clear();
}

void save() {
    State& s = state();
    std::lock_guard lk(s.mutex);
    if (!s.enabled || !s.dirty) return;
    nlohmann::json j;
    j["version"] = 1;
    nlohmann::json b = nlohmann::json::object(), c = nlohmann::json::object();
    for (auto& [k, v] : s.bernoulli) b[std::to_string(k)] = v;
    for (auto& [k, v] : s.cohen) c[k] = v;
    j["bernoulli"] = b;
    j["cohenH"] = c;
    std::string tmp = s.path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, s.path);
    s.dirty = false;
}

std::optional<Rat> lookup_bernoulli(unsigned n) {
    State& s = state();
    std::lock_guard lk(s.mutex);
    if (!s.enabled) return std::nullopt;
    auto it = s.bernoulli.find(n);
    if (it == s.bernoulli.end()) return std::nullopt;
    return Rat(it->second);
}

void store_bernoulli(unsigned n, const Rat& v) {
    State& s = state();
    std::lock_guard lk(s.mutex);
    if (!s.enabled) return;
    auto [it, inserted] = s.bernoulli.emplace(n, v.str());
    (void)it;
    if (inserted) s.dirty = true;
}

std::optional<Rat> lookup_cohen(unsigned r, std::uint64_t N) {
    State& s = state();
    std::lock_guard lk(s.mutex);
    if (!s.enabled) return std::nullopt;
    auto it = s.cohen.find(cohen_key(r, N));
    if (it == s.cohen.end()) return std::nullopt;
    return Rat(it->second);
}

void store_cohen(unsigned r, std::uint64_t N, const Rat& v) {
    State& s = state();
    std::lock_guard lk(s.mutex);
    if (!s.enabled) return;
    auto [it, inserted] = s.cohen.emplace(cohen_key(r, N), v.str());
    (void)it;
    if (inserted) s.dirty = true;
}

}  // namespace petersson::cache
