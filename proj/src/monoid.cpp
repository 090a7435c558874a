#include "plm/monoid.hpp"

#include "plm/baxter.hpp"
#include "plm/hypoplactic.hpp"
#include "plm/limits.hpp"
#include "plm/plactic.hpp"
#include "plm/rewrite.hpp"
#include "plm/stalactic.hpp"
#include "plm/sylvester.hpp"
#include "plm/taiga.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace plm {

struct MonoidHandle::Cache {
    std::mutex mutex;
    std::map<Evaluation, std::shared_ptr<Partition const>> partitions;
};

MonoidHandle::MonoidHandle(std::string name, KeyFn key, DrawFn draw, ClassFn cls)
    : name_(std::move(name)),
      key_(std::move(key)),
      draw_(std::move(draw)),
      class_(std::move(cls)),
      cache_(std::make_shared<Cache>()) {}

std::string MonoidHandle::draw(Word const& w) const { return draw_ ? draw_(w) : key_(w) + "\n"; }

Evaluation trim(Evaluation const& e) {
    auto c = e.counts();
    while (!c.empty() && c.back() == 0) c.pop_back();
    return Evaluation(std::move(c));
}

namespace {

void check_evaluation(Evaluation const& e) {
    try {
        check_total(e.total());
    } catch (LimitExceeded const& ex) {
        throw LimitExceeded(std::string(ex.what()) + " (evaluation " + to_string(e) + ")");
    }
}

}  // namespace

std::shared_ptr<Partition const> MonoidHandle::partition(Evaluation const& e) const {
    auto ev = trim(e);
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->partitions.find(ev); it != cache_->partitions.end()) return it->second;
    }
    check_evaluation(ev);
    auto p = std::make_shared<Partition>();
    for (auto const& w : EvaluationWords(ev)) (*p)[key_(w)].push_back(w);
    std::lock_guard lock(cache_->mutex);
    return cache_->partitions.emplace(ev, std::move(p)).first->second;
}

std::vector<Word> MonoidHandle::class_of(Word const& w) const {
    check_evaluation(evaluation(w));
    std::vector<Word> out;
    if (class_) {
        out = class_(w);
        std::sort(out.begin(), out.end());
    } else {
        out = partition(evaluation(w))->at(key_(w));
    }
    try {
        check_class_size(out.size());
    } catch (LimitExceeded const& ex) {
        throw LimitExceeded(std::string(ex.what()) + " (evaluation " + to_string(evaluation(w)) + ")");
    }
    return out;
}

std::vector<std::pair<std::string, Word>> MonoidHandle::neighbors(Word const& w) const {
    std::map<std::string, Word> found;
    for (auto const& x : class_of(w)) {
        for (std::size_t k = 0; k < std::max<std::size_t>(x.size(), 1); ++k) {
            auto r = rotate(x, k);
            auto [it, fresh] = found.try_emplace(key_(r), r);
            if (!fresh && r < it->second) it->second = r;
        }
    }
    return {found.begin(), found.end()};
}

namespace {

std::map<std::string, MonoidHandle, std::less<>> build_registry() {
    std::map<std::string, MonoidHandle, std::less<>> m;
    m.emplace("plac", MonoidHandle(
                          "plac", [](Word const& w) { return p_plac(w).key(); },
                          [](Word const& w) { return p_plac(w).draw(); }));
    m.emplace("hypo", MonoidHandle(
                          "hypo", [](Word const& w) { return p_hypo(w).key(); },
                          [](Word const& w) { return p_hypo(w).draw(); }));
    m.emplace("sylv", MonoidHandle(
                          "sylv", [](Word const& w) { return p_sylv(w).key(); },
                          [](Word const& w) { return p_sylv(w).draw(); },
                          [](Word const& w) { return readings(p_sylv(w).tree()); }));
    m.emplace("stal", MonoidHandle(
                          "stal", [](Word const& w) { return p_stal(w).key(); },
                          [](Word const& w) { return p_stal(w).draw(); }));
    m.emplace("taig", MonoidHandle(
                          "taig", [](Word const& w) { return p_taig(w).key(); },
                          [](Word const& w) { return p_taig(w).draw(); }));
    m.emplace("baxt", MonoidHandle(
                          "baxt", [](Word const& w) { return p_baxt(w).key(); },
                          [](Word const& w) { return p_baxt(w).draw(); },
                          [](Word const& w) { return baxt_readings(p_baxt(w)); }));
    return m;
}

MonoidHandle make_oracle(std::string const& key) {
    auto const& pres = presentation(key);
    return MonoidHandle(
        key, [&pres](Word const& w) { return to_string(pres.close(w)->canonical()); },
        [&pres](Word const& w) {
            std::string s;
            for (auto const& m : pres.close(w)->members) s += to_string(m) + "\n";
            return s;
        },
        [&pres](Word const& w) { return pres.close(w)->members; });
}

}  // namespace

MonoidHandle const& monoid(std::string_view key) {
    static auto const registry = [] {
        auto r = build_registry();
        r.emplace("counterexample", make_oracle("counterexample"));
        return r;
    }();
    auto it = registry.find(key);
    if (it == registry.end()) throw std::invalid_argument("unknown monoid '" + std::string(key) + "'");
    return it->second;
}

std::vector<std::string> monoid_keys() { return {"plac", "hypo", "sylv", "stal", "taig", "baxt", "counterexample"}; }

MonoidHandle const& oracle_monoid(std::string_view key) {
    static auto const registry = [] {
        std::map<std::string, MonoidHandle, std::less<>> r;
        for (auto const& k : presentation_keys()) r.emplace(k, make_oracle(k));
        return r;
    }();
    auto it = registry.find(key);
    if (it == registry.end()) throw std::invalid_argument("unknown presentation '" + std::string(key) + "'");
    return it->second;
}

}  // namespace plm
