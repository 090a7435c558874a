#include "plm/limits.hpp"

#include "plm/words.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace plm {

namespace {

std::size_t env_or(char const* name, std::size_t fallback) {
    char const* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        auto n = std::stoull(v);
        return n == 0 ? fallback : static_cast<std::size_t>(n);
    } catch (std::exception const&) {
        return fallback;
    }
}

struct Store {
    std::atomic<std::size_t> max_total;
    std::atomic<std::size_t> max_class;
    Store() {
        Limits d;
        max_total = env_or("PLM_MAX_TOTAL", d.max_total);
        max_class = env_or("PLM_MAX_CLASS", d.max_class);
    }
};

Store& store() {
    static Store s;
    return s;
}

}  // namespace

Limits limits() {
    auto& s = store();
    return Limits{s.max_total.load(), s.max_class.load()};
}

void set_limits(Limits l) {
    auto& s = store();
    s.max_total = l.max_total;
    s.max_class = l.max_class;
}

void check_total(std::size_t total) {
    auto lim = limits().max_total;
    if (total > lim) {
        throw LimitExceeded("word length " + std::to_string(total) + " exceeds limit " + std::to_string(lim));
    }
}

void check_class_size(std::size_t size) {
    auto lim = limits().max_class;
    if (size > lim) {
        throw LimitExceeded("class size " + std::to_string(size) + " exceeds limit " + std::to_string(lim));
    }
}

}  // namespace plm
