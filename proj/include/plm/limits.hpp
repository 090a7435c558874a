#pragma once

#include <cstddef>

namespace plm {

struct Limits {
    std::size_t max_total = 10;     // longest word whose evaluation class may be enumerated
    std::size_t max_class = 200000; // largest congruence class or component explored
};

// Process-wide defaults. PLM_MAX_TOTAL and PLM_MAX_CLASS override them at first use.
Limits limits();
void set_limits(Limits l);

void check_total(std::size_t total);
void check_class_size(std::size_t size);

}  // namespace plm
