#include "eip/report.hpp"

#include <algorithm>

namespace eip {

std::optional<SizeCheck> OptimalityReport::first_failure() const {
    for (const auto& row : sizes)
        if (!row.pass) return row;
    return std::nullopt;
}

int OptimalityReport::passing_sizes() const {
    return static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](const SizeCheck& r) { return r.pass; }));
}

void OptimalityReport::finalize() {
    pass = std::all_of(sizes.begin(), sizes.end(), [](const SizeCheck& r) { return r.pass; });
}

}  // namespace eip
