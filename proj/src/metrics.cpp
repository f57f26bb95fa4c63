#include "overnet/metrics.hpp"

#include <stdexcept>

namespace overnet {

void MetricsReport::record_outcome(const CellKey& key, const SearchOutcome& outcome,
                                   std::uint64_t swaps) {
    CellStats& cell = cells_[key];
    ++cell.total;
    cell.swaps += swaps;
    if (outcome.success) {
        ++cell.successes;
        cell.sum_achieved_distance += static_cast<std::uint64_t>(*outcome.achieved_distance);
        cell.sum_success_hops += outcome.hops;
    }
}

void MetricsReport::merge(const MetricsReport& other) {
    for (const auto& [key, stats] : other.cells_) {
        CellStats& cell = cells_[key];
        cell.total += stats.total;
        cell.successes += stats.successes;
        cell.sum_achieved_distance += stats.sum_achieved_distance;
        cell.sum_success_hops += stats.sum_success_hops;
        cell.swaps += stats.swaps;
    }
}

std::vector<MetricsRow> MetricsReport::finalize() const {
    if (cells_.empty()) throw std::runtime_error("no outcomes recorded");
    std::vector<MetricsRow> rows;
    rows.reserve(cells_.size());
    for (const auto& [key, s] : cells_) {
        MetricsRow row;
        row.mode = key.mode;
        row.allowable_error = key.allowable_error;
        row.defined = s.successes > 0;
        row.mean_average_error =
            row.defined ? static_cast<double>(s.sum_achieved_distance) /
                              static_cast<double>(s.successes)
                        : 0.0;
        row.avg_success_hops = row.defined ? static_cast<double>(s.sum_success_hops) /
                                                 static_cast<double>(s.successes)
                                           : 0.0;
        row.failure_ratio =
            static_cast<double>(s.total - s.successes) / static_cast<double>(s.total);
        row.swaps = s.swaps;
        row.successes = s.successes;
        row.total = s.total;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace overnet
