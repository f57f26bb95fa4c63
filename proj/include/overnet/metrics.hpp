#ifndef OVERNET_METRICS_HPP
#define OVERNET_METRICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "overnet/search.hpp"

namespace overnet {

/// One aggregation cell: a search mode at one allowable-error level.
struct CellKey {
    SearchMode mode;
    double allowable_error;

    bool operator<(const CellKey& o) const {
        return std::tie(mode, allowable_error) < std::tie(o.mode, o.allowable_error);
    }
    bool operator==(const CellKey& o) const {
        return mode == o.mode && allowable_error == o.allowable_error;
    }
};

struct CellStats {
    std::uint64_t total = 0;
    std::uint64_t successes = 0;
    std::uint64_t sum_achieved_distance = 0;
    std::uint64_t sum_success_hops = 0;
    std::uint64_t swaps = 0;
};

/// Finalized view of one cell. Ratios of an empty success set are not
/// fabricated; `defined` gates mean_average_error and avg_success_hops.
struct MetricsRow {
    SearchMode mode;
    double allowable_error;
    bool defined;
    double mean_average_error;
    double avg_success_hops;
    double failure_ratio;
    std::uint64_t swaps;
    std::uint64_t successes;
    std::uint64_t total;
};

class MetricsReport {
public:
    void record_outcome(const CellKey& key, const SearchOutcome& outcome,
                        std::uint64_t swaps = 0);

    /// Associative fold over cells; replication reports merge in any order.
    void merge(const MetricsReport& other);

    bool empty() const { return cells_.empty(); }
    const std::map<CellKey, CellStats>& cells() const { return cells_; }

    /// One row per populated cell, sorted by (mode, allowable_error).
    /// Throws when nothing has been recorded.
    std::vector<MetricsRow> finalize() const;

private:
    std::map<CellKey, CellStats> cells_;
};

}  // namespace overnet

#endif
