#ifndef OVERNET_SEMANTIC_HPP
#define OVERNET_SEMANTIC_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "overnet/rng.hpp"

namespace overnet {

/// Semantic identity of a node's resource or of a search target: an ordered
/// triple of integers, each in [0, 4].
class ResourceDescription {
public:
    static constexpr int kElements = 3;
    static constexpr int kMaxElement = 4;

    ResourceDescription() = default;

    ResourceDescription(int e0, int e1, int e2) : elems_{e0, e1, e2} {
        for (int e : elems_) {
            if (e < 0 || e > kMaxElement)
                throw std::invalid_argument("description element " + std::to_string(e) +
                                            " outside [0, 4]");
        }
    }

    int operator[](std::size_t k) const { return elems_[k]; }
    const std::array<int, 3>& elements() const { return elems_; }

    bool operator==(const ResourceDescription&) const = default;

    std::string to_string() const {
        return std::to_string(elems_[0]) + "," + std::to_string(elems_[1]) + "," +
               std::to_string(elems_[2]);
    }

private:
    std::array<int, 3> elems_{0, 0, 0};
};

// Largest possible semantic distance: 3 elements, each differing by at most 4.
constexpr int kMaxDistance = 12;

/// Semantic distance between two descriptions, always in [0, 12].
class Distance {
public:
    explicit Distance(int value) : value_(value) {
        if (value < 0 || value > kMaxDistance)
            throw std::invalid_argument("distance " + std::to_string(value) +
                                        " outside [0, 12]");
    }

    int value() const { return value_; }

    bool operator==(const Distance&) const = default;
    auto operator<=>(const Distance&) const = default;

private:
    int value_;
};

/// Distance mapped linearly onto a 0-100% similarity scale.
class Similarity {
public:
    static Similarity from_distance(Distance d) {
        return Similarity(static_cast<double>(kMaxDistance - d.value()) / kMaxDistance *
                          100.0);
    }

    double percent() const { return percent_; }

private:
    explicit Similarity(double percent) : percent_(percent) {}
    double percent_;
};

/// Manhattan distance between two descriptions.
inline Distance distance(const ResourceDescription& a, const ResourceDescription& b) {
    int sum = 0;
    for (std::size_t k = 0; k < ResourceDescription::kElements; ++k) {
        int diff = a[k] - b[k];
        sum += diff < 0 ? -diff : diff;
    }
    return Distance(sum);
}

inline Similarity similarity(const ResourceDescription& a, const ResourceDescription& b) {
    return Similarity::from_distance(distance(a, b));
}

/// True when the node's description satisfies the request within the
/// allowable matching error. The threshold spans 0 (exact match only) to 12
/// (any description matches).
inline bool matches(const ResourceDescription& request_desc,
                    const ResourceDescription& node_desc, double allowable_error) {
    if (!(allowable_error >= 0.0 && allowable_error <= kMaxDistance))
        throw std::invalid_argument("allowable_error outside [0, 12]");
    return distance(request_desc, node_desc).value() <= allowable_error;
}

/// Draws each element independently and uniformly from {0,1,2,3,4}.
inline ResourceDescription random_description(Rng& rng) {
    std::uniform_int_distribution<int> element(0, ResourceDescription::kMaxElement);
    int e0 = element(rng);
    int e1 = element(rng);
    int e2 = element(rng);
    return ResourceDescription(e0, e1, e2);
}

}  // namespace overnet

#endif
