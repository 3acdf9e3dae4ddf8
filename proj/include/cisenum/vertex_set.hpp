#ifndef CISENUM_VERTEX_SET_HPP
#define CISENUM_VERTEX_SET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cisenum {

using VertexId = std::int32_t;

/// Canonical set of vertex ids: strictly ascending, duplicate-free.
/// This is the solution unit X/S handed around by the enumerators.
class VertexSet {
public:
    VertexSet() = default;

    /// Adopts a strictly ascending member list.
    /// Throws std::invalid_argument if the list is unsorted or has duplicates.
    explicit VertexSet(std::vector<VertexId> members);

    /// Sorts and deduplicates, then adopts.
    static VertexSet from_unsorted(std::vector<VertexId> members);

    const std::vector<VertexId>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(VertexId v) const noexcept;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    VertexId operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
    VertexId front() const { return members_.front(); }

    /// Copy without `removed`. The vertex must be present.
    VertexSet without(VertexId removed) const;
    /// Copy with `added` inserted. The vertex must be absent.
    VertexSet with(VertexId added) const;
    /// Intersection, in one merge pass.
    VertexSet intersect(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet&, const VertexSet&) = default;

    /// "{0,1,2}" — for diagnostics and test failure messages.
    std::string to_string() const;

private:
    std::vector<VertexId> members_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace cisenum

#endif  // CISENUM_VERTEX_SET_HPP
