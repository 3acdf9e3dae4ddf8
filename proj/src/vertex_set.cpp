#include "cisenum/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cisenum {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
    for (std::size_t i = 1; i < members_.size(); ++i) {
        if (members_[i - 1] >= members_[i]) {
            throw std::invalid_argument("VertexSet members must be strictly ascending");
        }
    }
}

VertexSet VertexSet::from_unsorted(std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

bool VertexSet::contains(VertexId v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::without(VertexId removed) const {
    VertexSet out;
    out.members_.reserve(members_.size() - 1);
    for (VertexId v : members_) {
        if (v != removed) out.members_.push_back(v);
    }
    if (out.members_.size() != members_.size() - 1) {
        throw std::invalid_argument("VertexSet::without: vertex not present");
    }
    return out;
}

VertexSet VertexSet::with(VertexId added) const {
    VertexSet out;
    out.members_.reserve(members_.size() + 1);
    bool placed = false;
    for (VertexId v : members_) {
        if (v == added) throw std::invalid_argument("VertexSet::with: vertex already present");
        if (!placed && v > added) {
            out.members_.push_back(added);
            placed = true;
        }
        out.members_.push_back(v);
    }
    if (!placed) out.members_.push_back(added);
    return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(members_.begin(), members_.end(),
                          other.members_.begin(), other.members_.end(),
                          std::back_inserter(out.members_));
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(members_[i]);
    }
    s += '}';
    return s;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    // FNV-1a over the member words
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (VertexId v : s.members()) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace cisenum
