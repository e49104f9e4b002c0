#include "gmi/ring.hpp"

#include "gmi/errors.hpp"

namespace gmi {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) {
            throw InvalidArgument("duplicate ring variable name: " + names_[i]);
        }
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
    if (!same_ring(a, b)) throw RingMismatch(std::string(what) + ": operands belong to different rings");
}

}  // namespace gmi
