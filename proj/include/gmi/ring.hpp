#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gmi {

/// Variable naming for a polynomial ring over Q. Variable 0 is the largest
/// variable in every order the library uses.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

/// Two descriptors denote the same ring when they are the same object or
/// carry identical variable lists.
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

/// Throws RingMismatch unless `same_ring(a, b)`.
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

}  // namespace gmi
