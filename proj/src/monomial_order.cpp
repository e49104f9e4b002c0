#include "gmi/monomial_order.hpp"

#include "gmi/errors.hpp"

#include <algorithm>

namespace gmi {

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return MonomialOrder(Kind::lex, nvars); }

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return MonomialOrder(Kind::grevlex, nvars); }

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::span<const std::size_t> eliminate) {
    std::vector<std::uint8_t> block_of(nvars, 1);
    for (std::size_t v : eliminate) {
        if (v >= nvars) throw InvalidArgument("elimination variable index out of range");
        block_of[v] = 0;
    }
    return blocks(std::move(block_of));
}

MonomialOrder MonomialOrder::blocks(std::vector<std::uint8_t> block_of) {
    MonomialOrder order(Kind::block, block_of.size());
    std::size_t nblocks = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1u;
    std::vector<std::vector<std::size_t>> vars(nblocks);
    for (std::size_t i = 0; i < block_of.size(); ++i) vars[block_of[i]].push_back(i);
    // Empty blocks carry no information; dropping them keeps equal orders equal.
    for (auto& v : vars) {
        if (!v.empty()) order.block_vars_.push_back(std::move(v));
    }
    if (order.block_vars_.size() <= 1) return grevlex(block_of.size());
    return order;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
    case Kind::lex:
        return "lex";
    case Kind::grevlex:
        return "grevlex";
    case Kind::block: {
        std::string s = "block(";
        for (std::size_t b = 0; b < block_vars_.size(); ++b) {
            if (b) s += "|";
            s += std::to_string(block_vars_[b].size());
        }
        return s + ")";
    }
    }
    return "?";
}

}  // namespace gmi
