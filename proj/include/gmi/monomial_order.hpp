#pragma once

#include "gmi/monomial.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gmi {

/// A monomial order on a ring with a fixed number of variables.
///
/// Variable 0 is the largest variable. Block orders compare block 0 first
/// (grevlex restricted to the block), then block 1, and so on; an elimination
/// order is the two-block case with the eliminated variables in block 0.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, block };

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);
    /// Two blocks: `eliminate` first, everything else second.
    static MonomialOrder elimination(std::size_t nvars, std::span<const std::size_t> eliminate);
    /// `block_of[i]` is the block index of variable i; blocks are compared in increasing index.
    static MonomialOrder blocks(std::vector<std::uint8_t> block_of);

    Kind kind() const noexcept { return kind_; }
    std::size_t num_vars() const noexcept { return nvars_; }
    std::size_t num_blocks() const noexcept { return block_vars_.size(); }
    /// Variables of block b, increasing index.
    const std::vector<std::size_t>& block(std::size_t b) const { return block_vars_.at(b); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        switch (kind_) {
        case Kind::lex:
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (a[i] != b[i]) return a[i] <=> b[i];
            }
            return std::strong_ordering::equal;
        case Kind::grevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (std::size_t i = nvars_; i-- > 0;) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        case Kind::block:
            return compare_blocks(a, b);
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    std::string describe() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
        return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.block_vars_ == b.block_vars_;
    }

private:
    MonomialOrder(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

    std::strong_ordering compare_blocks(const Monomial& a, const Monomial& b) const noexcept {
        for (const auto& vars : block_vars_) {
            unsigned da = 0;
            unsigned db = 0;
            for (std::size_t v : vars) {
                da += a[v];
                db += b[v];
            }
            if (da != db) return da <=> db;
            for (std::size_t k = vars.size(); k-- > 0;) {
                std::size_t v = vars[k];
                if (a[v] != b[v]) return b[v] <=> a[v];
            }
        }
        return std::strong_ordering::equal;
    }

    Kind kind_;
    std::size_t nvars_;
    std::vector<std::vector<std::size_t>> block_vars_;
};

}  // namespace gmi
