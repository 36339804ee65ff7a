#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "nicety/errors.hpp"

namespace nicety {

/// Counts abstract work units (one unit is roughly one coefficient merge)
/// against a limit.  Shared by all operations of one logical step.
class WorkMeter {
public:
    explicit WorkMeter(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t n) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetError(BudgetError::Kind::work,
                              "work budget exceeded (" + std::to_string(limit_) + " units)");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Resource limits threaded through the heavy polynomial operations.
///
/// `term_limit` bounds the stored term count of any produced polynomial,
/// including intermediate accumulators.  `degree_cap`, when set, makes the
/// operation compute the result modulo terms of total degree above the cap;
/// the caller owns the soundness argument for discarding them.
struct Limits {
    std::size_t term_limit = 10'000'000;
    std::optional<std::uint32_t> degree_cap{};
    WorkMeter* meter = nullptr;

    void charge(std::uint64_t n) const {
        if (meter) meter->charge(n);
    }

    bool keeps(std::uint32_t degree) const { return !degree_cap || degree <= *degree_cap; }

    void check_terms(std::size_t count) const {
        if (count > term_limit)
            throw BudgetError(BudgetError::Kind::terms,
                              "term budget exceeded (" + std::to_string(term_limit) + " monomials)");
    }

    Limits with_meter(WorkMeter* m) const {
        Limits copy = *this;
        copy.meter = m;
        return copy;
    }

    Limits with_cap(std::uint32_t cap) const {
        Limits copy = *this;
        copy.degree_cap = cap;
        return copy;
    }
};

} // namespace nicety
