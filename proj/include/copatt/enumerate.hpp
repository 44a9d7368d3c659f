#pragma once

#include <iterator>
#include <optional>

#include "copatt/bigint.hpp"
#include "copatt/composition.hpp"
#include "copatt/config.hpp"

namespace copatt {

namespace detail {

// Shared iterator shell: Gen must provide
//   std::optional<Composition> first() const;
//   std::optional<Composition> next(const Composition&) const;
template <typename Gen>
class ComposIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;

    ComposIterator() = default;
    ComposIterator(const Gen* gen, std::optional<Composition> cur)
        : gen_(gen), cur_(std::move(cur)) {}

    const Composition& operator*() const { return *cur_; }
    const Composition* operator->() const { return &*cur_; }

    ComposIterator& operator++() {
        cur_ = gen_->next(*cur_);
        return *this;
    }
    void operator++(int) { ++*this; }

    bool operator==(const ComposIterator& o) const {
        return cur_.has_value() == o.cur_.has_value() && (!cur_ || *cur_ == *o.cur_);
    }

private:
    const Gen* gen_ = nullptr;
    std::optional<Composition> cur_;
};

}  // namespace detail

/// All compositions of n in lexicographic order of the part sequences,
/// (1,1,...,1) first and (n) last; 2^(n-1) items for n >= 1, one for n = 0.
class CompositionRange {
public:
    explicit CompositionRange(int n);

    using iterator = detail::ComposIterator<CompositionRange>;
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, std::nullopt}; }

    std::optional<Composition> first() const;
    std::optional<Composition> next(const Composition& c) const;

    int n() const { return n_; }

private:
    int n_;
};

/// Compositions of n with exactly `parts` parts, lexicographic.
class FixedPartsRange {
public:
    FixedPartsRange(int n, int parts);

    using iterator = detail::ComposIterator<FixedPartsRange>;
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, std::nullopt}; }

    std::optional<Composition> first() const;
    std::optional<Composition> next(const Composition& c) const;

private:
    int n_, parts_;
};

/// Palindromic compositions of n: the is_palindrome filter of
/// CompositionRange(n), item for item. 2^floor(n/2) items for n >= 1.
class PalindromeRange {
public:
    explicit PalindromeRange(int n);

    using iterator = detail::ComposIterator<PalindromeRange>;
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, std::nullopt}; }

    std::optional<Composition> first() const;
    std::optional<Composition> next(const Composition& c) const;

private:
    int n_;
};

BigInt count_compositions(int n);           // 2^(n-1) for n >= 1, 1 for n = 0
BigInt count_palindromes(int n);            // 2^floor(n/2) for n >= 1, 1 for n = 0

}  // namespace copatt
