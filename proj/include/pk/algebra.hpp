#pragma once

/**
 * @file algebra.hpp
 * @brief The random-quantity algebra Q^n with pointwise operations.
 *
 * A RandomQuantity is a length-n exact vector; sum, scalar multiple and
 * product are pointwise and the all-ones vector is the multiplicative
 * identity. Events are the idempotent elements, i.e. the 0/1 vectors; they
 * are stored as index subsets so Boolean operations are cheap.
 */

#include "pk/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pk {

class Event;

class RandomQuantity {
public:
    /// Zero quantity of dimension n. Throws InputError for n == 0.
    explicit RandomQuantity(std::size_t n);
    explicit RandomQuantity(std::vector<Rational> components);
    RandomQuantity(std::initializer_list<Rational> components);

    [[nodiscard]] std::size_t dim() const { return c_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const std::vector<Rational>& components() const { return c_; }

    [[nodiscard]] bool is_zero() const;
    /// Every component is 0 or 1.
    [[nodiscard]] bool is_event() const;
    /// Every component is >= 0.
    [[nodiscard]] bool is_nonnegative() const;

    RandomQuantity& operator+=(const RandomQuantity& o);
    RandomQuantity& operator-=(const RandomQuantity& o);
    RandomQuantity& operator*=(const RandomQuantity& o);
    RandomQuantity& operator*=(const Rational& r);

    friend RandomQuantity operator+(RandomQuantity a, const RandomQuantity& b) { return a += b; }
    friend RandomQuantity operator-(RandomQuantity a, const RandomQuantity& b) { return a -= b; }
    friend RandomQuantity operator*(RandomQuantity a, const RandomQuantity& b) { return a *= b; }
    friend RandomQuantity operator*(const Rational& r, RandomQuantity a) { return a *= r; }
    friend RandomQuantity operator*(RandomQuantity a, const Rational& r) { return a *= r; }
    RandomQuantity operator-() const;

    RandomQuantity operator*(const Event& e) const;
    RandomQuantity operator+(const Rational& r) const;

    friend bool operator==(const RandomQuantity&, const RandomQuantity&) = default;
    friend auto operator<=>(const RandomQuantity& a, const RandomQuantity& b) { return a.c_ <=> b.c_; }

    [[nodiscard]] std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RandomQuantity& x) { return os << x.str(); }

private:
    std::vector<Rational> c_;
};

/// An idempotent random quantity: a subset of the n coordinates.
class Event {
public:
    /// The zero event of dimension n. Throws InputError for n == 0.
    explicit Event(std::size_t n);
    /// From 0/1 flags; throws InputError on an empty list.
    explicit Event(std::vector<bool> members);
    Event(std::initializer_list<int> indicator);

    static Event zero(std::size_t n) { return Event(n); }
    static Event one(std::size_t n);
    /// The coordinate indicator e_i.
    static Event atom(std::size_t n, std::size_t i);
    /// Throws InputError if x is not 0/1-valued.
    static Event from_quantity(const RandomQuantity& x);

    [[nodiscard]] std::size_t dim() const { return m_.size(); }
    [[nodiscard]] bool contains(std::size_t i) const { return m_[i]; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool is_zero() const { return count() == 0; }
    [[nodiscard]] bool is_one() const { return count() == dim(); }
    [[nodiscard]] std::vector<std::size_t> indices() const;
    [[nodiscard]] const std::vector<bool>& members() const { return m_; }

    [[nodiscard]] RandomQuantity quantity() const;

    Event operator!() const;
    friend Event operator&(const Event& a, const Event& b);
    friend Event operator|(const Event& a, const Event& b);

    /// Natural order: A <= B iff A and B == A.
    [[nodiscard]] bool leq(const Event& other) const;

    friend bool operator==(const Event&, const Event&) = default;
    friend auto operator<=>(const Event& a, const Event& b) { return a.m_ <=> b.m_; }

    [[nodiscard]] std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Event& e) { return os << e.str(); }

private:
    std::vector<bool> m_;
};

/// r * 1. Throws InputError for n == 0.
RandomQuantity embed_scalar(const Rational& r, std::size_t n);

bool is_event(const RandomQuantity& x);

/// Atoms of the Boolean subalgebra generated by `events` inside E(Q^n): the
/// nonzero minterms. They are pairwise disjoint and sum to 1. The result is
/// sorted in the Event order. An empty list yields {1}.
std::vector<Event> atoms_of(std::span<const Event> events, std::size_t n);

/// Every element of the Boolean subalgebra generated by `events`, sorted.
std::vector<Event> generated_subalgebra(std::span<const Event> events, std::size_t n);

/// Every event of E(Q^n) (2^n of them), in index order of their bitmasks.
std::vector<Event> all_events(std::size_t n);

/// For positive weights p and nonzero events C, returns an atom D of the
/// algebra generated by C with D <= C[0] on which sum p_i C_i is a positive
/// multiple of D. This witnesses that the combination is nonzero.
Event positive_combination_nonzero(std::span<const Rational> p, std::span<const Event> c);

/// Disjunction of a list of events (zero for an empty list).
Event disjunction(std::span<const Event> events, std::size_t n);

} // namespace pk
