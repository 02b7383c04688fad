#pragma once

// Integer compositions under pairwise constraints: domain types, membership
// predicates, and deterministic constructive enumeration.
//
// A composition of n is an ordered sequence of positive parts summing to n.
// The families handled here constrain the non-overlapping pairs
// (c1,c2), (c3,c4), ... ; a trailing unpaired part is never constrained.
// Two families (pell-ge, q-le) use a marked alphabet where a unit part may
// carry a prime mark (1'), contributing one to the sum like a plain 1.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carndt/bigint.hpp"

namespace carndt {

// One part. A mark is only legal on value 1 (the part 1').
struct Part {
    int value = 0;
    bool marked = false;

    friend bool operator==(const Part&, const Part&) = default;
};

// Canonical part order: larger values first, unmarked before marked.
bool part_before(Part a, Part b);

// "2", "1'", "14"
std::string part_token(Part p);

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Part> parts);
    Composition(std::initializer_list<int> values);
    static Composition from_values(const std::vector<int>& values);

    // Accepts "2112", "1'2", "2,1,1,2", "(1',2)". "()" is the empty
    // composition. Digit shorthand requires single-digit parts.
    static Composition parse(std::string_view text);

    const std::vector<Part>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    bool has_marks() const;

    // "2112" while all parts are single digits, "10,1" otherwise, "()" when empty.
    std::string shorthand() const;
    // "(2,1,1,2)"
    std::string list_form() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<Part> parts_;
};

// Strict total order used for all enumeration output.
bool canonical_before(const Composition& a, const Composition& b);

enum class FamilyKind {
    All,             // every composition
    CA,              // paired parts unequal
    CAGeK,           // |difference| of paired parts >= k (k = 0 degenerates to All)
    CALeK,           // |difference| of paired parts <= k
    NoAdjacentOnes,  // no two adjacent parts 1 (all adjacent positions)
    PellGeK,         // {1,1',2} alphabet, run conditions, internal one-runs >= k
    QLeK,            // {1,1',2,4,6,...} alphabet, internal one-runs <= k
    ArndtStrict,     // first element of each pair strictly larger
};

class Family {
public:
    static Family all() { return {FamilyKind::All, 0}; }
    static Family ca() { return {FamilyKind::CA, 0}; }
    static Family ca_ge(int k);
    static Family ca_le(int k);
    static Family no_adjacent_ones() { return {FamilyKind::NoAdjacentOnes, 0}; }
    static Family pell_ge(int k);
    static Family q_le(int k);
    static Family arndt_strict() { return {FamilyKind::ArndtStrict, 0}; }

    // Validates the k rules: required and >= 1 for ca-le/pell-ge/q-le,
    // >= 0 for ca-ge, absent otherwise.
    static Family make(FamilyKind kind, std::optional<int> k);

    FamilyKind kind() const { return kind_; }
    int k() const { return k_; }
    bool parameterized() const;
    bool marked_alphabet() const;  // may contain 1'

    std::string token() const;    // "ca-ge"
    std::string display() const;  // "ca-ge(k=3)"

    friend bool operator==(const Family&, const Family&) = default;

private:
    Family(FamilyKind kind, int k) : kind_(kind), k_(k) {}
    FamilyKind kind_;
    int k_;
};

std::optional<FamilyKind> family_kind_from_token(std::string_view token);
bool family_kind_requires_k(FamilyKind kind);

// Pair predicate of the pairwise families. Not meaningful for the
// run-structured kinds (no-11, pell-ge, q-le).
bool pair_allowed(FamilyKind kind, int k, int a, int b);

// True iff the composition satisfies every defining condition of the family.
// Marked parts passed to a family over the plain alphabet are an error, not
// a false.
bool is_member(const Family& f, std::span<const Part> parts);
bool is_member(const Family& f, const Composition& c);

// All members of the family with the given weight, in canonical order.
// enumerate_family(f, 0) is {empty composition} for every family; negative
// weights yield the empty list.
std::vector<Composition> enumerate_family(const Family& f, int n);

// Number of members, computed by the constructive generator without
// materializing the list.
BigInt count_family(const Family& f, int n);

}  // namespace carndt
