#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "essence/ast.hpp"
#include "essence/generator.hpp"
#include "essence/value.hpp"

namespace essence {

class Environment;

// ---------------------------------------------------------------------------
// Ground domains: every contained expression evaluated to a value.

// Ground attribute values. `total` doubles as the function-totality flag and
// the binary-relation totality flag, disambiguated by domain kind.
struct GroundAttrs {
    std::optional<std::int64_t> size, min_size, max_size;
    std::optional<std::int64_t> min_occur, max_occur;
    std::optional<std::int64_t> num_parts, min_num_parts, max_num_parts;
    std::optional<std::int64_t> part_size, min_part_size, max_part_size;
    bool injective = false, surjective = false, bijective = false;
    bool total = false;
    bool regular = false;
    bool reflexive = false, irreflexive = false, coreflexive = false;
    bool symmetric = false, anti_symmetric = false, a_symmetric = false;
    bool transitive = false, connex = false, euclidean = false, serial = false;
    bool equivalence = false, partial_order = false;

    bool operator==(const GroundAttrs&) const = default;
};

struct GIntRange {
    std::optional<std::int64_t> lo;  // absent = open below
    std::optional<std::int64_t> hi;  // absent = open above
    bool operator==(const GIntRange&) const = default;
};

struct GBool {};
struct GInt {
    // Canonical: sorted, merged, non-overlapping. Empty list = unbounded.
    std::vector<GIntRange> ranges;
    bool unbounded = false;
};
struct GEnum {
    EnumDefPtr def;
    std::vector<std::pair<std::int64_t, std::int64_t>> index_ranges;  // 1-based
};
struct GUnnamed {
    UnnamedDefPtr def;
};
struct GTuple {
    std::vector<GroundDomainPtr> components;
};
struct GRecord {
    std::vector<std::pair<std::string, GroundDomainPtr>> fields;  // name-sorted
};
struct GVariant {
    std::vector<std::pair<std::string, GroundDomainPtr>> fields;  // name-sorted
};
struct GMatrix {
    std::vector<GroundDomainPtr> indices;
    GroundDomainPtr element;
};
struct GSet {
    GroundAttrs attrs;
    GroundDomainPtr element;
};
struct GMSet {
    GroundAttrs attrs;
    GroundDomainPtr element;
};
struct GFunction {
    GroundAttrs attrs;
    GroundDomainPtr from;
    GroundDomainPtr to;
};
struct GSequence {
    GroundAttrs attrs;
    GroundDomainPtr element;
};
struct GRelation {
    GroundAttrs attrs;
    std::vector<GroundDomainPtr> components;
};
struct GPartition {
    GroundAttrs attrs;
    GroundDomainPtr element;
};

struct GroundDomain {
    using Node = std::variant<GBool, GInt, GEnum, GUnnamed, GTuple, GRecord,
                              GVariant, GMatrix, GSet, GMSet, GFunction,
                              GSequence, GRelation, GPartition>;
    Node node;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

template <typename T, typename... Args>
GroundDomainPtr make_ground(Args&&... args) {
    auto d = std::make_shared<GroundDomain>();
    d->node = T{std::forward<Args>(args)...};
    return d;
}

int compare(const GroundDomain& a, const GroundDomain& b);
bool equal(const GroundDomainPtr& a, const GroundDomainPtr& b);

// ---------------------------------------------------------------------------
// Operations

// Evaluates d's range bounds, attribute values, and aliases against env.
// Aliases resolve transitively; a cycle is an error (EvalException).
GroundDomainPtr ground(const Domain& d, const Environment& env);

bool is_finite(const GroundDomain& d);

// Number of values of a finite domain, capped at `cap` (returns cap when the
// true count is >= cap). Used for search-space estimates.
std::uint64_t count_values(const GroundDomain& d, std::uint64_t cap);

// Yields every value of the finite domain d exactly once, strictly increasing
// in the canonical value order. Values satisfy all domain attributes.
Generator<Value> enumerate(GroundDomainPtr d);

// Materialised enumeration; guards against absurdly large domains.
std::vector<Value> all_values(const GroundDomainPtr& d);

// True iff v inhabits d, including all attribute constraints.
bool member(const Value& v, const GroundDomain& d);

// Checks only d's own attribute constraints against v (cardinality bounds,
// function properties, partition shape, binary-relation flags). Assumes the
// kinds match. Binary-relation flags require arity 2 over identical component
// domains; violating that is an error.
bool attribute_check(const Value& v, const GroundDomain& d);

}  // namespace essence
