#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "essence/ast.hpp"
#include "essence/error.hpp"

namespace essence {

// Largest magnitude an integer value may take: 2**62 - 1. Anything beyond
// raises an overflow error rather than wrapping.
constexpr std::int64_t kIntBound = (std::int64_t(1) << 62) - 1;

class Value;
struct ValueNode;

struct BoolV {
    bool value;
};
struct IntV {
    std::int64_t value;
};
struct EnumV {
    std::string type_name;
    std::int64_t index;  // 1-based position in the member list
    std::string member;  // carried for printing
};
struct UnnamedV {
    std::string type_name;
    std::int64_t index;  // 1-based
};
struct TupleV {
    std::vector<Value> items;
};
struct RecordV {
    std::vector<std::pair<std::string, Value>> fields;  // sorted by name
};
struct VariantV {
    std::string field;
    std::vector<Value> value;  // exactly one element (indirection only)
};
struct MatrixV {
    GroundDomainPtr index;      // ground, finite index domain
    std::vector<Value> entries;  // one per index value, in index order
};
struct SetV {
    std::vector<Value> elements;  // sorted, pairwise distinct
};
struct MSetV {
    std::vector<std::pair<Value, std::int64_t>> elements;  // sorted, mult > 0
};
struct FunctionV {
    std::vector<std::pair<Value, Value>> maplets;  // sorted by distinct keys
};
struct SequenceV {
    std::vector<Value> items;  // indexed from 1
};
struct RelationV {
    std::vector<Value> tuples;  // sorted distinct TupleV of equal arity
};
struct PartitionV {
    std::vector<Value> parts;  // sorted non-empty pairwise-disjoint SetV
};

struct ValueNode {
    using Data = std::variant<BoolV, IntV, EnumV, UnnamedV, TupleV, RecordV,
                              VariantV, MatrixV, SetV, MSetV, FunctionV,
                              SequenceV, RelationV, PartitionV>;
    Data data;
};

// Immutable value handle; cheap to copy. A default-constructed Value is
// "null" and marks evaluation failure on the non-throwing path.
class Value {
public:
    Value() = default;
    explicit Value(std::shared_ptr<const ValueNode> node)
        : node_(std::move(node)) {}

    explicit operator bool() const { return node_ != nullptr; }
    bool is_null() const { return node_ == nullptr; }

    const ValueNode::Data& data() const { return node_->data; }

    template <typename T>
    const T* as() const {
        if (!node_) return nullptr;
        return std::get_if<T>(&node_->data);
    }

    size_t kind_index() const { return node_->data.index(); }

private:
    std::shared_ptr<const ValueNode> node_;
};

// Factories. The collection factories canonicalise their input (sets sort and
// drop duplicates, per the literal semantics) and enforce the structural
// invariants, throwing EvalException when user input violates them
// (conflicting function maplets, mixed-arity relations, overlapping parts).
Value make_bool(bool v);
Value make_int(std::int64_t v);  // throws on |v| > kIntBound
Value make_enum(std::string type_name, std::int64_t index, std::string member);
Value make_unnamed(std::string type_name, std::int64_t index);
Value make_tuple(std::vector<Value> items);
Value make_record(std::vector<std::pair<std::string, Value>> fields);
Value make_variant(std::string field, Value v);
Value make_matrix(GroundDomainPtr index, std::vector<Value> entries);
Value make_set(std::vector<Value> elements);
Value make_mset(std::vector<Value> elements);
Value make_mset_counted(std::vector<std::pair<Value, std::int64_t>> elements);
Value make_function(std::vector<std::pair<Value, Value>> maplets);
Value make_sequence(std::vector<Value> items);
Value make_relation(std::vector<Value> tuples);
Value make_partition(std::vector<Value> parts);

// Total structural order over values: by kind first, then per kind. This is
// the canonical order used by collection storage, enumeration, and printing.
int compare(const Value& a, const Value& b);
bool structural_equal(const Value& a, const Value& b);

// Re-checks every construction invariant of the value tree.
bool validate(const Value& v);

}  // namespace essence
