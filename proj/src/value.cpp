#include "essence/value.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "essence/domains.hpp"

namespace essence {

const char* to_string(EvalErrorKind kind) {
    switch (kind) {
        case EvalErrorKind::DivisionByZero: return "division-by-zero";
        case EvalErrorKind::UndefinedApplication: return "undefined-application";
        case EvalErrorKind::NegativeExponent: return "negative-exponent";
        case EvalErrorKind::Overflow: return "overflow";
        case EvalErrorKind::BadIndex: return "bad-index";
        case EvalErrorKind::NotAParticipant: return "not-a-participant";
        case EvalErrorKind::ArityMismatch: return "arity-mismatch";
    }
    return "unknown";
}

namespace {

template <typename T>
Value wrap(T&& payload) {
    auto node = std::make_shared<ValueNode>();
    node->data = std::forward<T>(payload);
    return Value(std::move(node));
}

[[noreturn]] void value_error(EvalErrorKind kind, const std::string& message) {
    throw EvalException(EvalError{kind, message});
}

int compare_vectors(const std::vector<Value>& a, const std::vector<Value>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

int cmp3(std::int64_t a, std::int64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

// Lexicographic comparison of the flattened (multiplicity-expanded) element
// sequences, without materialising them.
int compare_msets(const MSetV& a, const MSetV& b) {
    size_t ia = 0, ib = 0;
    std::int64_t used_a = 0, used_b = 0;
    while (true) {
        bool end_a = ia >= a.elements.size();
        bool end_b = ib >= b.elements.size();
        if (end_a || end_b) return end_a && end_b ? 0 : (end_a ? -1 : 1);
        int c = compare(a.elements[ia].first, b.elements[ib].first);
        if (c != 0) return c;
        std::int64_t left_a = a.elements[ia].second - used_a;
        std::int64_t left_b = b.elements[ib].second - used_b;
        if (left_a == left_b) {
            ++ia; ++ib;
            used_a = used_b = 0;
        } else if (left_a < left_b) {
            ++ia;
            used_a = 0;
            used_b += left_a;
        } else {
            ++ib;
            used_b = 0;
            used_a += left_b;
        }
    }
}

}  // namespace

Value make_bool(bool v) {
    // Shared nodes: the two booleans are ubiquitous.
    static const Value kFalse = wrap(BoolV{false});
    static const Value kTrue = wrap(BoolV{true});
    return v ? kTrue : kFalse;
}

Value make_int(std::int64_t v) {
    if (v > kIntBound || v < -kIntBound)
        value_error(EvalErrorKind::Overflow,
                    "integer value " + std::to_string(v) +
                        " exceeds the representable range");
    static constexpr std::int64_t kCacheLo = -64;
    static constexpr std::int64_t kCacheHi = 1024;
    static const auto cache = [] {
        std::array<Value, kCacheHi - kCacheLo + 1> values;
        for (std::int64_t i = kCacheLo; i <= kCacheHi; ++i)
            values[size_t(i - kCacheLo)] = wrap(IntV{i});
        return values;
    }();
    if (v >= kCacheLo && v <= kCacheHi) return cache[size_t(v - kCacheLo)];
    return wrap(IntV{v});
}

Value make_enum(std::string type_name, std::int64_t index, std::string member) {
    return wrap(EnumV{std::move(type_name), index, std::move(member)});
}

Value make_unnamed(std::string type_name, std::int64_t index) {
    return wrap(UnnamedV{std::move(type_name), index});
}

Value make_tuple(std::vector<Value> items) {
    return wrap(TupleV{std::move(items)});
}

Value make_record(std::vector<std::pair<std::string, Value>> fields) {
    std::sort(fields.begin(), fields.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < fields.size(); ++i)
        if (fields[i - 1].first == fields[i].first)
            value_error(EvalErrorKind::ArityMismatch,
                        "duplicate record field " + fields[i].first);
    return wrap(RecordV{std::move(fields)});
}

Value make_variant(std::string field, Value v) {
    return wrap(VariantV{std::move(field), {std::move(v)}});
}

Value make_matrix(GroundDomainPtr index, std::vector<Value> entries) {
    return wrap(MatrixV{std::move(index), std::move(entries)});
}

Value make_set(std::vector<Value> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    // Repeated values in a set literal are ignored.
    elements.erase(std::unique(elements.begin(), elements.end(),
                               [](const Value& a, const Value& b) {
                                   return compare(a, b) == 0;
                               }),
                   elements.end());
    return wrap(SetV{std::move(elements)});
}

Value make_mset(std::vector<Value> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    std::vector<std::pair<Value, std::int64_t>> counted;
    for (auto& e : elements) {
        if (!counted.empty() && compare(counted.back().first, e) == 0) {
            ++counted.back().second;
        } else {
            counted.emplace_back(std::move(e), 1);
        }
    }
    return wrap(MSetV{std::move(counted)});
}

Value make_mset_counted(
    std::vector<std::pair<Value, std::int64_t>> elements) {
    std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
        return compare(a.first, b.first) < 0;
    });
    std::vector<std::pair<Value, std::int64_t>> merged;
    for (auto& e : elements) {
        if (e.second == 0) continue;
        if (e.second < 0)
            value_error(EvalErrorKind::ArityMismatch,
                        "multiset multiplicities must be positive");
        if (!merged.empty() && compare(merged.back().first, e.first) == 0) {
            merged.back().second += e.second;
        } else {
            merged.push_back(std::move(e));
        }
    }
    return wrap(MSetV{std::move(merged)});
}

Value make_function(std::vector<std::pair<Value, Value>> maplets) {
    std::sort(maplets.begin(), maplets.end(), [](const auto& a, const auto& b) {
        return compare(a.first, b.first) < 0;
    });
    for (size_t i = 1; i < maplets.size(); ++i) {
        if (compare(maplets[i - 1].first, maplets[i].first) == 0) {
            if (compare(maplets[i - 1].second, maplets[i].second) != 0)
                value_error(EvalErrorKind::ArityMismatch,
                            "conflicting maplets for the same argument");
        }
    }
    maplets.erase(std::unique(maplets.begin(), maplets.end(),
                              [](const auto& a, const auto& b) {
                                  return compare(a.first, b.first) == 0;
                              }),
                  maplets.end());
    return wrap(FunctionV{std::move(maplets)});
}

Value make_sequence(std::vector<Value> items) {
    return wrap(SequenceV{std::move(items)});
}

Value make_relation(std::vector<Value> tuples) {
    for (const auto& t : tuples) {
        const auto* tup = t.as<TupleV>();
        if (!tup)
            value_error(EvalErrorKind::ArityMismatch,
                        "relation members must be tuples");
        if (!tuples.empty()) {
            const auto* first = tuples.front().as<TupleV>();
            if (tup->items.size() != first->items.size())
                value_error(EvalErrorKind::ArityMismatch,
                            "relation tuples must share one arity");
        }
    }
    std::sort(tuples.begin(), tuples.end(),
              [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    tuples.erase(std::unique(tuples.begin(), tuples.end(),
                             [](const Value& a, const Value& b) {
                                 return compare(a, b) == 0;
                             }),
                 tuples.end());
    return wrap(RelationV{std::move(tuples)});
}

Value make_partition(std::vector<Value> parts) {
    for (const auto& p : parts) {
        const auto* set = p.as<SetV>();
        if (!set)
            value_error(EvalErrorKind::ArityMismatch,
                        "partition parts must be sets");
        if (set->elements.empty())
            value_error(EvalErrorKind::ArityMismatch,
                        "partition parts must be non-empty");
    }
    std::sort(parts.begin(), parts.end(),
              [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    parts.erase(std::unique(parts.begin(), parts.end(),
                            [](const Value& a, const Value& b) {
                                return compare(a, b) == 0;
                            }),
                parts.end());
    // Disjointness across parts.
    std::vector<Value> seen;
    for (const auto& p : parts)
        for (const auto& e : p.as<SetV>()->elements) seen.push_back(e);
    std::sort(seen.begin(), seen.end(),
              [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    for (size_t i = 1; i < seen.size(); ++i)
        if (compare(seen[i - 1], seen[i]) == 0)
            value_error(EvalErrorKind::ArityMismatch,
                        "partition parts must be pairwise disjoint");
    return wrap(PartitionV{std::move(parts)});
}

int compare(const Value& a, const Value& b) {
    if (a.is_null() || b.is_null()) {
        if (a.is_null() && b.is_null()) return 0;
        return a.is_null() ? -1 : 1;
    }
    if (a.kind_index() != b.kind_index())
        return a.kind_index() < b.kind_index() ? -1 : 1;
    return std::visit(
        [&](const auto& lhs) -> int {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = *b.as<T>();
            if constexpr (std::is_same_v<T, BoolV>) {
                return cmp3(lhs.value ? 1 : 0, rhs.value ? 1 : 0);
            } else if constexpr (std::is_same_v<T, IntV>) {
                return cmp3(lhs.value, rhs.value);
            } else if constexpr (std::is_same_v<T, EnumV>) {
                if (int c = lhs.type_name.compare(rhs.type_name)) return c < 0 ? -1 : 1;
                return cmp3(lhs.index, rhs.index);
            } else if constexpr (std::is_same_v<T, UnnamedV>) {
                if (int c = lhs.type_name.compare(rhs.type_name)) return c < 0 ? -1 : 1;
                return cmp3(lhs.index, rhs.index);
            } else if constexpr (std::is_same_v<T, TupleV>) {
                return compare_vectors(lhs.items, rhs.items);
            } else if constexpr (std::is_same_v<T, RecordV>) {
                size_t n = std::min(lhs.fields.size(), rhs.fields.size());
                for (size_t i = 0; i < n; ++i) {
                    if (int c = lhs.fields[i].first.compare(rhs.fields[i].first))
                        return c < 0 ? -1 : 1;
                    if (int c = compare(lhs.fields[i].second, rhs.fields[i].second))
                        return c;
                }
                return cmp3(std::int64_t(lhs.fields.size()),
                            std::int64_t(rhs.fields.size()));
            } else if constexpr (std::is_same_v<T, VariantV>) {
                if (int c = lhs.field.compare(rhs.field)) return c < 0 ? -1 : 1;
                return compare(lhs.value.front(), rhs.value.front());
            } else if constexpr (std::is_same_v<T, MatrixV>) {
                if (lhs.index && rhs.index) {
                    if (int c = compare(*lhs.index, *rhs.index)) return c;
                }
                return compare_vectors(lhs.entries, rhs.entries);
            } else if constexpr (std::is_same_v<T, SetV>) {
                return compare_vectors(lhs.elements, rhs.elements);
            } else if constexpr (std::is_same_v<T, MSetV>) {
                size_t n = std::min(lhs.elements.size(), rhs.elements.size());
                for (size_t i = 0; i < n; ++i) {
                    if (int c = compare(lhs.elements[i].first, rhs.elements[i].first))
                        return c;
                    // Larger multiplicity of an equal element sorts later, which
                    // matches comparing the flattened element sequences.
                    if (lhs.elements[i].second != rhs.elements[i].second) {
                        bool last_l = i + 1 == lhs.elements.size();
                        bool last_r = i + 1 == rhs.elements.size();
                        if (lhs.elements[i].second < rhs.elements[i].second)
                            return last_l ? -1 : compare_flat_tail(lhs, rhs, i);
                        return last_r ? 1 : -compare_flat_tail(rhs, lhs, i);
                    }
                }
                return cmp3(std::int64_t(lhs.elements.size()),
                            std::int64_t(rhs.elements.size()));
            } else if constexpr (std::is_same_v<T, FunctionV>) {
                size_t n = std::min(lhs.maplets.size(), rhs.maplets.size());
                for (size_t i = 0; i < n; ++i) {
                    if (int c = compare(lhs.maplets[i].first, rhs.maplets[i].first))
                        return c;
                    if (int c = compare(lhs.maplets[i].second, rhs.maplets[i].second))
                        return c;
                }
                return cmp3(std::int64_t(lhs.maplets.size()),
                            std::int64_t(rhs.maplets.size()));
            } else if constexpr (std::is_same_v<T, SequenceV>) {
                return compare_vectors(lhs.items, rhs.items);
            } else if constexpr (std::is_same_v<T, RelationV>) {
                return compare_vectors(lhs.tuples, rhs.tuples);
            } else {
                static_assert(std::is_same_v<T, PartitionV>);
                return compare_vectors(lhs.parts, rhs.parts);
            }
        },
        a.data());
}

// Compares two multisets from position i as flattened (repeated) element
// sequences; the element at i is equal with differing multiplicities and
// `small` has the smaller count.
int compare_flat_tail(const MSetV& small, const MSetV& large, size_t i) {
    // small = ...e^k..., large = ...e^m... with k < m: after k copies the
    // small side continues with its next distinct element (or ends), the
    // large side continues with e. Any element after e sorts above e.
    if (i + 1 == small.elements.size()) return -1;
    int c = compare(small.elements[i + 1].first, large.elements[i].first);
    return c != 0 ? c : 1;
}

bool structural_equal(const Value& a, const Value& b) {
    return compare(a, b) == 0;
}

namespace {

bool sorted_distinct(const std::vector<Value>& values) {
    for (size_t i = 1; i < values.size(); ++i)
        if (compare(values[i - 1], values[i]) >= 0) return false;
    return true;
}

}  // namespace

bool validate(const Value& v) {
    if (v.is_null()) return false;
    return std::visit(
        [&](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntV>) {
                return node.value <= kIntBound && node.value >= -kIntBound;
            } else if constexpr (std::is_same_v<T, EnumV> ||
                                 std::is_same_v<T, UnnamedV>) {
                return node.index >= 1;
            } else if constexpr (std::is_same_v<T, TupleV>) {
                for (const auto& x : node.items)
                    if (!validate(x)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, RecordV>) {
                for (size_t i = 1; i < node.fields.size(); ++i)
                    if (node.fields[i - 1].first >= node.fields[i].first)
                        return false;
                for (const auto& f : node.fields)
                    if (!validate(f.second)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, VariantV>) {
                return node.value.size() == 1 && validate(node.value.front());
            } else if constexpr (std::is_same_v<T, MatrixV>) {
                for (const auto& x : node.entries)
                    if (!validate(x)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, SetV>) {
                if (!sorted_distinct(node.elements)) return false;
                for (const auto& x : node.elements)
                    if (!validate(x)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, MSetV>) {
                for (size_t i = 1; i < node.elements.size(); ++i)
                    if (compare(node.elements[i - 1].first,
                                node.elements[i].first) >= 0)
                        return false;
                for (const auto& e : node.elements)
                    if (e.second <= 0 || !validate(e.first)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, FunctionV>) {
                for (size_t i = 1; i < node.maplets.size(); ++i)
                    if (compare(node.maplets[i - 1].first,
                                node.maplets[i].first) >= 0)
                        return false;
                for (const auto& m : node.maplets)
                    if (!validate(m.first) || !validate(m.second)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, SequenceV>) {
                for (const auto& x : node.items)
                    if (!validate(x)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, RelationV>) {
                if (!sorted_distinct(node.tuples)) return false;
                size_t arity = 0;
                for (size_t i = 0; i < node.tuples.size(); ++i) {
                    const auto* t = node.tuples[i].as<TupleV>();
                    if (!t || !validate(node.tuples[i])) return false;
                    if (i == 0)
                        arity = t->items.size();
                    else if (t->items.size() != arity)
                        return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, PartitionV>) {
                if (!sorted_distinct(node.parts)) return false;
                std::vector<Value> all;
                for (const auto& p : node.parts) {
                    const auto* s = p.as<SetV>();
                    if (!s || s->elements.empty() || !validate(p)) return false;
                    all.insert(all.end(), s->elements.begin(), s->elements.end());
                }
                std::sort(all.begin(), all.end(), [](const Value& a, const Value& b) {
                    return compare(a, b) < 0;
                });
                for (size_t i = 1; i < all.size(); ++i)
                    if (compare(all[i - 1], all[i]) == 0) return false;
                return true;
            } else {
                return true;
            }
        },
        v.data());
}

}  // namespace essence
