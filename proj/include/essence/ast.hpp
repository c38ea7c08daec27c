#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "essence/error.hpp"

namespace essence {

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Domain;
using DomainPtr = std::shared_ptr<const Domain>;

struct GroundDomain;
using GroundDomainPtr = std::shared_ptr<const GroundDomain>;

// Names are case-sensitive: a letter or underscore followed by alphanumerics
// or underscores.
bool is_valid_name(const std::string& text);

struct EnumDef {
    std::string name;
    std::vector<std::string> members;  // listed in increasing order
};
using EnumDefPtr = std::shared_ptr<const EnumDef>;

struct UnnamedDef {
    std::string name;
    std::int64_t size = 0;
};
using UnnamedDefPtr = std::shared_ptr<const UnnamedDef>;

// ---------------------------------------------------------------------------
// Domains

struct Range {
    enum class Kind { Single, From, To, Bounded, Open };
    Kind kind = Kind::Open;
    ExprPtr lo;  // Single/From/Bounded
    ExprPtr hi;  // To/Bounded
};

struct Attribute {
    std::string name;
    ExprPtr value;  // null for flag attributes
};

struct AttributeSet {
    std::vector<Attribute> entries;  // each keyword at most once

    const Attribute* find(const std::string& name) const {
        for (const auto& a : entries)
            if (a.name == name) return &a;
        return nullptr;
    }
    bool has(const std::string& name) const { return find(name) != nullptr; }
    bool empty() const { return entries.empty(); }
};

struct BoolDomain {};
struct IntDomain {
    std::vector<Range> ranges;  // empty means the unbounded integer domain
};
// A name used as a domain: a domain alias, an enumerated type (optionally
// with ranges), or an unnamed type. Resolution happens against the symbol
// table; the parser cannot tell these apart.
struct NamedDomain {
    std::string name;
    std::vector<Range> ranges;
};
struct TupleDomain {
    std::vector<DomainPtr> components;
};
struct RecordDomain {
    std::vector<std::pair<std::string, DomainPtr>> fields;
};
struct VariantDomain {
    std::vector<std::pair<std::string, DomainPtr>> fields;
};
struct MatrixDomain {
    std::vector<DomainPtr> indices;  // at least one
    DomainPtr element;
};
struct SetDomain {
    AttributeSet attrs;
    DomainPtr element;
};
struct MSetDomain {
    AttributeSet attrs;
    DomainPtr element;
};
struct FunctionDomain {
    AttributeSet attrs;
    DomainPtr from;
    DomainPtr to;
};
struct SequenceDomain {
    AttributeSet attrs;
    DomainPtr element;
};
struct RelationDomain {
    AttributeSet attrs;
    std::vector<DomainPtr> components;  // at least one
};
struct PartitionDomain {
    AttributeSet attrs;
    DomainPtr element;
};

struct Domain {
    using Node = std::variant<BoolDomain, IntDomain, NamedDomain, TupleDomain,
                              RecordDomain, VariantDomain, MatrixDomain,
                              SetDomain, MSetDomain, FunctionDomain,
                              SequenceDomain, RelationDomain, PartitionDomain>;
    Node node;
    SourceLoc loc;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

template <typename T, typename... Args>
DomainPtr make_domain(Args&&... args) {
    auto d = std::make_shared<Domain>();
    d->node = T{std::forward<Args>(args)...};
    return d;
}

// ---------------------------------------------------------------------------
// Expressions

enum class UnaryOp {
    Negate,     // -x
    Not,        // !x
    Factorial,  // x!
    Bars,       // |x| : absolute value on ints, cardinality on collections
};

enum class BinaryOp {
    Plus,
    Minus,  // arithmetic subtraction and set difference
    Times,
    Div,
    Mod,
    Pow,
    Eq,
    Neq,
    Lt,
    Leq,
    Gt,
    Geq,
    LexLt,
    LexLeq,
    LexGt,
    LexGeq,
    And,
    Or,
    Imply,
    Iff,
    In,
    Subset,
    SubsetEq,
    Supset,
    SupsetEq,
    Intersect,
    Union,
};

enum class QuantKind { ForAll, Exists, Sum, Product };

struct BoolLit {
    bool value;
};
struct IntLit {
    std::int64_t value;
};
struct Ref {
    std::string name;
};
struct UnaryExpr {
    UnaryOp op;
    ExprPtr operand;
};
struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
// Named operator application: toInt, image, freq, sum, ... Function
// application f(x) is represented as image(f, x).
struct CallExpr {
    std::string op;
    std::vector<ExprPtr> args;
};
struct IndexExpr {
    ExprPtr base;
    std::vector<ExprPtr> indices;
};
// forAll/exists/sum/product binders. The source is either a domain
// (`q i : D . body`) or a collection expression (`q i in S . body`).
struct QuantifierExpr {
    QuantKind kind;
    std::vector<std::string> binders;  // non-empty
    DomainPtr domain;                  // exactly one of domain/collection set
    ExprPtr collection;
    ExprPtr body;
};
struct CompGenerator {
    std::vector<std::string> names;  // tuple pattern when tuple_pattern
    bool tuple_pattern = false;
    DomainPtr domain;  // `i : D` form
    ExprPtr collection;  // `v <- L` form
};
struct CompCondition {
    ExprPtr expr;
};
using CompItem = std::variant<CompGenerator, CompCondition>;
struct ComprehensionExpr {
    ExprPtr head;
    std::vector<CompItem> items;  // at least one generator
};
struct SetLit {
    std::vector<ExprPtr> elements;
};
struct MSetLit {
    std::vector<ExprPtr> elements;
};
struct TupleLit {
    std::vector<ExprPtr> elements;
};
struct MatrixLit {
    std::vector<ExprPtr> elements;
    DomainPtr index;  // optional `[... ; int(1..n)]` annotation
};
struct FunctionLit {
    std::vector<std::pair<ExprPtr, ExprPtr>> maplets;
};
struct SequenceLit {
    std::vector<ExprPtr> elements;
};
struct RelationLit {
    std::vector<ExprPtr> tuples;  // each a TupleLit
};
struct PartitionLit {
    std::vector<std::vector<ExprPtr>> parts;
};
struct RecordLit {
    std::vector<std::pair<std::string, ExprPtr>> fields;
};
struct VariantLit {
    std::string field;
    ExprPtr value;
};
// A domain in expression position: restrict(f, int(0,2)), max(vertices), ...
struct DomainExpr {
    DomainPtr domain;
};

struct Expression {
    using Node =
        std::variant<BoolLit, IntLit, Ref, UnaryExpr, BinaryExpr, CallExpr,
                     IndexExpr, QuantifierExpr, ComprehensionExpr, SetLit,
                     MSetLit, TupleLit, MatrixLit, FunctionLit, SequenceLit,
                     RelationLit, PartitionLit, RecordLit, VariantLit,
                     DomainExpr>;
    Node node;
    SourceLoc loc;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

template <typename T, typename... Args>
ExprPtr make_expr(Args&&... args) {
    auto e = std::make_shared<Expression>();
    e->node = T{std::forward<Args>(args)...};
    return e;
}

template <typename T>
ExprPtr make_expr_at(SourceLoc loc, T&& payload) {
    auto e = std::make_shared<Expression>();
    e->node = std::forward<T>(payload);
    e->loc = loc;
    return e;
}

// ---------------------------------------------------------------------------
// Statements and models

struct FindStmt {
    std::vector<std::string> names;  // non-empty
    DomainPtr domain;
};
struct GivenStmt {
    std::vector<std::string> names;
    DomainPtr domain;
};
struct LettingExprStmt {
    std::string name;
    ExprPtr expr;
};
struct LettingDomainStmt {
    std::string name;
    DomainPtr domain;
};
struct GivenEnumStmt {
    std::string name;
};
struct LettingEnumStmt {
    std::string name;
    std::vector<std::string> members;  // pairwise distinct
};
struct LettingUnnamedStmt {
    std::string name;
    ExprPtr size;
};
struct SuchThatStmt {
    std::vector<ExprPtr> exprs;
};
struct WhereStmt {
    std::vector<ExprPtr> exprs;
};
using BranchItem = std::variant<std::string, ExprPtr>;
struct BranchingStmt {
    std::vector<BranchItem> items;
};
struct ObjectiveStmt {
    bool maximising = false;
    ExprPtr expr;
};

struct Statement {
    using Node =
        std::variant<FindStmt, GivenStmt, LettingExprStmt, LettingDomainStmt,
                     GivenEnumStmt, LettingEnumStmt, LettingUnnamedStmt,
                     SuchThatStmt, WhereStmt, BranchingStmt, ObjectiveStmt>;
    Node node;
    SourceLoc loc;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

struct Model {
    std::optional<std::pair<int, int>> language_version;
    std::vector<Statement> statements;  // order preserved exactly as parsed
};

// ---------------------------------------------------------------------------
// Structural equality (whitespace/comment-insensitive; quantified variable
// names compare literally) and utilities.

bool structural_equal(const Expression& a, const Expression& b);
bool structural_equal(const Domain& a, const Domain& b);
bool structural_equal(const Statement& a, const Statement& b);
bool structural_equal(const Model& a, const Model& b);

inline bool structural_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return structural_equal(*a, *b);
}
inline bool structural_equal(const DomainPtr& a, const DomainPtr& b) {
    if (!a || !b) return !a && !b;
    return structural_equal(*a, *b);
}

// Deep clone with a name substitution map applied to free occurrences.
// Substitution stops at shadowing binders.
ExprPtr substitute(const ExprPtr& expr,
                   const std::vector<std::pair<std::string, ExprPtr>>& subst);
DomainPtr substitute(const DomainPtr& domain,
                     const std::vector<std::pair<std::string, ExprPtr>>& subst);

// Free names of an expression or domain (excluding quantified locals).
void collect_free_names(const Expression& expr, std::vector<std::string>& out);
void collect_free_names(const Domain& domain, std::vector<std::string>& out);

}  // namespace essence
