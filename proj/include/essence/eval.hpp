#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "essence/ast.hpp"
#include "essence/environment.hpp"
#include "essence/value.hpp"

namespace essence {

// Integer primitives. All enforce the 2**62 - 1 magnitude bound.

// Floor division: the quotient rounds toward minus infinity, so
// (x % y) + y*(x / y) = x holds and the remainder takes the divisor's sign.
// y == 0 is a division-by-zero error.
std::pair<std::int64_t, std::int64_t> int_div_mod(std::int64_t x,
                                                  std::int64_t y);
std::int64_t int_add(std::int64_t a, std::int64_t b);
std::int64_t int_sub(std::int64_t a, std::int64_t b);
std::int64_t int_mul(std::int64_t a, std::int64_t b);
std::int64_t int_neg(std::int64_t a);
std::int64_t abs_int(std::int64_t x);
// x <= 0 yields 1; overflow beyond the bound is an error.
std::int64_t factorial(std::int64_t x);
// y < 0 is a negative-exponent error; x**0 = 1 for every x.
std::int64_t power(std::int64_t x, std::int64_t y);

// Evaluates a well-typed expression whose free names are all bound in env.
// Throws EvalException on errors (division by zero, undefined application,
// overflow, ...).
Value evaluate(const Expression& expr, const Environment& env);

// Non-throwing variant for the solver's constraint checking: returns a null
// Value on error and stores the error. Cheap on the error path.
class Evaluator {
public:
    Value eval(const Expression& expr, Environment& env);

    bool failed() const { return failed_; }
    const EvalError& error() const { return error_; }
    void clear_error() {
        failed_ = false;
        error_ = {};
    }

    Value fail(EvalErrorKind kind, std::string message) {
        if (!failed_) {
            failed_ = true;
            error_ = {kind, std::move(message)};
        }
        return Value();
    }

private:
    bool failed_ = false;
    EvalError error_;
};

// Evaluates an expression expected to be a domain argument (a DomainExpr or a
// reference to a domain binding); used by restrict/max/min and binders.
GroundDomainPtr eval_domain_arg(const Expression& expr, const Environment& env);

}  // namespace essence
