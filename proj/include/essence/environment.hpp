#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "essence/ast.hpp"
#include "essence/value.hpp"

namespace essence {

using Binding = std::variant<Value, GroundDomainPtr, EnumDefPtr, UnnamedDefPtr>;

// Layered name -> binding map. The base layer holds top-level bindings
// (givens, lettings, enum/unnamed definitions, find values during solving);
// frames pushed on top hold quantified-variable bindings, resolved
// innermost-first.
class Environment {
public:
    Environment() = default;

    void bind(const std::string& name, Binding binding) {
        if (frames_.empty()) {
            set_in(base_, name, std::move(binding));
        } else {
            set_in(frames_.back(), name, std::move(binding));
        }
    }

    void bind_base(const std::string& name, Binding binding) {
        set_in(base_, name, std::move(binding));
    }

    void push_frame() { frames_.emplace_back(); }
    void pop_frame() { frames_.pop_back(); }

    const Binding* lookup(const std::string& name) const {
        for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
            for (const auto& entry : *it)
                if (entry.first == name) return &entry.second;
        }
        for (const auto& entry : base_)
            if (entry.first == name) return &entry.second;
        return nullptr;
    }

    const Value* lookup_value(const std::string& name) const {
        const Binding* b = lookup(name);
        if (!b) return nullptr;
        return std::get_if<Value>(b);
    }

    // RAII helper for quantifier scopes.
    class Scope {
    public:
        explicit Scope(Environment& env) : env_(env) { env_.push_frame(); }
        ~Scope() { env_.pop_frame(); }
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

    private:
        Environment& env_;
    };

private:
    using Frame = std::vector<std::pair<std::string, Binding>>;

    static void set_in(Frame& frame, const std::string& name, Binding binding) {
        for (auto& entry : frame) {
            if (entry.first == name) {
                entry.second = std::move(binding);
                return;
            }
        }
        frame.emplace_back(name, std::move(binding));
    }

    Frame base_;
    std::vector<Frame> frames_;
};

}  // namespace essence
