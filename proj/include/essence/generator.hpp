#pragma once

#include <coroutine>
#include <exception>
#include <utility>

namespace essence {

// Minimal single-pass coroutine generator. Used for domain enumeration
// streams; one stream must not be shared across tasks.
template <typename T>
class Generator {
public:
    struct promise_type {
        T current{};
        std::exception_ptr exception;

        Generator get_return_object() {
            return Generator(Handle::from_promise(*this));
        }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }
        std::suspend_always yield_value(T value) {
            current = std::move(value);
            return {};
        }
        void return_void() {}
        void unhandled_exception() { exception = std::current_exception(); }
    };

    using Handle = std::coroutine_handle<promise_type>;

    Generator() = default;
    explicit Generator(Handle handle) : handle_(handle) {}
    Generator(Generator&& other) noexcept
        : handle_(std::exchange(other.handle_, {})) {}
    Generator& operator=(Generator&& other) noexcept {
        if (this != &other) {
            destroy();
            handle_ = std::exchange(other.handle_, {});
        }
        return *this;
    }
    Generator(const Generator&) = delete;
    Generator& operator=(const Generator&) = delete;
    ~Generator() { destroy(); }

    // Advances the stream; returns false when exhausted.
    bool next(T& out) {
        if (!handle_ || handle_.done()) return false;
        handle_.resume();
        if (handle_.promise().exception)
            std::rethrow_exception(handle_.promise().exception);
        if (handle_.done()) return false;
        out = std::move(handle_.promise().current);
        return true;
    }

private:
    void destroy() {
        if (handle_) {
            handle_.destroy();
            handle_ = {};
        }
    }

    Handle handle_;
};

}  // namespace essence
