#ifndef ALCPROB_ERRORS_HPP
#define ALCPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcprob {

// Saturation exceeded its rule-firing budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(std::size_t budget)
        : std::runtime_error("expansion budget of " + std::to_string(budget) +
                             " rule firings exceeded"),
          budget_(budget) {}
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

// An exhaustive computation (oracle enumeration, DNF expansion) was refused
// because the input is larger than the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::string what, std::size_t required, std::size_t cap)
        : std::runtime_error(std::move(what)), required_(required), cap_(cap) {}
    std::size_t required() const { return required_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t required_;
    std::size_t cap_;
};

// A documented precondition was violated by the caller.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// An internal invariant failed to hold.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace alcprob

#endif
