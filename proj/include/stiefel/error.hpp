/**
 * Error type carrying a machine-readable code.
 */

#ifndef STIEFEL_ERROR_HPP
#define STIEFEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stiefel {

/**
 * Raised for domain errors (violated preconditions, budgets, bad input).
 *
 * Codes in use: DIMENSION_MISMATCH, EMPTY_COLUMN, EMPTY_ROW,
 * NO_MATCHING_IN_SUPPORT, BUDGET_EXCEEDED, PRECONDITION, INFINITE_RESULT,
 * PARSE, and INTERNAL when a built-in self-check fails.
 */
class Error : public std::runtime_error
{
    private:
        std::string code_;

    public:
        Error(std::string code, const std::string& message)
            : std::runtime_error(message), code_(std::move(code))
        {
        }

        const std::string& code() const noexcept { return code_; }
};

}   // namespace stiefel

#endif
