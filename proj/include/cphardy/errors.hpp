#pragma once

#include <stdexcept>
#include <string>

namespace cphardy {

/// Raised when a request violates the hypothesis of the theorem backing the
/// operation (e.g. a non-shadowing witness for a symbol without an interior
/// fixed point). Carries the citation tag of the violated result.
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string citation, const std::string& message)
        : std::runtime_error(message), citation_(std::move(citation)) {}

    const std::string& citation() const noexcept { return citation_; }

private:
    std::string citation_;
};

/// Raised when an iterative numerical procedure fails to converge within its
/// budget (quadrature refinement, eigenvalue sweeps) or a computed quantity
/// violates a structural guarantee (Gram positivity).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cphardy
