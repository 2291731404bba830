#ifndef RSIEGEL_ERRORS_HPP
#define RSIEGEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsiegel {

// Argument outside the supported domain of an operation (t < 2*pi, Re tau >= 0, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Pole of log-gamma and friends.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The requested accuracy cannot be reached at the working precision of the Real type.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative or refinement procedure did not settle.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A zero scan could not reconcile its sign-change count with the smooth count.
class completeness_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rsiegel

#endif
