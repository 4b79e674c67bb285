#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "orelab/element_set.hpp"

namespace orelab {

/// Bad argument to a constructor or operation (e.g. zmod(1)).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An explicit table violates a ring axiom. Carries the axiom name and the
/// offending triple (unused slots are 0).
class RingAxiomError : public std::runtime_error {
public:
    RingAxiomError(std::string axiom, Elem a, Elem b, Elem c)
        : std::runtime_error("ring axiom '" + axiom + "' fails at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")"),
          axiom_(std::move(axiom)),
          witness_{a, b, c} {}
    const std::string& axiom() const { return axiom_; }
    const std::vector<Elem>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<Elem> witness_;
};

/// Syntax error in a ring spec or an operator expression.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A multiplicative closure reached zero. `chain` is a word in the
/// generators whose product is zero.
class ContainsZeroError : public std::runtime_error {
public:
    explicit ContainsZeroError(std::vector<Elem> chain)
        : std::runtime_error(describe(chain)), chain_(std::move(chain)) {}
    const std::vector<Elem>& chain() const { return chain_; }

private:
    static std::string describe(const std::vector<Elem>& chain) {
        std::string s = "multiplicative closure contains zero: ";
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) s += "*";
            s += std::to_string(chain[i]);
        }
        return s + " = 0";
    }
    std::vector<Elem> chain_;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A size guard refused to run an enumeration.
class BudgetRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Localization at a set whose ideal p(S) is the whole ring.
class DegenerateLocalization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orelab
