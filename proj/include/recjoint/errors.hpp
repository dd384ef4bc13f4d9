#pragma once

#include <stdexcept>
#include <string>

namespace recjoint {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Index or rate lists that must be strictly increasing are not.
class OrderingError : public Error {
public:
    explicit OrderingError(const std::string& what) : Error(what) {}
};

/// Density requested where the law has none.
class NoDensityError : public Error {
public:
    explicit NoDensityError(const std::string& what) : Error(what) {}
};

/// Law identifier not among the supported families.
class UnsupportedLawError : public Error {
public:
    explicit UnsupportedLawError(const std::string& what) : Error(what) {}
};

/// Dimension outside the supported range (e.g. joint-event depth cap).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Rejection sampler exhausted its proposal budget.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

/// Experiment name not present in the verification registry.
class UnknownExperimentError : public Error {
public:
    explicit UnknownExperimentError(const std::string& what) : Error(what) {}
};

/// Empty input where at least one element is required.
class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what) : Error(what) {}
};

/// Sample too small for the requested statistic.
class SmallSampleError : public Error {
public:
    explicit SmallSampleError(const std::string& what) : Error(what) {}
};

/// Conditioning event has zero probability.
class DegenerateConditionError : public Error {
public:
    explicit DegenerateConditionError(const std::string& what) : Error(what) {}
};

/// Integrand evaluated to a non-finite value (e.g. log of a vanishing density).
class NonFiniteIntegrandError : public Error {
public:
    explicit NonFiniteIntegrandError(const std::string& what) : Error(what) {}
};

} // namespace recjoint
