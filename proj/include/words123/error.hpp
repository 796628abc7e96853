#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace words123 {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input supplied by a caller (maps to CLI exit code 2).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A mathematical failure: no fit, mismatch, broken invariant (CLI exit code 3).
class MathError : public Error {
public:
    using Error::Error;
};

class NotExactlyOne : public MathError {
public:
    explicit NotExactlyOne(std::size_t occurrences)
        : MathError("word has " + std::to_string(occurrences) +
                    " occurrences of 123, expected exactly one"),
          occurrences_(occurrences) {}
    std::size_t occurrences() const noexcept { return occurrences_; }

private:
    std::size_t occurrences_;
};

class InvalidGoodPair : public MathError {
public:
    using MathError::MathError;
};

class NonzeroConstantTerm : public MathError {
public:
    NonzeroConstantTerm() : MathError("series has a nonzero constant term; cannot divide by x") {}
};

class StrayCoefficient : public MathError {
public:
    explicit StrayCoefficient(std::size_t index)
        : MathError("nonzero coefficient at index " + std::to_string(index) +
                    " is not on the decimation lattice"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NoConvergence : public MathError {
public:
    using MathError::MathError;
};

class InsufficientTerms : public MathError {
public:
    InsufficientTerms(std::size_t have, std::size_t need)
        : MathError("insufficient terms: have " + std::to_string(have) + ", need " +
                    std::to_string(need)),
          have_(have), need_(need) {}
    std::size_t have() const noexcept { return have_; }
    std::size_t need() const noexcept { return need_; }

private:
    std::size_t have_;
    std::size_t need_;
};

class LeadingCoefficientZero : public MathError {
public:
    explicit LeadingCoefficientZero(long long n)
        : MathError("leading coefficient vanishes at n = " + std::to_string(n)), n_(n) {}
    long long n() const noexcept { return n_; }

private:
    long long n_;
};

class NonIntegerStep : public MathError {
public:
    explicit NonIntegerStep(long long n)
        : MathError("recurrence step at n = " + std::to_string(n) + " is not an integer"), n_(n) {}
    long long n() const noexcept { return n_; }

private:
    long long n_;
};

class TooShort : public MathError {
public:
    TooShort(std::size_t have, std::size_t need)
        : MathError("sequence too short for asymptotics: " + std::to_string(have) + " < " +
                    std::to_string(need)) {}
};

class NonPositiveTail : public MathError {
public:
    explicit NonPositiveTail(std::size_t index)
        : MathError("sequence tail is not positive at index " + std::to_string(index)) {}
};

// Malformed persisted data (cache, series, fixtures).
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace words123
