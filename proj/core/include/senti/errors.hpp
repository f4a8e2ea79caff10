#ifndef SENTI_ERRORS_HPP
#define SENTI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace senti {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration or incompatible inputs supplied by the caller.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A line of an input file does not match the expected format.
class MalformedLineError : public Error {
public:
    MalformedLineError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Label token outside {positive, negative, neutral, ?}.
class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& value)
        : Error("unknown label: '" + value + "'"), value_(value) {}
    const std::string& value() const { return value_; }

private:
    std::string value_;
};

/// A class has fewer labeled documents than the requested fold count.
class TooFewInstancesError : public Error {
public:
    TooFewInstancesError(const std::string& cls, std::size_t count, int k)
        : Error("class '" + cls + "' has " + std::to_string(count) +
                " labeled documents, need at least " + std::to_string(k)) {}
};

/// Lexicon polarity outside [-1, 1].
class PolarityOutOfRangeError : public Error {
public:
    PolarityOutOfRangeError(const std::string& term, double value)
        : Error("polarity " + std::to_string(value) + " out of [-1,1] for term '" +
                term + "'") {}
};

class EmptyTrainingDataError : public Error {
public:
    using Error::Error;
    EmptyTrainingDataError() : Error("training data is empty") {}
};

class SingleClassDataError : public Error {
public:
    using Error::Error;
    SingleClassDataError() : Error("training data contains a single class") {}
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class TooFewPointsError : public Error {
public:
    TooFewPointsError(std::size_t points, int k)
        : Error("k-means needs at least k=" + std::to_string(k) + " points, got " +
                std::to_string(points)) {}
};

class NoFeaturesSurviveError : public Error {
public:
    NoFeaturesSurviveError() : Error("no feature passed the selection threshold") {}
};

class InvalidDistributionError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

}  // namespace senti

#endif  // SENTI_ERRORS_HPP
