#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "atx/graph.hpp"

namespace atx {

// Reduced fraction with arbitrary-precision parts; denominator is always positive.
class ExactRational {
public:
    using Int = boost::multiprecision::cpp_int;

    ExactRational() = default;
    ExactRational(long long value) : value_(value) {}
    ExactRational(const Int& num, const Int& den);

    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }

    // Always "p/q", including integers ("3/1").
    std::string str() const;
    static ExactRational parse(const std::string& text);

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ + b.value_); }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ - b.value_); }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ * b.value_); }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit ExactRational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_{0};
};

// Exact maximum over nonempty subgraphs H of 2|E(H)|/|V(H)|, via densest-subgraph
// min-cut tests at rational thresholds. Requires at least one vertex.
ExactRational max_average_degree(const Graph& g);

// Density bound for the bounded-mad triple construction.
inline ExactRational mad_threshold() { return ExactRational(14, 5); }

} // namespace atx
