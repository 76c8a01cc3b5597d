#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hj {

using BigInt = boost::multiprecision::cpp_int;

// Integer point in the epsilon basis. Ordering is lexicographic on coords.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
    Weight(std::initializer_list<int> coords) : c_(coords) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
    static Weight unit(int rank, int i, int sign = 1);

    int rank() const { return static_cast<int>(c_.size()); }
    int operator[](std::size_t i) const { return c_[i]; }
    const std::vector<int>& coords() const { return c_; }

    // |l_1| + ... + |l_n|
    int size() const;
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;

    // "1.1.-1"; the zero weight of rank n prints as n zeros.
    std::string label() const;
    // drops zero coordinates, keeping a single 0 for the zero weight
    Weight stripped() const;
    // pads with zeros to the given rank
    Weight padded(int rank) const;

    static Weight parse_label(std::string_view s);  // dot separated
    static Weight parse_list(std::string_view s);   // comma separated

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    std::vector<int> c_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace hj
