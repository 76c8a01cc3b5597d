#include "higher_jones/weight.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace hj {

Weight Weight::unit(int rank, int i, int sign) {
    std::vector<int> c(rank, 0);
    c.at(i) = sign;
    return Weight(std::move(c));
}

int Weight::size() const {
    int s = 0;
    for (int x : c_) s += std::abs(x);
    return s;
}

bool Weight::is_zero() const {
    for (int x : c_)
        if (x != 0) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return Weight(std::move(c));
}

std::string Weight::label() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(c_[i]);
    }
    return s;
}

Weight Weight::stripped() const {
    std::vector<int> c;
    for (int x : c_)
        if (x != 0) c.push_back(x);
    if (c.empty()) c.push_back(0);
    return Weight(std::move(c));
}

Weight Weight::padded(int rank) const {
    if (rank < this->rank()) throw std::invalid_argument("cannot pad to a smaller rank");
    std::vector<int> c(c_);
    c.resize(rank, 0);
    return Weight(std::move(c));
}

namespace {

Weight parse_sep(std::string_view s, char sep) {
    std::vector<int> c;
    if (s.empty()) throw std::invalid_argument("empty weight");
    std::size_t pos = 0;
    while (true) {
        std::size_t end = s.find(sep, pos);
        std::string_view tok = s.substr(pos, end == std::string_view::npos ? s.size() - pos : end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw std::invalid_argument("bad weight component '" + std::string(tok) + "'");
        c.push_back(v);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return Weight(std::move(c));
}

}  // namespace

Weight Weight::parse_label(std::string_view s) { return parse_sep(s, '.'); }
Weight Weight::parse_list(std::string_view s) { return parse_sep(s, ','); }

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
    return os << ')';
}

}  // namespace hj
