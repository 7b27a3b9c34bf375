#pragma once

#include "heis/errors.hpp"
#include "heis/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace heis {

/// Simple substate: a finite sequence over {1,2} (1 = up, 2 = down).
struct SpinState {
    std::vector<int> sites;

    SpinState() = default;
    explicit SpinState(std::vector<int> s) : sites(std::move(s)) { validate(); }

    static SpinState parse(std::string_view text) {
        std::vector<int> s;
        s.reserve(text.size());
        for (char c : text) {
            if (c == '1')
                s.push_back(1);
            else if (c == '2')
                s.push_back(2);
            else
                throw Error("SpinState: sites must be '1' or '2'");
        }
        return SpinState(std::move(s));
    }

    int length() const { return static_cast<int>(sites.size()); }
    int n1() const {
        int c = 0;
        for (int s : sites) c += (s == 1);
        return c;
    }
    int n2() const { return length() - n1(); }

    /// r = n2/n1; requires n1 > 0.
    Rational ratio() const {
        if (n1() == 0) throw Error("SpinState: ratio undefined for n1 = 0");
        return Rational(n2(), n1());
    }

    SpinState rotated(int k) const {
        const int m = length();
        std::vector<int> s(sites.size());
        for (int i = 0; i < m; ++i) s[i] = sites[((i + k) % m + m) % m];
        return SpinState(std::move(s));
    }

    SpinState flipped() const {
        std::vector<int> s = sites;
        for (int& v : s) v = 3 - v;
        return SpinState(std::move(s));
    }

    SpinState repeated(int times) const {
        std::vector<int> s;
        s.reserve(sites.size() * times);
        for (int t = 0; t < times; ++t) s.insert(s.end(), sites.begin(), sites.end());
        return SpinState(std::move(s));
    }

    /// Smallest p dividing the length with sites = (sites[0:p]) repeated.
    int period() const {
        const int m = length();
        for (int p = 1; p < m; ++p) {
            if (m % p != 0) continue;
            bool ok = true;
            for (int i = p; i < m && ok; ++i) ok = sites[i] == sites[i - p];
            if (ok) return p;
        }
        return m;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(sites.size());
        for (int v : sites) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    friend bool operator==(const SpinState& a, const SpinState& b) { return a.sites == b.sites; }
    friend bool operator!=(const SpinState& a, const SpinState& b) { return !(a == b); }

private:
    void validate() const {
        if (sites.empty()) throw Error("SpinState: empty state");
        for (int s : sites)
            if (s != 1 && s != 2) throw Error("SpinState: sites must be 1 or 2");
    }
};

} // namespace heis
