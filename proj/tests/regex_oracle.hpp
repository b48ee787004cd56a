#pragma once

// Bounded-length string sets of a plain regular expression: one-character
// letters, juxtaposition, '+', '*', parentheses, "()" for the empty word.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rx {

using Lang = std::set<std::string>;

class Oracle {
public:
    Oracle(std::string_view text, std::size_t bound) : s_(text), n_(bound) {}

    Lang run() {
        Lang l = alt();
        if (i_ != s_.size()) throw std::runtime_error("trailing input in regex");
        return l;
    }

private:
    Lang alt() {
        Lang l = seq();
        while (i_ < s_.size() && s_[i_] == '+') {
            ++i_;
            for (auto& w : seq()) l.insert(w);
        }
        return l;
    }

    Lang seq() {
        Lang l{""};
        while (i_ < s_.size() && s_[i_] != '+' && s_[i_] != ')') l = cat(l, postfix());
        return l;
    }

    Lang postfix() {
        Lang l = atom();
        while (i_ < s_.size() && s_[i_] == '*') {
            ++i_;
            Lang out{""}, level{""};
            while (!level.empty()) {
                Lang next;
                for (auto& w : cat(level, l))
                    if (out.insert(w).second) next.insert(w);
                level = std::move(next);
            }
            l = std::move(out);
        }
        return l;
    }

    Lang atom() {
        if (s_[i_] == '(') {
            ++i_;
            Lang l = alt();
            if (i_ >= s_.size() || s_[i_] != ')') throw std::runtime_error("unbalanced regex");
            ++i_;
            return l;
        }
        return Lang{std::string(1, s_[i_++])};
    }

    Lang cat(const Lang& a, const Lang& b) const {
        Lang out;
        for (auto& x : a)
            for (auto& y : b)
                if (x.size() + y.size() <= n_) out.insert(x + y);
        return out;
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t i_ = 0;
};

inline Lang strings_up_to(std::string_view regex, std::size_t bound) { return Oracle(regex, bound).run(); }

}  // namespace rx
