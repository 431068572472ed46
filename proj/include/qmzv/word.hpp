#pragma once
// Words over the index alphabet {z_s} and the bi-alphabet {z_{s,r}},
// and finite rational linear combinations of them.

#include "exact.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmzv {

struct BiLetter {
    int s = 1;
    int r = 0;
    auto operator<=>(const BiLetter&) const = default;
};

template <class L>
using Word = std::vector<L>;

using Index = Word<int>;
using BiIndex = Word<BiLetter>;

// Canonical order: shorter words first, then lexicographic.
struct WordLess {
    template <class L>
    bool operator()(const Word<L>& a, const Word<L>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline int letter_weight(int s) { return s; }
inline int letter_weight(const BiLetter& b) { return b.s + b.r; }

template <class L>
int weight(const Word<L>& w) {
    int k = 0;
    for (const auto& a : w) k += letter_weight(a);
    return k;
}

inline int upper_weight(const BiIndex& w) {
    int k = 0;
    for (const auto& a : w) k += a.s;
    return k;
}

inline BiIndex to_bi(const Index& w) {
    BiIndex b;
    for (int s : w) b.push_back({s, 0});
    return b;
}

inline bool is_plain(const BiIndex& w) {
    for (const auto& a : w)
        if (a.r != 0) return false;
    return true;
}

inline Index to_index(const BiIndex& w) {
    Index out;
    for (const auto& a : w) {
        if (a.r != 0) throw std::invalid_argument("bi-word has nonzero lower entries");
        out.push_back(a.s);
    }
    return out;
}

template <class L>
Word<L> concat(const Word<L>& a, const Word<L>& b) {
    Word<L> w(a);
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

template <class L>
class LinComb {
public:
    using word_type = Word<L>;
    using map_type = std::map<word_type, Rational, WordLess>;

    LinComb() = default;
    explicit LinComb(const word_type& w, const Rational& c = 1) { add(w, c); }

    void add(const word_type& w, const Rational& c) {
        if (c == 0) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    void add(const LinComb& o, const Rational& c = 1) {
        if (c == 0) return;
        for (const auto& [w, x] : o.t_) add(w, c * x);
    }

    const map_type& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Rational coeff(const word_type& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Rational(0) : it->second;
    }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    LinComb& operator+=(const LinComb& o) { add(o, 1); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) t_.clear();
        else for (auto& kv : t_) kv.second *= c;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Rational& c, LinComb a) { a *= c; return a; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.t_ == b.t_; }

    // Prefixes every word with the letter a.
    LinComb prepend(const L& a) const {
        LinComb r;
        for (const auto& [w, c] : t_) {
            word_type v;
            v.reserve(w.size() + 1);
            v.push_back(a);
            v.insert(v.end(), w.begin(), w.end());
            r.t_.emplace(std::move(v), c);
        }
        return r;
    }

private:
    map_type t_;
};

// ---- textual syntax: "4,2" and "4,2|1,0" ----

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(' '), b = item.find_last_not_of(' ');
        if (a == std::string::npos) throw std::invalid_argument("empty entry in '" + text + "'");
        item = item.substr(a, b - a + 1);
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

inline Index parse_index(const std::string& text) {
    Index s = parse_int_list(text);
    for (int x : s)
        if (x < 1) throw std::invalid_argument("index entries must be >= 1: '" + text + "'");
    return s;
}

inline BiIndex parse_biindex(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) return to_bi(parse_index(text));
    Index s = parse_index(text.substr(0, bar));
    std::vector<int> r = parse_int_list(text.substr(bar + 1));
    if (r.size() != s.size()) throw std::invalid_argument("upper and lower lengths differ: '" + text + "'");
    BiIndex out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (r[i] < 0) throw std::invalid_argument("lower entries must be >= 0: '" + text + "'");
        out.push_back({s[i], r[i]});
    }
    return out;
}

inline std::string format_word(const Index& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    return out;
}

inline std::string format_word(const BiIndex& w) {
    std::string up, lo;
    for (size_t i = 0; i < w.size(); ++i) {
        up += (i ? "," : "") + std::to_string(w[i].s);
        lo += (i ? "," : "") + std::to_string(w[i].r);
    }
    return up + "|" + lo;
}

// Human readable: [2,3] for brackets, mb(2;1) for bi-brackets.
inline std::string pretty_word(const Index& w) { return "[" + format_word(w) + "]"; }
inline std::string pretty_word(const BiIndex& w) {
    if (w.empty()) return "1";
    if (is_plain(w)) return pretty_word(to_index(w));
    std::string up, lo;
    for (size_t i = 0; i < w.size(); ++i) {
        up += (i ? "," : "") + std::to_string(w[i].s);
        lo += (i ? "," : "") + std::to_string(w[i].r);
    }
    return "mb(" + up + ";" + lo + ")";
}

template <class L>
std::string to_text(const LinComb<L>& c) {
    std::string out;
    for (const auto& [w, x] : c) {
        bool neg = x < 0;
        Rational a = neg ? Rational(-x) : x;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string ws = w.empty() ? "1" : pretty_word(w);
        if (a == 1) out += ws;
        else out += a.get_str() + (w.empty() ? "" : "*" + ws);
    }
    return out.empty() ? "0" : out;
}

template <class L>
nlohmann::json to_json(const LinComb<L>& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, x] : c) arr.push_back({{"word", format_word(w)}, {"coeff", to_string(x)}});
    return arr;
}

inline LinComb<BiLetter> bicomb_from_json(const nlohmann::json& j) {
    LinComb<BiLetter> c;
    for (const auto& t : j) c.add(parse_biindex(t.at("word").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
    return c;
}

inline LinComb<int> comb_from_json(const nlohmann::json& j) {
    LinComb<int> c;
    for (const auto& t : j) c.add(parse_index(t.at("word").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
    return c;
}

inline LinComb<BiLetter> to_bi(const LinComb<int>& c) {
    LinComb<BiLetter> r;
    for (const auto& [w, x] : c) r.add(to_bi(w), x);
    return r;
}

}  // namespace qmzv
