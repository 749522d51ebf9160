/**
 * @file group.hpp
 * @brief The group G = (Z + Z2) x| Z2 in normal form, and its group algebra.
 *
 * Generators g, z, x with relations x^2 = z^2 = 1, xz = zx, zg = gz,
 * xgx = g^-1. Every element has the unique normal form g^n z^e x^d, which is
 * what GroupWord stores; the presentation in terms of x, y, z is consumed by
 * defining y = x*g.
 */

#pragma once

#include "opgraph/scalar.hpp"

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace opgraph {

struct GroupWord {
    long g_exp = 0;
    int z_bit = 0;  // 0 or 1
    int x_bit = 0;  // 0 or 1

    auto operator<=>(const GroupWord&) const = default;

    bool is_identity() const { return g_exp == 0 && z_bit == 0 && x_bit == 0; }
    bool in_p() const { return x_bit == 0; }

    std::string to_string() const {
        if (is_identity()) return "1";
        std::ostringstream os;
        bool first = true;
        if (g_exp != 0) {
            os << "g";
            if (g_exp != 1) os << "^" << g_exp;
            first = false;
        }
        if (z_bit) {
            if (!first) os << " ";
            os << "z";
            first = false;
        }
        if (x_bit) {
            if (!first) os << " ";
            os << "x";
        }
        return os.str();
    }
};

/// Product in normal form: x flips the sign of the following g-exponent.
inline GroupWord word_mul(const GroupWord& a, const GroupWord& b) {
    return GroupWord{a.g_exp + (a.x_bit ? -b.g_exp : b.g_exp), a.z_bit ^ b.z_bit,
                     a.x_bit ^ b.x_bit};
}

inline GroupWord word_inverse(const GroupWord& w) {
    // Words with x present are involutions; pure P-words invert the g-power.
    return w.x_bit ? w : GroupWord{-w.g_exp, w.z_bit, 0};
}

inline GroupWord g_word(long n = 1) { return GroupWord{n, 0, 0}; }
inline GroupWord z_word() { return GroupWord{0, 1, 0}; }
inline GroupWord x_word() { return GroupWord{0, 0, 1}; }
/// y = x*g in normal form (y^2 = 1 holds automatically).
inline GroupWord y_word() { return word_mul(x_word(), g_word()); }

/**
 * An element of the group algebra CG: a finite formal sum of normal-form
 * words with Gaussian-rational coefficients. Zero coefficients are never
 * stored.
 */
class GroupAlgElement {
public:
    GroupAlgElement() = default;

    static GroupAlgElement unit() { return from_word(GroupWord{}); }

    static GroupAlgElement from_word(const GroupWord& w,
                                     const GaussRational& coeff = GaussRational(1)) {
        GroupAlgElement e;
        if (!coeff.is_zero()) e.terms_[w] = coeff;
        return e;
    }

    const std::map<GroupWord, GaussRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool supported_on_p() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_p()) return false;
        return true;
    }

    GaussRational coefficient(const GroupWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? GaussRational(0) : it->second;
    }

    GroupAlgElement& operator+=(const GroupAlgElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    GroupAlgElement& operator-=(const GroupAlgElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend GroupAlgElement operator+(GroupAlgElement a, const GroupAlgElement& b) { return a += b; }
    friend GroupAlgElement operator-(GroupAlgElement a, const GroupAlgElement& b) { return a -= b; }

    GroupAlgElement operator-() const {
        GroupAlgElement e;
        for (const auto& [w, c] : terms_) e.terms_[w] = -c;
        return e;
    }

    friend GroupAlgElement operator*(const GaussRational& s, const GroupAlgElement& e) {
        GroupAlgElement r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : e.terms_) r.terms_[w] = s * c;
        return r;
    }

    /// Convolution product.
    friend GroupAlgElement operator*(const GroupAlgElement& a, const GroupAlgElement& b) {
        GroupAlgElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(word_mul(wa, wb), ca * cb);
        return r;
    }

    friend bool operator==(const GroupAlgElement& a, const GroupAlgElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupAlgElement& a, const GroupAlgElement& b) {
        return !(a == b);
    }

    std::string to_string() const;
    static GroupAlgElement parse(std::string_view text);

private:
    void add_term(const GroupWord& w, const GaussRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<GroupWord, GaussRational> terms_;
};

/// The involution c_x on CP: g -> g^-1, z -> z. Only defined on elements
/// supported on the subgroup P.
inline GroupAlgElement cx_involution(const GroupAlgElement& e) {
    GroupAlgElement out;
    for (const auto& [w, c] : e.terms()) {
        if (!w.in_p()) throw std::invalid_argument("cx_involution: support outside P");
        out += GroupAlgElement::from_word(GroupWord{-w.g_exp, w.z_bit, 0}, c);
    }
    return out;
}

inline GroupAlgElement u_element() {  // u = g + g^-1
    return GroupAlgElement::from_word(g_word(1)) + GroupAlgElement::from_word(g_word(-1));
}
inline GroupAlgElement v_element() {  // v = (g + g^-1) z
    return u_element() * GroupAlgElement::from_word(z_word());
}

// ---------------------------------------------------------------------------
// Element text format: signed terms "c*g^n z x", e.g. "1*g^2 z x - 1/2*1".
// Within a term, factors are separated by '*' or spaces and may be rationals,
// "i", a parenthesized scalar, or the group letters 1, g, g^n, z, x, y.
// ---------------------------------------------------------------------------

inline std::string GroupAlgElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coeff = c.to_string();
        bool negated = false;
        if (!first) {
            // Pull a plain leading minus out as the term separator.
            if (coeff.size() > 1 && coeff[0] == '-' && coeff.find('+', 1) == std::string::npos &&
                coeff.find('-', 1) == std::string::npos) {
                negated = true;
                coeff = coeff.substr(1);
            }
            os << (negated ? " - " : " + ");
        }
        bool composite = coeff.find('+') != std::string::npos ||
                         coeff.find('-', 1) != std::string::npos;
        if (composite) coeff = "(" + coeff + ")";
        os << coeff << "*" << w.to_string();
        first = false;
    }
    return os.str();
}

inline GroupAlgElement GroupAlgElement::parse(std::string_view text) {
    // Split into sign-separated terms; '+'/'-' inside parentheses or right
    // after '^' (exponent sign) do not break terms.
    std::string s(text);
    GroupAlgElement result;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    skip_ws();
    if (pos == s.size()) throw std::invalid_argument("empty group algebra element");
    bool any = false;
    while (pos < s.size()) {
        int sign = 1;
        skip_ws();
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        skip_ws();
        // Collect the term up to the next top-level sign.
        std::string term;
        int depth = 0;
        char prev = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if ((c == '+' || c == '-') && depth == 0 && prev != '^' && prev != '*' && prev != '/')
                break;
            term.push_back(c);
            if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
            ++pos;
        }
        if (term.empty()) throw std::invalid_argument("empty term");
        // Tokenize factors on '*' and whitespace outside parentheses
        // (exponents stay attached, parenthesized scalars stay whole).
        std::vector<std::string> factors;
        std::string cur;
        int fdepth = 0;
        for (char c : term) {
            if (c == '(') ++fdepth;
            if (c == ')') --fdepth;
            if (fdepth == 0 && (c == '*' || std::isspace(static_cast<unsigned char>(c)))) {
                if (!cur.empty()) factors.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) factors.push_back(cur);
        if (factors.empty()) throw std::invalid_argument("empty term");

        GaussRational coeff(1);
        if (sign < 0) coeff = -coeff;
        GroupWord word{};
        bool any_scalar = false;
        for (const auto& f : factors) {
            if (f == "g") {
                word = word_mul(word, g_word(1));
            } else if (f.rfind("g^", 0) == 0) {
                word = word_mul(word, g_word(std::stol(f.substr(2))));
            } else if (f == "z") {
                word = word_mul(word, z_word());
            } else if (f == "x") {
                word = word_mul(word, x_word());
            } else if (f == "y") {
                word = word_mul(word, y_word());
            } else if (f == "1") {
                // multiplicative identity; nothing to do
            } else if (f.front() == '(' && f.back() == ')') {
                coeff *= parse_scalar(f.substr(1, f.size() - 2));
                any_scalar = true;
            } else {
                coeff *= parse_scalar(f);
                any_scalar = true;
            }
        }
        (void)any_scalar;
        result += GroupAlgElement::from_word(word, coeff);
        any = true;
        skip_ws();
    }
    return result;
}

}  // namespace opgraph
