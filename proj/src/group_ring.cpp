#include "unitforge/group_ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace unitforge {

namespace {

void require_same_group(const GroupRingElement& x, const GroupRingElement& y) {
    if (&x.group() != &y.group())
        throw std::invalid_argument("group ring elements live over different groups");
}

}  // namespace

GroupRingElement GroupRingElement::element(const FiniteGroup& g, int index) {
    if (index < 0 || index >= g.order())
        throw std::invalid_argument("element index out of range");
    GroupRingElement e(g);
    e.coeffs_[index] = 1;
    return e;
}

GroupRingElement GroupRingElement::from_coeffs(const FiniteGroup& g,
                                               std::map<int, Int> coeffs) {
    GroupRingElement e(g);
    for (auto& [idx, c] : coeffs) {
        if (idx < 0 || idx >= g.order())
            throw std::invalid_argument("element index out of range");
        if (c != 0) e.coeffs_.emplace(idx, std::move(c));
    }
    return e;
}

Int GroupRingElement::coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Int(0) : it->second;
}

bool GroupRingElement::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

bool GroupRingElement::is_trivial_unit() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

void GroupRingElement::add_term(int index, const Int& c) {
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_same_group(*this, o);
    GroupRingElement r = *this;
    for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    return *this + (-o);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(*group_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_same_group(*this, o);
    GroupRingElement r(*group_);
    for (const auto& [g, cg] : coeffs_)
        for (const auto& [h, ch] : o.coeffs_) r.add_term(group_->mul(g, h), cg * ch);
    return r;
}

GroupRingElement GroupRingElement::operator*(const Int& scalar) const {
    GroupRingElement r(*group_);
    if (scalar == 0) return r;
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, c * scalar);
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    require_same_group(*this, o);
    return coeffs_ == o.coeffs_;
}

Int GroupRingElement::augmentation() const {
    Int s = 0;
    for (const auto& [idx, c] : coeffs_) s += c;
    return s;
}

std::string GroupRingElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        Int v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        const std::string word = group_->element_word(idx);
        if (idx == 0) {
            os << v.get_str();
        } else if (v == 1) {
            os << word;
        } else {
            os << v.get_str() << "*" << word;
        }
    }
    return os.str();
}

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y) { return x + y; }
GroupRingElement negate(const GroupRingElement& x) { return -x; }
GroupRingElement multiply(const GroupRingElement& x, const GroupRingElement& y) {
    return x * y;
}
Int augment(const GroupRingElement& x) { return x.augmentation(); }

GroupRingElement tilde(const FiniteGroup& g, const std::vector<int>& subgroup) {
    std::map<int, Int> coeffs;
    for (int x : subgroup) {
        if (coeffs.count(x)) throw std::invalid_argument("tilde: repeated element");
        coeffs[x] = 1;
    }
    return GroupRingElement::from_coeffs(g, std::move(coeffs));
}

GroupRingElement tilde(const FiniteGroup& g, int x) {
    return tilde(g, cyclic_subgroup(g, x));
}

IntMatrix regular_representation(const GroupRingElement& u) {
    const FiniteGroup& g = u.group();
    const int n = g.order();
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [x, c] : u.coeffs()) m.a[g.mul(x, j)][j] += c;
    return m;
}

bool is_unit(const GroupRingElement& u) {
    Int d = det_bareiss(regular_representation(u));
    return d == 1 || d == -1;
}

GroupRingElement inverse(const GroupRingElement& u) {
    const FiniteGroup& g = u.group();
    IntMatrix m = regular_representation(u);
    std::vector<Int> e0(g.order());
    e0[0] = 1;
    auto sol = solve_linear_integral(m, e0);
    if (!sol) throw std::domain_error("inverse: element is not a unit of ZG");
    std::map<int, Int> coeffs;
    for (int i = 0; i < g.order(); ++i)
        if ((*sol)[i] != 0) coeffs[i] = (*sol)[i];
    GroupRingElement v = GroupRingElement::from_coeffs(g, std::move(coeffs));
    if (!(u * v).is_one() || !(v * u).is_one())
        throw std::logic_error("inverse: verification u*v = v*u = 1 failed");
    return v;
}

GroupRingElement power(const GroupRingElement& u, long k) {
    if (k < 0) return power(inverse(u), -k);
    GroupRingElement acc = GroupRingElement::one(u.group());
    GroupRingElement base = u;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

GroupRingElement conjugate(const GroupRingElement& x, const GroupRingElement& y) {
    return conjugate(x, y, inverse(y));
}

GroupRingElement conjugate(const GroupRingElement& x, const GroupRingElement& y,
                           const GroupRingElement& y_inverse) {
    require_same_group(x, y);
    if (!(y * y_inverse).is_one())
        throw std::invalid_argument("conjugate: supplied inverse is wrong");
    return y_inverse * x * y;
}

GroupRingElement conjugate_by_element(const GroupRingElement& x, int y) {
    const FiniteGroup& g = x.group();
    std::map<int, Int> coeffs;
    for (const auto& [idx, c] : x.coeffs()) coeffs[g.conjugate(idx, y)] = c;
    return GroupRingElement::from_coeffs(g, std::move(coeffs));
}

GroupRingElement commutator(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement xi = inverse(x);
    GroupRingElement yi = inverse(y);
    return xi * yi * x * y;
}

namespace {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, Number, Name, End } kind;
    Int number;
    std::string name;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}
    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) return {Token::End, 0, ""};
        char c = s_[i_];
        if (c == '+') { ++i_; return {Token::Plus, 0, ""}; }
        if (c == '-') { ++i_; return {Token::Minus, 0, ""}; }
        if (c == '*') { ++i_; return {Token::Star, 0, ""}; }
        if (c == '^') { ++i_; return {Token::Caret, 0, ""}; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Number, Int(s_.substr(i_, j - i_)), ""};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Name, 0, s_.substr(i_, j - i_)};
            i_ = j;
            return t;
        }
        throw std::invalid_argument(std::string("parse_element: unexpected character '") +
                                    c + "'");
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

}  // namespace

GroupRingElement parse_element(const FiniteGroup& g, const std::string& text) {
    auto resolve = [&g](const std::string& name) -> int {
        for (size_t i = 0; i < g.generator_names().size(); ++i)
            if (g.generator_names()[i] == name) return g.generator_elements()[i];
        // fall back to g<k> indices for groups without named generators
        if (g.generator_names().empty() && name.size() > 1 && name[0] == 'g') {
            int idx = 0;
            for (size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
                idx = idx * 10 + (name[i] - '0');
            }
            return idx < g.order() ? idx : -1;
        }
        return -1;
    };

    Lexer lex(text);
    Token t = lex.next();
    GroupRingElement result = GroupRingElement::zero(g);
    bool any_term = false;

    while (t.kind != Token::End) {
        // sign
        Int sign = 1;
        while (t.kind == Token::Plus || t.kind == Token::Minus) {
            if (t.kind == Token::Minus) sign = -sign;
            t = lex.next();
        }
        Int coeff = sign;
        bool have_number = false;
        bool have_word = false;
        int word = 0;  // identity
        if (t.kind == Token::Number) {
            coeff = sign * t.number;
            have_number = true;
            t = lex.next();
            if (t.kind == Token::Star) t = lex.next();
        }
        while (t.kind == Token::Name) {
            int base = resolve(t.name);
            if (base < 0)
                throw std::invalid_argument("parse_element: unknown generator \"" + t.name +
                                            "\"");
            t = lex.next();
            long exp = 1;
            if (t.kind == Token::Caret) {
                t = lex.next();
                Int sgn = 1;
                if (t.kind == Token::Minus) {
                    sgn = -1;
                    t = lex.next();
                }
                if (t.kind != Token::Number)
                    throw std::invalid_argument("parse_element: malformed exponent");
                exp = sgn.get_si() * t.number.get_si();
                t = lex.next();
            }
            word = g.mul(word, g.power(base, exp));
            have_word = true;
            if (t.kind == Token::Star) t = lex.next();
        }
        if (!have_number && !have_word)
            throw std::invalid_argument("parse_element: expected a term");
        std::map<int, Int> term{{word, coeff}};
        result = result + GroupRingElement::from_coeffs(g, std::move(term));
        any_term = true;
    }
    if (!any_term) throw std::invalid_argument("parse_element: empty expression");
    return result;
}

}  // namespace unitforge
