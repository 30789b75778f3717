#include "skein/expr.hpp"

#include "skein/families.hpp"

#include <cctype>

namespace skein {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::optional<Nu1Context> ctx) : s_(text), ctx_(ctx) {}

    SkeinVector run() {
        SkeinVector v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    mpz_class unsigned_int() {
        skip();
        const size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    int small_int() {
        const size_t at = pos_;
        const bool neg = accept('-');
        if (!neg) accept('+');
        mpz_class v = unsigned_int();
        if (neg) v = -v;
        if (!v.fits_sint_p()) throw ParseError(at, "integer out of range");
        return static_cast<int>(v.get_si());
    }

    SkeinVector expr() {
        SkeinVector v = accept('-') ? -term() : term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    SkeinVector term() {
        SkeinVector v = factor();
        while (accept('*')) v = v * factor();
        return v;
    }

    SkeinVector factor() {
        SkeinVector base = atom();
        if (!accept('^')) return base;
        const size_t exp_at = (skip(), pos_);
        const int e = small_int();
        if (e < 0) {
            auto inv = unit_inverse(base);
            if (!inv) throw ParseError(exp_at, "negative exponent where nonnegative required");
            return power(*inv, -e);
        }
        return power(base, e);
    }

    static std::optional<SkeinVector> unit_inverse(const SkeinVector& v) {
        if (v.terms().size() != 1) return std::nullopt;
        const auto& [w, c] = *v.terms().begin();
        if (!w.is_empty() || !c.is_monomial()) return std::nullopt;
        const auto& [e, k] = c.terms().front();
        if (k != 1 && k != -1) return std::nullopt;
        return SkeinVector(Laurent::monomial(-e, k));
    }

    static SkeinVector power(const SkeinVector& base, int e) {
        SkeinVector r(Laurent(1));
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    }

    std::string ident() {
        skip();
        const size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    SkeinVector atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept('(')) {
            SkeinVector v = expr();
            expect(')');
            return v;
        }
        if (peek_digit()) return SkeinVector(Laurent(unsigned_int()));
        const size_t at = pos_;
        const std::string name = ident();
        if (name.empty()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        if (name == "A") return SkeinVector(Apow(1));
        if (name == "l") return SkeinVector(Word::lambda(1));
        expect('(');
        const int m = small_int();
        std::optional<int> n;
        if (accept(',')) n = small_int();
        expect(')');
        try {
            return call(name, m, n, at);
        } catch (const std::domain_error& e) {
            throw ParseError(at, e.what());
        }
    }

    SkeinVector call(const std::string& name, int m, std::optional<int> n, size_t at) {
        auto single = [&]() {
            if (n) throw ParseError(at, name + " takes one index");
        };
        auto poly = [](const LambdaPoly& p) { return SkeinVector::from_poly(p); };
        if (name == "x") {
            single();
            return SkeinVector(Word::x(m));
        }
        if (name == "t" || name == "P") {
            if (n && *n < 0) throw ParseError(at, "negative exponent where nonnegative required");
            return poly(t_substitute(m, n.value_or(0)));
        }
        single();
        if (name == "Q") return poly(poly_Q(m));
        if (name == "F") return poly(poly_F(m));
        if (name == "R") return poly(poly_R(m));
        if (name == "phi") return poly(poly_phi(m));
        if (name == "psi") {
            if (!ctx_) throw ParseError(at, "psi needs a manifold context");
            return expand_polynomial_at(Word::x(ctx_->nu1), poly_psi_core(m), Word());
        }
        throw ParseError(at, "unknown generator '" + name + "'");
    }

    std::string_view s_;
    std::optional<Nu1Context> ctx_;
    size_t pos_ = 0;
};

std::string format_term(const Word& w, const Laurent& c) {
    const bool single = c.is_monomial();
    if (w.is_empty()) return single ? c.str() : "(" + c.str() + ")";
    if (c == Laurent(1)) return w.str();
    if (c == Laurent(-1)) return "-" + w.str();
    return (single ? c.str() : "(" + c.str() + ")") + "*" + w.str();
}

}  // namespace

SkeinVector parse_expression(std::string_view text, std::optional<Nu1Context> ctx) {
    return Parser(text, ctx).run();
}

std::string format_expression(const SkeinVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : v.terms()) {
        std::string t = format_term(w, c);
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

}  // namespace skein
