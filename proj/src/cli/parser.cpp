#include "cli/parser.hpp"

#include <cctype>

namespace cli {

using exactmath::MPoly;
using exactmath::Rational;
using exactmath::Scalar;

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MPoly run()
    {
        skip();
        if (pos_ >= s_.size())
            throw ParseError("empty expression", pos_);
        MPoly p = expr();
        skip();
        if (pos_ < s_.size())
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr()
    {
        MPoly p = term();
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    MPoly term()
    {
        MPoly p = unary();
        while (accept('*'))
            p = p * unary();
        skip();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
            throw ParseError("implicit multiplication is not allowed", pos_);
        return p;
    }

    MPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    MPoly power()
    {
        MPoly base = atom();
        if (accept('^')) {
            skip();
            size_t start = pos_;
            std::string digits = integer();
            if (digits.empty())
                throw ParseError("exponent must be a non-negative integer", start);
            if (digits.size() > 4)
                throw ParseError("exponent too large", start);
            base = base.pow(std::stoi(digits));
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^')
                throw ParseError("chained exponents need parentheses", pos_);
        }
        return base;
    }

    std::string integer()
    {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    MPoly atom()
    {
        skip();
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!accept(')'))
                throw ParseError("missing ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = integer();
            Rational q(num);
            size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                size_t dpos = pos_;
                std::string den = integer();
                if (den.empty())
                    throw ParseError("denominator must be an integer literal", dpos);
                exactmath::Integer d(den);
                if (d == 0)
                    throw ParseError("zero denominator", dpos);
                q = Rational(exactmath::Integer(num), d);
                q.canonicalize();
            } else {
                pos_ = save;
            }
            return MPoly(Scalar(q));
        }
        static const std::string allowed = "xyzXYWts";
        if (allowed.find(c) != std::string::npos) {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("unknown identifier", pos_ - 1);
            return MPoly::variable(exactmath::var_id(std::string(1, c)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown variable '") + c + "'", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string print_poly(const MPoly& p) { return p.str(); }

} // namespace cli
