#include "cyc/classexpr.hpp"

#include <cctype>

namespace cyc {

namespace {

std::string caret_message(const std::string& text, std::size_t pos, const std::string& what)
{
    return what + " at position " + std::to_string(pos) + "\n  " + text + "\n  " + std::string(pos, ' ') + "^";
}

class Parser {
public:
    Parser(const std::string& text, const VSpace& V) : s_(text), V_(V) {}

    TensorElement parse()
    {
        TensorElement out;
        skip();
        if (at_end())
            error("empty expression");
        bool first = true;
        while (!at_end()) {
            Scalar sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++i_;
                skip();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            auto [c, w] = term();
            out.add(w, sign * c);
            first = false;
            skip();
        }
        return out;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    [[noreturn]] void error(const std::string& what) const { throw ExpressionError(s_, i_, what); }

    std::pair<Scalar, Word> term()
    {
        Scalar c = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            skip();
            if (peek() == '*') {
                ++i_;
                skip();
            }
        }
        return {c, word()};
    }

    Scalar number()
    {
        std::size_t start = i_;
        auto digits = [&] {
            std::size_t b = i_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++i_;
            return s_.substr(b, i_ - b);
        };
        std::string num = digits(), den = "1";
        if (peek() == '/') {
            ++i_;
            den = digits();
            if (den.empty())
                error("expected a denominator");
        }
        mpz_class d(den);
        if (d == 0) {
            i_ = start;
            error("zero denominator");
        }
        return frac_of(mpz_class(num), d);
    }

    static Scalar frac_of(const mpz_class& n, const mpz_class& d)
    {
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }

    int letter()
    {
        std::size_t start = i_;
        if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            error("expected a generator label");
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            ++i_;
        std::string label = s_.substr(start, i_ - start);
        for (int k = 0; k < V_.size(); ++k)
            if (V_.names[k] == label)
                return k;
        i_ = start;
        error("unknown generator '" + label + "'");
    }

    Word word()
    {
        if (peek() != '(')
            return {letter()};
        ++i_;
        skip();
        Word w;
        while (true) {
            w.push_back(letter());
            skip();
            if (peek() == ',') {
                ++i_;
                skip();
                continue;
            }
            if (peek() == ')') {
                ++i_;
                return w;
            }
            error("expected ',' or ')'");
        }
    }

    const std::string& s_;
    const VSpace& V_;
    std::size_t i_ = 0;
};

}  // namespace

ExpressionError::ExpressionError(const std::string& text, std::size_t pos, const std::string& what)
    : std::invalid_argument(caret_message(text, pos, what)), position(pos)
{
}

TensorElement parse_class_expression(const std::string& text, const VSpace& V)
{
    return Parser(text, V).parse();
}

}  // namespace cyc
