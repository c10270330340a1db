#include "gie/expr.hpp"

#include "gie/core.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace gie {

namespace {

class Reader {
public:
    explicit Reader(std::string_view t) : t_(t) {}

    double run() {
        const double v = expr();
        skip();
        if (pos_ != t_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view t_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("expression '" + std::string(t_) + "': " + why + " at offset " +
                           std::to_string(pos_));
    }

    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < t_.size() && t_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }

    double factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        skip();
        if (t_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            const double v = expr();
            if (!eat(')')) fail("missing ')'");
            if (v < 0) fail("sqrt of a negative number");
            return std::sqrt(v);
        }
        return number();
    }

    double number() {
        skip();
        const std::string rest(t_.substr(pos_));
        const char* begin = rest.c_str();
        char* end = nullptr;
        if (rest.empty() || !(std::isdigit(static_cast<unsigned char>(rest[0])) || rest[0] == '.'))
            fail("expected a number");
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }
};

}  // namespace

double parse_expr(std::string_view text) {
    const double v = Reader(text).run();
    if (!std::isfinite(v)) throw InvalidInput("expression '" + std::string(text) + "' is not finite");
    return v;
}

}  // namespace gie
