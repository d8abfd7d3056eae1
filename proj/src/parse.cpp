#include "nsatz/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

namespace nsatz {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

    std::unique_ptr<PolyExpr> run() {
        skip_ws();
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        check_variables();
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool eat(char c) {
        skip_ws();
        if (!at(c)) return false;
        ++pos_;
        return true;
    }

    std::unique_ptr<PolyExpr> parse_expr() {
        auto lhs = parse_term();
        while (true) {
            if (eat('+')) {
                lhs = binary(PolyExpr::Kind::Add, std::move(lhs), parse_term());
            } else if (eat('-')) {
                lhs = binary(PolyExpr::Kind::Sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<PolyExpr> parse_term() {
        auto lhs = parse_unary();
        while (eat('*')) lhs = binary(PolyExpr::Kind::Mul, std::move(lhs), parse_unary());
        return lhs;
    }

    std::unique_ptr<PolyExpr> parse_unary() {
        if (eat('-')) {
            auto node = std::make_unique<PolyExpr>();
            node->kind = PolyExpr::Kind::Neg;
            node->lhs = parse_unary();
            return node;
        }
        return parse_power();
    }

    std::unique_ptr<PolyExpr> parse_power() {
        auto base = parse_primary();
        if (!eat('^')) return base;
        skip_ws();
        int e = parse_small_int("exponent");
        if (e > options_.max_exponent)
            fail("exponent " + std::to_string(e) + " exceeds the cap of " +
                 std::to_string(options_.max_exponent));
        skip_ws();
        if (at('^')) fail("chained '^' is not allowed; exponents are integer literals");
        auto node = std::make_unique<PolyExpr>();
        node->kind = PolyExpr::Kind::Pow;
        node->exponent = e;
        node->lhs = std::move(base);
        return node;
    }

    std::unique_ptr<PolyExpr> parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            int idx = parse_small_int("variable index");
            if (idx < 1) fail("variable indices start at x1");
            if (options_.nvars > 0 && idx > options_.nvars)
                fail("unknown variable x" + std::to_string(idx) + " (nvars = " +
                     std::to_string(options_.nvars) + ")");
            used_vars_.insert(idx);
            auto node = std::make_unique<PolyExpr>();
            node->kind = PolyExpr::Kind::Variable;
            node->var_index = idx;
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto node = std::make_unique<PolyExpr>();
            node->kind = PolyExpr::Kind::Constant;
            node->num = parse_bigint();
            node->den = 1;
            skip_ws();
            if (at('/')) {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected integer denominator after '/'");
                node->den = parse_bigint();
                if (node->den == 0) fail("zero denominator");
            }
            return node;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    mpz_class parse_bigint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int parse_small_int(const char* what) {
        mpz_class v = parse_bigint();
        if (!v.fits_sint_p()) fail(std::string(what) + " is too large");
        return static_cast<int>(v.get_si());
    }

    void check_variables() const {
        if (options_.nvars > 0 || used_vars_.empty()) return;
        int max_idx = *used_vars_.rbegin();
        for (int i = 1; i <= max_idx; ++i)
            if (!used_vars_.count(i))
                throw ParseError("variable x" + std::to_string(i) +
                                 " unused; indices must be contiguous from 1 (or pass nvars)");
    }

    static std::unique_ptr<PolyExpr> binary(PolyExpr::Kind kind, std::unique_ptr<PolyExpr> lhs,
                                            std::unique_ptr<PolyExpr> rhs) {
        auto node = std::make_unique<PolyExpr>();
        node->kind = kind;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    std::string_view text_;
    ParseOptions options_;
    std::size_t pos_ = 0;
    std::set<int> used_vars_;
};

} // namespace

std::unique_ptr<PolyExpr> parse_expression(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).run();
}

int expression_nvars(const PolyExpr& expr) {
    int n = 1;
    switch (expr.kind) {
        case PolyExpr::Kind::Variable: return expr.var_index;
        case PolyExpr::Kind::Constant: return 1;
        case PolyExpr::Kind::Neg:
        case PolyExpr::Kind::Pow: return expression_nvars(*expr.lhs);
        case PolyExpr::Kind::Add:
        case PolyExpr::Kind::Sub:
        case PolyExpr::Kind::Mul:
            n = std::max(expression_nvars(*expr.lhs), expression_nvars(*expr.rhs));
            return n;
    }
    return n;
}

MultivarPoly expression_to_poly(const PolyExpr& expr, const RingSpec& ring, int nvars) {
    switch (expr.kind) {
        case PolyExpr::Kind::Constant:
            return MultivarPoly::constant(ring.from_fraction(expr.num, expr.den), nvars);
        case PolyExpr::Kind::Variable:
            if (expr.var_index > nvars)
                throw ParseError("variable x" + std::to_string(expr.var_index) +
                                 " exceeds nvars = " + std::to_string(nvars));
            return MultivarPoly::variable(ring, nvars, expr.var_index);
        case PolyExpr::Kind::Neg: return -expression_to_poly(*expr.lhs, ring, nvars);
        case PolyExpr::Kind::Add:
            return expression_to_poly(*expr.lhs, ring, nvars) +
                   expression_to_poly(*expr.rhs, ring, nvars);
        case PolyExpr::Kind::Sub:
            return expression_to_poly(*expr.lhs, ring, nvars) -
                   expression_to_poly(*expr.rhs, ring, nvars);
        case PolyExpr::Kind::Mul:
            return expression_to_poly(*expr.lhs, ring, nvars) *
                   expression_to_poly(*expr.rhs, ring, nvars);
        case PolyExpr::Kind::Pow:
            return expression_to_poly(*expr.lhs, ring, nvars)
                .pow(static_cast<unsigned long>(expr.exponent));
    }
    throw Error("unreachable expression kind");
}

MultivarPoly parse_poly(std::string_view text, const RingSpec& ring, const ParseOptions& options) {
    auto expr = parse_expression(text, options);
    int nvars = options.nvars > 0 ? options.nvars : expression_nvars(*expr);
    return expression_to_poly(*expr, ring, nvars);
}

} // namespace nsatz
