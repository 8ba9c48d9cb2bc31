// Copyright 2026 The ah Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ah/parse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ah {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    std::unique_ptr<ParseNode> run() {
        auto e = expr();
        skip();
        if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
        check_generators(*e);
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what, ErrorKind kind = ErrorKind::SyntaxError) const {
        throw ParseError(kind, pos_, what);
    }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    static std::unique_ptr<ParseNode> node(ParseNode::Kind kind, std::size_t pos) {
        auto n = std::make_unique<ParseNode>();
        n->kind = kind;
        n->position = pos;
        return n;
    }

    std::unique_ptr<ParseNode> binary(ParseNode::Kind kind, std::size_t pos, std::unique_ptr<ParseNode> a,
                                      std::unique_ptr<ParseNode> b) {
        auto n = node(kind, pos);
        n->children.push_back(std::move(a));
        n->children.push_back(std::move(b));
        return n;
    }

    std::unique_ptr<ParseNode> expr() {
        auto lhs = term();
        while (peek('+') || peek('-')) {
            std::size_t at = pos_;
            auto kind = src_[pos_] == '+' ? ParseNode::Kind::Add : ParseNode::Kind::Sub;
            ++pos_;
            lhs = binary(kind, at, std::move(lhs), term());
        }
        return lhs;
    }

    std::unique_ptr<ParseNode> term() {
        auto lhs = factor();
        while (peek('*')) {
            std::size_t at = pos_++;
            lhs = binary(ParseNode::Kind::Mul, at, std::move(lhs), factor());
        }
        return lhs;
    }

    std::unique_ptr<ParseNode> factor() {
        if (peek('-')) {
            auto n = node(ParseNode::Kind::Neg, pos_++);
            n->children.push_back(factor());
            return n;
        }
        auto base = atom();
        if (!peek('^')) return base;
        std::size_t at = pos_++;
        skip();
        if (pos_ < src_.size() && src_[pos_] == '-') error("negative exponent", ErrorKind::NegativeExponent);
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            error("expected a nonnegative integer exponent");
        }
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string digits(src_.substr(start, pos_ - start));
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
            pos_ = start;
            error("exponent too large");
        }
        auto n = node(ParseNode::Kind::Pow, at);
        n->exponent = std::stoul(digits);
        n->children.push_back(std::move(base));
        return n;
    }

    std::unique_ptr<ParseNode> atom() {
        skip();
        if (pos_ >= src_.size()) error("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!peek(')')) error("expected ')'");
            ++pos_;
            return e;
        }
        if (c == 'x' || c == 'Y' || c == 'y') {
            auto n = node(ParseNode::Kind::Var, pos_++);
            n->text = std::string(1, c);
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ParseNode::Kind::Scalar, pos_);
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    error("expected a denominator");
                }
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
            n->text = std::string(src_.substr(start, pos_ - start));
            return n;
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    void check_generators(const ParseNode& root) {
        const ParseNode* first_upper = nullptr;
        const ParseNode* first_lower = nullptr;
        std::function<void(const ParseNode&)> walk = [&](const ParseNode& n) {
            if (n.kind == ParseNode::Kind::Var) {
                if (n.text == "Y" && !first_upper) first_upper = &n;
                if (n.text == "y" && !first_lower) first_lower = &n;
            }
            for (const auto& c : n.children) walk(*c);
        };
        walk(root);
        if (first_upper && first_lower) {
            pos_ = std::max(first_upper->position, first_lower->position);
            error("'Y' and 'y' in one expression", ErrorKind::MixedGenerators);
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

Scalar literal(const std::string& text, const FieldSpec& spec, std::size_t pos) {
    auto slash = text.find('/');
    mpz_class num(text.substr(0, slash));
    if (slash == std::string::npos) return Scalar(spec, num);
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw ParseError(ErrorKind::SyntaxError, pos + slash + 1, "zero denominator");
    if (spec.is_finite() && Scalar(spec, den).is_zero()) {
        throw ParseError(ErrorKind::SyntaxError, pos + slash + 1, "denominator vanishes mod p");
    }
    return Scalar(spec, mpq_class(num, den));
}

// Evaluates the tree in any ring built from scalars and the named generators.
template <typename T>
T evaluate(const ParseNode& n, const std::function<T(const Scalar&)>& from_scalar,
           const std::function<T(const ParseNode&)>& var, const FieldSpec& spec) {
    auto rec = [&](const ParseNode& c) { return evaluate<T>(c, from_scalar, var, spec); };
    switch (n.kind) {
        case ParseNode::Kind::Scalar: return from_scalar(literal(n.text, spec, n.position));
        case ParseNode::Kind::Var: return var(n);
        case ParseNode::Kind::Neg: return from_scalar(-Scalar::one(spec)) * rec(*n.children[0]);
        case ParseNode::Kind::Add: return rec(*n.children[0]) + rec(*n.children[1]);
        case ParseNode::Kind::Sub: return rec(*n.children[0]) - rec(*n.children[1]);
        case ParseNode::Kind::Mul: return rec(*n.children[0]) * rec(*n.children[1]);
        case ParseNode::Kind::Pow: {
            T base = rec(*n.children[0]);
            T out = from_scalar(Scalar::one(spec));
            for (unsigned long i = 0; i < n.exponent; ++i) out = out * base;
            return out;
        }
    }
    fail(ErrorKind::Internal, "unknown parse node");
}

[[noreturn]] void wrong_generator(const ParseNode& n, const std::string& allowed) {
    throw ParseError(ErrorKind::WrongGenerator, n.position, "'" + n.text + "' is not one of " + allowed);
}

}  // namespace

std::unique_ptr<ParseNode> parse_expression(std::string_view src) { return Parser(src).run(); }

Scalar parse_scalar(std::string_view src, const FieldSpec& spec) {
    Poly p = parse_poly(src, spec);
    if (p.degree() > 0) throw ParseError(ErrorKind::SyntaxError, 0, "expected a scalar");
    return p.coeff(0);
}

Poly parse_poly(std::string_view src, const FieldSpec& spec) {
    auto tree = parse_expression(src);
    return evaluate<Poly>(
        *tree, [](const Scalar& c) { return Poly::constant(c); },
        [&](const ParseNode& n) {
            if (n.text != "x") wrong_generator(n, "{x}");
            return Poly::x(spec);
        },
        spec);
}

OreElement parse_element(std::string_view src, const AhContext& ctx) {
    auto tree = parse_expression(src);
    return evaluate<OreElement>(
        *tree, [&](const Scalar& c) { return OreElement::constant(ctx, c); },
        [&](const ParseNode& n) {
            if (n.text == "x") return OreElement::x(ctx);
            if (n.text == "Y") return OreElement::yhat(ctx);
            wrong_generator(n, "{x, Y}");
        },
        ctx.spec());
}

WeylElement parse_weyl(std::string_view src, const FieldSpec& spec) {
    auto tree = parse_expression(src);
    return evaluate<WeylElement>(
        *tree, [&](const Scalar& c) { return WeylElement::from_poly(Poly::constant(c)); },
        [&](const ParseNode& n) {
            if (n.text == "x") return WeylElement::x(spec);
            if (n.text == "y") return WeylElement::y(spec);
            wrong_generator(n, "{x, y}");
        },
        spec);
}

FactoredPoly parse_factored(std::string_view src, const FieldSpec& spec) {
    std::vector<std::string> items;
    int depth = 0;
    std::string cur;
    for (char c : src) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(cur);
    FactoredPoly out{Scalar::one(spec), {}};
    for (std::size_t k = 0; k < items.size(); ++k) {
        const std::string& item = items[k];
        // split a trailing ^digits outside parentheses
        std::string base = item;
        int mult = 1;
        auto caret = item.rfind('^');
        if (caret != std::string::npos) {
            std::string tail = item.substr(caret + 1);
            while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.back()))) tail.pop_back();
            bool digits = !tail.empty() && tail.size() < 6 &&
                          std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (digits) {
                base = item.substr(0, caret);
                mult = std::stoi(tail);
            }
        }
        Poly u = parse_poly(base, spec);
        if (u.is_zero()) fail(ErrorKind::InvalidArgument, "zero factor in factorization");
        if (u.degree() == 0) {
            out.unit *= u.lead().pow(mult);
            continue;
        }
        out.unit *= u.lead().pow(mult);
        Poly m = u.monic();
        auto same = std::find_if(out.factors.begin(), out.factors.end(),
                                 [&](const PrimeFactor& pf) { return pf.factor == m; });
        if (same != out.factors.end()) {
            same->multiplicity += mult;
        } else {
            out.factors.push_back({m, mult, Irreducibility::Verified});
        }
    }
    return out;
}

}  // namespace ah
