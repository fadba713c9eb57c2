/*
   Copyright 2026 The quadcover authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUADCOVER_PARSE_HPP
#define QUADCOVER_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "quadcover/rings.hpp"

namespace quadcover {
namespace detail {

/// Recursive-descent reader for ring element expressions:
///   expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)*
///   factor := atom ['^' digits] ; atom := '(' expr ')' | number | variable
///   number := digits ['/' digits]
class ElementParser {
public:
    ElementParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    RingElem parse() {
        RingElem e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing_input", "unexpected input after expression",
                             location());
        return e;
    }

private:
    RingElem expr() {
        skip_ws();
        bool negate = consume('-');
        RingElem acc = term();
        if (negate) acc = neg(acc);
        while (true) {
            skip_ws();
            if (consume('+'))
                acc = add(acc, term());
            else if (consume('-'))
                acc = sub(acc, term());
            else
                break;
        }
        return acc;
    }

    RingElem term() {
        RingElem acc = factor();
        while (true) {
            skip_ws();
            if (consume('*'))
                acc = mul(acc, factor());
            else
                break;
        }
        return acc;
    }

    RingElem factor() {
        RingElem base = atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty())
                throw ParseError("bad_exponent", "expected digits after '^'", location());
            return pow_u(base, static_cast<std::uint64_t>(std::stoull(digits)));
        }
        return base;
    }

    RingElem atom() {
        skip_ws();
        if (consume('(')) {
            RingElem e = expr();
            skip_ws();
            if (!consume(')'))
                throw ParseError("unbalanced_parens", "expected ')'", location());
            return e;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            BigInt num(read_digits());
            skip_ws();
            if (consume('/')) {
                skip_ws();
                std::string den = read_digits();
                if (den.empty())
                    throw ParseError("bad_number", "expected digits after '/'", location());
                return mul(make_int(ring_, num), inv(make_int(ring_, BigInt(den))));
            }
            return make_int(ring_, num);
        }
        std::string name = read_ident();
        if (name.empty())
            throw ParseError("bad_token", "expected a number, variable or '('", location());
        if (ring_.kind() != RingKind::Polynomial)
            throw ParseError("no_variables",
                             "variable '" + name + "' in a ring without variables", location());
        try {
            return variable(ring_, std::string_view(name));
        } catch (const DomainError&) {
            throw ParseError("unknown_variable", "unknown variable '" + name + "'", location());
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out.push_back(text_[pos_++]);
        return out;
    }

    std::string read_ident() {
        std::string out;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos_ < text_.size() && head(text_[pos_])) {
            out.push_back(text_[pos_++]);
            while (pos_ < text_.size() && tail(text_[pos_])) out.push_back(text_[pos_++]);
        }
        return out;
    }

    std::string location() const { return "offset " + std::to_string(pos_); }

    const Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Read an element of the given ring from text. Quotient rings parse the
/// representative in their polynomial base and reduce.
inline RingElem parse_element(const Ring& ring, std::string_view text) {
    if (ring.kind() == RingKind::Quotient) {
        RingElem rep = detail::ElementParser(ring.base(), text).parse();
        return quotient_class(ring, rep);
    }
    return detail::ElementParser(ring, text).parse();
}

}  // namespace quadcover

#endif  // QUADCOVER_PARSE_HPP
