// Copyright 2026 The qdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiag/dsl.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace qdiag {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::syntax:
            return "syntax";
        case ParseErrorKind::unknown_space:
            return "unknown-space";
        case ParseErrorKind::unknown_object:
            return "unknown-object";
        case ParseErrorKind::arity_mismatch:
            return "arity-mismatch";
        case ParseErrorKind::duplicate_name:
            return "duplicate-name";
        case ParseErrorKind::data_length:
            return "data-length";
    }
    return "syntax";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string &message)
    : std::runtime_error(
          std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + std::string(to_string(kind)) +
          ": " + message),
      kind_(kind),
      span_(span),
      detail_(message) {
}

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_number_char(char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '+' || c == '-' || c == 'e' || c == 'E';
}

/// Cursor over one line (comment already stripped).
class LineCursor {
   public:
    LineCursor(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {
    }

    SourceSpan here() const {
        return {line_, pos_ + 1};
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) {
            pos_++;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    /// Next character with no whitespace skipped.
    char peek_raw() const {
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(ParseErrorKind::syntax, here(), msg);
    }

    std::string ident(const char *what) {
        skip_ws();
        if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) {
            fail(std::string("expected ") + what);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) {
            pos_++;
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    std::size_t integer(const char *what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            pos_++;
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
        if (start == pos_ || ec != std::errc() || ptr != s_.data() + pos_) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        return value;
    }

    double real() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_number_char(s_[pos_])) {
            pos_++;
        }
        // from_chars rejects a leading '+'; accept it as the grammar's FLOAT does.
        std::size_t first = start;
        if (first < pos_ && s_[first] == '+') {
            first++;
        }
        double value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + first, s_.data() + pos_, value);
        if (start == pos_ || ec != std::errc() || ptr != s_.data() + pos_ || !std::isfinite(value)) {
            pos_ = start;
            fail("expected a finite number");
        }
        return value;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos_++;
    }

    void expect_raw(char c, const char *msg) {
        if (pos_ >= s_.size() || s_[pos_] != c) {
            fail(msg);
        }
        pos_++;
    }

    void advance() {
        pos_++;
    }

    void expect_end() {
        if (!at_end()) {
            fail("unexpected trailing text");
        }
    }

   private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct ObjectInfo {
    std::vector<LegDecl> legs;
    std::vector<std::string> space_of_leg;
};

class Validator {
   public:
    void space(const SpaceStmt &s) {
        if (spaces_.count(s.label)) {
            throw ParseError(ParseErrorKind::duplicate_name, s.span, "space '" + s.label + "' already declared");
        }
        spaces_[s.label] = s.dim;
    }

    void object(const ObjectStmt &o, const std::vector<SourceSpan> &leg_spans, SourceSpan data_span) {
        if (objects_.count(o.name)) {
            throw ParseError(ParseErrorKind::duplicate_name, o.span, "object '" + o.name + "' already declared");
        }
        // Saturating product so absurd declared shapes report a length error, not overflow.
        std::size_t expected = 1;
        bool overflow = false;
        for (std::size_t k = 0; k < o.legs.size(); k++) {
            auto it = spaces_.find(o.legs[k].space);
            if (it == spaces_.end()) {
                throw ParseError(ParseErrorKind::unknown_space, leg_spans[k], "unknown space '" + o.legs[k].space + "'");
            }
            if (expected > SIZE_MAX / it->second) {
                overflow = true;
            } else {
                expected *= it->second;
            }
        }
        if (overflow || expected != o.data.size()) {
            throw ParseError(
                ParseErrorKind::data_length,
                data_span,
                "object '" + o.name + "' has " + std::to_string(o.data.size()) + " values, legs require " +
                    (overflow ? std::string("more than SIZE_MAX") : std::to_string(expected)));
        }
        objects_[o.name] = o.legs;
    }

    /// Accepts the endpoints in either order and stores them open-first.
    void edge(EdgeStmt &e, SourceSpan &open_span, SourceSpan &closed_span) {
        const LegDecl *a = &endpoint(e.open, open_span);
        const LegDecl *b = &endpoint(e.closed, closed_span);
        if (a->polarity == Polarity::closed && b->polarity == Polarity::open) {
            std::swap(e.open, e.closed);
            std::swap(open_span, closed_span);
            std::swap(a, b);
        }
        if (a->polarity != Polarity::open || b->polarity != Polarity::closed) {
            throw ParseError(
                ParseErrorKind::arity_mismatch, closed_span, "edge must join an open leg to a closed leg");
        }
        if (a->space != b->space) {
            throw ParseError(
                ParseErrorKind::arity_mismatch, closed_span, "edge joins space '" + a->space + "' to '" + b->space + "'");
        }
        for (const auto *r : {&e.open, &e.closed}) {
            auto key = std::make_pair(r->object, r->leg);
            if (!used_.insert(key).second) {
                throw ParseError(
                    ParseErrorKind::arity_mismatch,
                    r == &e.open ? open_span : closed_span,
                    "leg " + r->object + "." + std::to_string(r->leg) + " is already contracted");
            }
        }
    }

   private:
    const LegDecl &endpoint(const LegRefDecl &r, SourceSpan span) {
        auto it = objects_.find(r.object);
        if (it == objects_.end()) {
            throw ParseError(ParseErrorKind::unknown_object, span, "unknown object '" + r.object + "'");
        }
        if (r.leg < 1 || r.leg > it->second.size()) {
            throw ParseError(
                ParseErrorKind::arity_mismatch,
                span,
                "object '" + r.object + "' has " + std::to_string(it->second.size()) + " legs, not " +
                    std::to_string(r.leg));
        }
        return it->second[r.leg - 1];
    }

    std::map<std::string, std::size_t> spaces_;
    std::map<std::string, std::vector<LegDecl>> objects_;
    std::set<std::pair<std::string, std::size_t>> used_;
};

LegRefDecl leg_ref(LineCursor &cur) {
    LegRefDecl r;
    r.object = cur.ident("object name");
    cur.expect_raw('.', "expected '.' after object name");
    if (!(cur.peek_raw() >= '0' && cur.peek_raw() <= '9')) {
        cur.fail("expected leg number");
    }
    r.leg = cur.integer("leg number");
    return r;
}

void parse_line(std::string_view line, std::size_t line_no, DiagramSource &out, Validator &check) {
    LineCursor cur(line, line_no);
    if (cur.at_end()) {
        return;
    }
    SourceSpan start = cur.here();
    std::string keyword = cur.ident("'space', 'obj' or 'edge'");

    if (keyword == "space") {
        SpaceStmt s;
        s.span = start;
        s.label = cur.ident("space label");
        SourceSpan dim_span = (cur.skip_ws(), cur.here());
        s.dim = cur.integer("dimension");
        if (s.dim == 0) {
            throw ParseError(ParseErrorKind::syntax, dim_span, "dimension must be at least 1");
        }
        cur.expect_end();
        check.space(s);
        out.statements.emplace_back(std::move(s));
        return;
    }

    if (keyword == "obj") {
        ObjectStmt o;
        o.span = start;
        o.name = cur.ident("object name");
        std::vector<SourceSpan> leg_spans;
        while (cur.peek() != '=') {
            if (cur.at_end()) {
                cur.fail("expected '=' before data");
            }
            leg_spans.push_back(cur.here());
            LegDecl leg;
            leg.space = cur.ident("leg (space label followed by + or -)");
            char pol = cur.peek_raw();
            if (pol != '+' && pol != '-') {
                cur.fail("expected '+' or '-' after leg space");
            }
            cur.advance();
            leg.polarity = pol == '+' ? Polarity::open : Polarity::closed;
            o.legs.push_back(std::move(leg));
        }
        if (o.legs.empty()) {
            cur.fail("object needs at least one leg");
        }
        cur.expect('=');
        SourceSpan data_span = (cur.skip_ws(), cur.here());
        while (!cur.at_end()) {
            if (cur.peek() == '(') {
                cur.advance();
                double re = cur.real();
                cur.expect(',');
                double im = cur.real();
                cur.expect(')');
                o.data.emplace_back(re, im);
            } else {
                o.data.emplace_back(cur.real(), 0.0);
            }
        }
        if (o.data.empty()) {
            cur.fail("expected at least one value");
        }
        check.object(o, leg_spans, data_span);
        out.statements.emplace_back(std::move(o));
        return;
    }

    if (keyword == "edge") {
        EdgeStmt e;
        e.span = start;
        SourceSpan open_span = (cur.skip_ws(), cur.here());
        e.open = leg_ref(cur);
        SourceSpan closed_span = (cur.skip_ws(), cur.here());
        e.closed = leg_ref(cur);
        cur.expect_end();
        check.edge(e, open_span, closed_span);
        out.statements.emplace_back(std::move(e));
        return;
    }

    throw ParseError(ParseErrorKind::syntax, start, "unknown statement '" + keyword + "'");
}

bool same_legs(const std::vector<LegDecl> &x, const std::vector<LegDecl> &y) {
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t k = 0; k < x.size(); k++) {
        if (x[k].space != y[k].space || x[k].polarity != y[k].polarity) {
            return false;
        }
    }
    return true;
}

struct StatementEq {
    bool operator()(const SpaceStmt &x, const SpaceStmt &y) const {
        return x.label == y.label && x.dim == y.dim;
    }
    bool operator()(const ObjectStmt &x, const ObjectStmt &y) const {
        return x.name == y.name && same_legs(x.legs, y.legs) && x.data == y.data;
    }
    bool operator()(const EdgeStmt &x, const EdgeStmt &y) const {
        return x.open.object == y.open.object && x.open.leg == y.open.leg && x.closed.object == y.closed.object &&
               x.closed.leg == y.closed.leg;
    }
    template <typename A, typename B>
    bool operator()(const A &, const B &) const {
        return false;
    }
};

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

bool structurally_equal(const DiagramSource &x, const DiagramSource &y) {
    if (x.statements.size() != y.statements.size()) {
        return false;
    }
    for (std::size_t k = 0; k < x.statements.size(); k++) {
        if (!std::visit(StatementEq{}, x.statements[k], y.statements[k])) {
            return false;
        }
    }
    return true;
}

DiagramSource parse(std::string_view text) {
    DiagramSource out;
    Validator check;
    std::size_t line_no = 1;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(begin, end - begin);
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        for (std::size_t k = 0; k < line.size(); k++) {
            unsigned char ch = static_cast<unsigned char>(line[k]);
            if (ch == 0 || ch >= 0x80 || (ch < 0x20 && ch != '\t' && ch != '\r')) {
                throw ParseError(ParseErrorKind::syntax, {line_no, k + 1}, "unexpected character");
            }
        }
        parse_line(line, line_no, out, check);
        if (end == text.size()) {
            break;
        }
        begin = end + 1;
        line_no++;
    }
    return out;
}

std::string serialize(const DiagramSource &source) {
    std::string out;
    for (const auto &st : source.statements) {
        if (const auto *s = std::get_if<SpaceStmt>(&st)) {
            out += "space " + s->label + " " + std::to_string(s->dim) + "\n";
        } else if (const auto *o = std::get_if<ObjectStmt>(&st)) {
            out += "obj " + o->name;
            for (const auto &l : o->legs) {
                out += " " + l.space + (l.polarity == Polarity::open ? "+" : "-");
            }
            out += " =";
            for (const auto &z : o->data) {
                if (z.imag() == 0 && !std::signbit(z.imag())) {
                    out += " " + format_real(z.real());
                } else {
                    out += " (" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
                }
            }
            out += "\n";
        } else if (const auto *e = std::get_if<EdgeStmt>(&st)) {
            out += "edge " + e->open.object + "." + std::to_string(e->open.leg) + " " + e->closed.object + "." +
                   std::to_string(e->closed.leg) + "\n";
        }
    }
    return out;
}

std::size_t BuiltDiagram::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < names.size(); k++) {
        if (names[k] == name) {
            return k;
        }
    }
    throw std::out_of_range("no object named '" + std::string(name) + "'");
}

BuiltDiagram build(const DiagramSource &source) {
    BuiltDiagram out;
    for (const auto &st : source.statements) {
        if (const auto *s = std::get_if<SpaceStmt>(&st)) {
            out.spaces.add(s->label, s->dim);
        } else if (const auto *o = std::get_if<ObjectStmt>(&st)) {
            std::vector<Leg> legs;
            for (const auto &l : o->legs) {
                legs.push_back(Leg{out.spaces.get(l.space), l.polarity});
            }
            out.diagram.add_object(TensorObject(o->name, std::move(legs), o->data));
            out.names.push_back(o->name);
        } else if (const auto *e = std::get_if<EdgeStmt>(&st)) {
            out.diagram.connect(
                {out.index_of(e->open.object), e->open.leg - 1}, {out.index_of(e->closed.object), e->closed.leg - 1});
        }
    }
    return out;
}

}  // namespace qdiag
