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

// A line-oriented text format for diagrams.
//
//   space a 2
//   obj psi a+ a+ = 1 0 0 (0,1)    # data row-major over the legs
//   edge psi.1 rho.2               # 1-based; stored open leg first
//
// '#' starts a comment. Values are real numbers or (re,im) pairs.

#ifndef QDIAG_DSL_H
#define QDIAG_DSL_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdiag/tensor.h"

namespace qdiag {

struct SourceSpan {
    std::size_t line = 0;
    std::size_t column = 0;
};

enum class ParseErrorKind { syntax, unknown_space, unknown_object, arity_mismatch, duplicate_name, data_length };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string &message);

    ParseErrorKind kind() const {
        return kind_;
    }
    SourceSpan span() const {
        return span_;
    }
    /// The message without the location and category prefix.
    const std::string &detail() const {
        return detail_;
    }

   private:
    ParseErrorKind kind_;
    SourceSpan span_;
    std::string detail_;
};

struct SpaceStmt {
    std::string label;
    std::size_t dim = 1;
    SourceSpan span;
};

struct LegDecl {
    std::string space;
    Polarity polarity = Polarity::open;
};

struct ObjectStmt {
    std::string name;
    std::vector<LegDecl> legs;
    std::vector<Complex> data;
    SourceSpan span;
};

struct LegRefDecl {
    std::string object;
    std::size_t leg = 1;  // 1-based
};

struct EdgeStmt {
    LegRefDecl open;
    LegRefDecl closed;
    SourceSpan span;
};

using Statement = std::variant<SpaceStmt, ObjectStmt, EdgeStmt>;

struct DiagramSource {
    std::vector<Statement> statements;
};

/// Same statements in the same order, ignoring source spans.
bool structurally_equal(const DiagramSource &x, const DiagramSource &y);

/// Parses and validates. Throws ParseError.
DiagramSource parse(std::string_view text);

/// Inverse of parse up to spans and comments; numbers use 17 significant digits.
std::string serialize(const DiagramSource &source);

struct BuiltDiagram {
    SpaceRegistry spaces;
    Diagram diagram;
    std::vector<std::string> names;

    /// Index of the named object; throws std::out_of_range.
    std::size_t index_of(std::string_view name) const;
    const TensorObject &object(std::string_view name) const {
        return diagram.objects()[index_of(name)];
    }
};

BuiltDiagram build(const DiagramSource &source);

}  // namespace qdiag

#endif
