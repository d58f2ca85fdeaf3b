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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace qdiag;

namespace {

ParseError parse_error(std::string_view text) {
    try {
        parse(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return ParseError(ParseErrorKind::syntax, {}, "");
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(parse, single_ket) {
    auto src = parse("space a 2\nobj psi a+ = 1 0");
    ASSERT_EQ(src.statements.size(), 2u);
    const auto &o = std::get<ObjectStmt>(src.statements[1]);
    EXPECT_EQ(o.name, "psi");
    ASSERT_EQ(o.legs.size(), 1u);
    EXPECT_EQ(o.legs[0].polarity, Polarity::open);
    EXPECT_EQ(o.data, (std::vector<Complex>{1, 0}));
    EXPECT_EQ(o.span.line, 2u);
    auto built = build(src);
    EXPECT_EQ(built.object("psi").num_legs(), 1u);
}

TEST(parse, complex_values_comments_and_blank_lines) {
    auto src = parse("# header\n\nspace a 2   # two levels\nobj v a- = (0.5,-0.5) +2e-1\n");
    const auto &o = std::get<ObjectStmt>(src.statements[1]);
    EXPECT_EQ(o.data[0], Complex(0.5, -0.5));
    EXPECT_EQ(o.data[1], Complex(0.2, 0));
    EXPECT_EQ(o.legs[0].polarity, Polarity::closed);
}

TEST(parse, unknown_space_reports_line) {
    auto e = parse_error("obj x q+ = 1");
    EXPECT_EQ(e.kind(), ParseErrorKind::unknown_space);
    EXPECT_EQ(e.span().line, 1u);
    EXPECT_EQ(e.span().column, 7u);
    EXPECT_EQ(std::string(e.what()), "1:7: unknown-space: unknown space 'q'");
}

TEST(parse, self_loop_trace) {
    auto built = build(parse("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.2 m.1"));
    ASSERT_EQ(built.diagram.edges().size(), 1u);
    EXPECT_EQ(built.diagram.edges()[0].open.leg, 0u);
    EXPECT_NEAR(std::abs(contract_all(built.diagram).value() - Complex(2)), 0, 1e-15);
}

TEST(parse, error_categories) {
    EXPECT_EQ(parse_error("space a").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("space a 0").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("bogus a 2").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("space a 2\nobj m a* = 1 0").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ = (1,2").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ = 1 nan").kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error("space a 2\nspace a 3").kind(), ParseErrorKind::duplicate_name);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ = 1 0\nobj m a+ = 1 0").kind(), ParseErrorKind::duplicate_name);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ = 1 0 0").kind(), ParseErrorKind::data_length);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.1 m.3").kind(), ParseErrorKind::arity_mismatch);
    EXPECT_EQ(parse_error("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.1 m.1").kind(), ParseErrorKind::arity_mismatch);
    EXPECT_EQ(
        parse_error("space a 2\nspace b 2\nobj m a+ b- = 1 0 0 1\nedge m.1 m.2").kind(),
        ParseErrorKind::arity_mismatch);
    EXPECT_EQ(
        parse_error("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.1 m.2\nedge m.1 m.2").kind(),
        ParseErrorKind::arity_mismatch);
    EXPECT_EQ(parse_error("space a 2\nedge m.1 n.1").kind(), ParseErrorKind::unknown_object);
}

TEST(parse, error_column_points_at_token) {
    auto e = parse_error("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.1   m.9");
    EXPECT_EQ(e.span().line, 3u);
    EXPECT_EQ(e.span().column, 12u);
}

TEST(parse, rejects_control_and_non_ascii_bytes) {
    EXPECT_EQ(parse_error(std::string("space a 2\x01")).kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error(std::string("space \xc3\xa9 2")).kind(), ParseErrorKind::syntax);
    EXPECT_EQ(parse_error(std::string("space a 2\0", 10)).kind(), ParseErrorKind::syntax);
}

TEST(parse, huge_shapes_report_data_length) {
    auto e = parse_error("space a 4294967296\nobj m a+ a+ a+ = 1");
    EXPECT_EQ(e.kind(), ParseErrorKind::data_length);
}

TEST(serialize, complex_entry_and_empty_file) {
    auto src = parse("space a 1\nobj z a+ = (0.5,-0.5)\n");
    EXPECT_EQ(serialize(src), "space a 1\nobj z a+ = (0.5,-0.5)\n");
    EXPECT_EQ(serialize(parse("")), "");
    EXPECT_EQ(serialize(parse("# only a comment\n\n")), "");
}

TEST(serialize, edges_are_written_open_first) {
    auto src = parse("space a 2\nobj m a+ a- = 1 0 0 1\nedge m.2 m.1");
    EXPECT_EQ(serialize(src), "space a 2\nobj m a+ a- = 1 0 0 1\nedge m.1 m.2\n");
}

TEST(serialize, round_trip_is_exact_for_doubles) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    std::string text = "space a 8\nobj x a+ =";
    for (int k = 0; k < 8; k++) {
        text += " (" + std::to_string(u(rng)) + "," + std::to_string(u(rng) * 1e-9) + ")";
    }
    auto src = parse(text);
    EXPECT_TRUE(structurally_equal(parse(serialize(src)), src));
}

TEST(serialize, corpus_round_trip) {
    std::size_t files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(QDIAG_CORPUS_DIR)) {
        if (entry.path().extension() != ".qd") {
            continue;
        }
        auto src = parse(read_file(entry.path()));
        EXPECT_TRUE(structurally_equal(parse(serialize(src)), src)) << entry.path();
        EXPECT_EQ(serialize(parse(serialize(src))), serialize(src)) << entry.path();
        files++;
    }
    EXPECT_GE(files, 10u);
}

TEST(structural_equality, ignores_spans_only) {
    auto x = parse("space a 2\nobj psi a+ = 1 0\n");
    auto y = parse("\n\nspace   a 2\n  obj psi a+ = 1.0 0e0  # same\n");
    EXPECT_TRUE(structurally_equal(x, y));
    EXPECT_FALSE(structurally_equal(x, parse("space a 2\nobj psi a+ = 1 1\n")));
    EXPECT_FALSE(structurally_equal(x, parse("space a 2\nobj psi a- = 1 0\n")));
    EXPECT_FALSE(structurally_equal(x, parse("space a 2\n")));
}

// Properties

TEST(property, parser_never_panics_on_random_bytes) {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> len(0, 80), byte(0, 255);
    for (int trial = 0; trial < 5000; trial++) {
        std::string s;
        for (int k = len(rng); k > 0; k--) {
            s.push_back(static_cast<char>(byte(rng)));
        }
        try {
            parse(s);
        } catch (const ParseError &) {
        }
    }
}

TEST(property, parser_never_panics_on_mutated_sources) {
    const std::string alphabet = "space obj edge a b + - = . ( ) , 0 1 2 9 e E # \n\t-+.";
    std::string seed = "space a 2\nspace b 3\nobj m a+ b- = 1 0 0 0 1 0\nobj k b+ = 1 2 3\nedge k.1 m.2\n";
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> op(0, 2), ch(0, static_cast<int>(alphabet.size()) - 1);
    for (int trial = 0; trial < 5000; trial++) {
        std::string s = seed;
        for (int k = 0; k < 1 + trial % 6; k++) {
            std::uniform_int_distribution<std::size_t> pos(0, s.size());
            std::size_t p = pos(rng);
            switch (op(rng)) {
                case 0:
                    s.insert(s.begin() + static_cast<std::ptrdiff_t>(p), alphabet[ch(rng)]);
                    break;
                case 1:
                    if (p < s.size()) {
                        s.erase(p, 1);
                    }
                    break;
                default:
                    if (p < s.size()) {
                        s[p] = alphabet[ch(rng)];
                    }
            }
        }
        try {
            auto src = parse(s);
            EXPECT_TRUE(structurally_equal(parse(serialize(src)), src));
            build(src);
        } catch (const ParseError &e) {
            EXPECT_GE(e.span().line, 1u);
        }
    }
}
