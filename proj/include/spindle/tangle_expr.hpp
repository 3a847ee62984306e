#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tangle.hpp"

namespace spindle {

enum class ExprKind { Tpi, S, U, M, Mult, Unit, TrL, TrR, E, Rot, Compose, Free, Inv };

struct TangleExpr;
using ExprPtr = std::shared_ptr<TangleExpr>;

struct TangleExpr {
    ExprKind kind;
    int a = 0;      // first numeric parameter (degree, Jones index base, compose slot)
    int b = 0;      // second numeric parameter
    Partition pi;   // payload of Tpi
    std::vector<ExprPtr> kids;
};

inline ExprPtr make_expr(ExprKind k) { return std::make_shared<TangleExpr>(TangleExpr{k, 0, 0, {}, {}}); }

// ---- parsing ----

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void locate(std::size_t at, int& line, int& col) const {
        line = 1;
        col = 1;
        for (std::size_t i = 0; i < at && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }
    [[noreturn]] void fail(const std::string& expected) const {
        int line = 0, col = 0;
        locate(pos, line, col);
        throw SyntaxError(line, col, expected);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("'") + c + "'");
        ++pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("a constructor name");
        return text.substr(start, pos - start);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("an integer");
        return std::stoi(text.substr(start, pos - start));
    }
    std::string until(char close) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != close) ++pos;
        if (pos >= text.size()) fail(std::string("'") + close + "'");
        std::string body = text.substr(start, pos - start);
        ++pos;
        return body;
    }
};

inline ExprPtr parse_expr(Cursor& cur) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    std::string name = cur.ident();
    auto fail_here = [&](const std::string& expected) {
        cur.pos = at;
        cur.fail(expected);
    };
    if (name == "Tpi") {
        cur.expect('[');
        std::size_t body_at = cur.pos;
        std::string body = cur.until(']');
        auto e = make_expr(ExprKind::Tpi);
        try {
            e->pi = parse_partition(body);
        } catch (const Error& err) {
            cur.pos = body_at;
            cur.fail(std::string("a partition (") + err.what() + ")");
        }
        return e;
    }
    if (name == "S" || name == "U" || name == "Mult" || name == "TrL" || name == "TrR" ||
        name == "Rot") {
        auto e = make_expr(name == "S"      ? ExprKind::S
                           : name == "U"    ? ExprKind::U
                           : name == "Mult" ? ExprKind::Mult
                           : name == "TrL"  ? ExprKind::TrL
                           : name == "TrR"  ? ExprKind::TrR
                                            : ExprKind::Rot);
        e->a = cur.integer();
        if (e->a < 1) fail_here("a positive degree");
        return e;
    }
    if (name == "M" || name == "E") {
        auto e = make_expr(name == "M" ? ExprKind::M : ExprKind::E);
        cur.expect('(');
        e->a = cur.integer();
        cur.expect(',');
        e->b = cur.integer();
        cur.expect(')');
        if (e->a < 1 || e->b < 1) fail_here("positive parameters");
        return e;
    }
    if (name == "Unit") return make_expr(ExprKind::Unit);
    if (name == "compose") {
        auto e = make_expr(ExprKind::Compose);
        cur.expect('(');
        e->kids.push_back(parse_expr(cur));
        cur.expect(',');
        e->a = cur.integer();
        cur.expect(',');
        e->kids.push_back(parse_expr(cur));
        cur.expect(')');
        return e;
    }
    if (name == "free") {
        auto e = make_expr(ExprKind::Free);
        cur.expect('(');
        e->kids.push_back(parse_expr(cur));
        cur.expect(',');
        e->kids.push_back(parse_expr(cur));
        cur.expect(')');
        return e;
    }
    if (name == "inv") {
        auto e = make_expr(ExprKind::Inv);
        cur.expect('(');
        e->kids.push_back(parse_expr(cur));
        cur.expect(')');
        return e;
    }
    cur.pos = at;
    cur.fail("one of Tpi, S, U, M, Mult, Unit, TrL, TrR, E, Rot, compose, free, inv");
}

}  // namespace detail

inline ExprPtr parse_tangle_expr(const std::string& text) {
    detail::Cursor cur{text, 0};
    ExprPtr e = detail::parse_expr(cur);
    if (!cur.at_end()) cur.fail("end of input");
    return e;
}

inline std::string expr_str(const TangleExpr& e) {
    switch (e.kind) {
        case ExprKind::Tpi: return "Tpi[" + partition_str(e.pi) + "]";
        case ExprKind::S: return "S " + std::to_string(e.a);
        case ExprKind::U: return "U " + std::to_string(e.a);
        case ExprKind::M:
            return "M(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        case ExprKind::Mult: return "Mult " + std::to_string(e.a);
        case ExprKind::Unit: return "Unit";
        case ExprKind::TrL: return "TrL " + std::to_string(e.a);
        case ExprKind::TrR: return "TrR " + std::to_string(e.a);
        case ExprKind::E:
            return "E(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        case ExprKind::Rot: return "Rot " + std::to_string(e.a);
        case ExprKind::Compose:
            return "compose(" + expr_str(*e.kids[0]) + ", " + std::to_string(e.a) + ", " +
                   expr_str(*e.kids[1]) + ")";
        case ExprKind::Free:
            return "free(" + expr_str(*e.kids[0]) + ", " + expr_str(*e.kids[1]) + ")";
        case ExprKind::Inv: return "inv(" + expr_str(*e.kids[0]) + ")";
    }
    throw Error("expr_str: unknown node");
}

// ---- shape analysis and tangle realization ----

// degree = half the outer point count of the value; slots = degrees of the open
// input disks in composition order.
struct ExprShape {
    int degree = 0;
    std::vector<int> slots;
};

inline Tangle to_tangle(const TangleExpr& e);

inline ExprShape expr_shape(const TangleExpr& e) {
    switch (e.kind) {
        case ExprKind::Tpi: {
            if (e.pi.n % 2 != 0) throw NotEven("expr_shape: Tpi partition of odd order");
            ExprShape sh{e.pi.n / 2, {}};
            for (const auto& b : e.pi.blocks) sh.slots.push_back(static_cast<int>(b.size()) / 2);
            return sh;
        }
        case ExprKind::S:
        case ExprKind::U: return {e.a, {}};
        case ExprKind::M: return {e.a + e.b, {e.a, e.b}};
        case ExprKind::Mult: return {e.a, {e.a, e.a}};
        case ExprKind::Unit: return {1, {}};
        case ExprKind::TrL:
        case ExprKind::TrR: return {0, {e.a}};
        case ExprKind::E: {
            if (e.b < 1 || e.b >= e.a) throw Error("expr_shape: E(k,i) needs 1 <= i < k");
            return {e.a, {}};
        }
        case ExprKind::Rot: return {e.a, {e.a}};
        case ExprKind::Compose: {
            ExprShape sa = expr_shape(*e.kids[0]);
            ExprShape sb = expr_shape(*e.kids[1]);
            if (e.a < 1 || e.a > static_cast<int>(sa.slots.size()))
                throw DegreeMismatch("compose: no open slot " + std::to_string(e.a));
            if (sa.slots[e.a - 1] != sb.degree)
                throw DegreeMismatch("compose: slot expects degree " +
                                     std::to_string(sa.slots[e.a - 1]) + ", got " +
                                     std::to_string(sb.degree));
            ExprShape out{sa.degree, {}};
            for (int i = 0; i < static_cast<int>(sa.slots.size()); ++i)
                if (i != e.a - 1) out.slots.push_back(sa.slots[i]);
            out.slots.insert(out.slots.end(), sb.slots.begin(), sb.slots.end());
            return out;
        }
        case ExprKind::Free: {
            ExprShape sa = expr_shape(*e.kids[0]);
            ExprShape sb = expr_shape(*e.kids[1]);
            if (sa.degree != sb.degree)
                throw DegreeMismatch("free: component degrees differ");
            if (!is_free_pair(to_tangle(*e.kids[0]), to_tangle(*e.kids[1])))
                throw NotFree("free: Kreweras criterion fails");
            ExprShape out{2 * sa.degree, sa.slots};
            out.slots.insert(out.slots.end(), sb.slots.begin(), sb.slots.end());
            return out;
        }
        case ExprKind::Inv: return expr_shape(*e.kids[0]);
    }
    throw Error("expr_shape: unknown node");
}

// Unit and E denote weighted elements rather than bare pictures; E's underlying
// diagram is still available, Unit's is not (it is a sum of loops).
inline Tangle to_tangle(const TangleExpr& e) {
    switch (e.kind) {
        case ExprKind::Tpi: return t_pi(e.pi);
        case ExprKind::S: return s_tangle(e.a);
        case ExprKind::U: return u_tangle(e.a);
        case ExprKind::M: return juxtapose_tangle(e.a, e.b);
        case ExprKind::Mult: return mult_tangle(e.a);
        case ExprKind::Unit:
            throw UnsupportedTangleShape("Unit is not a single tangle");
        case ExprKind::TrL: return trl_tangle(e.a);
        case ExprKind::TrR: return trr_tangle(e.a);
        case ExprKind::E: return jones_tangle(e.a, e.b);
        case ExprKind::Rot: return rot_tangle(e.a);
        case ExprKind::Compose:
            return compose(to_tangle(*e.kids[0]), e.a, to_tangle(*e.kids[1]));
        case ExprKind::Free: return free_compose(to_tangle(*e.kids[0]), to_tangle(*e.kids[1]));
        case ExprKind::Inv: return involution(to_tangle(*e.kids[0]));
    }
    throw Error("to_tangle: unknown node");
}

}  // namespace spindle
