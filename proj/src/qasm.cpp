// SPDX-License-Identifier: Apache-2.0
#include "pgopt/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

namespace pgopt::qasm {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1, col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') { ++line; col = 1; } else { ++col; }
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) { advance(); continue; }
            if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            break;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    std::string ident() {
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected identifier");
        std::string out;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            out.push_back(advance());
        return out;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (advance() - '0');
        return v;
    }
};

// angle grammar: expr := ['-'] term (('*'|'/') term)* ; term := number | 'pi'
class AngleParser {
public:
    explicit AngleParser(Cursor& c) : c_(c) {}

    double expr() {
        c_.skip_ws_and_comments();
        bool neg = false;
        while (c_.peek() == '-') { c_.advance(); neg = !neg; c_.skip_ws_and_comments(); }
        double v = term();
        for (;;) {
            c_.skip_ws_and_comments();
            char op = c_.peek();
            if (op != '*' && op != '/') break;
            c_.advance();
            c_.skip_ws_and_comments();
            bool tneg = false;
            while (c_.peek() == '-') { c_.advance(); tneg = !tneg; c_.skip_ws_and_comments(); }
            double t = term();
            if (tneg) t = -t;
            v = op == '*' ? v * t : v / t;
        }
        return neg ? -v : v;
    }

private:
    double term() {
        char c = c_.peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = c_.ident();
            if (id == "pi") return std::numbers::pi;
            c_.fail("unknown constant '" + id + "' in angle expression");
        }
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.')
            c_.fail("expected number in angle expression");
        std::string num;
        while (!c_.eof()) {
            char p = c_.peek();
            if (std::isdigit(static_cast<unsigned char>(p)) || p == '.' || p == 'e' || p == 'E') {
                num.push_back(c_.advance());
                if ((p == 'e' || p == 'E') && (c_.peek() == '+' || c_.peek() == '-'))
                    num.push_back(c_.advance());
            } else {
                break;
            }
        }
        try {
            return std::stod(num);
        } catch (const std::exception&) {
            c_.fail("bad numeric literal '" + num + "'");
        }
    }

    Cursor& c_;
};

constexpr double kHalfPi = std::numbers::pi / 2;

Gate make_gate(const std::string& name, std::optional<double> angle, uint32_t a, uint32_t b,
               Cursor& at) {
    if (name == "h") return Gate::h(a);
    if (name == "x") return Gate::x(a);
    if (name == "z") return Gate::z(a);
    if (name == "s") return Gate::s(a);
    if (name == "sdg") return Gate::sdg(a);
    if (name == "cx") return Gate::cx(a, b);
    if (name == "rz" || name == "u1") return Gate::rz(*angle, a);
    if (name == "rx") {
        if (*angle == kHalfPi) return Gate::v(a);
        if (*angle == -kHalfPi) return Gate::vdg(a);
        return Gate::rx(*angle, a);
    }
    at.fail("unsupported gate '" + name + "'");
}

bool takes_angle(const std::string& name) {
    return name == "rz" || name == "rx" || name == "u1";
}

}  // namespace

double parse_angle_expr(std::string_view text) {
    Cursor c{text};
    AngleParser p(c);
    double v = p.expr();
    c.skip_ws_and_comments();
    if (!c.eof()) c.fail("trailing input after angle expression");
    return v;
}

Circuit parse(std::string_view text) {
    Cursor c{text};
    std::optional<Circuit> circ;
    std::string reg_name;

    c.skip_ws_and_comments();
    while (!c.eof()) {
        int stmt_line = c.line, stmt_col = c.col;
        std::string word = c.ident();

        if (word == "OPENQASM") {
            c.skip_ws_and_comments();
            while (!c.eof() && c.peek() != ';') c.advance();
            c.expect(';');
        } else if (word == "include") {
            while (!c.eof() && c.peek() != ';') c.advance();
            c.expect(';');
        } else if (word == "qreg") {
            c.skip_ws_and_comments();
            std::string name = c.ident();
            c.skip_ws_and_comments();
            c.expect('[');
            long n = c.integer();
            c.expect(']');
            c.skip_ws_and_comments();
            c.expect(';');
            if (circ) throw ParseError("register redeclaration: only one quantum register is supported",
                                       stmt_line, stmt_col);
            if (n <= 0) throw ParseError("register size must be positive", stmt_line, stmt_col);
            circ.emplace(static_cast<uint32_t>(n));
            reg_name = name;
        } else {
            if (!circ) throw ParseError("gate statement before qreg declaration", stmt_line, stmt_col);
            if (word == "measure" || word == "u2" || word == "u3" || word == "creg" ||
                word == "barrier" || word == "reset" || word == "if" || word == "gate")
                throw ParseError("unsupported feature '" + word + "'", stmt_line, stmt_col);

            std::optional<double> angle;
            c.skip_ws_and_comments();
            if (c.peek() == '(') {
                if (!takes_angle(word))
                    throw ParseError("gate '" + word + "' takes no parameter", stmt_line, stmt_col);
                c.advance();
                AngleParser p(c);
                angle = p.expr();
                c.skip_ws_and_comments();
                c.expect(')');
                c.skip_ws_and_comments();
            } else if (takes_angle(word)) {
                c.fail("gate '" + word + "' requires an angle parameter");
            }

            auto operand = [&]() -> uint32_t {
                c.skip_ws_and_comments();
                std::string name = c.ident();
                if (name != reg_name)
                    c.fail("unknown register '" + name + "'");
                c.skip_ws_and_comments();
                c.expect('[');
                long idx = c.integer();
                c.expect(']');
                if (idx < 0 || idx >= long(circ->width()))
                    throw ParseError("qubit index out of range", stmt_line, stmt_col);
                return static_cast<uint32_t>(idx);
            };

            uint32_t a = operand(), b = 0;
            c.skip_ws_and_comments();
            if (word == "cx") {
                c.expect(',');
                b = operand();
                c.skip_ws_and_comments();
                if (a == b) throw ParseError("cx with equal control and target", stmt_line, stmt_col);
            }
            c.expect(';');
            circ->push(make_gate(word, angle, a, b, c));
        }
        c.skip_ws_and_comments();
    }

    if (!circ) throw ParseError("no quantum register declared", c.line, c.col);
    return *circ;
}

static std::string fmt_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::string emit(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.width() << "];\n";
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: os << "h q[" << g.q0 << "];\n"; break;
            case GateKind::X: os << "x q[" << g.q0 << "];\n"; break;
            case GateKind::Z: os << "z q[" << g.q0 << "];\n"; break;
            case GateKind::S: os << "s q[" << g.q0 << "];\n"; break;
            case GateKind::Sdg: os << "sdg q[" << g.q0 << "];\n"; break;
            case GateKind::V: os << "rx(" << fmt_angle(kHalfPi) << ") q[" << g.q0 << "];\n"; break;
            case GateKind::Vdg: os << "rx(" << fmt_angle(-kHalfPi) << ") q[" << g.q0 << "];\n"; break;
            case GateKind::Rz: os << "rz(" << fmt_angle(g.angle) << ") q[" << g.q0 << "];\n"; break;
            case GateKind::Rx: os << "rx(" << fmt_angle(g.angle) << ") q[" << g.q0 << "];\n"; break;
            case GateKind::CX: os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"; break;
        }
    }
    return os.str();
}

}  // namespace pgopt::qasm
