#include "waring/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace waring {

namespace {

struct RawTerm {
    std::string coeff_text;  // may be empty (meaning 1)
    std::vector<std::pair<std::string, int>> powers;
    int sign = 1;
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Splits "a*b^2*c" style factors; numeric factors join the coefficient text.
RawTerm parse_term(const std::string& term, const std::string& where) {
    RawTerm out;
    std::vector<std::string> factors;
    std::string cur;
    int depth = 0;
    for (char c : term) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            if (cur.empty()) throw ParseError("empty factor in term '" + where + "'");
            factors.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (cur.empty()) throw ParseError("empty factor in term '" + where + "'");
    factors.push_back(cur);

    std::string coeff;
    for (const auto& f : factors) {
        if (f.front() == '(') {
            if (f.back() != ')') throw ParseError("unbalanced parentheses in '" + where + "'");
            if (!coeff.empty())
                throw ParseError("multiple numeric factors in term '" + where + "'");
            coeff = f.substr(1, f.size() - 2);
            continue;
        }
        if (f == "i") {
            coeff = coeff.empty() ? "i" : coeff + "*i";
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            if (!coeff.empty() && coeff != "i")
                throw ParseError("multiple numeric factors in term '" + where + "'");
            coeff = (coeff == "i") ? f + "*i" : f;
            continue;
        }
        auto caret = f.find('^');
        std::string name = (caret == std::string::npos) ? f : f.substr(0, caret);
        int power = 1;
        if (caret != std::string::npos) {
            std::string exp = f.substr(caret + 1);
            if (exp.empty() ||
                !std::all_of(exp.begin(), exp.end(),
                             [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("bad exponent in '" + f + "'");
            power = std::stoi(exp);
        }
        if (name.empty() || !std::all_of(name.begin(), name.end(), is_name_char))
            throw ParseError("bad variable name '" + name + "'");
        out.powers.emplace_back(name, power);
    }
    out.coeff_text = coeff;
    return out;
}

std::vector<RawTerm> tokenize(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");

    std::vector<RawTerm> terms;
    size_t i = 0;
    int sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = (s[0] == '-') ? -1 : 1;
        i = 1;
    }
    std::string cur;
    int depth = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (--depth < 0) throw ParseError("unbalanced parentheses in '" + text + "'");
        }
        bool splitter = depth == 0 && (c == '+' || c == '-') && i > 0 && s[i - 1] != '^' &&
                        s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-';
        if (splitter) {
            if (cur.empty()) throw ParseError("empty term in '" + text + "'");
            RawTerm t = parse_term(cur, cur);
            t.sign = sign;
            terms.push_back(std::move(t));
            cur.clear();
            sign = (c == '-') ? -1 : 1;
        } else {
            cur.push_back(c);
        }
    }
    if (cur.empty()) throw ParseError("trailing operator in '" + text + "'");
    RawTerm t = parse_term(cur, cur);
    t.sign = sign;
    terms.push_back(std::move(t));
    return terms;
}

struct NameTable {
    std::vector<std::string> names;
    bool fixed = false;

    int index_of(const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        if (fixed) throw ParseError("unknown variable '" + name + "'");
        // Default scheme: x<k> indexes directly.
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            int idx = std::stoi(name.substr(1));
            while (static_cast<int>(names.size()) <= idx)
                names.push_back("x" + std::to_string(names.size()));
            return idx;
        }
        throw ParseError("unknown variable '" + name + "' (declare names with --vars)");
    }
};

template <class F, class CoeffParse>
Poly<F> parse_impl(const std::string& text, const ParseOptions& opts, CoeffParse parse_coeff) {
    auto raw = tokenize(text);

    NameTable table;
    if (!opts.variables.empty()) {
        table.names = opts.variables;
        table.fixed = true;
    } else if (opts.nvars) {
        for (int i = 0; i < *opts.nvars; ++i) table.names.push_back("x" + std::to_string(i));
        table.fixed = true;
    }

    struct Scanned {
        F coeff;
        std::vector<std::pair<int, int>> powers;
        int degree;
    };
    std::vector<Scanned> scanned;
    std::vector<int> degrees;
    for (const auto& t : raw) {
        Scanned sc;
        sc.coeff = t.coeff_text.empty() ? FieldTraits<F>::one() : parse_coeff(t.coeff_text);
        if (t.sign < 0) sc.coeff = -sc.coeff;
        sc.degree = 0;
        for (const auto& [name, power] : t.powers) {
            sc.powers.emplace_back(table.index_of(name), power);
            sc.degree += power;
        }
        degrees.push_back(sc.degree);
        scanned.push_back(std::move(sc));
    }

    int degree = degrees.empty() ? 0 : degrees[0];
    for (size_t i = 1; i < degrees.size(); ++i) {
        if (degrees[i] != degree) {
            std::ostringstream msg;
            msg << "not homogeneous: term degrees";
            for (int d : degrees) msg << " " << d;
            throw ParseError(msg.str());
        }
    }

    int nvars = opts.nvars ? *opts.nvars : static_cast<int>(table.names.size());
    if (!opts.variables.empty()) nvars = static_cast<int>(opts.variables.size());
    Poly<F> out(nvars, degree);
    for (const auto& sc : scanned) {
        std::vector<int> e(nvars, 0);
        for (const auto& [idx, power] : sc.powers) {
            if (idx >= nvars) throw ParseError("variable index out of range");
            e[idx] += power;
        }
        out.add_term(Monomial(std::move(e)), sc.coeff);
    }
    return out;
}

Rational parse_rational_coeff(const std::string& s) {
    if (s.find('i') != std::string::npos)
        throw ParseError("imaginary coefficient in a rational polynomial");
    return Rational::parse(s);
}

GaussianRational parse_gaussian_coeff(const std::string& s) {
    return GaussianRational::parse(s);
}

template <class F, class CoeffParse>
Decomposition<F> parse_decomp_impl(const std::string& text, int nvars, int degree,
                                   CoeffParse parse_coeff) {
    Decomposition<F> dec;
    dec.degree = degree;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty() || s[0] == '#') continue;
        auto bar = s.find('|');
        if (bar == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'coeff | c1, ..., cn'");
        F coeff = parse_coeff(s.substr(0, bar));
        std::vector<F> c;
        std::string rest = s.substr(bar + 1);
        std::string tok;
        std::istringstream comma(rest);
        while (std::getline(comma, tok, ','))
            c.push_back(parse_coeff(tok));
        if (static_cast<int>(c.size()) != nvars)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(nvars) + " coordinates");
        dec.terms.emplace_back(std::move(coeff), LinearForm<F>(std::move(c)));
    }
    return dec;
}

}  // namespace

Poly<Rational> parse_poly(const std::string& text, const ParseOptions& opts) {
    return parse_impl<Rational>(text, opts, parse_rational_coeff);
}

Poly<GaussianRational> parse_poly_gaussian(const std::string& text, const ParseOptions& opts) {
    return parse_impl<GaussianRational>(text, opts, parse_gaussian_coeff);
}

Poly<Rational> poly_from_structured(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("structured polynomial: ") + e.what());
    }
    if (!doc.is_array() || doc.empty())
        throw ParseError("structured polynomial: expected a nonempty array of terms");
    int nvars = -1;
    std::vector<std::pair<std::vector<int>, Rational>> terms;
    for (const auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
            throw ParseError("structured polynomial: each term is [exponents, coefficient]");
        std::vector<int> e;
        for (const auto& x : entry[0]) {
            if (!x.is_number_integer() || x.get<int>() < 0)
                throw ParseError("structured polynomial: exponents are nonnegative integers");
            e.push_back(x.get<int>());
        }
        if (nvars < 0) nvars = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != nvars)
            throw ParseError("structured polynomial: inconsistent exponent-vector lengths");
        Rational c = entry[1].is_string() ? Rational::parse(entry[1].get<std::string>())
                                          : Rational(entry[1].get<long>());
        terms.emplace_back(std::move(e), std::move(c));
    }
    int degree = Monomial(terms[0].first).degree();
    Poly<Rational> out(nvars, degree);
    for (auto& [e, c] : terms) {
        Monomial m(std::move(e));
        if (m.degree() != degree)
            throw ParseError("structured polynomial: not homogeneous (degrees " +
                             std::to_string(degree) + " and " + std::to_string(m.degree()) +
                             ")");
        out.add_term(std::move(m), c);
    }
    return out;
}

Decomposition<Rational> parse_decomposition(const std::string& text, int nvars, int degree) {
    return parse_decomp_impl<Rational>(text, nvars, degree, parse_rational_coeff);
}

Decomposition<GaussianRational> parse_decomposition_gaussian(const std::string& text, int nvars,
                                                             int degree) {
    return parse_decomp_impl<GaussianRational>(text, nvars, degree, parse_gaussian_coeff);
}

}  // namespace waring
