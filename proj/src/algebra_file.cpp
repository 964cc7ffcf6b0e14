#include "nilcoh/algebra_file.hpp"

#include <sstream>

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::vector<int> cols;  // 1-based column of each token
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line{number, {}, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
                   raw[i] != '#')
                ++i;
            line.tokens.push_back(raw.substr(start, i - start));
            line.cols.push_back(int(start) + 1);
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Rational need_rational(const Line& l, std::size_t tok) {
    if (tok >= l.tokens.size()) throw ParseError(l.number, 1, "missing rational coefficient");
    auto r = parse_rational(l.tokens[tok]);
    if (!r) throw ParseError(l.number, l.cols[tok], "malformed rational '" + l.tokens[tok] + "'");
    return *r;
}

// parse "c1 e1 c2 e2 ..." starting at token index `from`
std::vector<std::pair<Rational, int>> parse_combo(const Line& l, std::size_t from,
                                                  const std::vector<std::string>& names) {
    std::vector<std::pair<Rational, int>> combo;
    std::size_t i = from;
    if (i >= l.tokens.size()) throw ParseError(l.number, 1, "empty combination");
    while (i < l.tokens.size()) {
        Rational c = need_rational(l, i);
        if (i + 1 >= l.tokens.size())
            throw ParseError(l.number, l.cols[i], "coefficient without basis name");
        const std::string& name = l.tokens[i + 1];
        int idx = -1;
        for (int k = 0; k < int(names.size()); ++k)
            if (names[k] == name) idx = k;
        if (idx < 0) throw SemanticError(l.number, "unknown basis name '" + name + "'");
        combo.emplace_back(c, idx);
        i += 2;
    }
    return combo;
}

}  // namespace

AlgebraInput parse_algebra_file(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");

    int dim = -1;
    std::vector<std::string> names;
    std::size_t li = 0;

    if (lines[li].tokens[0] != "dim")
        throw ParseError(lines[li].number, lines[li].cols[0], "expected 'dim'");
    if (lines[li].tokens.size() != 2)
        throw ParseError(lines[li].number, lines[li].cols[0], "dim takes one integer");
    try {
        dim = std::stoi(lines[li].tokens[1]);
    } catch (...) {
        throw ParseError(lines[li].number, lines[li].cols[1], "malformed dimension");
    }
    if (dim < 1 || dim > kMaxDim)
        throw SemanticError(lines[li].number,
                            "dimension must be between 1 and " + std::to_string(kMaxDim));
    ++li;

    if (li >= lines.size() || lines[li].tokens[0] != "basis")
        throw ParseError(li < lines.size() ? lines[li].number : lines.back().number, 1,
                         "expected 'basis'");
    names.assign(lines[li].tokens.begin() + 1, lines[li].tokens.end());
    if (int(names.size()) != dim)
        throw SemanticError(lines[li].number, "basis needs exactly " + std::to_string(dim) + " names");
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
            if (names[a] == names[b])
                throw SemanticError(lines[li].number, "duplicate basis name '" + names[a] + "'");
    ++li;

    auto name_index = [&](const Line& l, std::size_t tok) {
        if (tok >= l.tokens.size()) throw ParseError(l.number, 1, "missing basis name");
        for (int k = 0; k < dim; ++k)
            if (names[k] == l.tokens[tok]) return k;
        throw SemanticError(l.number, "unknown basis name '" + l.tokens[tok] + "'");
    };

    std::vector<Rational> constants(std::size_t(dim) * dim * dim, Rational(0));
    std::vector<std::vector<bool>> bracket_seen(dim, std::vector<bool>(dim, false));
    std::vector<std::optional<std::vector<Rational>>> j_cols(dim);
    std::optional<Matrix> metric;
    std::optional<std::vector<Rational>> theta;

    auto c_at = [&](int i, int j, int k) -> Rational& {
        return constants[std::size_t((i * dim + j)) * dim + k];
    };

    for (; li < lines.size(); ++li) {
        const Line& l = lines[li];
        const std::string& head = l.tokens[0];
        if (head == "bracket") {
            int a = name_index(l, 1), b = name_index(l, 2);
            if (l.tokens.size() < 4 || l.tokens[3] != "->")
                throw ParseError(l.number, l.cols.size() > 3 ? l.cols[3] : 1, "expected '->'");
            auto combo = parse_combo(l, 4, names);
            if (a == b) throw SemanticError(l.number, "bracket of a basis vector with itself");
            std::vector<Rational> value(dim, Rational(0));
            for (auto& [c, idx] : combo) value[idx] += c;
            if (bracket_seen[a][b]) throw SemanticError(l.number, "duplicate bracket");
            if (bracket_seen[b][a]) {
                for (int k = 0; k < dim; ++k)
                    if (c_at(b, a, k) != -value[k])
                        throw SemanticError(l.number,
                                            "bracket listed twice with inconsistent antisymmetry");
            }
            bracket_seen[a][b] = true;
            for (int k = 0; k < dim; ++k) {
                c_at(a, b, k) = value[k];
                c_at(b, a, k) = -value[k];
            }
        } else if (head == "J") {
            int a = name_index(l, 1);
            if (l.tokens.size() < 3 || l.tokens[2] != "->")
                throw ParseError(l.number, l.cols.size() > 2 ? l.cols[2] : 1, "expected '->'");
            auto combo = parse_combo(l, 3, names);
            std::vector<Rational> col(dim, Rational(0));
            for (auto& [c, idx] : combo) col[idx] += c;
            if (j_cols[a]) throw SemanticError(l.number, "duplicate J line for '" + names[a] + "'");
            j_cols[a] = std::move(col);
        } else if (head == "metric") {
            if (l.tokens.size() >= 2 && l.tokens[1] == "diag") {
                if (int(l.tokens.size()) != 2 + dim)
                    throw SemanticError(l.number, "metric diag needs " + std::to_string(dim) +
                                                      " entries");
                Matrix m(dim, dim);
                for (int k = 0; k < dim; ++k) m.at(k, k) = GQ(need_rational(l, 2 + k));
                metric = std::move(m);
            } else if (l.tokens.size() == 2 && l.tokens[1] == "rows") {
                Matrix m(dim, dim);
                for (int r = 0; r < dim; ++r) {
                    ++li;
                    if (li >= lines.size())
                        throw ParseError(l.number, 1, "metric rows: missing row " + std::to_string(r + 1));
                    const Line& row = lines[li];
                    if (int(row.tokens.size()) != dim)
                        throw SemanticError(row.number, "metric row needs " + std::to_string(dim) +
                                                            " entries");
                    for (int k = 0; k < dim; ++k) m.at(r, k) = GQ(need_rational(row, k));
                }
                metric = std::move(m);
            } else {
                throw ParseError(l.number, l.cols.size() > 1 ? l.cols[1] : 1,
                                 "metric needs 'diag' or 'rows'");
            }
        } else if (head == "theta") {
            if (int(l.tokens.size()) != 1 + dim)
                throw SemanticError(l.number, "theta needs " + std::to_string(dim) + " components");
            std::vector<Rational> t;
            for (int k = 0; k < dim; ++k) t.push_back(need_rational(l, 1 + k));
            theta = std::move(t);
        } else {
            throw ParseError(l.number, l.cols[0], "unknown directive '" + head + "'");
        }
    }

    AlgebraInput input;
    input.algebra = LieAlgebra::validated(names, constants);

    bool any_j = false;
    for (auto& c : j_cols) any_j |= c.has_value();
    if (any_j) {
        // complete missing columns from J(J e) = -e where a known column
        // determines exactly one unknown
        for (bool progress = true; progress;) {
            progress = false;
            for (int a = 0; a < dim; ++a) {
                if (!j_cols[a]) continue;
                const auto& v = *j_cols[a];
                int unknown = -1;
                for (int k = 0; k < dim; ++k)
                    if (v[k] != 0 && !j_cols[k]) {
                        if (unknown >= 0) {
                            unknown = -2;
                            break;
                        }
                        unknown = k;
                    }
                if (unknown < 0) continue;
                // sum_k v_k J(e_k) = -e_a
                std::vector<Rational> rhs(dim, Rational(0));
                rhs[a] = -1;
                for (int k = 0; k < dim; ++k) {
                    if (v[k] == 0 || k == unknown) continue;
                    for (int r = 0; r < dim; ++r) rhs[r] -= v[k] * (*j_cols[k])[r];
                }
                std::vector<Rational> col(dim);
                for (int r = 0; r < dim; ++r) col[r] = rhs[r] / v[unknown];
                j_cols[unknown] = std::move(col);
                progress = true;
            }
        }
        Matrix j(dim, dim);
        for (int a = 0; a < dim; ++a) {
            if (!j_cols[a])
                throw SemanticError(lines.back().number,
                                    "J is incomplete: no column derivable for '" + names[a] + "'");
            for (int r = 0; r < dim; ++r) j.at(r, a) = GQ((*j_cols[a])[r]);
        }
        try {
            input.complex_structure = ComplexStructure::validated(std::move(j));
        } catch (const std::invalid_argument& e) {
            throw SemanticError(lines.back().number, std::string("J: ") + e.what());
        }
    }
    input.metric = std::move(metric);
    input.theta = std::move(theta);
    return input;
}

std::string print_algebra_file(const AlgebraInput& input) {
    const LieAlgebra& g = input.algebra;
    const int n = g.dim();
    const auto& names = g.basis_names();
    std::ostringstream out;
    out << "dim " << n << "\n";
    out << "basis";
    for (const auto& s : names) out << " " << s;
    out << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool nonzero = false;
            for (int k = 0; k < n; ++k) nonzero |= (g.c(i, j, k) != 0);
            if (!nonzero) continue;
            out << "bracket " << names[i] << " " << names[j] << " ->";
            for (int k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0) out << " " << to_string(g.c(i, j, k)) << " " << names[k];
            out << "\n";
        }
    if (input.complex_structure) {
        const Matrix& j = input.complex_structure->matrix();
        for (int a = 0; a < n; ++a) {
            out << "J " << names[a] << " ->";
            for (int r = 0; r < n; ++r)
                if (!j.at(r, a).is_zero()) out << " " << to_string(j.at(r, a).re) << " " << names[r];
            out << "\n";
        }
    }
    if (input.metric) {
        const Matrix& m = *input.metric;
        bool diagonal = true;
        for (int a = 0; a < n && diagonal; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && !m.at(a, b).is_zero()) {
                    diagonal = false;
                    break;
                }
        if (diagonal) {
            out << "metric diag";
            for (int a = 0; a < n; ++a) out << " " << to_string(m.at(a, a).re);
            out << "\n";
        } else {
            out << "metric rows\n";
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) out << (b ? " " : "") << to_string(m.at(a, b).re);
                out << "\n";
            }
        }
    }
    if (input.theta) {
        out << "theta";
        for (const auto& c : *input.theta) out << " " << to_string(c);
        out << "\n";
    }
    return out.str();
}

AlgebraInput entry_to_input(const CatalogEntry& e) {
    AlgebraInput input;
    input.algebra = e.algebra;
    input.complex_structure = e.complex_structure;
    input.metric = e.metric;
    input.theta = e.theta;
    return input;
}

}  // namespace nilcoh
