#include "koszulkit/doc.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace koszulkit {

namespace {

[[noreturn]] void fail(size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

int64_t parse_int(const std::string& tok, size_t line) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(tok, &used);
        if (used != tok.size())
            fail(line, "bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line, "bad integer '" + tok + "'");
    }
}

// terms of a symbolic quadratic expression: coefficient and two generators
std::vector<uint32_t> parse_symbolic(const std::string& expr, Fp field,
                                     const std::vector<std::string>& gens, size_t line) {
    const size_t d = gens.size();
    std::vector<uint32_t> out(d * d, 0);
    auto gen_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < d; ++i)
            if (gens[i] == name)
                return i;
        fail(line, "unknown generator '" + name + "'");
    };
    // tokenize
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < expr.size()) {
        char c = expr[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '+' || c == '-' || c == '*') {
            tokens.push_back(std::string(1, c));
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j])))
                ++j;
            tokens.push_back(expr.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < expr.size() &&
                   (std::isalnum(static_cast<unsigned char>(expr[j])) || expr[j] == '_'))
                ++j;
            tokens.push_back(expr.substr(i, j - i));
            i = j;
        } else {
            fail(line, std::string("unexpected character '") + c + "' in relation");
        }
    }
    // parse sign-separated terms
    size_t t = 0;
    bool first_term = true;
    while (t < tokens.size()) {
        int64_t sign = 1;
        while (t < tokens.size() && (tokens[t] == "+" || tokens[t] == "-")) {
            if (tokens[t] == "-")
                sign = -sign;
            ++t;
        }
        if (t >= tokens.size()) {
            if (first_term)
                break;
            fail(line, "dangling sign in relation");
        }
        first_term = false;
        int64_t coeff = sign;
        std::vector<size_t> factors;
        bool expect_factor = true;
        while (t < tokens.size()) {
            if (tokens[t] == "+" || tokens[t] == "-")
                break;
            if (tokens[t] == "*") {
                if (expect_factor)
                    fail(line, "misplaced '*' in relation");
                expect_factor = true;
                ++t;
                continue;
            }
            if (!expect_factor)
                fail(line, "missing '*' between factors in relation");
            if (std::isdigit(static_cast<unsigned char>(tokens[t][0])))
                coeff *= parse_int(tokens[t], line);
            else
                factors.push_back(gen_index(tokens[t]));
            expect_factor = false;
            ++t;
        }
        if (factors.size() != 2)
            fail(line, "each relation term needs exactly two generator factors");
        size_t pos = factors[0] * d + factors[1];
        out[pos] = field.add(out[pos], field.from_int(coeff));
    }
    return out;
}

struct RawSection {
    std::string name;
    std::vector<std::pair<size_t, std::string>> lines;  // line number, content
};

std::vector<RawSection> split_sections(const std::string& text) {
    std::vector<RawSection> sections;
    std::istringstream in(text);
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(line_no, "malformed section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            for (const RawSection& s : sections)
                if (s.name == name)
                    fail(line_no, "duplicate section [" + name + "]");
            sections.push_back({name, {}});
        } else {
            if (sections.empty())
                fail(line_no, "content before any section header");
            sections.back().lines.emplace_back(line_no, line);
        }
    }
    return sections;
}

// "key = value" split; returns empty key when there is no '='
std::pair<std::string, std::string> key_value(const std::string& line) {
    size_t eq = line.find('=');
    if (eq == std::string::npos)
        return {"", line};
    return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    std::vector<RawSection> sections = split_sections(text);
    auto find = [&](const std::string& name) -> const RawSection* {
        for (const RawSection& s : sections)
            if (s.name == name)
                return &s;
        return nullptr;
    };
    for (const RawSection& s : sections)
        if (s.name != "field" && s.name != "generators" && s.name != "relations" &&
            s.name != "slice" && s.name != "group" && s.name != "milnor")
            fail(s.lines.empty() ? 1 : s.lines.front().first, "unknown section [" + s.name + "]");

    const RawSection* field_sec = find("field");
    const RawSection* gens_sec = find("generators");
    const RawSection* rels_sec = find("relations");
    const RawSection* slice_sec = find("slice");
    const RawSection* group_sec = find("group");
    const RawSection* milnor_sec = find("milnor");

    int kind_markers = (group_sec ? 1 : 0) + (milnor_sec ? 1 : 0) + (slice_sec ? 1 : 0) +
                       ((gens_sec && !slice_sec) ? 1 : 0);
    if (kind_markers != 1)
        throw ParseError("document must contain exactly one kind "
                         "(presentation, graded-slice, group or milnor-spec)");

    InputDocument doc{InputDocument::Kind::presentation, {}, {}, {}, {}, {}, {}, {}};

    if (field_sec) {
        bool have_l = false;
        for (const auto& [no, line] : field_sec->lines) {
            auto [key, value] = key_value(line);
            if (key == "l") {
                if (have_l)
                    fail(no, "duplicate key 'l'");
                int64_t l = parse_int(value, no);
                if (l < 2 || !is_prime(static_cast<uint32_t>(l)))
                    fail(no, "l = " + value + " is not prime");
                doc.l = static_cast<uint32_t>(l);
                have_l = true;
            } else {
                fail(no, "unknown key '" + key + "' in [field]");
            }
        }
    }

    if (milnor_sec) {
        doc.kind = InputDocument::Kind::milnor_spec;
        std::optional<int64_t> l, pool;
        for (const auto& [no, line] : milnor_sec->lines) {
            auto [key, value] = key_value(line);
            if (key == "l") {
                if (l)
                    fail(no, "duplicate key 'l'");
                l = parse_int(value, no);
            } else if (key == "pool-size") {
                if (pool)
                    fail(no, "duplicate key 'pool-size'");
                pool = parse_int(value, no);
            } else {
                fail(no, "unknown key '" + key + "' in [milnor]");
            }
        }
        if (!l || !pool)
            throw ParseError("[milnor] needs both 'l' and 'pool-size'");
        if (!is_prime(static_cast<uint32_t>(*l)))
            throw ParseError("milnor l must be prime");
        doc.milnor = RationalSymbolAlgebraSpec(static_cast<uint32_t>(*l),
                                               static_cast<size_t>(*pool));
        doc.l = static_cast<uint32_t>(*l);
        return doc;
    }

    if (group_sec) {
        doc.kind = InputDocument::Kind::group;
        std::vector<std::string> elements;
        std::vector<std::vector<std::string>> rows;
        std::optional<std::string> builtin;
        for (const auto& [no, line] : group_sec->lines) {
            auto [key, value] = key_value(line);
            if (key == "builtin") {
                if (builtin)
                    fail(no, "duplicate key 'builtin'");
                builtin = value;
            } else if (key == "elements") {
                if (!elements.empty())
                    fail(no, "duplicate key 'elements'");
                elements = split_ws(value);
            } else if (key == "row") {
                rows.push_back(split_ws(value));
            } else {
                fail(no, "unknown key '" + key + "' in [group]");
            }
        }
        if (builtin) {
            std::vector<std::string> parts = split_ws(*builtin);
            if (parts.empty())
                throw ParseError("empty builtin group");
            auto arg = [&](size_t i) -> int64_t {
                if (i >= parts.size())
                    throw ParseError("builtin group '" + parts[0] + "' needs more arguments");
                return parse_int(parts[i], 0);
            };
            if (parts[0] == "cyclic")
                doc.group = cyclic_group(static_cast<size_t>(arg(1)));
            else if (parts[0] == "elementary-abelian")
                doc.group = elementary_abelian_group(static_cast<size_t>(arg(1)),
                                                     static_cast<size_t>(arg(2)));
            else if (parts[0] == "dihedral")
                doc.group = dihedral_group(static_cast<size_t>(arg(1)));
            else if (parts[0] == "quaternion")
                doc.group = quaternion_group(static_cast<size_t>(arg(1)));
            else
                throw ParseError("unknown builtin group '" + parts[0] + "'");
            return doc;
        }
        if (elements.empty())
            throw ParseError("[group] needs 'elements' or 'builtin'");
        if (rows.size() != elements.size())
            throw ParseError("[group] needs one 'row' per element");
        auto index_of = [&](const std::string& name, size_t no) -> size_t {
            for (size_t i = 0; i < elements.size(); ++i)
                if (elements[i] == name)
                    return i;
            fail(no, "unknown group element '" + name + "'");
        };
        std::vector<std::vector<size_t>> table;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != elements.size())
                throw ParseError("group row " + std::to_string(r) + " has wrong length");
            std::vector<size_t> row;
            for (const std::string& name : rows[r])
                row.push_back(index_of(name, 0));
            table.push_back(std::move(row));
        }
        doc.group = FiniteGroupTable(elements, table);
        return doc;
    }

    if (!doc.l)
        throw ParseError("missing [field] section with the prime l");
    Fp field(*doc.l);

    // generators (shared by presentations and built-from scratch slices)
    std::vector<std::string> gens;
    if (gens_sec) {
        for (const auto& [no, line] : gens_sec->lines) {
            std::vector<std::string> names = split_ws(line);
            for (const std::string& n : names) {
                if (std::find(gens.begin(), gens.end(), n) != gens.end())
                    fail(no, "duplicate generator '" + n + "'");
                gens.push_back(n);
            }
        }
        if (gens.empty())
            throw ParseError("[generators] section is empty");
    }

    auto parse_relations = [&]() -> Subspace {
        const size_t d = gens.size();
        FpMatrix rows(field, 0, d * d);
        if (rels_sec)
            for (const auto& [no, line] : rels_sec->lines) {
                size_t colon = line.find(':');
                if (colon == std::string::npos)
                    fail(no, "relation lines start with 'coeff-row:' or 'symbolic:'");
                std::string tag = trim(line.substr(0, colon));
                std::string body = trim(line.substr(colon + 1));
                if (tag == "coeff-row") {
                    std::vector<std::string> toks = split_ws(body);
                    if (toks.size() != d * d)
                        fail(no, "coeff-row needs " + std::to_string(d * d) + " entries");
                    std::vector<uint32_t> row;
                    for (const std::string& t : toks)
                        row.push_back(field.from_int(parse_int(t, no)));
                    rows.append_row(row);
                } else if (tag == "symbolic") {
                    rows.append_row(parse_symbolic(body, field, gens, no));
                } else {
                    fail(no, "unknown relation tag '" + tag + "'");
                }
            }
        return Subspace::from_rows(std::move(rows));
    };

    if (slice_sec) {
        doc.kind = InputDocument::Kind::graded_slice;
        PresentationSide side = PresentationSide::algebra;
        std::optional<std::string> builtin;
        std::optional<std::vector<size_t>> dims;
        std::map<std::pair<int, int>, std::vector<std::vector<int64_t>>> raw_maps;
        bool have_side = false;
        for (const auto& [no, line] : slice_sec->lines) {
            auto [key, value] = key_value(line);
            if (key == "side") {
                if (have_side)
                    fail(no, "duplicate key 'side'");
                have_side = true;
                if (value == "algebra")
                    side = PresentationSide::algebra;
                else if (value == "coalgebra")
                    side = PresentationSide::coalgebra;
                else
                    fail(no, "side must be 'algebra' or 'coalgebra'");
            } else if (key == "builtin") {
                if (builtin)
                    fail(no, "duplicate key 'builtin'");
                builtin = value;
            } else if (key == "dims") {
                if (dims)
                    fail(no, "duplicate key 'dims'");
                std::vector<size_t> ds;
                for (const std::string& t : split_ws(value))
                    ds.push_back(static_cast<size_t>(parse_int(t, no)));
                dims = std::move(ds);
            } else if (key.rfind("map ", 0) == 0) {
                std::vector<std::string> parts = split_ws(key);
                if (parts.size() != 3)
                    fail(no, "map keys look like 'map i j'");
                int i = static_cast<int>(parse_int(parts[1], no));
                int j = static_cast<int>(parse_int(parts[2], no));
                if (raw_maps.count({i, j}))
                    fail(no, "duplicate map " + parts[1] + " " + parts[2]);
                std::vector<std::vector<int64_t>> mat_rows;
                std::stringstream rowstream(value);
                std::string chunk;
                while (std::getline(rowstream, chunk, ';')) {
                    chunk = trim(chunk);
                    if (chunk.empty())
                        continue;
                    std::vector<int64_t> row;
                    for (const std::string& t : split_ws(chunk))
                        row.push_back(parse_int(t, no));
                    mat_rows.push_back(std::move(row));
                }
                raw_maps.emplace(std::make_pair(i, j), std::move(mat_rows));
            } else {
                fail(no, "unknown key '" + key + "' in [slice]");
            }
        }
        doc.slice_side = side;
        if (builtin) {
            std::vector<std::string> parts = split_ws(*builtin);
            if (parts.size() == 2 && parts[0] == "truncated-polynomial") {
                if (side != PresentationSide::algebra)
                    throw ParseError("truncated-polynomial is an algebra slice");
                int power = static_cast<int>(parse_int(parts[1], 0));
                doc.slice_algebra = truncated_polynomial_algebra(field, power, power + 1);
                return doc;
            }
            throw ParseError("unknown builtin slice '" + parts[0] + "'");
        }
        if (!dims)
            throw ParseError("[slice] needs 'dims' or 'builtin'");
        const int n_max = static_cast<int>(dims->size()) - 1;
        std::map<std::pair<int, int>, FpMatrix> maps;
        for (int i = 1; i <= n_max; ++i)
            for (int j = 1; i + j <= n_max; ++j) {
                size_t rows_needed = side == PresentationSide::algebra
                                         ? (*dims)[i + j]
                                         : (*dims)[i] * (*dims)[j];
                size_t cols_needed = side == PresentationSide::algebra
                                         ? (*dims)[i] * (*dims)[j]
                                         : (*dims)[i + j];
                auto it = raw_maps.find({i, j});
                if (it == raw_maps.end())
                    throw ParseError("[slice] is missing 'map " + std::to_string(i) + " " +
                                     std::to_string(j) + "'");
                FpMatrix m(field, rows_needed, cols_needed);
                if (it->second.size() != rows_needed && !(rows_needed == 0))
                    throw ParseError("map " + std::to_string(i) + " " + std::to_string(j) +
                                     " has the wrong number of rows");
                for (size_t r = 0; r < it->second.size(); ++r) {
                    if (it->second[r].size() != cols_needed)
                        throw ParseError("map " + std::to_string(i) + " " + std::to_string(j) +
                                         " has a row of the wrong length");
                    for (size_t c = 0; c < cols_needed; ++c)
                        m(r, c) = field.from_int(it->second[r][c]);
                }
                maps.emplace(std::make_pair(i, j), std::move(m));
            }
        if (side == PresentationSide::algebra)
            doc.slice_algebra = GradedSliceAlgebra(field, *dims, std::move(maps));
        else
            doc.slice_coalgebra = GradedSliceCoalgebra(field, *dims, std::move(maps));
        return doc;
    }

    // plain presentation
    doc.kind = InputDocument::Kind::presentation;
    if (!gens_sec)
        throw ParseError("presentation documents need a [generators] section");
    doc.presentation = QuadraticPresentation(field, gens, parse_relations());
    return doc;
}

namespace {

void serialize_field(std::ostringstream& out, uint32_t l) {
    out << "[field]\n"
        << "l = " << l << "\n";
}

}  // namespace

std::string serialize_document(const InputDocument& doc) {
    std::ostringstream out;
    switch (doc.kind) {
    case InputDocument::Kind::presentation: {
        const QuadraticPresentation& p = *doc.presentation;
        serialize_field(out, p.field.modulus());
        out << "[generators]\n";
        for (const std::string& g : p.generators)
            out << g << "\n";
        out << "[relations]\n";
        for (size_t r = 0; r < p.relations.dim(); ++r) {
            out << "coeff-row:";
            for (size_t c = 0; c < p.relations.ambient_dim(); ++c)
                out << " " << p.relations.basis()(r, c);
            out << "\n";
        }
        break;
    }
    case InputDocument::Kind::graded_slice: {
        const bool algebra = doc.slice_side == PresentationSide::algebra;
        Fp field = algebra ? doc.slice_algebra->field() : doc.slice_coalgebra->field();
        serialize_field(out, field.modulus());
        out << "[slice]\n"
            << "side = " << (algebra ? "algebra" : "coalgebra") << "\n";
        const std::vector<size_t>& dims =
            algebra ? doc.slice_algebra->dims() : doc.slice_coalgebra->dims();
        out << "dims =";
        for (size_t d : dims)
            out << " " << d;
        out << "\n";
        const int n_max = static_cast<int>(dims.size()) - 1;
        for (int i = 1; i <= n_max; ++i)
            for (int j = 1; i + j <= n_max; ++j) {
                const FpMatrix& m =
                    algebra ? doc.slice_algebra->mult(i, j) : doc.slice_coalgebra->comult(i, j);
                out << "map " << i << " " << j << " =";
                for (size_t r = 0; r < m.rows(); ++r) {
                    if (r)
                        out << " ;";
                    for (size_t c = 0; c < m.cols(); ++c)
                        out << " " << m(r, c);
                }
                out << "\n";
            }
        break;
    }
    case InputDocument::Kind::group: {
        const FiniteGroupTable& g = *doc.group;
        if (doc.l)
            serialize_field(out, *doc.l);
        out << "[group]\n"
            << "elements =";
        for (const std::string& n : g.names)
            out << " " << n;
        out << "\n";
        for (size_t r = 0; r < g.order(); ++r) {
            out << "row =";
            for (size_t c = 0; c < g.order(); ++c)
                out << " " << g.names[g.table[r][c]];
            out << "\n";
        }
        break;
    }
    case InputDocument::Kind::milnor_spec:
        out << "[milnor]\n"
            << "l = " << doc.milnor->l << "\n"
            << "pool-size = " << doc.milnor->pool_size << "\n";
        break;
    }
    return out.str();
}

bool documents_equal(const InputDocument& a, const InputDocument& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case InputDocument::Kind::presentation:
        return a.presentation->field == b.presentation->field &&
               a.presentation->generators == b.presentation->generators &&
               a.presentation->relations == b.presentation->relations;
    case InputDocument::Kind::graded_slice: {
        if (a.slice_side != b.slice_side)
            return false;
        if (a.slice_side == PresentationSide::algebra) {
            if (a.slice_algebra->dims() != b.slice_algebra->dims())
                return false;
            const int n_max = a.slice_algebra->n_max();
            for (int i = 1; i <= n_max; ++i)
                for (int j = 1; i + j <= n_max; ++j)
                    if (!(a.slice_algebra->mult(i, j) == b.slice_algebra->mult(i, j)))
                        return false;
            return true;
        }
        if (a.slice_coalgebra->dims() != b.slice_coalgebra->dims())
            return false;
        const int n_max = a.slice_coalgebra->n_max();
        for (int i = 1; i <= n_max; ++i)
            for (int j = 1; i + j <= n_max; ++j)
                if (!(a.slice_coalgebra->comult(i, j) == b.slice_coalgebra->comult(i, j)))
                    return false;
        return true;
    }
    case InputDocument::Kind::group:
        return a.group->names == b.group->names && a.group->table == b.group->table &&
               a.l == b.l;
    case InputDocument::Kind::milnor_spec:
        return a.milnor->l == b.milnor->l && a.milnor->pool_size == b.milnor->pool_size;
    }
    return false;
}

const char* kind_name(InputDocument::Kind kind) {
    switch (kind) {
    case InputDocument::Kind::presentation:
        return "presentation";
    case InputDocument::Kind::graded_slice:
        return "graded-slice";
    case InputDocument::Kind::group:
        return "group";
    case InputDocument::Kind::milnor_spec:
        return "milnor-spec";
    }
    return "?";
}

}  // namespace koszulkit
