#include "pluecker/io.hpp"

#include <fstream>
#include <sstream>

namespace plk {

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void for_each_index_set(const SpaceSpec& s, int p, const std::function<void(const IndexSet&)>& f) {
    std::vector<int> labels = s.labels();
    int n = static_cast<int>(labels.size());
    if (p == 0) {
        f({});
        return;
    }
    if (p > n) return;
    std::vector<int> choice(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) choice[i] = i;
    while (true) {
        IndexSet k(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) k[i] = labels[choice[i]];
        f(k);
        int i = p - 1;
        while (i >= 0 && choice[i] == n - p + i) --i;
        if (i < 0) return;
        ++choice[i];
        for (int j = i + 1; j < p; ++j) choice[j] = choice[j - 1] + 1;
    }
}

} // namespace

void write_tensor(std::ostream& os, const AltTensor& t, bool dense) {
    const SpaceSpec& s = t.space();
    os << "deg " << t.degree() << " space " << s.neg << "," << s.pos << " basis "
       << (s.basis == Basis::Primal ? "x" : "e") << "\n";
    auto write_term = [&](const IndexSet& k, const Scalar& c) {
        for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
        os << " : " << c.str() << "\n";
    };
    if (dense) {
        for_each_index_set(s, t.degree(), [&](const IndexSet& k) { write_term(k, t.coefficient(k)); });
    } else {
        for (const auto& [k, c] : t.terms()) write_term(k, c);
    }
}

AltTensor read_tensor(std::istream& is, const Field& field, bool dense) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing tensor header");
    std::istringstream hs(line);
    std::string kw_deg, kw_space, kw_basis, space_spec, basis_flag;
    int deg = -1;
    hs >> kw_deg >> deg >> kw_space >> space_spec >> kw_basis >> basis_flag;
    if (kw_deg != "deg" || kw_space != "space" || kw_basis != "basis" || deg < 0)
        throw ParseError("bad tensor header: " + line);
    auto comma = space_spec.find(',');
    if (comma == std::string::npos) throw ParseError("bad space spec: " + space_spec);
    SpaceSpec s;
    s.neg = std::stoi(space_spec.substr(0, comma));
    s.pos = std::stoi(space_spec.substr(comma + 1));
    if (basis_flag == "x")
        s.basis = Basis::Primal;
    else if (basis_flag == "e")
        s.basis = Basis::Dual;
    else
        throw ParseError("basis must be x or e");
    if (deg > s.dim()) throw ParseError("tensor degree exceeds dimension");
    AltTensor t(deg, s, field);
    std::size_t n_terms = 0;
    while (std::getline(is, line)) {
        std::string body = trim_copy(line);
        if (body.empty()) continue;
        auto colon = body.find(':');
        if (colon == std::string::npos) throw ParseError("term line missing ':': " + line);
        std::string idx = trim_copy(body.substr(0, colon));
        std::string val = trim_copy(body.substr(colon + 1));
        IndexSet k;
        if (!idx.empty()) {
            std::stringstream ss(idx);
            std::string item;
            while (std::getline(ss, item, ',')) k.push_back(std::stoi(trim_copy(item)));
        }
        t.add_coefficient(k, field.parse(val));
        ++n_terms;
    }
    if (dense) {
        // a dense encoding must list every coefficient
        std::size_t expect = 0;
        for_each_index_set(s, deg, [&](const IndexSet&) { ++expect; });
        if (n_terms != expect)
            throw ParseError("dense tensor must list all " + std::to_string(expect) +
                             " coefficients, found " + std::to_string(n_terms));
    }
    return t;
}

void write_tensor_file(const std::string& path, const AltTensor& t, bool dense) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path);
    write_tensor(os, t, dense);
}

AltTensor read_tensor_file(const std::string& path, const Field& field, bool dense) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path);
    return read_tensor(is, field, dense);
}

void write_matrix(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
}

Matrix read_matrix(std::istream& is, const Field& field) {
    std::vector<std::vector<Scalar>> rows;
    std::string line;
    while (std::getline(is, line)) {
        std::string body = trim_copy(line);
        if (body.empty()) {
            if (rows.empty()) continue; // leading blank lines
            break;                      // blank line terminates the matrix
        }
        std::istringstream ss(body);
        std::vector<Scalar> row;
        std::string tok;
        while (ss >> tok) row.push_back(field.parse(tok));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    Matrix m(rows.size(), rows[0].size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void write_tuple(std::ostream& os, const MatrixTuple& t) {
    os << t.p() << " " << t.rows() << " " << t.cols() << "\n\n";
    for (std::size_t i = 0; i < t.p(); ++i) {
        write_matrix(os, t.mats[i]);
        os << "\n";
    }
}

MatrixTuple read_tuple(std::istream& is, const Field& field) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing tuple header");
    std::istringstream hs(line);
    std::size_t p = 0, n1 = 0, n2 = 0;
    hs >> p >> n1 >> n2;
    if (p == 0 || n1 == 0 || n2 == 0) throw ParseError("bad tuple header: " + line);
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < p; ++i) {
        Matrix m = read_matrix(is, field);
        if (m.rows() != n1 || m.cols() != n2) throw ParseError("tuple matrix shape mismatch");
        mats.push_back(std::move(m));
    }
    return MatrixTuple(std::move(mats));
}

MatrixTuple read_tuple_file(const std::string& path, const Field& field) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path);
    return read_tuple(is, field);
}

void write_tot_point(std::ostream& os, const TotPoint& x) {
    os << x.ma.p() << " " << x.N() << " " << x.n() << " " << x.m() << " " << x.t.size() << "\n\n";
    for (const Matrix& a : x.ma.mats) {
        write_matrix(os, a);
        os << "\n";
    }
    if (x.n() > 0) {
        write_matrix(os, x.col);
        os << "\n";
    }
    if (x.m() > 0) {
        write_matrix(os, x.row);
        os << "\n";
    }
    if (!x.t.empty()) {
        for (std::size_t i = 0; i < x.t.size(); ++i) os << (i ? " " : "") << x.t[i].str();
        os << "\n";
    }
}

TotPoint read_tot_point(std::istream& is, const Field& field) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing point header");
    std::istringstream hs(line);
    std::size_t p = 0, N = 0, n = 0, m = 0, d = 0;
    hs >> p >> N >> n >> m >> d;
    if (p == 0 || N == 0) throw ParseError("bad point header: " + line);
    TotPoint x;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < p; ++i) {
        Matrix a = read_matrix(is, field);
        if (a.rows() != N || a.cols() != N) throw ParseError("tuple matrix must be N x N");
        mats.push_back(std::move(a));
    }
    x.ma = MatrixTuple(std::move(mats));
    x.col = Matrix(N, 0, field);
    x.row = Matrix(0, N, field);
    if (n > 0) {
        x.col = read_matrix(is, field);
        if (x.col.rows() != N || x.col.cols() != n) throw ParseError("column block must be N x n");
    }
    if (m > 0) {
        x.row = read_matrix(is, field);
        if (x.row.rows() != m || x.row.cols() != N) throw ParseError("row block must be m x N");
    }
    if (d > 0) {
        Matrix tm = read_matrix(is, field);
        if (tm.rows() != 1 || tm.cols() != d) throw ParseError("free vector must be one row of d scalars");
        for (std::size_t i = 0; i < d; ++i) x.t.push_back(tm.at(0, i));
    }
    return x;
}

TotPoint read_tot_point_file(const std::string& path, const Field& field) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path);
    return read_tot_point(is, field);
}

void write_witness_file(const std::string& path, const Witness& w, const VarietySpec& spec) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path);
    os << "witness\n";
    os << "spec " << spec.describe() << "\n";
    os << "poly " << w.poly_index << "\n";
    os << "value " << w.value.str() << "\n";
    os << "detail " << w.detail << "\n";
    const SpaceSpec& dm = w.g.domain;
    const SpaceSpec& cd = w.g.codomain;
    os << "domain " << dm.neg << "," << dm.pos << " " << (dm.basis == Basis::Primal ? "x" : "e")
       << " codomain " << cd.neg << "," << cd.pos << " " << (cd.basis == Basis::Primal ? "x" : "e")
       << "\n\n";
    write_matrix(os, w.g.m);
}

Witness read_witness_file(const std::string& path, const Field& field, VarietySpec* spec_out) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path);
    std::string line;
    if (!std::getline(is, line) || trim_copy(line) != "witness") throw ParseError("not a witness file");
    Witness w;
    VarietySpec spec;
    while (std::getline(is, line)) {
        std::string body = trim_copy(line);
        if (body.empty()) break;
        std::istringstream ss(body);
        std::string key;
        ss >> key;
        if (key == "spec") {
            std::string kind;
            ss >> kind;
            if (kind == "gr") {
                spec = VarietySpec::grassmannian(field);
            } else if (kind == "pf") {
                int r = 0, s = 0;
                ss >> r >> s;
                spec = VarietySpec::pfaffian_variety(r, s, field);
            } else {
                throw ParseError("unknown spec kind: " + kind);
            }
        } else if (key == "poly") {
            ss >> w.poly_index;
        } else if (key == "value") {
            std::string v;
            ss >> v;
            w.value = field.parse(v);
        } else if (key == "detail") {
            std::getline(ss, w.detail);
            w.detail = trim_copy(w.detail);
        } else if (key == "domain") {
            std::string dspec, dbasis, kw, cspec, cbasis;
            ss >> dspec >> dbasis >> kw >> cspec >> cbasis;
            auto parse_space = [](const std::string& sp, const std::string& b) {
                auto comma = sp.find(',');
                if (comma == std::string::npos) throw ParseError("bad space: " + sp);
                SpaceSpec s;
                s.neg = std::stoi(sp.substr(0, comma));
                s.pos = std::stoi(sp.substr(comma + 1));
                s.basis = b == "x" ? Basis::Primal : Basis::Dual;
                return s;
            };
            w.g.domain = parse_space(dspec, dbasis);
            w.g.codomain = parse_space(cspec, cbasis);
        }
    }
    w.g.m = read_matrix(is, field);
    if (w.g.m.rows() != static_cast<std::size_t>(w.g.codomain.dim()) ||
        w.g.m.cols() != static_cast<std::size_t>(w.g.domain.dim()))
        throw ParseError("witness matrix shape mismatch");
    if (spec_out) *spec_out = spec;
    return w;
}

} // namespace plk
