// pluecker: exact exterior-algebra calculator and membership tester.
//
// Exit codes: 0 = In / success, 1 = Out, 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pluecker/io.hpp"
#include "pluecker/membership.hpp"
#include "pluecker/pfaffian.hpp"
#include "pluecker/tuples.hpp"

using namespace plk;

namespace {

constexpr int kExitIn = 0;
constexpr int kExitOut = 1;
constexpr int kExitError = 2;

Field parse_field(const std::string& text) {
    if (text == "q") return Field::rationals();
    if (text.rfind("fp:", 0) == 0) return Field::prime(std::stoull(text.substr(3)));
    throw ParseError("field must be q or fp:<prime>");
}

struct SeedOpt {
    std::uint64_t value = 0;
    bool set = false;
};

void require_seed(const SeedOpt& seed) {
    if (!seed.set) throw ParseError("randomized subcommands require --seed");
}

int run_member(const std::vector<std::string>& variety_args, const std::string& tensor_file,
               const Field& field, const SeedOpt& seed, int trials, bool symbolic, bool dense,
               bool allow_small_field, const std::string& witness_out,
               const std::string& check_witness) {
    if (variety_args.empty()) throw ParseError("member needs a variety: gr | pf R S | secant K");
    VarietySpec spec;
    bool necessary_only = false;

    // a declared degree above the dimension only fits the zero tensor, which
    // lies in every nonempty variety
    {
        std::ifstream is(tensor_file);
        if (!is) throw Error("cannot read " + tensor_file);
        std::string kw_deg, kw_space, space_spec;
        int deg = -1;
        is >> kw_deg >> deg >> kw_space >> space_spec;
        auto comma = space_spec.find(',');
        if (kw_deg == "deg" && comma != std::string::npos) {
            int dim = std::stoi(space_spec.substr(0, comma)) + std::stoi(space_spec.substr(comma + 1));
            if (deg > dim) {
                std::cout << "IN\n";
                return kExitIn;
            }
        }
    }
    AltTensor omega = [&] {
        std::ifstream is(tensor_file);
        if (!is) throw Error("cannot read " + tensor_file);
        return read_tensor(is, field, dense);
    }();

    const std::string& kind = variety_args[0];
    if (kind == "gr") {
        spec = VarietySpec::grassmannian(field);
    } else if (kind == "pf") {
        if (variety_args.size() != 3) throw ParseError("pf needs two parameters: pf R S");
        spec = VarietySpec::pfaffian_variety(std::stoi(variety_args[1]), std::stoi(variety_args[2]),
                                             field);
    } else if (kind == "secant") {
        if (variety_args.size() != 2) throw ParseError("secant needs one parameter: secant K");
        int k = std::stoi(variety_args[1]);
        spec = VarietySpec::pfaffian_variety(k, k, field);
        if (omega.degree() >= 3) necessary_only = true;
    } else {
        throw ParseError("unknown variety: " + kind);
    }

    if (!check_witness.empty()) {
        VarietySpec stored_spec;
        Witness w = read_witness_file(check_witness, field, &stored_spec);
        if (w.poly_index < 0) throw ParseError("stored witness is not re-checkable from a map");
        Scalar v = evaluate_defining(w.g, omega, stored_spec.polys.at(static_cast<std::size_t>(w.poly_index)));
        if (!v.is_zero() && v == w.value) {
            std::cout << "witness OK value=" << v.str() << "\n";
            return kExitIn;
        }
        std::cout << "witness FAILED recomputed=" << v.str() << " stored=" << w.value.str() << "\n";
        return kExitOut;
    }

    if (necessary_only)
        std::cout << "NECESSARY-ONLY: for degree >= 3 these Pfaffian conditions are necessary "
                     "for secant membership but may not be sufficient\n";

    MembershipVerdict verdict;
    if (symbolic) {
        verdict = symbolic_membership(omega, spec);
    } else {
        require_seed(seed);
        verdict = randomized_membership(omega, spec, trials, seed.value, 1000000, allow_small_field);
    }
    if (verdict.in) {
        std::cout << "IN\n";
        return kExitIn;
    }
    std::string wpath = witness_out.empty() ? tensor_file + ".witness" : witness_out;
    write_witness_file(wpath, *verdict.witness, spec);
    std::cout << "OUT witness=" << wpath << "\n";
    return kExitOut;
}

int run_pfaffian(const std::string& matrix_file, int symbolic_r, int symbolic_star_s,
                 const Field& field) {
    if (symbolic_r > 0) {
        std::cout << pf_poly(symbolic_r, field).str() << "\n";
        return kExitIn;
    }
    if (symbolic_star_s > 0) {
        std::cout << pf_star_poly(symbolic_star_s, field).str() << "\n";
        return kExitIn;
    }
    if (matrix_file.empty()) throw ParseError("pfaffian needs a matrix file or --symbolic/--symbolic-star");
    std::ifstream is(matrix_file);
    if (!is) throw Error("cannot read " + matrix_file);
    Matrix m = read_matrix(is, field);
    if (m.rows() % 2 == 1) std::cerr << "warning: odd size, pfaffian is 0 by convention\n";
    SkewMatrix a(m); // throws on non-skew input -> exit 2
    std::cout << pfaffian(a).str() << "\n";
    return kExitIn;
}

int run_maya(const std::string& op, const std::vector<std::string>& args) {
    if (op == "part") {
        if (args.size() != 1) throw ParseError("maya part INDEX");
        std::cout << partition_of(MayaIndex::parse(args[0])).str() << "\n";
        return kExitIn;
    }
    if (op == "leq") {
        if (args.size() != 2) throw ParseError("maya leq INDEX INDEX");
        bool v = leq(MayaIndex::parse(args[0]), MayaIndex::parse(args[1]));
        std::cout << (v ? "true" : "false") << "\n";
        return kExitIn;
    }
    if (op == "relation") {
        if (args.size() != 2) throw ParseError("maya relation INDEX_I INDEX_J");
        MayaPoly rel = plucker_relation(MayaIndex::parse(args[0]), MayaIndex::parse(args[1]));
        std::cout << rel.str() << "\n";
        return kExitIn;
    }
    if (op == "good") {
        if (args.size() != 3) throw ParseError("maya good R S INDEX");
        bool v = is_good(MayaIndex::parse(args[2]), std::stoi(args[0]), std::stoi(args[1]));
        std::cout << (v ? "true" : "false") << "\n";
        return kExitIn;
    }
    throw ParseError("unknown maya operation: " + op);
}

int run_sample(int k, int p, int d, const SeedOpt& seed, const std::string& out, bool dense,
               const Field& field) {
    require_seed(seed);
    AltTensor t = secant_sample(k, p, d, seed.value, field);
    if (out.empty()) {
        write_tensor(std::cout, t, dense);
    } else {
        write_tensor_file(out, t, dense);
    }
    return kExitIn;
}

int run_tuple(const std::string& op, const std::string& file, int l, bool exact,
              const SeedOpt& seed, int trials, const Field& field) {
    if (op == "rank") {
        MatrixTuple t = read_tuple_file(file, field);
        if (exact) {
            TupleRank r = tuple_rank_exact(t);
            std::cout << "rank " << r.value << " exact\n";
        } else {
            require_seed(seed);
            TupleRank r = tuple_rank_randomized(t, trials, seed.value);
            std::cout << "rank " << r.value << " upper-bound\n";
        }
        return kExitIn;
    }
    if (op == "vector") {
        require_seed(seed);
        MatrixTuple t = read_tuple_file(file, field);
        std::vector<Scalar> v = find_independent_vector(t, seed.value);
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i].str();
        std::cout << "\n";
        return kExitIn;
    }
    if (op == "subspace") {
        require_seed(seed);
        MatrixTuple t = read_tuple_file(file, field);
        Matrix basis = find_subspace(t, l, seed.value);
        write_matrix(std::cout, basis);
        return kExitIn;
    }
    if (op == "normalform") {
        require_seed(seed);
        TotPoint x = read_tot_point_file(file, field);
        NormalForm nf = normal_form(x, l, seed.value);
        write_tot_point(std::cout, nf.point);
        std::cout << "\n";
        write_matrix(std::cout, nf.left);
        std::cout << "\n";
        write_matrix(std::cout, nf.right);
        return kExitIn;
    }
    throw ParseError("unknown tuple operation: " + op);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior algebra, Pfaffians, and membership tests"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string field_text = "q";
    app.add_option("--field", field_text, "ground field: q or fp:<prime>")->capture_default_str();
    SeedOpt seed;
    app.add_option_function<std::uint64_t>(
           "--seed", [&](std::uint64_t v) { seed.value = v; seed.set = true; },
           "RNG seed (required by randomized subcommands)");
    int trials = 20;
    app.add_option("--trials", trials, "randomized trials")->capture_default_str();

    // member, with one nested subcommand per variety family
    auto* member = app.add_subcommand("member", "membership test against gr | pf R S | secant K");
    member->require_subcommand(1);
    member->fallthrough();
    bool symbolic = false;
    member->add_flag("--symbolic", symbolic, "deterministic symbolic test");
    bool dense = false;
    member->add_flag("--dense", dense, "input materializes every coefficient");
    bool allow_small_field = false;
    member->add_flag("--allow-small-field", allow_small_field,
                     "permit randomized runs over small prime fields");
    std::string witness_out;
    member->add_option("--witness-out", witness_out, "path for the Out witness file");
    std::string check_witness;
    member->add_option("--check-witness", check_witness, "re-verify a stored witness file");

    std::string member_file;
    int pf_r = 0, pf_s = 0, secant_k = 0;
    auto* member_gr = member->add_subcommand("gr", "Grassmannian (pure tensors)");
    member_gr->add_option("tensor", member_file, "tensor file")->required();
    auto* member_pf = member->add_subcommand("pf", "Pfaffian variety Y^{r,s}");
    member_pf->add_option("r", pf_r, "primal Pfaffian parameter")->required();
    member_pf->add_option("s", pf_s, "dual Pfaffian parameter")->required();
    member_pf->add_option("tensor", member_file, "tensor file")->required();
    auto* member_secant = member->add_subcommand("secant", "k-th secant of the Grassmannian");
    member_secant->add_option("k", secant_k, "secant order")->required();
    member_secant->add_option("tensor", member_file, "tensor file")->required();

    // pfaffian
    auto* pf = app.add_subcommand("pfaffian", "numeric Pfaffian or the symbolic families");
    std::string pf_file;
    pf->add_option("matrix", pf_file, "skew-symmetric matrix file");
    int symbolic_r = 0, symbolic_star_s = 0;
    pf->add_option("--symbolic", symbolic_r, "print Pf_R");
    pf->add_option("--symbolic-star", symbolic_star_s, "print Pf*_S");

    // maya
    auto* maya = app.add_subcommand("maya", "index-set utilities: part | leq | relation | good");
    std::string maya_op;
    maya->add_option("op", maya_op, "part | leq | relation | good")->required();
    std::vector<std::string> maya_args;
    maya->add_option("args", maya_args, "operation arguments");

    // sample
    auto* sample = app.add_subcommand("sample", "deterministic sum of k pure tensors");
    int sk = 1, sp = 2, sd = 4;
    sample->add_option("k", sk, "number of pure summands")->required();
    sample->add_option("p", sp, "tensor degree")->required();
    sample->add_option("d", sd, "ambient dimension")->required();
    std::string sample_out;
    sample->add_option("-o,--out", sample_out, "output file (default stdout)");
    bool sample_dense = false;
    sample->add_flag("--dense", sample_dense, "write every coefficient");

    // tuple
    auto* tuple = app.add_subcommand("tuple", "matrix-tuple algorithms");
    std::string tuple_op, tuple_file;
    tuple->add_option("op", tuple_op, "rank | vector | subspace | normalform")->required();
    tuple->add_option("file", tuple_file, "tuple / point file")->required();
    int tuple_l = 1;
    tuple->add_option("-l", tuple_l, "subspace dimension / block size");
    bool tuple_exact = false;
    tuple->add_flag("--exact", tuple_exact, "exact rank mode (p <= 2, N <= 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        Field field = parse_field(field_text);
        if (member->parsed()) {
            std::vector<std::string> member_args;
            if (member_gr->parsed()) member_args = {"gr"};
            if (member_pf->parsed())
                member_args = {"pf", std::to_string(pf_r), std::to_string(pf_s)};
            if (member_secant->parsed()) member_args = {"secant", std::to_string(secant_k)};
            return run_member(member_args, member_file, field, seed, trials, symbolic, dense,
                              allow_small_field, witness_out, check_witness);
        }
        if (pf->parsed()) return run_pfaffian(pf_file, symbolic_r, symbolic_star_s, field);
        if (maya->parsed()) return run_maya(maya_op, maya_args);
        if (sample->parsed()) return run_sample(sk, sp, sd, seed, sample_out, sample_dense, field);
        if (tuple->parsed())
            return run_tuple(tuple_op, tuple_file, tuple_l, tuple_exact, seed, trials, field);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
