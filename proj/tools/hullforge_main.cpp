// hullforge: construct generalized Reed-Solomon codes with prescribed hull
// dimension, derive entanglement-assisted quantum code parameters, generate
// parameter tables, and re-verify serialized constructions.
//
// Exit codes: 0 success, 2 bad input or unmet precondition, 3 certification
// or fixture mismatch, 4 oracle budget exceeded under --strict.

#include <hullforge/oracle.hpp>
#include <hullforge/paper_tables.hpp>
#include <hullforge/serial.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitCertification = 3;
constexpr int kExitBudget = 4;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw hullforge::PreconditionError("cannot open output file: " + path);
    out << text;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw hullforge::PreconditionError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

hullforge::json parse_json(const std::string& text) {
    hullforge::json j = hullforge::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw hullforge::PreconditionError("input is not valid JSON");
    return j;
}

struct ConstructArgs {
    std::string theorem;
    std::uint64_t q = 0, r = 0, z = 0, t = 0, nprime = 0, n = 0, k = 0, ell = 0;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    hullforge::ConstructionSpec spec;
    spec.theorem = hullforge::theorem_from_name(a.theorem);
    spec.q = a.q;
    spec.r = a.r;
    spec.z = a.z;
    spec.t = a.t;
    spec.nprime = a.nprime;
    spec.n = a.n;
    spec.k = a.k;
    spec.ell = a.ell;
    hullforge::Construction c = hullforge::construct(spec);
    hullforge::json j = hullforge::construction_to_json(c);
    if (c.certificate.kind == hullforge::InnerProduct::hermitian &&
        2 * std::uint64_t(c.code.k) <= c.code.length()) {
        hullforge::EaqeccParams p = hullforge::derive_params(c.code, c.certificate);
        j["eaqecc"] = hullforge::params_to_json(p);
    }
    write_output(a.out, hullforge::canonical_dump(j));
    return kExitOk;
}

struct TableArgs {
    std::string family;
    std::uint64_t q = 0, r = 0, z = 0, t = 0, nprime = 0, n = 0;
    std::int64_t kmin = -1, kmax = -1, lmin = -1, lmax = -1;
    std::string format = "csv";
    std::string fixture;
    bool no_payload = false;
    std::string out;
};

int run_table(const TableArgs& a) {
    hullforge::TableQuery qy;
    qy.family = hullforge::family_from_name(a.family);
    qy.q = a.q;
    qy.r = a.r;
    qy.z = a.z;
    qy.t = a.t;
    qy.nprime = a.nprime;
    qy.n = a.n;
    if (a.kmin >= 0) qy.kmin = static_cast<std::uint64_t>(a.kmin);
    if (a.kmax >= 0) qy.kmax = static_cast<std::uint64_t>(a.kmax);
    if (a.lmin >= 0) qy.lmin = static_cast<std::uint64_t>(a.lmin);
    if (a.lmax >= 0) qy.lmax = static_cast<std::uint64_t>(a.lmax);

    std::span<const hullforge::FixtureRow> fix;
    if (!a.fixture.empty()) {
        fix = hullforge::fixture(a.fixture);
        bool explicit_ranges = a.kmin >= 0 || a.kmax >= 0 || a.lmin >= 0 || a.lmax >= 0;
        if (!explicit_ranges)
            for (const hullforge::FixtureRow& f : fix)
                if (f.q == qy.q) qy.rows.emplace_back(f.k, f.ell);
    }

    std::vector<hullforge::TableRow> rows = hullforge::generate_table(qy);

    if (!a.fixture.empty()) {
        hullforge::FixtureReport rep = hullforge::compare_with_fixture(fix, rows, qy.q);
        for (const std::string& p : rep.problems) std::cerr << p << "\n";
        std::cout << rep.matched << "/" << rep.total << " rows match\n";
        return rep.ok() ? kExitOk : kExitCertification;
    }

    std::string text;
    if (a.format == "csv")
        text = hullforge::render_csv(rows);
    else if (a.format == "markdown")
        text = hullforge::render_markdown(rows);
    else if (a.format == "json")
        text = hullforge::canonical_dump(hullforge::table_to_json(qy.family, rows, !a.no_payload));
    else
        throw hullforge::PreconditionError("unknown format: " + a.format);
    write_output(a.out, text);
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string input_flag;
    std::string kind;
    bool oracle = false;
    bool strict = false;
};

int run_verify(const VerifyArgs& a) {
    std::string path = a.input.empty() ? a.input_flag : a.input;
    if (path.empty())
        throw hullforge::PreconditionError("verify needs an input: positional path or --in");
    if (!a.input.empty() && !a.input_flag.empty() && a.input != a.input_flag)
        throw hullforge::PreconditionError("positional input and --in disagree");
    hullforge::json j = parse_json(read_input(path));

    hullforge::GrsCode code =
        hullforge::code_from_json(j.contains("code") ? j.at("code") : j);
    std::optional<hullforge::HullCertificate> embedded;
    if (j.contains("certificate"))
        embedded = hullforge::certificate_from_json(j.at("certificate"), code.field);

    hullforge::InnerProduct kind;
    if (!a.kind.empty()) {
        if (a.kind == "euclidean")
            kind = hullforge::InnerProduct::euclidean;
        else if (a.kind == "hermitian")
            kind = hullforge::InnerProduct::hermitian;
        else
            throw hullforge::PreconditionError("--kind must be euclidean or hermitian");
        if (embedded && embedded->kind != kind)
            throw hullforge::PreconditionError(
                "--kind contradicts the embedded certificate kind");
    } else if (embedded) {
        kind = embedded->kind;
    } else {
        throw hullforge::PreconditionError(
            "input has no certificate; pass --kind euclidean|hermitian");
    }

    std::size_t gram = hullforge::hull_dim_gram(code, kind);
    hullforge::HullIntersection inter = hullforge::hull_dim_intersect(code, kind);
    if (gram != inter.dim)
        throw hullforge::CertificationError("gram and intersection routes disagree");
    std::cout << "code: [" << code.length() << ", " << code.k << "] over GF(" << code.field->q()
              << "), " << hullforge::inner_product_name(kind) << " hull\n";
    std::cout << "gram route: " << gram << "\n";
    std::cout << "intersection route: " << inter.dim << "\n";

    if (embedded) {
        hullforge::HullCertificate fresh =
            hullforge::certify_hull(code, kind, embedded->dim);
        if (embedded->basis.rows() != embedded->dim ||
            embedded->basis.cols() != code.length())
            throw hullforge::CertificationError("embedded certificate basis has wrong shape");
        if (embedded->dim > 0) {
            std::size_t have = hullforge::rank(embedded->basis);
            hullforge::Matrix stacked = hullforge::stack_rows(embedded->basis, fresh.basis);
            if (have != embedded->dim || hullforge::rank(stacked) != fresh.dim)
                throw hullforge::CertificationError(
                    "embedded certificate basis does not span the hull");
        }
        std::cout << "certificate: ok (dim " << embedded->dim << ")\n";
    }

    bool budget_hit = false;
    if (a.oracle) {
        hullforge::OracleBudgets budgets = hullforge::budgets_from_env();
        std::uint64_t expected_d = code.length() - code.k + 1;
        if (auto d = hullforge::min_distance_enum(code, budgets)) {
            if (*d != expected_d)
                throw hullforge::CertificationError("distance oracle disagrees with n-k+1");
            std::cout << "oracle distance: " << *d << " (matches n-k+1)\n";
        } else {
            std::cout << "oracle distance: skipped (budget)\n";
            budget_hit = true;
        }
        if (auto mds = hullforge::mds_minor_check(code, budgets)) {
            if (!*mds) throw hullforge::CertificationError("a k-column minor is singular");
            std::cout << "oracle minors: all invertible\n";
        } else {
            std::cout << "oracle minors: skipped (budget)\n";
            budget_hit = true;
        }
        if (auto h = hullforge::hull_enum(code, kind, budgets)) {
            if (*h != gram)
                throw hullforge::CertificationError("hull enumeration disagrees with fast routes");
            std::cout << "oracle hull: " << *h << " (matches)\n";
        } else {
            std::cout << "oracle hull: skipped (budget)\n";
            budget_hit = true;
        }
    }
    if (budget_hit && a.strict) throw BudgetExceeded("oracle budget exceeded under --strict");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GRS code constructor with prescribed hull dimension"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build and certify one code");
    construct->add_option("--theorem", ca.theorem, "construction identifier, e.g. t3.5")
        ->required();
    construct->add_option("--q", ca.q, "base field order");
    construct->add_option("--r", ca.r, "additive subfield order");
    construct->add_option("--z", ca.z, "additive subspace dimension");
    construct->add_option("--t", ca.t, "coset count");
    construct->add_option("--nprime", ca.nprime, "multiplicative coset size");
    construct->add_option("--n", ca.n, "point count");
    construct->add_option("--k", ca.k, "code dimension");
    construct->add_option("--ell", ca.ell, "hull dimension");
    construct->add_option("--out", ca.out, "output path (default stdout)");

    TableArgs ta;
    CLI::App* table = app.add_subcommand("table", "generate a parameter table");
    table->add_option("--family", ta.family, "table family, e.g. t4.6")->required();
    table->add_option("--q", ta.q, "base field order");
    table->add_option("--r", ta.r, "additive subfield order");
    table->add_option("--z", ta.z, "additive subspace dimension");
    table->add_option("--t", ta.t, "coset count");
    table->add_option("--nprime", ta.nprime, "multiplicative coset size");
    table->add_option("--n", ta.n, "point count");
    table->add_option("--kmin", ta.kmin, "smallest dimension");
    table->add_option("--kmax", ta.kmax, "largest dimension");
    table->add_option("--lmin", ta.lmin, "smallest hull dimension");
    table->add_option("--lmax", ta.lmax, "largest hull dimension");
    table->add_option("--format", ta.format, "csv | json | markdown (default csv)");
    table->add_option("--paper-fixture", ta.fixture,
                      "compare against a frozen fixture: table1 | table2 | table3");
    table->add_flag("--no-payload", ta.no_payload, "omit constructions from JSON output");
    table->add_option("--out", ta.out, "output path (default stdout)");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "re-certify a serialized construction");
    verify->add_option("input", va.input, "construction or code JSON path, - for stdin");
    verify->add_option("--in", va.input_flag, "same as the positional input path");
    verify->add_option("--kind", va.kind, "inner product when no certificate is embedded");
    verify->add_flag("--oracle", va.oracle, "run brute-force oracles within budget");
    verify->add_flag("--strict", va.strict, "exit 4 if any oracle was skipped for budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (table->parsed()) return run_table(ta);
        return run_verify(va);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hullforge::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const hullforge::CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
