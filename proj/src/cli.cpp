#include "eqt/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "eqt/io.hpp"
#include "eqt/suites.hpp"

namespace eqt {

namespace {

struct Options {
    Query q;
    std::uint64_t seed = 7;
    int samples = 1;
    int verify_degree = 6;
    std::string suite;
};

std::string torsion_list(const HomologyPresentation& h)
{
    if (h.torsion.empty())
        return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < h.torsion.size(); ++i)
        os << (i ? "," : "") << h.torsion[i];
    return os.str();
}

std::vector<ResultRow> rows_of(const GradedComplex& C, int max_degree, int sign = 1)
{
    std::vector<ResultRow> rows;
    for (int n = 0; n <= max_degree; ++n)
        rows.push_back({n, C.homology(sign * n)});
    return rows;
}

ResultTable table(const std::string& title, const Ring& R, int max_degree)
{
    ResultTable t;
    t.title = title;
    t.ring = R.name();
    t.max_degree = max_degree;
    return t;
}

int torus_rank(const SpaceFile& f, const Query& q)
{
    if (f.image && q.rank > 0 && q.rank != f.rank)
        throw ValidationError("--rank " + std::to_string(q.rank) + " disagrees with the map-to-BT rank " +
                              std::to_string(f.rank));
    if (f.image)
        return f.rank;
    return q.rank > 0 ? q.rank : 1;
}

MappedSpace mapped(const SpaceFile& f, const Torus& T)
{
    if (!f.image)
        throw ValidationError("the space has no [map-to-BT] section");
    MappedSpace m{f.space, *f.image};
    std::string w = m.validate(T);
    if (!w.empty())
        throw ValidationError(w);
    return m;
}

AllowableSubset allowable(const SpaceFile& f, int max_degree)
{
    AllowableSubset V;
    if (f.allowable) {
        V = subcomplex_subset(*f.space, *f.allowable);
    } else if (f.labels) {
        FilteredSpace F{f.space, *f.labels};
        Perversity p = f.perversity ? *f.perversity : Perversity::middle(std::max(F.max_label(), 1));
        try {
            V = allowable_from_perversity(F, p);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    } else {
        throw ValidationError("the space has neither a [filtration] nor an [allowable] section");
    }
    ClosureReport c = check_allowable_closure(*f.space, V, max_degree + 1);
    if (!c.ok)
        throw ValidationError(c.witness);
    return V;
}

}  // namespace

ResultTable homology_table(const Query& q)
{
    Ring R = Ring::parse(q.ring);
    SpaceFile f = load_space(q.source);
    FiniteChains C = finite_chains(*f.space, q.max_degree + 1, R);
    ResultTable t = table("homology of " + f.space->name(), R, q.max_degree);
    t.rows = rows_of(C, q.max_degree);
    return t;
}

ResultTable cartan_table(const Query& q)
{
    Ring R = Ring::parse(q.ring);
    SpaceFile f = load_space(q.source);
    Torus T(q.rank > 0 ? q.rank : 1, R);
    CartanModel M = cartan_model(T, trivial_tspace(f.space), q.max_degree);
    ResultTable t = table("equivariant cohomology (Cartan model) of " + f.space->name() + ", rank " +
                              std::to_string(T.rank()),
                          R, q.max_degree);
    t.rows = rows_of(M, q.max_degree, -1);
    for (int i = 0; i < T.rank(); ++i)
        for (int n = 0; n + 2 <= q.max_degree; ++n) {
            Matrix x = M.xi_action(i, n);
            if (x.rows() && x.cols())
                t.actions.push_back({i + 1, n, x.dense()});
        }
    return t;
}

ResultTable pullback_table(const Query& q)
{
    Ring R = Ring::parse(q.ring);
    SpaceFile f = load_space(q.source);
    Torus T(torus_rank(f, q), R);
    MappedSpace m = mapped(f, T);
    HComplex H = h_model(T, m.over(T), q.max_degree);
    ResultTable t = table("homology of the pullback of ET over " + f.space->name() + ", rank " +
                              std::to_string(T.rank()),
                          R, q.max_degree);
    t.rows = rows_of(H, q.max_degree);
    return t;
}

ResultTable ih_table(const Query& q)
{
    Ring R = Ring::parse(q.ring);
    SpaceFile f = load_space(q.source);
    AllowableSubset V = allowable(f, q.max_degree);
    IntersectionComplex I = intersection_complex(*f.space, V, R, q.max_degree + 1);
    ResultTable t = table("intersection homology of " + f.space->name(), R, q.max_degree);
    t.rows = rows_of(I, q.max_degree);
    return t;
}

ResultTable ih_equivariant_table(const Query& q)
{
    Ring R = Ring::parse(q.ring);
    SpaceFile f = load_space(q.source);
    AllowableSubset V = allowable(f, q.max_degree);
    std::string side = q.side.empty() ? (f.image ? "h" : "t") : q.side;
    if (side != "h" && side != "t")
        throw std::invalid_argument("side must be t or h");
    Torus T(torus_rank(f, q), R);
    if (side == "h") {
        MappedSpace m = mapped(f, T);
        HComplex H;
        try {
            H = equivariant_ih_h(T, m.over(T), V, q.max_degree);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        ResultTable t = table("equivariant intersection homology (pullback side) of " + f.space->name(), R,
                              q.max_degree);
        t.rows = rows_of(H, q.max_degree);
        return t;
    }
    TComplex C = equivariant_ih_t(T, trivial_tspace(f.space), V, q.max_degree);
    ResultTable t = table("equivariant intersection homology (Borel side) of " + f.space->name(), R, q.max_degree);
    t.rows = rows_of(C, q.max_degree);
    return t;
}

void print_table(std::ostream& out, const ResultTable& t)
{
    out << "# " << t.title << "\n";
    out << "# ring " << t.ring << ", max degree " << t.max_degree << "\n";
    out << std::setw(8) << "degree" << std::setw(8) << "rank" << "  torsion\n";
    for (const ResultRow& r : t.rows)
        out << std::setw(8) << r.degree << std::setw(8) << r.h.free_rank << "  " << torsion_list(r.h) << "\n";
    for (const ResultRow& r : t.rows)
        out << "H " << r.degree << " rank " << r.h.free_rank << " torsion " << torsion_list(r.h) << "\n";
    for (const auto& a : t.actions) {
        out << "xi" << a.i << " H^" << a.degree << " -> H^" << a.degree + 2 << " [";
        for (std::size_t k = 0; k < a.matrix.size(); ++k) {
            out << (k ? "," : "") << "[";
            for (std::size_t j = 0; j < a.matrix[k].size(); ++j)
                out << (j ? "," : "") << a.matrix[k][j];
            out << "]";
        }
        out << "]\n";
    }
}

namespace {

int cmd_verify(const Options& o, std::ostream& out)
{
    SuiteOptions so;
    so.seed = o.seed;
    so.r = o.q.rank > 0 ? o.q.rank : 2;
    so.max_degree = o.verify_degree;
    so.samples = o.samples;
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names = {o.suite};
    bool ok = true;
    for (const auto& n : names) {
        SuiteReport rep = run_suite(n, so);
        for (const CheckResult& c : rep.checks) {
            const char* tag = c.ok ? "PASS" : c.informational ? "INFO" : "FAIL";
            out << tag << " " << rep.suite << " [" << c.criterion << "] " << c.name << " (" << c.cases << " cases)";
            if (!c.ok || (c.informational && !c.witness.empty()))
                out << " witness: " << c.witness;
            else if (!c.witness.empty())
                out << " note: " << c.witness;
            out << "\n";
        }
        ok = ok && rep.ok();
    }
    out << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Torus-equivariant and intersection homology over Z, Q and F_p"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool file) {
        if (file)
            c->add_option("space", o.q.source, "space file or builtin:<name>")->required();
        c->add_option("--ring", o.q.ring, "Z, Q or Fp:<p>");
        c->add_option("--max-degree", o.q.max_degree, "highest degree reported");
        c->add_option("--rank", o.q.rank, "rank of the torus");
    };
    auto* homology = app.add_subcommand("homology", "ordinary homology");
    common(homology, true);
    auto* cartan = app.add_subcommand("cartan", "equivariant cohomology through the Cartan model (trivial action)");
    common(cartan, true);
    auto* pb = app.add_subcommand("pullback", "homology of the pullback of ET along the map to BT");
    common(pb, true);
    auto* ih = app.add_subcommand("ih", "intersection homology");
    common(ih, true);
    auto* ihe = app.add_subcommand("ih-equivariant", "equivariant intersection homology");
    common(ihe, true);
    ihe->add_option("--side", o.q.side, "t (Borel side) or h (pullback side)")->check(CLI::IsMember({"t", "h"}));
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "em, classifying, koszul, torus, ih or all")->required();
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--rank,-r", o.q.rank, "largest torus rank");
    verify->add_option("--max-degree", o.verify_degree, "degree bound");
    verify->add_option("--samples", o.samples, "sample multiplier");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    try {
        if (*homology)
            print_table(out, homology_table(o.q));
        else if (*cartan)
            print_table(out, cartan_table(o.q));
        else if (*pb)
            print_table(out, pullback_table(o.q));
        else if (*ih)
            print_table(out, ih_table(o.q));
        else if (*ihe)
            print_table(out, ih_equivariant_table(o.q));
        if (!*verify)
            return 0;
        if (o.suite != "all" && std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end()) {
            err << "error: unknown suite " << o.suite << "\n";
            return 1;
        }
        return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace eqt
