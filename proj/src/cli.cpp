#include "dgkit/cli.hpp"

#include <algorithm>
#include <sstream>

namespace dgkit {

namespace {

std::string yes_no(bool b) { return b ? "exact" : "window"; }

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

struct Context {
    const CommandOptions& opt;
    Report report;

    Field field() const { return opt.field ? Field::parse(*opt.field) : Field::rationals(); }
    Truncation trunc(Truncation fallback = {}) const { return opt.trunc ? *opt.trunc : fallback; }

    PresentationFile resolve(const std::string& ref, const char* role) const
    {
        if (ref.empty())
            throw UsageError(std::string("missing ") + role + " (use a preset name or a presentation file)");
        if (is_preset(ref))
            return preset(ref, field(), opt.trunc);
        PresentationFile p = load_presentation(ref);
        if (opt.field && p.field != field())
            throw UsageError(ref + " declares field " + p.field.to_string() + ", --field asks for " + *opt.field);
        if (p.presented() && opt.trunc)
            p.truncation = opt.trunc;
        return p;
    }

    DgAlgebra algebra(const std::string& ref, const char* role = "algebra")
    {
        PresentationFile p = resolve(ref, role);
        if (p.kind != PresentationKind::algebra)
            throw UsageError(ref + " is not an algebra");
        return build_algebra(p);
    }

    DgCoalgebra coalgebra(const std::string& ref, const char* role = "coalgebra")
    {
        PresentationFile p = resolve(ref, role);
        if (p.kind != PresentationKind::coalgebra)
            throw UsageError(ref + " is not a coalgebra");
        return build_coalgebra(p);
    }

    void add(const std::vector<Check>& checks, const std::string& prefix = "")
    {
        for (Check c : checks) {
            if (!prefix.empty())
                c.name = prefix + ": " + c.name;
            report.checks.push_back(std::move(c));
        }
    }
    void add(Check c) { report.checks.push_back(std::move(c)); }

    void dims_table(const GradedSpace& S, const std::string& title = "dims")
    {
        ReportTable t{title, {"degree", "weight", "dim"}, {}};
        for (const auto& [dw, n] : bigraded_dims(S))
            t.rows.push_back({std::to_string(dw.first), std::to_string(dw.second), std::to_string(n)});
        report.tables.push_back(std::move(t));
    }

    /// Strict mode turns dropped basis elements inside the window into a failure.
    void window_check(const GradedSpace& S)
    {
        if (!opt.strict_window)
            return;
        Check c{"strict window: no basis element dropped"};
        for (int n : S.incomplete_degrees())
            if (S.window().contains(n))
                c.fail("degree " + std::to_string(n) + " was truncated");
        c.checked = S.dims().size();
        add(c);
    }

    void homology_table(const DgSpace& X)
    {
        if (!opt.homology)
            return;
        Check c{"d^2 = 0 (homology is defined)"};
        std::vector<HomologyRow> rows;
        try {
            rows = homology(X);
        }
        catch (const NotAComplex& e) {
            c.fail(e.what());
            add(c);
            return;
        }
        ReportTable t{"homology", {"degree", "dim", "status"}, {}};
        auto dims = X.space->dims();
        for (const auto& r : rows) {
            if (!dims.count(r.degree) && r.dim == 0)
                continue;
            t.rows.push_back({std::to_string(r.degree), std::to_string(r.dim), yes_no(r.trusted)});
            if (opt.strict_window && !r.trusted)
                c.fail("H in degree " + std::to_string(r.degree) + " depends on the window");
            ++c.checked;
        }
        add(c);
        report.tables.push_back(std::move(t));
    }
};

using Handler = void (*)(Context&);

void require_convention_default(Context& ctx, const char* why)
{
    if (!ctx.opt.convention.is_standard())
        throw UsageError(std::string("--convention does not apply to ") + why);
}

void cmd_verify(Context& ctx)
{
    require_convention_default(ctx, "verify");
    PresentationFile p = ctx.resolve(ctx.opt.object, "object");
    ctx.report.truncation = p.truncation ? p.truncation->to_string() : "from the basis";
    if (p.kind == PresentationKind::map) {
        GradedMap m = build_map(p);
        Check c{"map is homogeneous"};
        c.checked = m.columns.size();
        if (auto v = m.homogeneity_violation())
            c.fail(*v);
        ctx.add(c);
        ctx.report.result.push_back("map of degree " + std::to_string(m.degree));
        return;
    }
    if (p.kind == PresentationKind::coalgebra) {
        DgCoalgebra C = build_coalgebra(p);
        ctx.add(check_coalgebra(C));
        ctx.dims_table(C.space());
        ctx.window_check(C.space());
        ctx.homology_table(C.dg);
        return;
    }
    DgAlgebra A;
    if (p.presented()) {
        try {
            NormalForms nf = normal_forms(build_presented(p));
            A = nf.algebra;
            ctx.report.result.push_back("ideal rank in window: " + std::to_string(nf.ideal_rank));
        }
        catch (const InconsistentDifferential& e) {
            Check c{"d preserves the relation ideal"};
            c.fail(e.what());
            ctx.add(c);
            return;
        }
    }
    else
        A = build_algebra(p);
    ctx.report.truncation = A.space().window().to_string();
    ctx.add(check_algebra(A));
    ctx.dims_table(A.space());
    ctx.window_check(A.space());
    ctx.homology_table(A.dg);
}

void cmd_bar(Context& ctx)
{
    DgAlgebra A = ctx.algebra(ctx.opt.object);
    Truncation t = ctx.trunc();
    BarConstruction B = bar(A, t, ctx.opt.convention);
    const DgCoalgebra& W = B.coalgebra();
    ctx.add(check_split_differential(W.dg, B.d_int, B.d_ext));
    ctx.add(check_length_filtration(W.space(), B.d_int, B.d_ext, -1));
    ctx.add(check_coalgebra(W), "BA");
    GradedMap beta = raw_beta(B, A);
    if (ctx.opt.convention.bar == Sign::plus)
        for (auto& col : beta.columns)
            col = col.scaled(A.field().of(-1));
    ctx.add(verify_twisting_cochain(W, A, beta, true).certificate,
            ctx.opt.convention.bar == Sign::minus ? "beta" : "-beta");
    ctx.dims_table(W.space());
    ctx.window_check(W.space());
    ctx.homology_table(W.dg);
}

void cmd_cobar(Context& ctx)
{
    DgCoalgebra C = ctx.coalgebra(ctx.opt.object);
    Truncation t = ctx.trunc();
    CobarConstruction O = cobar(C, t, ctx.opt.convention);
    const DgAlgebra& W = O.algebra();
    ctx.add(check_split_differential(W.dg, O.d_int, O.d_ext));
    ctx.add(check_length_filtration(W.space(), O.d_int, O.d_ext, 1));
    ctx.add(check_algebra(W), "Omega C");
    GradedMap omega = raw_omega(C, O);
    if (ctx.opt.convention.cobar == Sign::minus)
        for (auto& col : omega.columns)
            col = col.scaled(C.field().of(-1));
    ctx.add(verify_twisting_cochain(C, W, omega, true).certificate,
            ctx.opt.convention.cobar == Sign::plus ? "omega" : "-omega");
    ctx.dims_table(W.space());
    ctx.window_check(W.space());
    ctx.homology_table(W.dg);
}

void cmd_mc(Context& ctx)
{
    require_convention_default(ctx, "mc");
    if (!ctx.opt.object.empty()) {
        DgAlgebra A = ctx.algebra(ctx.opt.object);
        auto sols = enumerate_mc_elements(A);
        ReportTable t{"Maurer-Cartan elements", {"#", "element"}, {}};
        for (std::size_t i = 0; i < sols.size(); ++i)
            t.rows.push_back({std::to_string(i), sols[i].is_zero() ? "0" : A.space().format(sols[i])});
        ctx.report.tables.push_back(std::move(t));
        Check c{"every enumerated element solves da + a^2 = 0"};
        for (const auto& a : sols) {
            ++c.checked;
            if (!verify_mc_element(A, a).solution)
                c.fail(A.space().format(a));
        }
        ctx.add(c);
        ctx.report.result.push_back("count " + std::to_string(sols.size()));
        return;
    }
    int L = ctx.trunc(Truncation{-6, 0, 6}).weight_cap;
    MaurerCartanAlgebra mc = mc_algebra(L, ctx.field());
    ctx.report.truncation = mc.algebra().space().window().to_string();
    ctx.add(mc.checks);
    ctx.dims_table(mc.algebra().space());
    ctx.window_check(mc.algebra().space());
    ctx.homology_table(mc.algebra().dg);
    ReportTable t{"d(u^n)", {"n", "d(u^n)"}, {}};
    for (int n = 1; n <= L; ++n) {
        Vec d = mc.algebra().dg.d[mc.power(n)];
        t.rows.push_back({std::to_string(n), d.is_zero() ? "0" : mc.algebra().space().format(d)});
    }
    ctx.report.tables.push_back(std::move(t));
}

void cmd_convolve(Context& ctx)
{
    require_convention_default(ctx, "convolve");
    DgCoalgebra C = ctx.coalgebra(ctx.opt.coalgebra);
    DgAlgebra A = ctx.algebra(ctx.opt.algebra);
    Convolution conv = convolution(C, A);
    ctx.add(check_algebra(conv.algebra), "[C,A]");
    ctx.add(verify_measuring(C, conv.algebra, A, rev_measuring(C, conv)), "rev");
    ctx.dims_table(conv.algebra.space());
    ctx.homology_table(conv.algebra.dg);
}

void cmd_sweedler_product(Context& ctx)
{
    require_convention_default(ctx, "sweedler-product");
    DgCoalgebra C = ctx.coalgebra(ctx.opt.coalgebra);
    DgAlgebra A = ctx.algebra(ctx.opt.algebra);
    SweedlerProduct P = sweedler_product(C, A, ctx.trunc(), ctx.opt.pointed);
    ctx.add(check_algebra(P.algebra()), "C|>A");
    MeasuringOptions mo;
    mo.pointed = ctx.opt.pointed;
    ctx.add(verify_measuring(C, A, P.algebra(), P.phi, mo), "universal measuring");
    ReportTable t{"dims", {"degree", "weight", "dim"}, {}};
    for (const auto& [dw, n] : P.bigraded_dims())
        t.rows.push_back({std::to_string(dw.first), std::to_string(dw.second), std::to_string(n)});
    ctx.report.tables.push_back(std::move(t));
    ctx.report.result.push_back("exact through weight " + std::to_string(P.exact_weight));
    ctx.window_check(P.algebra().space());
    ctx.homology_table(P.algebra().dg);
}

void cmd_sweedler_dual(Context& ctx)
{
    require_convention_default(ctx, "sweedler-dual");
    DgAlgebra A = ctx.algebra(ctx.opt.object);
    SweedlerDual D = sweedler_dual(A);
    ctx.add(check_coalgebra(D.coalgebra), "A^v");
    ctx.add(verify_measuring(D.coalgebra, A, D.ground, D.evaluation), "evaluation");
    DgAlgebra back = dual_algebra(D.coalgebra);
    ctx.add(check_algebra(back), "(A^v)*");
    Check iso{"(A^v)* has the dimensions of A"};
    iso.checked = 1;
    if (bigraded_dims(back.space()) != bigraded_dims(A.space()))
        iso.fail("dimension tables differ");
    ctx.add(iso);
    ctx.dims_table(D.coalgebra.space());
}

GradedMap cochain_from_file(Context& ctx, const DgCoalgebra& C, const DgAlgebra& A)
{
    if (ctx.opt.map.empty())
        throw UsageError("missing --map (a presentation of kind map)");
    PresentationFile p = load_presentation(ctx.opt.map);
    if (p.kind != PresentationKind::map)
        throw UsageError(ctx.opt.map + " is not a map");
    GradedMap m = GradedMap::zero(C.dg.space, A.dg.space, p.degree);
    for (const auto& [x, v] : p.images) {
        auto c = C.space().find(p.basis[x].name);
        if (!c)
            throw UnknownName(0, 0, "\"" + p.basis[x].name + "\" is not a basis element of the coalgebra");
        for (const auto& [y, k] : v) {
            auto a = A.space().find(p.target[y].name);
            if (!a)
                throw UnknownName(0, 0, "\"" + p.target[y].name + "\" is not a basis element of the algebra");
            m.columns[*c].add(*a, k);
        }
    }
    return m;
}

void cmd_twist(Context& ctx)
{
    require_convention_default(ctx, "twist");
    if (ctx.opt.command.size() != 2 || (ctx.opt.command[1] != "verify" && ctx.opt.command[1] != "enumerate"))
        throw UsageError("use \"twist verify\" or \"twist enumerate\"");
    DgCoalgebra C = ctx.coalgebra(ctx.opt.coalgebra);
    DgAlgebra A = ctx.algebra(ctx.opt.algebra);
    if (ctx.opt.command[1] == "verify") {
        GradedMap alpha = cochain_from_file(ctx, C, A);
        TwistingCochain T = verify_twisting_cochain(C, A, alpha, ctx.opt.pointed);
        ctx.add(T.certificate);
        ctx.report.result.push_back(T.valid() ? "twisting cochain" : "not a twisting cochain");
        return;
    }
    Truncation t = ctx.trunc(Truncation{-3, 3, 4});
    ctx.report.truncation = t.to_string();
    AdjunctionCount n = count_adjunction(C, A, t);
    ctx.add(n.checks);
    ctx.report.tables.push_back({"counts",
                                 {"candidates", "twisting", "algebra maps", "coalgebra maps"},
                                 {{std::to_string(n.candidates), std::to_string(n.twisting),
                                   std::to_string(n.algebra_maps), std::to_string(n.coalgebra_maps)}}});
}

void cmd_adjoint(Context& ctx)
{
    DgCoalgebra C = ctx.coalgebra(ctx.opt.coalgebra);
    DgAlgebra A = ctx.algebra(ctx.opt.algebra);
    GradedMap alpha = cochain_from_file(ctx, C, A);
    TwistingCochain T = verify_twisting_cochain(C, A, alpha, true);
    ctx.add(T.certificate, "alpha");
    if (!T.valid())
        return;
    Truncation t = ctx.trunc();
    CobarConstruction O = cobar(C, t, ctx.opt.convention);
    BarConstruction B = bar(A, t, ctx.opt.convention);
    AdjointMaps m = adjunction_transforms(T, C, A, O, B);
    ctx.add(m.g_checks, "g");
    ctx.add(m.f_checks, "f");
    Check g_round{"extraction from g recovers alpha"};
    g_round.checked = 1;
    if (extract_from_algebra_map(C, A, O, m.g).columns != alpha.columns)
        g_round.fail("extracted cochain differs");
    Check f_round{"extraction from f recovers alpha"};
    f_round.checked = 1;
    if (extract_from_coalgebra_map(C, A, B, m.f.images).columns != alpha.columns)
        f_round.fail("extracted cochain differs");
    ctx.add(g_round);
    ctx.add(f_round);

    const GradedSpace& OW = O.algebra().space();
    const GradedSpace& BW = B.coalgebra().space();
    ReportTable tg{"g on letters", {"letter", "g"}, {}};
    for (std::size_t l = 0; l < O.source.size(); ++l) {
        auto idx = find_word(OW, Word{static_cast<int>(l)});
        if (!idx)
            continue;
        Vec img = m.g[*idx];
        tg.rows.push_back({OW.name(*idx), img.is_zero() ? "0" : A.space().format(img)});
    }
    ReportTable tf{"f", {"c", "f(c)"}, {}};
    for (int c = 0; c < C.space().dim(); ++c)
        tf.rows.push_back({C.space().name(c), m.f.images[c].is_zero() ? "0" : BW.format(m.f.images[c])});
    ctx.report.tables.push_back(std::move(tg));
    ctx.report.tables.push_back(std::move(tf));
}

void cmd_signs(Context& ctx)
{
    if (ctx.opt.command.size() != 2 || ctx.opt.command[1] != "compare")
        throw UsageError("use \"signs compare\"");
    PresentationFile p = ctx.resolve(ctx.opt.object, "object");
    Truncation t = ctx.trunc();
    if (p.kind == PresentationKind::algebra)
        ctx.add(sign_convention_iso(build_algebra(p), t), "pi: B_minus -> B_plus");
    else if (p.kind == PresentationKind::coalgebra)
        ctx.add(sign_convention_iso(build_coalgebra(p), t), "pi: Omega_plus -> Omega_minus");
    else
        throw UsageError("signs compare needs an algebra or a coalgebra");
    ctx.report.convention = SignConvention::standard().to_string() + " vs " + SignConvention::flipped().to_string();
    ctx.report.result.push_back("pi multiplies words of length n by (-1)^n");
}

void cmd_homology(Context& ctx)
{
    require_convention_default(ctx, "homology");
    PresentationFile p = ctx.resolve(ctx.opt.object, "object");
    CommandOptions with = ctx.opt;
    with.homology = true;
    Context inner{with, ctx.report};
    if (p.kind == PresentationKind::algebra) {
        DgAlgebra A = build_algebra(p);
        inner.report.truncation = A.space().window().to_string();
        inner.window_check(A.space());
        inner.homology_table(A.dg);
    }
    else if (p.kind == PresentationKind::coalgebra) {
        DgCoalgebra C = build_coalgebra(p);
        inner.report.truncation = C.space().window().to_string();
        inner.window_check(C.space());
        inner.homology_table(C.dg);
    }
    else
        throw UsageError("homology needs an algebra or a coalgebra");
    ctx.report = inner.report;
}

void cmd_dims(Context& ctx)
{
    require_convention_default(ctx, "dims");
    PresentationFile p = ctx.resolve(ctx.opt.object, "object");
    if (p.kind == PresentationKind::algebra) {
        DgAlgebra A = build_algebra(p);
        ctx.report.truncation = A.space().window().to_string();
        ctx.dims_table(A.space());
        ctx.window_check(A.space());
    }
    else if (p.kind == PresentationKind::coalgebra) {
        DgCoalgebra C = build_coalgebra(p);
        ctx.report.truncation = C.space().window().to_string();
        ctx.dims_table(C.space());
        ctx.window_check(C.space());
    }
    else
        throw UsageError("dims needs an algebra or a coalgebra");
}

const std::vector<std::pair<std::string, Handler>>& handlers()
{
    static const std::vector<std::pair<std::string, Handler>> h{
        {"verify", cmd_verify},
        {"bar", cmd_bar},
        {"cobar", cmd_cobar},
        {"mc", cmd_mc},
        {"convolve", cmd_convolve},
        {"sweedler-product", cmd_sweedler_product},
        {"sweedler-dual", cmd_sweedler_dual},
        {"twist", cmd_twist},
        {"adjoint", cmd_adjoint},
        {"signs", cmd_signs},
        {"homology", cmd_homology},
        {"dims", cmd_dims},
    };
    return h;
}

std::vector<std::string> pad(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string c = cells[i];
        if (i + 1 < cells.size())
            c.resize(std::max(widths[i], c.size()), ' ');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<std::string> command_names()
{
    std::vector<std::string> r;
    for (const auto& [name, h] : handlers())
        r.push_back(name);
    return r;
}

Report dispatch(const CommandOptions& opt)
{
    if (opt.command.empty())
        throw UsageError("no command given; expected one of " + join(command_names(), ", "));
    Context ctx{opt, {}};
    ctx.report.command = opt.echo.empty() ? join(opt.command, " ") : opt.echo;
    ctx.report.convention = opt.convention.to_string();
    ctx.report.field = ctx.field().to_string();
    ctx.report.truncation = ctx.trunc().to_string();
    for (const auto& [name, h] : handlers())
        if (name == opt.command[0]) {
            bool two_words = name == "twist" || name == "signs";
            if (!two_words && opt.command.size() != 1)
                throw UsageError("unexpected argument \"" + opt.command[1] + "\"");
            h(ctx);
            return ctx.report;
        }
    throw UsageError("unknown command \"" + opt.command[0] + "\"; expected one of " + join(command_names(), ", "));
}

std::string Report::render() const
{
    std::ostringstream out;
    out << "command: dgkit " << command << '\n';
    out << "convention: " << convention << '\n';
    out << "field: " << field << '\n';
    out << "truncation: " << truncation << '\n';
    out << "\n[checks]\n";
    if (checks.empty())
        out << "(none)\n";
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " (checked " << c.checked;
        if (c.skipped)
            out << ", skipped " << c.skipped;
        out << ')';
        if (!c.pass)
            out << "\n     witness: " << c.witness;
        out << '\n';
    }
    for (const auto& t : tables) {
        out << "\n[" << t.title << "]\n";
        std::vector<std::size_t> widths(t.header.size(), 0);
        auto measure = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        };
        measure(t.header);
        for (const auto& r : t.rows)
            measure(r);
        out << join(pad(t.header, widths), "  ") << '\n';
        for (const auto& r : t.rows)
            out << join(pad(r, widths), "  ") << '\n';
    }
    if (!result.empty()) {
        out << "\n[result]\n";
        for (const auto& r : result)
            out << r << '\n';
    }
    out << "\nstatus: " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace dgkit
