#include "syzlab/basecomplex.hpp"
#include "syzlab/fibercensus.hpp"
#include "syzlab/flowlab.hpp"
#include "syzlab/monodromy.hpp"
#include "syzlab/sheafcoh.hpp"
#include "syzlab/toriccrepant.hpp"
#include "syzlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace syz;
using verify::Json;

namespace {

struct Globals {
    double psi = 10;
    double tol = 1e-10;
    int samples = 512;
    std::uint64_t seed = 2024;
    std::string format = "text";
    std::string skip;
    std::string out;
};

std::vector<int> digits_of(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(std::stoi(part));
    if (out.size() == 1 && s.size() > 1 && s.find(',') == std::string::npos) {
        out.clear();
        for (char c : s)
            out.push_back(c - '0');
    }
    return out;
}

Json globals_json(const Globals& g)
{
    return {{"psi", g.psi}, {"tol", g.tol}, {"samples", g.samples}, {"seed", g.seed}};
}

void emit(const Globals& g, const Json& j, const std::string& text)
{
    const std::string body = g.format == "json" ? j.dump(2) + "\n" : text;
    if (g.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(g.out);
    if (!f)
        throw std::runtime_error("cannot write " + g.out);
    f << body;
}

Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).convert_to<long>());
        rows.push_back(row);
    }
    return rows;
}

int cmd_graph(const Globals& g, const std::vector<double>& point)
{
    const BaseGraph graph = enumerate_graph();
    Json j;
    j["config"] = globals_json(g);
    std::ostringstream os;
    os << graph.vertices.size() << " vertices, " << graph.edges.size() << " legs, connected: "
       << (graph.connected() ? "yes" : "no") << "\n";
    Json verts = Json::array(), edges = Json::array();
    for (const auto& v : graph.vertices) {
        Json bary = Json::array();
        for (const auto& q : v.barycentric)
            bary.push_back(syz::to_string(q));
        verts.push_back({{"name", v.name()}, {"kind", v.kind == VertexKind::Pair ? "pair" : "triple"},
                         {"barycentric", bary}, {"mirror", mirror_involution(v).name()}});
        os << "  " << v.name() << "  mirror " << mirror_involution(v).name() << "\n";
    }
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto& leg = graph.edges[e];
        edges.push_back({{"name", leg.name()}, {"tail", graph.vertices[graph.tail[e]].name()},
                         {"head", graph.vertices[graph.head[e]].name()}});
        os << "  " << leg.name() << ": " << graph.vertices[graph.tail[e]].name() << " -> "
           << graph.vertices[graph.head[e]].name() << "\n";
    }
    j["vertices"] = verts;
    j["legs"] = edges;
    if (point.size() == 2) {
        const auto s = classify_fattened(point[0], point[1]);
        j["classification"] = {{"r1", point[0]}, {"r2", point[1]}, {"stratum", to_string(s.tag)}};
        os << "stratum of (" << point[0] << ", " << point[1] << "): " << to_string(s.tag) << "\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_monodromy(const Globals& g, const std::string& leg_s, const std::string& bp_s, const std::string& vertex_s,
                  int orientation)
{
    Json j;
    j["config"] = globals_json(g);
    std::ostringstream os;
    const auto bpv = digits_of(bp_s);
    if (bpv.size() != 2)
        throw std::invalid_argument("--basepoint expects m,l");
    const ChartId bp{bpv[0], bpv[1]};
    if (!vertex_s.empty()) {
        const GraphVertex v = GraphVertex::from_label(FaceLabel(digits_of(vertex_s)));
        const auto ops = vertex_monodromies(v, bp);
        Json list = Json::array();
        os << v.name() << " in the basis (" ;
        const auto names = bp.basis_names();
        for (std::size_t k = 0; k < names.size(); ++k)
            os << (k ? ", " : "") << names[k];
        os << ")\n";
        for (const auto& op : ops) {
            list.push_back({{"label", op.label}, {"matrix", matrix_json(op.matrix)}});
            os << "  " << op.label << " = " << syz::to_string(op.matrix) << "\n";
        }
        const auto w0 = vanishing_filtration(ops);
        j["vertex"] = v.name();
        j["basepoint"] = bp.name();
        j["operators"] = list;
        j["W0"] = w0.names;
        os << "  W0 generated by";
        for (const auto& n : w0.names)
            os << " " << n;
        os << "\n";
    } else {
        const auto l = digits_of(leg_s);
        if (l.size() != 3)
            throw std::invalid_argument("--leg expects i,j,k");
        const GraphEdge leg = GraphEdge::make(l[0], l[1], l[2]);
        const auto op = leg_monodromy(leg, bp, orientation);
        j["leg"] = leg.name();
        j["basepoint"] = bp.name();
        j["label"] = op.label;
        j["orientation"] = op.orientation;
        j["basis"] = bp.basis_names();
        j["matrix"] = matrix_json(op.matrix);
        os << op.label << " at " << bp.name() << " = " << syz::to_string(op.matrix) << "\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_census(const Globals& g, const std::string& fib)
{
    const Fibration f = fibration_from_string(fib);
    Json j;
    j["config"] = globals_json(g);
    j["fibration"] = to_string(f);
    std::ostringstream os;
    Json rows = Json::array();
    for (const auto& r : census(f)) {
        Json row{{"stratum", r.stratum},
                 {"count", r.stratum_count},
                 {"fiber", r.fiber.name},
                 {"collapsed_cycles", r.collapsed_cycles},
                 {"contributes_to_euler", r.contributes_to_euler}};
        row["fiber_euler"] = r.fiber.euler ? Json(*r.fiber.euler) : Json(nullptr);
        row["recomputed_euler"] = r.fiber.recomputed_euler ? Json(*r.fiber.recomputed_euler) : Json(nullptr);
        rows.push_back(row);
        os << r.stratum_count << " x " << r.stratum << ": " << r.fiber.name;
        if (r.fiber.euler)
            os << " (chi " << *r.fiber.euler << ")";
        if (!r.fiber.consistent())
            os << " [recomputed chi " << *r.fiber.recomputed_euler << "]";
        os << "\n";
    }
    j["rows"] = rows;
    emit(g, j, os.str());
    return 0;
}

int cmd_euler(const Globals& g, const std::string& fib, bool recomputed, const std::string& surface, bool quotient)
{
    Json j;
    j["config"] = globals_json(g);
    std::ostringstream os;
    if (!surface.empty()) {
        const auto s = singular_surface(FaceLabel(digits_of(surface)), quotient);
        j["surface"] = {{"label", s.label}, {"euler", s.euler}, {"genus", s.genus}};
        os << s.label << ": chi = " << s.euler << ", genus = " << s.genus << "\n";
    } else {
        const Fibration f = fibration_from_string(fib);
        const auto l = recomputed ? recomputed_euler_ledger(f) : euler_ledger(f);
        Json terms = Json::array();
        for (const auto& t : l.terms)
            terms.push_back({{"stratum", t.stratum}, {"count", t.count}, {"fiber_euler", t.fiber_euler},
                             {"contribution", t.contribution}});
        j["fibration"] = to_string(f);
        j["recomputed"] = recomputed;
        j["terms"] = terms;
        j["total"] = l.total;
        os << "chi = " << l.formula() << "\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_spectral(const Globals& g, const std::string& fib, const std::string& explain)
{
    Json j;
    j["config"] = globals_json(g);
    std::ostringstream os;
    if (!explain.empty()) {
        if (explain != "K3")
            throw std::invalid_argument("--explain supports K3");
        const CechComplex c = build_K3();
        const auto h = cohomology(c);
        Json triplets = Json::array();
        for (std::size_t r = 0; r < c.d.rows(); ++r)
            for (std::size_t col = 0; col < c.d.cols(); ++col)
                if (c.d(r, col) != 0)
                    triplets.push_back({r, col, syz::to_string(c.d(r, col))});
        j["complex"] = "K3";
        j["c0"] = c.c0;
        j["c1"] = c.c1;
        j["rank"] = h.rank;
        j["h0"] = h.h0;
        j["h1"] = h.h1;
        j["c0_blocks"] = c.c0_blocks;
        j["c1_blocks"] = c.c1_blocks;
        j["d_triplets"] = triplets;
        os << "K3: C0 dim " << c.c0 << ", C1 dim " << c.c1 << ", rank d " << h.rank << ", h0 " << h.h0 << ", h1 "
           << h.h1 << "\n";
        os << "d (row, column, value), " << triplets.size() << " nonzeros:\n";
        for (const auto& t : triplets)
            os << "  " << t[0] << " " << t[1] << " " << t[2].get<std::string>() << "\n";
        emit(g, j, os.str());
        return 0;
    }
    const E2Target target = e2_target_from_string(fib);
    const E2Table t = assemble_E2(target);
    j["target"] = to_string(target);
    j["rows_q3_to_q0"] = t.display_rows();
    j["total_degree_3"] = t.total_degree(3);
    j["alternating_sum"] = t.alternating_sum();
    j["centrally_symmetric"] = t.centrally_symmetric();
    j["antidiagonal_symmetric"] = t.antidiagonal_symmetric();
    j["matches_reference"] = t == golden_E2(target);
    os << "E2 of the " << to_string(target) << " (rows q = 3..0, columns p = 0..3)\n";
    for (const auto& row : t.display_rows()) {
        os << " ";
        for (long v : row)
            os << " " << std::setw(4) << v;
        os << "\n";
    }
    os << "sum p+q=3: " << t.total_degree(3) << ", alternating sum: " << t.alternating_sum()
       << ", matches reference: " << (t == golden_E2(target) ? "yes" : "no") << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_toric(Globals g, const std::string& report)
{
    if (!report.empty())
        g.format = report;
    const auto fan = triangulate_dilated_triangle();
    const auto d = divisor_census();
    const long h3 = assemble_E2(E2Target::Mirror).total_degree(3);
    const auto hodge = mirror_hodge_summary(d, h3);
    Json j;
    j["config"] = globals_json(g);
    j["lattice_index"] = quotient_lattice_index().str();
    Json basis = Json::array();
    for (const auto& b : quotient_lattice_basis()) {
        Json v = Json::array();
        for (const auto& x : b)
            v.push_back(x.convert_to<long>());
        basis.push_back(v);
    }
    j["lattice_basis"] = basis;
    Json rays = Json::array();
    for (const auto& r : fan.rays) {
        Json n = Json::array();
        for (const auto& x : r.n_coords)
            n.push_back(x.convert_to<long>());
        rays.push_back({{"name", r.name()}, {"class", to_string(r.cls)}, {"n_coords", n}});
    }
    j["rays"] = rays;
    Json cones = Json::array();
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        cones.push_back({{"rays", {fan.rays[fan.cones[c].rays[0]].name(), fan.rays[fan.cones[c].rays[1]].name(),
                                   fan.rays[fan.cones[c].rays[2]].name()}},
                         {"determinant", fan.cone_determinant(c).str()}});
    j["cones"] = cones;
    j["divisors"] = {{"per_curve", d.per_curve}, {"curves", d.curves}, {"per_point", d.per_point},
                     {"points", d.points}, {"total", d.total()}};
    j["hodge"] = hodge;
    j["euler"] = hodge_euler(hodge);
    std::ostringstream os;
    os << fan.rays.size() << " lattice points, " << fan.added_rays.size() << " added rays, " << fan.cones.size()
       << " cones, index " << quotient_lattice_index() << "\n";
    os << "divisors: " << d.per_curve << " x " << d.curves << " + " << d.per_point << " x " << d.points << " = "
       << d.total() << "\n";
    os << "hodge: (";
    for (int k = 0; k < 7; ++k)
        os << (k ? "," : "") << hodge[k];
    os << "), chi = " << hodge_euler(hodge) << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_flow(const Globals& g, int face, int chart, const std::string& metric, double fd_step)
{
    TransportConfig tc;
    tc.face = face;
    tc.chart = chart;
    tc.psi = g.psi;
    tc.samples = g.samples;
    tc.seed = g.seed;
    tc.fd_step = fd_step;
    tc.flow.tol = g.tol;
    tc.flow.metric = metric_from_string(metric);
    const auto res = transport_fiber(tc);
    Json j;
    j["config"] = globals_json(g);
    j["config"]["face"] = face;
    j["config"]["chart"] = chart;
    j["config"]["metric"] = to_string(tc.flow.metric);
    j["config"]["fd_step"] = fd_step;
    j["samples"] = res.samples.size();
    j["flagged"] = res.flagged;
    j["max_defect"] = res.max_defect;
    j["max_abs_im_s"] = res.max_im_s;
    j["max_quintic_residual"] = res.max_quintic_residual;
    std::ostringstream os;
    os << "transported " << res.samples.size() << " points of the fiber over Delta_" << face << " (chart " << chart
       << ", " << to_string(tc.flow.metric) << " metric, psi " << g.psi << ")\n";
    os << "max Lagrangian defect " << res.max_defect << ", max |Im s| " << res.max_im_s << ", max quintic residual "
       << res.max_quintic_residual << ", flagged " << res.flagged.size() << "\n";
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f)
            throw std::runtime_error("cannot write " + g.out);
        f << "chart,re_x1,im_x1,re_x2,im_x2,re_x3,im_x3,re_x4,im_x4,abs_im_s,defect\n";
        f << std::setprecision(17);
        for (const auto& s : res.samples) {
            if (s.flagged)
                continue;
            f << s.point.chart;
            for (const auto& x : s.point.x)
                f << "," << x.real() << "," << x.imag();
            f << "," << s.im_s << "," << s.defect << "\n";
        }
        os << "point cloud written to " << g.out << "\n";
    }
    Globals to_stdout = g;
    to_stdout.out.clear();
    emit(to_stdout, j, os.str());
    return 0;
}

int cmd_pairing(const Globals& g, const std::string& loop, const std::string& form, double modulus, int nodes)
{
    const auto l = digits_of(loop);
    const auto f = digits_of(form);
    if (l.size() != 3 || f.size() != 2)
        throw std::invalid_argument("--loop expects i,j,k and --form expects l,m");
    PairingConfig pc;
    pc.psi = g.psi;
    pc.modulus = modulus;
    pc.nodes = nodes;
    const auto r = loop_pairing(l[0], l[1], l[2], f[0], f[1], pc);
    Json j;
    j["config"] = globals_json(g);
    j["config"]["modulus"] = modulus;
    j["config"]["nodes"] = nodes;
    const std::string name = "<gamma_" + std::to_string(l[0]) + std::to_string(l[1]) + "^" + std::to_string(l[2]) +
                             ", alpha_" + std::to_string(f[0]) + std::to_string(f[1]) + ">";
    j["pairing"] = name;
    j["value"] = r.value;
    j["integral"] = {r.integral.real(), r.integral.imag()};
    j["residue"] = r.residue;
    std::ostringstream os;
    os << name << " = " << r.value << " (integral " << r.integral.real() << " + " << r.integral.imag()
       << "i, residue " << r.residue << ")\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_covering(const Globals& g, double r1, double r2, double dedupe, int grid)
{
    CoveringConfig cc;
    cc.tol = dedupe;
    cc.grid = grid;
    const auto r = covering_count(r1, r2, cc);
    Json j;
    j["config"] = globals_json(g);
    j["config"]["dedupe_tol"] = dedupe;
    j["config"]["grid"] = grid;
    j["r1"] = r1;
    j["r2"] = r2;
    j["stratum"] = to_string(r.stratum);
    j["count"] = r.count;
    j["candidate_cells"] = r.candidate_cells;
    if (!r.warning.empty())
        j["warning"] = r.warning;
    std::ostringstream os;
    os << "(" << r1 << ", " << r2 << ") " << to_string(r.stratum) << ": " << r.count << " points\n";
    if (!r.warning.empty()) {
        std::cerr << "warning: " << r.warning << "\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_hl(const Globals& g, const std::vector<double>& c)
{
    if (c.size() != 3)
        throw std::invalid_argument("--c expects three values");
    const R3 target{c[0], c[1], c[2]};
    const auto p = hl_fiber_probe(target, g.samples, g.seed);
    Json j;
    j["config"] = globals_json(g);
    j["c"] = c;
    j["classification"] = to_string(p.cls);
    j["singular_set_dimension"] = p.singular_set_dimension;
    j["slag_defect"] = p.slag_defect;
    j["omega_defect"] = p.omega_defect;
    j["phase_defect"] = p.phase_defect;
    j["regular_samples"] = p.regular_samples;
    j["flagged"] = p.flagged;
    std::ostringstream os;
    os << "M_c for c = (" << c[0] << ", " << c[1] << ", " << c[2] << "): " << to_string(p.cls)
       << ", slag defect " << p.slag_defect << " over " << p.regular_samples << " regular samples, flagged "
       << p.flagged << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_verify(const Globals& g, bool timings)
{
    verify::Config cfg;
    cfg.psi = g.psi;
    cfg.tol = g.tol;
    cfg.samples = g.samples;
    cfg.seed = g.seed;
    if (!g.skip.empty())
        cfg.skip = verify::category_from_string(g.skip);
    const auto report = verify::verify_all(cfg);
    emit(g, verify::to_json(report, timings), verify::render_text(report, timings));
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torus fibration toolkit for the quintic and its mirror"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--psi", g.psi, "Deformation parameter psi (real, large)");
    app.add_option("--tol", g.tol, "Integrator tolerance");
    app.add_option("--samples", g.samples, "Sample count for randomized checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized sampling");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--skip", g.skip, "Skip a check category in verify-all")->check(CLI::IsMember({"numeric", "symbolic"}));
    app.add_option("--out", g.out, "Write the output to a file");

    std::vector<double> point;
    auto* graph = app.add_subcommand("graph", "Base graph of the discriminant locus");
    graph->add_option("--classify", point, "Classify a face point r1,r2 of the fattened locus")->delimiter(',')->expected(2);

    std::string leg = "2,4,3", bp = "5,4", vertex;
    int orientation = 1;
    auto* mono = app.add_subcommand("monodromy", "Leg or vertex monodromy");
    mono->add_option("--leg", leg, "Leg i,j,k (Gamma_ij^k)");
    mono->add_option("--basepoint", bp, "Basepoint chart m,l (U_m^l)");
    mono->add_option("--vertex", vertex, "All three operators at a vertex, e.g. 234 or 24");
    mono->add_option("--orientation", orientation, "+1 or -1")->check(CLI::IsMember({1, -1}));

    std::string fibration = "expected";
    auto* cen = app.add_subcommand("census", "Singular fiber census");
    cen->add_option("--fibration", fibration, "constructed | expected | mirror");

    std::string efib = "expected", surface;
    bool recomputed = false, quotient = false;
    auto* eul = app.add_subcommand("euler", "Euler characteristic ledger");
    eul->add_option("--fibration", efib, "expected | mirror");
    eul->add_flag("--recomputed", recomputed, "Use recomputed fiber Euler numbers");
    eul->add_option("--surface", surface, "Singular curve Sigma_ijk, e.g. 1,2,3");
    eul->add_flag("--quotient", quotient, "Quotient curve hatSigma_ijk");

    std::string sfib = "quintic", explain;
    auto* spec = app.add_subcommand("spectral", "Leray E2 tables");
    spec->add_option("--fibration", sfib, "quintic | mirror");
    spec->add_option("--explain", explain, "Dump the sparse coboundary of K3");

    std::string toric_report;
    auto* tor = app.add_subcommand("toric", "Crepant resolution of the mirror");
    tor->add_option("--report", toric_report, "Report format")->check(CLI::IsMember({"text", "json"}));

    int face = 5, chart = 4;
    std::string metric = "fubini-study";
    double fd_step = 1e-4;
    auto* fl = app.add_subcommand("flow", "Transport a torus fiber of X_infinity to X_psi");
    fl->add_option("--face", face, "Index of the vanishing coordinate")->check(CLI::Range(1, 5));
    fl->add_option("--chart", chart, "Affine chart")->check(CLI::Range(1, 5));
    fl->add_option("--metric", metric, "flat | fubini-study");
    fl->add_option("--fd-step", fd_step, "Angle step for tangent finite differences");

    std::string loop = "1,2,3", form = "3,2";
    double modulus = 0.6;
    int nodes = 256;
    auto* pa = app.add_subcommand("pairing", "Integrate alpha_lm over gamma_ij^k");
    pa->add_option("--loop", loop, "i,j,k");
    pa->add_option("--form", form, "l,m");
    pa->add_option("--modulus", modulus, "Modulus of the fixed coordinates");
    pa->add_option("--nodes", nodes, "Quadrature nodes");

    double r1 = 1, r2 = 1, dedupe = 1e-5;
    int grid = 400;
    auto* cov = app.add_subcommand("covering", "Count points of Sigma over a face point");
    cov->add_option("--r1", r1);
    cov->add_option("--r2", r2);
    cov->add_option("--dedupe", dedupe, "Deduplication radius");
    cov->add_option("--grid", grid, "Phase grid size");

    std::vector<double> hc{0, 1, 1};
    auto* hl = app.add_subcommand("hl", "Harvey-Lawson fiber probe");
    hl->add_option("--c", hc, "c1,c2,c3")->delimiter(',')->expected(3);

    bool timings = false;
    auto* ver = app.add_subcommand("verify-all", "Run the acceptance suite");
    ver->add_flag("--timings", timings, "Include runtimes in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*graph)
            return cmd_graph(g, point);
        if (*mono)
            return cmd_monodromy(g, leg, bp, vertex, orientation);
        if (*cen)
            return cmd_census(g, fibration);
        if (*eul)
            return cmd_euler(g, efib, recomputed, surface, quotient);
        if (*spec)
            return cmd_spectral(g, sfib, explain);
        if (*tor)
            return cmd_toric(g, toric_report);
        if (*fl)
            return cmd_flow(g, face, chart, metric, fd_step);
        if (*pa)
            return cmd_pairing(g, loop, form, modulus, nodes);
        if (*cov)
            return cmd_covering(g, r1, r2, dedupe, grid);
        if (*hl)
            return cmd_hl(g, hc);
        if (*ver)
            return cmd_verify(g, timings);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
