// gridpath: generate, verify, and export covering paths / trails / cycles
// for k-dimensional point grids.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error.

#include "gridpath/bounds.hpp"
#include "gridpath/constructions.hpp"
#include "gridpath/io.hpp"
#include "gridpath/mlai.hpp"
#include "gridpath/oracle.hpp"
#include "gridpath/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gridpath;

std::string read_input(const std::string& file) {
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open input file: " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& file, const std::string& text) {
    if (file == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open output file: " + file);
    out << text;
}

Box parse_box(const std::string& spec, const GridSpec& g, const Chain& c) {
    if (spec == "maabb") return maabb(g);
    if (spec == "raabb") return raabb(g);
    if (spec == "tight") return tight_aabb(c.vertices);
    std::string body = spec;
    if (body.rfind("custom:", 0) == 0) body = body.substr(7);
    std::vector<double> lo, hi;
    std::stringstream ss(body);
    std::string axis;
    while (std::getline(ss, axis, ',')) {
        const auto pos = axis.find("..");
        if (pos == std::string::npos) {
            throw std::runtime_error("custom box axis must be LO..HI, got: " + axis);
        }
        lo.push_back(std::stod(axis.substr(0, pos)));
        hi.push_back(std::stod(axis.substr(pos + 2)));
    }
    if (lo.size() != g.rank()) {
        throw std::runtime_error("custom box needs one LO..HI interval per grid axis");
    }
    return {PointK(lo), PointK(hi)};
}

Chain make_fixed(const std::string& name, double x, double eps) {
    if (name == "m33") return m_path(2);
    if (name == "m333") return m_path(3);
    if (name == "check33") return check_path(2);
    if (name == "check333") return check_path(3, x);
    if (name == "f222") return circuit_f222(CircuitVariant::F);
    if (name == "fprime222") return circuit_f222(CircuitVariant::F_prime);
    if (name == "pbar222") return pbar_path(x);
    if (name == "pbarbar222") return pbarbar_path(EpsilonPathParams{eps});
    if (name == "conclusion222") return conclusion_path_222();
    throw std::runtime_error("unknown fixed construction: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering paths, trails, and cycles on k-dimensional point grids"};
    app.require_subcommand(1);

    double global_eps = 1e-9;
    app.add_option("--eps", global_eps, "geometric tolerance epsilon (default 1e-9)")
        ->envname("GRIDPATH_EPS");

    auto* gen = app.add_subcommand("gen", "generate a covering chain document");
    gen->require_subcommand(1);

    std::vector<int> gen_dims;
    std::string gen_out = "-";
    auto* gen_mlai = gen->add_subcommand("mlai", "layer/bridge covering path for given dims");
    gen_mlai->add_option("--dims", gen_dims, "grid extents n1,n2,... (ascending)")
        ->required()
        ->delimiter(',');
    gen_mlai->add_option("--out", gen_out, "output file, - for stdout");

    std::string fixed_name, fixed_out = "-";
    double fixed_x = 0.7;
    bool fixed_x_set = false;
    double fixed_eps = 1e-3;
    auto* gen_fixed = gen->add_subcommand("fixed", "one of the named fixed constructions");
    gen_fixed
        ->add_option("--name", fixed_name,
                     "m33|m333|check33|check333|f222|fprime222|pbar222|pbarbar222|conclusion222")
        ->required();
    gen_fixed->add_option("--x", fixed_x, "parameter x (check333 Steiner abscissa / pbar222)")
        ->each([&](const std::string&) { fixed_x_set = true; });
    gen_fixed->add_option("--eps", fixed_eps, "path parameter epsilon for pbarbar222");
    gen_fixed->add_option("--out", fixed_out, "output file, - for stdout");

    std::string verify_file, verify_box = "maabb", verify_mode;
    std::vector<int> verify_dims;
    auto* verify_cmd = app.add_subcommand("verify", "verify a chain document against a grid");
    verify_cmd->add_option("file", verify_file, "chain document, - for stdin")->required();
    verify_cmd->add_option("--grid", verify_dims, "grid extents n1,n2,...")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--box", verify_box,
                           "maabb|raabb|tight|custom:LO..HI,LO..HI,... (default maabb)");
    verify_cmd->add_option("--mode", verify_mode, "override chain kind: path|trail|cycle");

    std::vector<int> bounds_dims;
    auto* bounds_cmd = app.add_subcommand("bounds", "print the counting/bounds report for dims");
    bounds_cmd->add_option("--dims", bounds_dims, "grid extents n1,n2,...")
        ->required()
        ->delimiter(',');

    std::string export_file, export_proj = "xy", export_out = "-";
    auto* export_cmd = app.add_subcommand("export", "render a chain document as SVG");
    export_cmd->add_option("file", export_file, "chain document, - for stdin")->required();
    export_cmd->add_option("--proj", export_proj, "xy|xz|yz|iso");
    export_cmd->add_option("--out", export_out, "output file, - for stdout");

    double s5_x = 0.7;
    auto* s5_cmd = app.add_subcommand("s5", "solve the bridge Steiner point at abscissa x");
    s5_cmd->add_option("--x", s5_x, "abscissa in ~[0.346647, 0.918696]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_geometry_epsilon(global_eps);

        if (gen_mlai->parsed()) {
            const Chain c = gen_dims.size() == 1 ? segment_path_1d(gen_dims[0])
                                                 : generate_mlai(GridSpec{gen_dims});
            write_output(gen_out, write_chain(c));
            return 0;
        }
        if (gen_fixed->parsed()) {
            if (fixed_name == "pbar222" && !fixed_x_set) fixed_x = minimize_aabb_volume();
            write_output(fixed_out, write_chain(make_fixed(fixed_name, fixed_x, fixed_eps)));
            return 0;
        }
        if (verify_cmd->parsed()) {
            Chain c = read_chain(read_input(verify_file));
            if (!verify_mode.empty()) {
                const ChainKind mode = chain_kind_from_string(verify_mode);
                if (mode == ChainKind::cycle &&
                    distance(c.vertices.front(), c.vertices.back()) > global_eps) {
                    throw std::runtime_error("--mode cycle: chain is not closed");
                }
                c.kind = mode;
            }
            const GridSpec g{verify_dims};
            const Box box = parse_box(verify_box, g, c);
            const VerificationReport r = verify(c, g, box);
            std::cout << "label=" << c.label << "\nkind=" << to_string(c.kind) << "\n"
                      << format_report(r);
            const bool ok = report_passes(r, c.kind);
            std::cout << "result=" << (ok ? "pass" : "fail") << "\n";
            return ok ? 0 : 1;
        }
        if (bounds_cmd->parsed()) {
            const GridSpec g{bounds_dims};
            std::cout << format_report(bound_report(g), g);
            return 0;
        }
        if (export_cmd->parsed()) {
            const Chain c = read_chain(read_input(export_file));
            write_output(export_out, export_figure(c, projection_from_string(export_proj)));
            return 0;
        }
        if (s5_cmd->parsed()) {
            const S5Solution s = s5_solve(s5_x);
            const auto [r1, r2] = oracle::sphere_residuals(PointK{s.x, s.y, s.z});
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "x=%.17g\ny=%.17g\nz=%.17g\nbranch=%s\nresidual1=%.3g\nresidual2=%.3g\n",
                          s.x, s.y, s.z,
                          s.branch == S5Branch::principal ? "principal" : "boundary_swap", r1, r2);
            std::cout << buf;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
