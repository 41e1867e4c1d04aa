#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dgkit/cli.hpp"

using namespace dgkit;

int main(int argc, char** argv)
{
    CLI::App app{"dgkit: exact computations with dg-algebras, dg-coalgebras, bar and cobar constructions"};
    app.set_help_all_flag("--help-all");

    std::vector<std::string> command;
    std::string preset, input, field, trunc, convention = "minus", out;
    CommandOptions opt;

    std::string commands;
    for (const auto& c : command_names())
        commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "command: " + commands + " (twist verify|enumerate, signs compare)")
        ->required();
    app.add_option("--preset", preset, "built-in object: mc, dual-numbers, diagonal-coalgebra(n), "
                                       "primitive-coalgebra(degree), matrix-coalgebra(n), free-algebra(x:1,y:2)");
    app.add_option("--input", input, "presentation file");
    app.add_option("--coalgebra", opt.coalgebra, "coalgebra preset or file (two-object commands)");
    app.add_option("--algebra", opt.algebra, "algebra preset or file (two-object commands)");
    app.add_option("--map", opt.map, "presentation file of kind map (twist verify, adjoint)");
    app.add_option("--field", field, "Q or Fp:p");
    app.add_option("--trunc", trunc, "truncation window dmin:dmax:L");
    app.add_option("--convention", convention, "minus (bar d^int - d^ext, cobar d^int + d^ext) or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    app.add_flag("--strict-window", opt.strict_window, "fail when the window drops basis elements");
    app.add_flag("--homology", opt.homology, "add a homology table");
    app.add_flag("--pointed", opt.pointed, "pointed variants (twist verify, sweedler-product)");
    app.add_option("--out", out, "also write the report to this file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!preset.empty() && !input.empty())
            throw UsageError("give either --preset or --input, not both");
        opt.command = command;
        opt.object = preset.empty() ? input : preset;
        if (!preset.empty() && !is_preset(preset))
            throw UsageError("unknown preset \"" + preset + "\"");
        if (!field.empty()) {
            Field::parse(field);
            opt.field = field;
        }
        if (!trunc.empty())
            opt.trunc = Truncation::parse(trunc);
        opt.convention = SignConvention::parse(convention);
        for (int i = 1; i < argc; ++i)
            opt.echo += (i > 1 ? " " : "") + std::string(argv[i]);

        Report r = dispatch(opt);
        std::string text = r.render();
        std::cout << text;
        if (!out.empty()) {
            std::ofstream f(out);
            if (!f)
                throw UsageError("cannot write " + out);
            f << text;
        }
        return r.passed() ? kExitPass : kExitCheckFailure;
    }
    catch (const std::exception& e) {
        std::cerr << "dgkit: " << e.what() << '\n';
        return kExitUsage;
    }
}
