#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv)
{
    using namespace gcalc::cli;
    CLI::App app{"gcalc: functor calculus chain models"};
    app.require_subcommand(1);

    Command cmd;
    std::string window = "0..4";
    std::string format = "text";

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--space", cmd.space, "simplicial set file (sset v1)")->required();
        sub->add_option("--base", cmd.base, "basepoint vertex name");
        sub->add_option("--format", format, "text or record")->check(CLI::IsMember({"text", "record"}));
        sub->add_option("--out", cmd.out, "also write the record to this file");
        return sub;
    };
    auto windowed = [&](CLI::App* sub) { sub->add_option("--window", window, "degree window LO..HI"); };
    auto functors = [&](CLI::App* sub) {
        sub->add_option("--outer", cmd.outer, "functor expression, e.g. \"Q o Map(k2.sset)\"");
        sub->add_option("--inner", cmd.inner, "functor expression");
    };

    windowed(add("homology", "homology of a simplicial set"));
    windowed(add("loopalg", "cobar model of the loop space"));
    CLI::App* der = add("derivative", "derivative as a bimodule over loop algebras");
    windowed(der);
    functors(der);
    CLI::App* cr = add("chainrule", "compare both sides of the chain rule");
    windowed(cr);
    functors(cr);
    cr->add_option("--susp", cmd.suspension, "sphere dimension for the oracles (default HI + 2)");
    cr->add_flag("--timings", cmd.timings, "report wall-clock times");
    CLI::App* ex = add("excision", "excision defect on the suspension square");
    windowed(ex);
    functors(ex);
    CLI::App* kan = add("kancheck", "Kan loop group identities and H1");
    kan->add_option("--samples", cmd.samples, "random words")->check(CLI::PositiveNumber);
    kan->add_option("--seed", cmd.seed, "random seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    cmd.name = app.get_subcommands().front()->get_name();
    cmd.format = format == "record" ? Format::record : Format::text;
    try {
        cmd.window = parse_window(window);
    }
    catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return execute(cmd, std::cout, std::cerr);
}
