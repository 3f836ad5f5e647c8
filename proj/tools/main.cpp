// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"triad - adaptive partition of N-dimensional boxes with an "
                 "evaluate-once vertex database"};
    app.require_subcommand(1);

    std::string config_path, trace_path, matrix_path, out;

    CLI::App* cmd_run = app.add_subcommand("run", "execute a run from a JSON config");
    cmd_run->add_option("--config", config_path, "run configuration (JSON)")
        ->required();
    cmd_run->add_option("--out", out, "output directory")->required();

    CLI::App* cmd_render =
        app.add_subcommand("render", "render a 2-D trace file as SVG");
    cmd_render->add_option("--trace", trace_path, "trace.jsonl produced by run")
        ->required();
    cmd_render->add_option("--out", out, "output SVG file")->required();

    CLI::App* cmd_compare = app.add_subcommand(
        "compare", "run a strategy/dimension/budget matrix and write a CSV");
    cmd_compare->add_option("--matrix", matrix_path, "comparison matrix (JSON)")
        ->required();
    cmd_compare->add_option("--out", out, "output CSV file")->required();

    CLI::App* cmd_fig2 = app.add_subcommand(
        "fig2", "reproduce the built-in ten-split demonstration (21 cells, "
                "7 evaluations, 4 free cut points)");
    cmd_fig2->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_run->parsed()) {
        return triad::cli::cmd_run(config_path, out, std::cerr);
    }
    if (cmd_render->parsed()) {
        return triad::cli::cmd_render(trace_path, out, std::cerr);
    }
    if (cmd_compare->parsed()) {
        return triad::cli::cmd_compare(matrix_path, out, std::cerr);
    }
    if (cmd_fig2->parsed()) {
        return triad::cli::cmd_fig2(out, std::cerr);
    }
    return 1;
}
