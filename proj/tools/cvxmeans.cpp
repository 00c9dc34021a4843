// CLI for the cvxmeans library.  Subcommands are filled in as the library
// modules land; this stub only wires up the frame.

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"Convex-body p-means toolkit"};
    app.require_subcommand(0);
    CLI11_PARSE(app, argc, argv);
    return 0;
}
