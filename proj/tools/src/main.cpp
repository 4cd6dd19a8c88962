// SPDX-License-Identifier: Apache-2.0
#include <exception>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace netaural::cli;
    CLI::App app{"netaural: network auralization and centrality learning"};
    app.require_subcommand(1);
    app.set_version_flag("--version", NETAURAL_VERSION_STRING);
    add_commands(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
