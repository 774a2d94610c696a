#include <iostream>
#include <vector>

#include "skewlab/verify.hpp"

int main(int argc, char** argv) {
    using namespace skewlab::verify;
    std::vector<std::string> args(argv + 1, argv + argc);
    Campaign c;
    try {
        c = parse_cli(args);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        const json report = c.name == "full"
                                ? run_battery(c.prec, c.samples, c.seed)
                                : run_campaign(c);
        write_report(report, c);
        return exit_code(report);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
