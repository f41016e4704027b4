#include "syzlab/verify.hpp"

#include <iostream>
#include <string>

using namespace syz::verify;

int main(int argc, char** argv)
{
    Config cfg;
    Report report;
    report.config = cfg;
    if (argc > 1) {
        report.checks.push_back(run_criterion(std::stoi(argv[1]), cfg));
    } else {
        report = verify_all(cfg);
    }
    std::cout << render_summary(report);
    for (const auto& c : report.checks) {
        if (c.status != Status::Fail)
            continue;
        std::cout << "\ncriterion " << c.id << " details:\n";
        for (const auto& it : c.items)
            if (!it.ok)
                std::cout << "  " << it.name << ": expected " << it.expected.dump() << ", computed "
                          << it.computed.dump() << "\n";
        for (const auto& n : c.notes)
            std::cout << "  note: " << n << "\n";
    }
    return report.passed() ? 0 : 1;
}
