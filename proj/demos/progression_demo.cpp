// Derive the function algorithm behind a classic progression in every key.

#include <iostream>

#include "notemap/notemap.hpp"

int main() {
    using namespace notemap;
    auto [tpl, base] = resolve_template("I-IV64-V6-I@C");
    for (int offset : {0, 7}) {
        auto sets = realize_progression(*tpl, offset);
        FunctionAlgorithm alg = derive_algorithm(sets);
        std::cout << tpl->name << " transposed by " << offset << ":\n";
        for (std::size_t i = 0; i < alg.steps.size(); ++i)
            std::cout << "  " << format_note_set(sets[i]) << "  --"
                      << alg.steps[i].label << "(x) = "
                      << format_polynomial(alg.steps[i].poly, 'x') << "-->  "
                      << format_note_set(sets[i + 1]) << "\n";
    }
    return 0;
}
