// Builds a group element from a word, forgets the word, and recovers one
// constructively, printing the contraction trace along the way.

#include <iostream>

#include "picard/picard.hpp"

int main() {
    using namespace picard;

    const GeneratorWord original = parse_word("T2^2 J R^3 T1^-4 J T2^1");
    const GroupMatrix g = evaluate(original);
    std::cout << "element of SU(2,1;Z[i]) built from: " << format_word(original)
              << "\n"
              << matrix_to_json(g.mat()) << "\n\n";

    const Decomposition d = decompose(g);
    std::cout << "contraction steps:\n";
    for (const ReductionStep& s : d.trace.steps)
        std::cout << "  |g13|^2: " << s.norm13_before << " -> " << s.norm13_after
                  << "  via translation gamma=" << to_string(s.gamma)
                  << ", k=" << s.k << "\n";

    std::cout << "recovered word: " << format_word(d.word) << "\n";
    std::cout << "evaluates back to the same matrix: "
              << (evaluate(d.word) == g ? "yes" : "no") << "\n";
    return 0;
}
