// Map a chord into quarter-tone territory and write the result as a
// pitch-bend MIDI file.

#include <fstream>
#include <iostream>

#include "notemap/notemap.hpp"

int main(int argc, char** argv) {
    using namespace notemap;
    const char* path = argc > 1 ? argv[1] : "quartertone_demo.mid";

    FunctionAlgorithm alg;
    alg.add_step("shift", parse_function_expr("n - 5"));
    alg.add_step("invert", parse_function_expr("-n + 6"));
    alg.add_step("halve", parse_function_expr("n/2"));

    NoteSet start = parse_note_set("{C#4, G4, A4, E5, F#5}");
    Score score;
    for (auto& stage : run_algorithm(alg, start)) score.sets.push_back(std::move(stage));

    auto bytes = export_midi(score);
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    std::cout << "wrote " << bytes.size() << " bytes to " << path << "\n";
    for (const auto& s : score.sets) std::cout << "  " << format_note_set(s) << "\n";
    return 0;
}
