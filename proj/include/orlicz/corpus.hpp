#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/modular.hpp"

namespace orlicz {

struct CorpusEntry {
    std::string name;
    TestFunction u;
    BoxDomain box;
};

// Twelve functions on unit boxes in one to three dimensions, some singular at a face.
const std::vector<CorpusEntry>& function_corpus();
// Six functions on [0, 1] vanishing at 0.
const std::vector<CorpusEntry>& interval_corpus();
// Five functions on (0,1)^n vanishing on the boundary; n = 2 or 3.
std::vector<TestFunction> bump_corpus(int n);
// Looks a name up in the function and interval corpora.
std::optional<CorpusEntry> find_corpus(const std::string& name);

}  // namespace orlicz
