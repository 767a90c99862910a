#pragma once

#include "minann/homology.hpp"

namespace minann {

// A finitely generated matrix group given by its generators; inverses are
// adjoined automatically at construction.
struct MonodromyGroupSpec {
    std::vector<Matrix> generators;
    std::vector<Matrix> inverses;
    std::vector<std::string> labels;

    static MonodromyGroupSpec make(std::vector<Matrix> gens, std::vector<std::string> labels);
    int size() const { return (int)generators[0].rows; }
};

// The Picard-Lefschetz operator of the model: v -> v + iota(v) * gamma
// (equivalently v - (v . gamma) gamma with v . gamma = -iota(v)). Fixes
// gamma and is unipotent of index 2. Throws for models without iota.
Matrix picard_lefschetz(const HomologyModel& model);

// The intersection index gamma . v of a vector in free-basis coordinates.
Rational pair_with_gamma(const HomologyModel& model, const Vec& v);

// Applies a word in the group to a vector, right-to-left (the last letter
// acts first). Letters are signed 1-based indices: +k is generators[k-1],
// -k is its inverse.
Vec act(const MonodromyGroupSpec& spec, const std::vector<int>& word, const Vec& v);

}  // namespace minann
