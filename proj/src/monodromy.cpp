#include "minann/monodromy.hpp"

namespace minann {

MonodromyGroupSpec MonodromyGroupSpec::make(std::vector<Matrix> gens,
                                            std::vector<std::string> labels) {
    if (gens.empty()) throw error("monodromy group needs at least one generator");
    if (labels.size() != gens.size()) throw error("one label per generator required");
    int n = gens[0].rows;
    MonodromyGroupSpec spec;
    for (const Matrix& g : gens) {
        if (g.rows != n || g.cols != n) throw error("generators must be square of equal size");
        spec.inverses.push_back(inverse(g));  // throws on a singular generator
    }
    spec.generators = std::move(gens);
    spec.labels = std::move(labels);
    return spec;
}

Matrix picard_lefschetz(const HomologyModel& model) {
    if (!model.has_iota())
        throw error("picard_lefschetz: the toy family carries no intersection data");
    Matrix pl = Matrix::identity(model.rank);
    for (int j = 0; j < model.rank; j++) pl.at(model.gamma_index, j) += model.iota[j];
    return pl;
}

Rational pair_with_gamma(const HomologyModel& model, const Vec& v) {
    if (!model.has_iota())
        throw error("pair_with_gamma: the toy family carries no intersection data");
    if ((int)v.size() != model.rank) throw error("pair_with_gamma: vector length mismatch");
    return dot(model.iota, v);
}

Vec act(const MonodromyGroupSpec& spec, const std::vector<int>& word, const Vec& v) {
    Vec r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int w = *it;
        int k = w > 0 ? w - 1 : -w - 1;
        if (w == 0 || k >= (int)spec.generators.size())
            throw error("act: word letter out of range");
        r = mul(w > 0 ? spec.generators[k] : spec.inverses[k], r);
    }
    return r;
}

}  // namespace minann
