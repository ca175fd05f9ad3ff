#pragma once

#include "cyc/coalg.hpp"

#include <memory>
#include <mutex>

namespace cyc {

using Word = std::vector<int>;
using TensorElement = LinComb<Word>;
// R⊗V: a word followed by one letter
using OneForm = LinComb<std::pair<Word, int>>;

struct LieBasis {
    int weight = 0;
    std::vector<Word> sequences;           // right-nested [v1,[v2,…,[v_{w-1},v_w]…]]
    std::vector<TensorElement> elements;
    std::vector<int> degrees;
    Echelon echelon{true};                 // ids = positions in `elements`
};

struct LieRef {
    int weight = 0;
    int index = 0;
    auto operator<=>(const LieRef&) const = default;
};

// Symmetrized products of Lie basis elements: a basis of Sym^p(𝓛) in a fixed weight.
struct SymBasis {
    int p = 0, weight = 0;
    std::vector<std::vector<LieRef>> tuples;  // nondecreasing
    std::vector<TensorElement> elements;
    Echelon echelon{true};
};

// Image of Sym^p in the cyclic words: λ^(p) in one weight.
struct LambdaBasis {
    int p = 0, weight = 0;
    std::vector<TensorElement> classes;   // independent cyclic classes
    std::vector<TensorElement> lifts;     // element of Sym^p projecting to each class
    Echelon echelon{true};
};

// The cobar construction T(V) on V = s⁻¹C̄ for a cyclic coalgebra, with
// weight (word length) truncation W for enumerations and complexes.
// Products and the differential are computed exactly; the truncating
// product drops words longer than W and reports that it did.
class TruncatedAlgebra {
public:
    TruncatedAlgebra(CyclicCoalgebra c, int W);

    const CyclicCoalgebra& coalgebra() const { return coalg_; }
    const VSpace& V() const { return v_; }
    int W() const { return W_; }
    int letters() const { return v_.size(); }

    int degree(const Word& w) const;
    std::optional<int> degree(const TensorElement& t) const;  // nullopt if zero or inhomogeneous
    std::vector<Word> words(int weight) const;
    std::vector<Word> words(int weight, int degree) const;

    TensorElement one() const { return TensorElement(Word{}); }
    TensorElement letter(int i) const { return TensorElement(Word{i}); }

    TensorElement multiply(const TensorElement& a, const TensorElement& b) const;
    TensorElement multiply_truncated(const TensorElement& a, const TensorElement& b, bool* truncated) const;
    // graded commutator, applied to homogeneous components
    TensorElement commutator(const TensorElement& a, const TensorElement& b) const;
    TensorElement cobar_differential(const TensorElement& a, bool* exceeds_W = nullptr) const;
    const TensorElement& generator_differential(int letter) const { return dgen_.at(letter); }

    // w₁…w_k ~ (-1)^{|w₁||w₂…w_k|} w₂…w_k w₁
    int rotation_sign(const Word& w) const;
    TensorElement project_cyclic(const TensorElement& a) const;
    std::vector<Word> cyclic_basis(int weight) const;  // canonical words (lex-least in orbit)
    std::vector<Word> cyclic_basis(int weight, int degree) const;

    // Global coordinates for vectors of words and of R⊗V.
    int word_index(const Word& w) const;
    Vec to_vec(const TensorElement& t) const;
    int oneform_index(const Word& w, int letter) const { return word_index(w) * letters() + letter; }
    Vec to_vec(const OneForm& t) const;

    const LieBasis& lie_basis(int weight) const;
    // coefficients on lie_basis(weight).elements, nullopt if outside the span
    std::optional<Vec> lie_coordinates(const TensorElement& t, int weight) const;
    bool in_lie_span(const TensorElement& t) const;  // every weight component
    TensorElement lie_element(const LieRef& r) const { return lie_basis(r.weight).elements.at(r.index); }
    int lie_degree(const LieRef& r) const { return lie_basis(r.weight).degrees.at(r.index); }
    TensorElement right_nested(const Word& seq) const;

    TensorElement symmetrize(const std::vector<TensorElement>& factors) const;
    const SymBasis& sym_basis(int p, int weight) const;
    std::optional<Vec> sym_coordinates(const TensorElement& t, int p, int weight) const;
    bool in_sym_span(const TensorElement& t, int p) const;  // every weight component
    const LambdaBasis& lambda_basis(int p, int weight) const;
    bool in_lambda_span(const TensorElement& cls, int p) const;
    // θ^(p) = Sym^p ⊗ V in total weight w
    std::vector<OneForm> theta_basis(int p, int weight) const;
    bool in_theta_span(const OneForm& t, int p) const;

    // Truncated cobar complex on words of weight 0..W and the complex of
    // cyclic words of weight 1..W.
    ChainComplex cobar_complex() const;
    ChainComplex cyclic_complex() const;
    // Degrees for which weight truncation at W leaves chain groups and
    // differentials intact.
    std::pair<int, int> sound_range(std::string* why = nullptr) const;

    std::string show(const Word& w) const;
    std::string show(const TensorElement& t) const;
    std::string show(const OneForm& t) const;

private:
    struct CyclicBlock {
        std::map<Word, TensorElement> residue;
        std::vector<Word> canonical;
    };
    const CyclicBlock& block(int weight, int degree) const;

    CyclicCoalgebra coalg_;
    VSpace v_;
    int W_;
    std::vector<TensorElement> dgen_;

    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<CyclicBlock>> blocks_;
    mutable std::map<int, std::unique_ptr<LieBasis>> lie_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<SymBasis>> sym_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<LambdaBasis>> lambda_;
};

}  // namespace cyc
