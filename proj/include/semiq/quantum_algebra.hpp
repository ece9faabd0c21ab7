#ifndef SEMIQ_QUANTUM_ALGEBRA_HPP
#define SEMIQ_QUANTUM_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "semiq/linalg.hpp"
#include "semiq/root_datum.hpp"

namespace semiq {

// Word in the free braided algebra on the positive generators, one letter per
// simple-root index.
using Word = std::vector<std::uint8_t>;
// Degree in the root lattice, simple-root coordinates (all >= 0 here).
using DegVec = std::vector<long>;

DegVec word_degree(const Word& w, int rank);
long deg_height(const DegVec& d);

// Homogeneous element of the free algebra.
struct FreeElt {
    std::map<Word, QScalar> terms;

    void add(const Word& w, const QScalar& c);
    bool is_zero() const;
};

// Graded component of the Kac-De Concini quotient: the word list of the
// degree, the echelonized Serre-ideal rows, and the surviving quotient basis.
struct GradedComponentBasis {
    DegVec degree;
    std::vector<Word> words;        // all arrangements, lex order
    std::map<Word, int> word_index;
    Rref<QScalar> relations;        // row space of the Serre ideal in this degree
    std::vector<int> basis;         // word indices forming the quotient basis

    int free_dim() const { return static_cast<int>(words.size()); }
    int dim() const { return static_cast<int>(basis.size()); }
};

// Engine for the positive quantum nilpotent algebras attached to one root
// datum and one quantum context. Components are materialized degree by degree
// as finite linear-algebra problems and cached.
//
// Braiding convention (fixed once, used everywhere): the braiding of the
// generator lines is  b(alpha_s, alpha_t) = v^{(alpha_s, alpha_t)} with
// (alpha_s, alpha_t) = d_s <alpha_t, coroot_s>, and the pairing against the
// negative side is seeded by <E_i, F_j> = delta_ij and extended by the
// braided-shuffle recursion
//   <E_i x, F_u> = sum_{k : u_k = i} ( prod_{l < k} b(alpha_{u_l}, alpha_{u_k}) )
//                  <x, F_{u minus k}>.
// The one free power choice is calibrated by <E_i, F_i> = 1 together with the
// vanishing of the Serre elements under the pairing.
class QuantumNil {
public:
    QuantumNil(const RootDatum& rd, QuantumContext ctx);

    const RootDatum& root_datum() const { return *rd_; }
    const QuantumContext& context() const { return ctx_; }

    const std::vector<Word>& words(const DegVec& deg);

    // quantum Serre element for the ordered pair (i, j), i != j; an optional
    // corruption knob flips one binomial coefficient (negative controls)
    FreeElt serre_element(int i, int j, bool corrupt = false) const;

    QScalar braiding(int s, int t) const; // b(alpha_s, alpha_t)
    QScalar pair_words(const Word& e_side, const Word& f_side) const;
    QScalar pair(const FreeElt& e_side, const Word& f_side) const;

    // full pairing matrix of the free components at this degree
    Matrix<QScalar> pairing_matrix(const DegVec& deg);

    const GradedComponentBasis& kd_component(const DegVec& deg);
    int kd_dimension(const DegVec& deg) { return kd_component(deg).dim(); }

    // coordinates of a word on the quotient basis of its degree
    std::vector<QScalar> normal_form(const Word& w);

    // rank of the pairing restricted to the KD quotient bases; the image of
    // the KD algebra inside the (co)free algebra has this dimension
    int small_dimension(const DegVec& deg);

    // dim U^Lus(n)_deg = dim U^KD(n^-)_{-deg} by graded linear duality, and
    // the negative side mirrors the positive one letter for letter
    int lusztig_dimension(const DegVec& deg) { return kd_dimension(deg); }

    // every Serre element pairs to zero against all words of its degree
    bool serre_vanishing(long max_height, bool corrupt = false);

    // all degrees with height <= max_height (excluding the empty degree)
    std::vector<DegVec> degrees_up_to(long max_height) const;

private:
    void gen_words(const DegVec& remaining, Word& cur, std::vector<Word>& out) const;

    const RootDatum* rd_;
    QuantumContext ctx_;
    std::map<DegVec, std::vector<Word>> word_cache_;
    std::map<DegVec, GradedComponentBasis> kd_cache_;
};

// rank over the fraction field of a generic-mode matrix, via fraction-free
// elimination on cleared integer polynomials; falls back to field Gaussian
// elimination in cyclotomic mode
int exact_rank(const Matrix<QScalar>& m);

} // namespace semiq

#endif
