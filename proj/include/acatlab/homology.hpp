#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "acatlab/caps.hpp"
#include "acatlab/complex.hpp"

namespace acatlab {

using BigInt = mpz_class;

/// Column-major sparse integer matrix; each column is sorted by row with no zeros.
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    /// Adds v at (r, c); columns must then be normalized with canonicalize().
    void push(std::size_t r, std::size_t c, std::int64_t v) { columns[c].emplace_back(static_cast<std::uint32_t>(r), v); }
    /// Sort every column, merge duplicates, drop zeros.
    void canonicalize();
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    std::int64_t at(std::size_t r, std::size_t c) const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Coordinate triplet text: header "rows cols nnz", then "row col value" lines.
void write_triplets(std::ostream& out, const SparseMatrix& m);
SparseMatrix read_triplets(std::istream& in);

/// Coefficients: 0 for the integers, otherwise a prime p for F_p.
using Coefficients = std::uint64_t;

/// Chain complex concentrated in degrees min_degree..max_degree(); boundary(k)
/// maps degree k to degree k-1. Reduced complexes carry the augmentation as a
/// rank-one group in degree -1.
class ChainComplex {
public:
    ChainComplex() = default;
    /// dims[i] is the rank in degree min_degree + i; boundaries[i] maps that
    /// degree down. Checks shapes and boundary∘boundary = 0.
    ChainComplex(int min_degree, std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries,
                 Coefficients coefficients = 0, bool reduced = false);

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int k) const;
    /// Boundary out of degree k (an empty matrix of the right shape outside the range).
    SparseMatrix boundary(int k) const;
    Coefficients coefficients() const { return coefficients_; }
    bool reduced() const { return reduced_; }
    ChainComplex with_coefficients(Coefficients c) const;
    /// Alternating sum of ranks.
    long long euler_characteristic() const;

private:
    int min_degree_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> boundaries_;
    Coefficients coefficients_ = 0;
    bool reduced_ = false;
};

/// Per-degree homology. For F_p only `rank` is meaningful (the dimension).
struct HomologyResult {
    struct Degree {
        int degree = 0;
        std::size_t rank = 0;            // betti number or F_p dimension
        std::vector<BigInt> torsion;     // invariant factors > 1, a divisibility chain
        bool vanishes() const { return rank == 0 && torsion.empty(); }
    };
    Coefficients coefficients = 0;
    std::vector<Degree> degrees;

    bool acyclic() const;
    const Degree* at(int k) const;
};

HomologyResult homology(const ChainComplex& cc);
/// Homology in one degree only.
HomologyResult::Degree homology_in_degree(const ChainComplex& cc, int k);

bool is_acyclic(const ChainComplex& cc);             // integral, all degrees
bool is_p_acyclic(const ChainComplex& cc, std::uint64_t p);

/// Rank of a sparse matrix over F_p (p prime) or over Q (p = 0).
std::size_t rank(const SparseMatrix& m, Coefficients p);

/// Nonzero invariant factors of an integer matrix (sparse unit-pivot elimination
/// followed by dense SNF on the remainder).
std::vector<BigInt> invariant_factors(const SparseMatrix& m);

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    BigInt& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U·A·V = D with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SnfResult {
    std::vector<BigInt> invariant_factors;  // nonzero diagonal entries of D
    IntMatrix u, v, d;
    IntMatrix u_inv, v_inv;
    bool promoted = false;                  // the machine-word path overflowed
};

/// Smith normal form with transform certificates; the certificate U·A·V = D
/// and the inverses are recomputed and checked before returning.
SnfResult smith_normal_form(const IntMatrix& a);

/// Integral homology generators in one degree: each cycle is a coordinate
/// vector in the degree-k basis; order 0 marks a free generator.
struct HomologyGenerators {
    std::vector<std::vector<BigInt>> cycles;
    std::vector<BigInt> orders;
};
HomologyGenerators homology_generators(const ChainComplex& cc, int k);

/// Lattice basis of the integral kernel by unimodular column reduction. On
/// boundary matrices the vectors stay short, unlike SNF transform columns.
std::vector<std::vector<BigInt>> kernel_basis(const SparseMatrix& m);

/// Growing column span over F_p (p prime, below 2^32).
class FpSpan {
public:
    FpSpan(std::uint64_t p, std::size_t rows) : p_(p), pivots_(rows) {}
    /// Adds the vector; false if it was already in the span.
    bool add(const std::vector<BigInt>& v);
    bool add_column(const SparseMatrix& m, std::size_t col);
    bool contains(const std::vector<BigInt>& v) const;
    std::size_t rank() const { return rank_; }

private:
    using Vec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    Vec reduce(Vec v) const;
    bool insert(Vec v);
    std::uint64_t p_;
    std::vector<Vec> pivots_;
    std::size_t rank_ = 0;
};

/// Simplicial chain complex with orientation from the increasing vertex order.
ChainComplex simplicial_chain_complex(const SkeletalComplex& complex, Coefficients coefficients, bool reduced,
                                      const Caps& caps = {});

}  // namespace acatlab
