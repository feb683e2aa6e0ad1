#ifndef EINQ_ALGEBRA_HPP
#define EINQ_ALGEBRA_HPP

#include <string>
#include <vector>

#include "einq/rational.hpp"

namespace einq {

enum class AlgebraFamily { SU, SO, Sp, G2, F4, E6, E7, E8 };

// A compact simple Lie algebra type. `rank_param` is the classical n of
// su(n)/so(n)/sp(n) and is ignored for exceptional types.
struct AlgebraDescriptor {
    AlgebraFamily family;
    int rank_param = 0;

    // Validates rank constraints: su(n) n>=2, so(n) n>=3, sp(n) n>=1.
    static AlgebraDescriptor make(AlgebraFamily family, int rank_param = 0);
    // "su4", "so10", "sp3", "g2", "f4", "e6", "e7", "e8"
    static AlgebraDescriptor parse(const std::string& name);
    std::string name() const;

    friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) = default;
};

// so(3) is carried as su(2) with normalization 8; everything else unchanged.
AlgebraDescriptor canonicalized(const AlgebraDescriptor& desc);

long dimension(const AlgebraDescriptor& desc);

// The squared-maximal-root normalization of the negative Killing form.
// Defined for su(n) n>=2, so(n) n>=4, sp(n) n>=1 and the exceptional types;
// so(3) raises use_su2_normalization_error.
Rational killing_norm(const AlgebraDescriptor& desc);

// A semisimple algebra plus abelian center: ordered simple factors with
// multiplicities and the dimension of the center summand.
struct SemisimpleDescriptor {
    std::vector<std::pair<AlgebraDescriptor, int>> factors;
    long abelian_dim = 0;

    long total_dimension() const;
};

// One curated embedding-index record: B_sub = index * B_ambient restricted.
// `from_regular_formula` distinguishes root-ratio results from values taken
// case by case (chains through intermediate subalgebras, spin embeddings).
struct EmbeddingIndexEntry {
    std::string tag;
    AlgebraDescriptor sub;
    AlgebraDescriptor ambient;
    Rational index;
    bool from_regular_formula;
    std::string provenance;
};

const std::vector<EmbeddingIndexEntry>& embedding_index_table();

// Index of a regular subalgebra; only curated pairs, never computed silently.
// Throws not_in_catalog_error for unknown pairs.
Rational regular_embedding_index(const AlgebraDescriptor& sub, const AlgebraDescriptor& ambient);

// Any curated entry (regular or not) by its tag.
const EmbeddingIndexEntry& embedding_index_by_tag(const std::string& tag);

// Block-diagonal chain indices used by the parametric families.
Rational su_block_index(long m, long n);                     // su(m) in su(nm): 1/n
Rational so_block_index(long m, long n);                     // so(m) in so(nm): (m-2)/(nm-2)
Rational sp_block_index(long m, long n);                     // sp(m) in sp(nm): (m+1)/(nm+1)

// Human-auditable serialization of the catalog (see share/).
std::string serialize_algebra_catalog();
std::string serialize_embedding_indices();

// Parses a serialized catalog and checks it record-by-record against the
// built-in tables; returns a list of mismatch descriptions (empty == ok).
std::vector<std::string> verify_algebra_catalog_text(const std::string& text);
std::vector<std::string> verify_embedding_indices_text(const std::string& text);

}  // namespace einq

#endif
