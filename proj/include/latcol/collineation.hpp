#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcol/matrix.hpp"
#include "latcol/opspaces.hpp"
#include "latcol/sample.hpp"
#include "latcol/structure.hpp"
#include "latcol/subspace.hpp"

namespace latcol {

enum class Verdict { MemberExact, MemberSampled, NonMember, NotInvertible };
[[nodiscard]] std::string to_string(Verdict v);

// Which map moves the witness out of Lat(A): T itself or T^{-1}.
enum class Direction { Forward, Inverse };
[[nodiscard]] std::string to_string(Direction d);

struct Witness {
    Subspace subspace;  // an A-invariant subspace
    Direction direction = Direction::Forward;
    std::string source;  // which search stage produced it
};

/// Exact certificate check: M is A-invariant and (T or T^{-1}) M is not.
[[nodiscard]] bool verify_witness(const Matrix& a, const Matrix& t, const Witness& w);

struct SampleStats {
    std::size_t vectors_tested = 0;
    std::uint64_t seed = 0;
};

struct ColVerdict {
    Verdict verdict = Verdict::NotInvertible;
    std::vector<std::string> decision_path;
    std::optional<Witness> witness;
    std::vector<std::size_t> permutation;  // pi(j) for each primary component, when computed
    SampleStats stats;

    [[nodiscard]] bool is_member() const {
        return verdict == Verdict::MemberExact || verdict == Verdict::MemberSampled;
    }
};

struct SampledResult {
    bool passed = true;
    std::size_t tested = 0;
    std::optional<Vector> counterexample;
    std::string failed_check;
    std::optional<Witness> witness;
};

// Sampled collineation test for one nilpotent N, prepared once per sample.
//
// For every sample vector x (duplicates up to scalar multiples dropped) it
// checks that T(N)_x and T^{-1}(N)_x are N-invariant and equal to (N)_{Tx}
// and (N)_{T^{-1}x}. Work happens in Jordan coordinates; invariance is
// decided once per distinct cyclic subspace, and the equality reduces to the
// height of Tx because (N)_{Tx} is contained in any invariant T(N)_x.
class CyclicSampler {
public:
    CyclicSampler(const Matrix& n, const VectorSample& sample);

    /// T in the coordinates of the N given at construction.
    [[nodiscard]] SampledResult check(const Matrix& t) const;
    [[nodiscard]] std::size_t size() const { return probes_.size(); }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

private:
    struct Probe {
        Vector original;
        std::vector<std::size_t> support;  // nonzero coordinates in Jordan coordinates
        Vector x;                          // Jordan coordinates
        std::size_t height = 0;
        std::size_t key = 0;
    };
    struct Key {
        std::vector<Vector> krylov;  // g, Ng, ..., N^h g with g normalized
        std::size_t lead = 0;        // coordinate where N^j g has its unit entry, for j = 0
    };

    [[nodiscard]] bool key_invariant(const Key& k, const Matrix& m) const;
    [[nodiscard]] bool height_kept(const Probe& p, const Matrix& t) const;
    [[nodiscard]] Vector shift(const Vector& v, std::size_t by) const;

    Matrix n_;
    Matrix jordan_;
    JordanBasis basis_;
    bool jordan_input_ = false;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> sizes_;
    std::vector<Probe> probes_;
    std::vector<Key> keys_;
    std::uint64_t seed_ = 0;
};

/// Runs the sampled test of CyclicSampler on one (N, T) pair. A pass is not a
/// proof of membership.
[[nodiscard]] SampledResult col_check_sampled(const Matrix& n, const Matrix& t, const VectorSample& sample);

/// First subspace of the family (each must be N-invariant) that T or T^{-1}
/// moves out of Lat(N).
[[nodiscard]] std::optional<Witness> first_subspace_failure(const Matrix& n, const Matrix& t,
                                                            std::span<const Subspace> family);

// The two-parameter description of collineations of J_2 (+) J_2:
// rows 1 and 3 are free, row 2 is (0, t g11, 0, t g13) and row 4 is
// (0, t g31, 0, t g33), subject to t (g11 g33 - g13 g31) != 0.
struct ColParamJ2J2 {
    Scalar t = Scalar(1);
    std::array<Scalar, 8> gamma;  // g11 g12 g13 g14 g31 g32 g33 g34

    [[nodiscard]] Matrix realize() const;
    [[nodiscard]] bool nondegenerate() const;
};
[[nodiscard]] std::optional<ColParamJ2J2> col_j2j2_decide(const Matrix& t);

/// Exact membership for N with at most one Jordan block of size >= 2:
/// T is invertible and leaves every ker N^j and ran N^j invariant.
[[nodiscard]] bool col_single_chain_decide(const Matrix& n, const Matrix& t);

struct SeparatorCertificate {
    Matrix d;    // invertible, in Alg Lat(N)'
    Subspace k;  // N-invariant, D K is not
    bool d_invertible = false;
    bool d_in_alg_lat = false;
    bool k_invariant = false;
    bool dk_not_invariant = false;

    [[nodiscard]] bool verified() const { return d_invertible && d_in_alg_lat && k_invariant && dk_not_invariant; }
};
/// For N with two or more Jordan blocks of size >= 2: the diagonal matrix with
/// a single 2 on the second vector of the second block and the plane
/// span{e_1 + e_{n1+1}, e_2 + e_{n1+2}} of Jordan coordinates, mapped back to
/// the coordinates of N. Throws PreconditionError otherwise.
[[nodiscard]] SeparatorCertificate diagonal_separator(const Matrix& n);

/// B commuting with N with B x = T x and T (N)_x = B (N)_x. Since
/// B (N)_x = (N)_{Tx} for every such B, nullopt (no solution, or the
/// cyclic images disagree) rules T out of Col(N).
[[nodiscard]] std::optional<Matrix> commutant_witness(const Matrix& n, const Matrix& t, const Vector& x);

struct CyclicImageReport {
    std::size_t height = 0;                // k_x
    std::vector<bool> image_is_cyclic;     // j: T(N)_z == (N)_{Tz}, z = N^{k_x - j} x
    std::vector<bool> cyclic_commutes;     // j: (N)_{Tz} == (N)_{N^{k_x - j} T x}
    bool top_annihilated = false;          // N T N^{k_x} x == 0

    [[nodiscard]] bool passed() const;
};
[[nodiscard]] CyclicImageReport cyclic_image_check(const Matrix& n, const Matrix& t, const Vector& x);

/// pi with T V_j = V_{pi(j)}; throws PreconditionError("no permutation") otherwise.
[[nodiscard]] std::vector<std::size_t> extract_permutation(const PrimaryDecomposition& pd, const Matrix& t);

/// Block matrix exchanging components j and k through a similarity of their
/// nilpotent parts, identity on the others, in original coordinates.
/// Throws PreconditionError("not similar") when the Jordan types differ.
[[nodiscard]] Matrix build_swap_collineation(const PrimaryDecomposition& pd, std::size_t j, std::size_t k);

// Membership engine with everything that depends only on A precomputed.
class ColChecker {
public:
    ColChecker(const Matrix& a, const std::vector<Scalar>& spectrum, VectorSample sample = {});
    ~ColChecker();
    ColChecker(ColChecker&&) noexcept;
    ColChecker& operator=(ColChecker&&) noexcept;

    [[nodiscard]] ColVerdict check(const Matrix& t) const;
    [[nodiscard]] const PrimaryDecomposition& decomposition() const { return pd_; }

private:
    struct TypeData;
    struct FactorOutcome;

    [[nodiscard]] FactorOutcome check_factor(const TypeData& td, const Matrix& tk) const;
    [[nodiscard]] std::optional<Witness> search_original(const Matrix& t, const Matrix& t_inv) const;

    Matrix a_;
    PrimaryDecomposition pd_;
    VectorSample sample_;
    std::vector<std::size_t> type_of_component_;
    std::vector<std::unique_ptr<TypeData>> types_;
};

/// One-shot form of ColChecker.
[[nodiscard]] ColVerdict col_check(const Matrix& a, const Matrix& t, const std::vector<Scalar>& spectrum,
                                   const VectorSample& sample = {});

// Invariant subspaces of J_2 (+) J_2.
enum class LatticeKind { Trivial0, Dim1, Kernel, Dim2, Preimage3, Whole };
[[nodiscard]] std::string to_string(LatticeKind k);

struct LatticeElemJ2J2 {
    LatticeKind kind = LatticeKind::Trivial0;
    std::vector<Scalar> params;  // (w, k) or (w, k, r, s) for the parametric kinds
    Subspace realized;
};

/// {0}, the kernel (= range), C^4, then over the parameter grid {-g..g} with
/// (w, k) != (0, 0): the lines span{w e1 + k e3}, the planes
/// span{w e1 + k e3, r e1 + w e2 + s e3 + k e4}, and the preimages
/// span{e1, e3, w e2 + k e4}; followed by `random_count` seeded random
/// parameter sets of each kind. Every element is checked to be invariant.
[[nodiscard]] std::vector<LatticeElemJ2J2> lat_j2j2_sample(int grid = 2, std::size_t random_count = 0,
                                                           std::uint64_t seed = 0);

}  // namespace latcol
