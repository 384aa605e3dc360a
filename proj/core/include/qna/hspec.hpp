#pragma once

#include "qna/dda.hpp"
#include "qna/lattice.hpp"

#include <cstdint>
#include <mutex>

namespace qna {

/// Subset of [1, n] drawn as a row of black/white boxes; the combinatorial
/// address of a torus-invariant prime candidate.
struct CauchonDiagram {
    int n = 0;
    std::uint32_t mask = 0;

    CauchonDiagram() = default;
    CauchonDiagram(int n, std::uint32_t mask) : n(n), mask(mask) {}
    static CauchonDiagram from_members(int n, const std::vector<int>& members);

    bool contains(int i) const { return i >= 1 && i <= n && (mask >> (i - 1)) & 1u; }
    bool empty() const { return mask == 0; }
    int black_count() const;
    int white_count() const { return n - black_count(); }
    std::vector<int> members() const;
    std::vector<int> white_indices() const;
    /// Largest member; 0 when empty.
    int max_member() const;
    CauchonDiagram remove_max() const;

    bool operator==(const CauchonDiagram&) const = default;
};

/// "BBWWB" style rendering, box i black iff i is a member.
std::string diagram_render(const CauchonDiagram& w);
/// Inverse of diagram_render; accepts only 'B' and 'W'.
CauchonDiagram diagram_parse(const std::string& s);

struct LiftRejection {
    int step = 0;
    std::string reason;
    NFPoly witness;
};

struct LiftStepResult {
    bool rejected = false;
    LiftRejection rejection;
    std::vector<NFPoly> next_gens;
    /// True when some transported generator had to be cleared of an actual
    /// negative localized power, i.e. the lifted ideal is certified only up
    /// to saturation (the downstream consistency checks act as detectors).
    bool cleared_negative_power = false;
};

/**
 * One step of the ideal lifting pipeline, from level s to level s+1.
 *
 * The x_s-membership of the ideal must agree with the colour of box s
 * (mismatch throws InternalError). A white step transports every generator
 * through the localized change of generators, right-clears denominators,
 * and then repeatedly strips exact right factors of x_s from the completed
 * basis: x_s stays outside the lifted prime on a white step, so complete
 * primeness puts each stripped quotient back inside it. The result is still
 * certified only up to full saturation (cleared_negative_power reports
 * this). A black step demands that every reinstated delta entry of level
 * s+1 already lies in the ideal (the operational kernel criterion) and then
 * adjoins x_s. Rejections carry the witness generator.
 */
LiftStepResult lift_step(const PresentationTower& tower, int s, const IdealHandle& Js,
                         const CauchonDiagram& w, int pair_cap = kDefaultPairCap);

struct HPrimeRecord {
    CauchonDiagram w;
    bool admissible = false;
    std::optional<LiftRejection> reject;
    std::optional<std::string> error; // cap exhaustion or similar, per record
    /// Generator lists per level, index 0 = level 2, ..., index n-1 = level n+1.
    std::vector<std::vector<NFPoly>> ideal_tower;
    int height = 0;
    int gk = 0;
    int stratum_dim = 0;
    bool saturation_flag = false;
};

/// Runs the full lifting pipeline for one diagram.
HPrimeRecord admissible(const PresentationTower& tower, const CauchonDiagram& w,
                        int pair_cap = kDefaultPairCap);

/// All 2^n diagrams in mask order; per-diagram errors are recorded, not
/// thrown, so one failing record does not abort the sweep. jobs > 1 fans
/// the independent evaluations out to a bounded worker pool.
std::vector<HPrimeRecord> enumerate_hspec(const PresentationTower& tower,
                                          int pair_cap = kDefaultPairCap, int jobs = 1);

/// Generators of the lifted ideal in the original algebra (level n+1).
/// Throws std::invalid_argument on an inadmissible record.
std::vector<NFPoly> jw_generators(const HPrimeRecord& rec);

struct ChainLink {
    CauchonDiagram w;
    HPrimeRecord record;
    /// Generator of the previous (larger) ideal that fails membership here;
    /// meaningful from the second link on.
    NFPoly witness;
    bool inclusion_certified = false;
};

/// Shared memo of admissibility records and top-level bases, so chain and
/// report construction verify each diagram once per tower.
class HSpecCache {
public:
    HSpecCache(const PresentationTower& tower, int pair_cap)
        : tower_(tower), pair_cap_(pair_cap) {}
    const PresentationTower& tower() const { return tower_; }
    int pair_cap() const { return pair_cap_; }
    HPrimeRecord record(const CauchonDiagram& w);
    /// Completed basis of the lifted ideal at the top level.
    IdealHandle top_handle(const CauchonDiagram& w);
    void prime(const std::vector<HPrimeRecord>& records);

private:
    const PresentationTower& tower_;
    int pair_cap_;
    std::mutex mu_;
    std::map<std::uint32_t, HPrimeRecord> records_;
    std::map<std::uint32_t, IdealHandle> handles_;
};

/**
 * Descending chain w = w_0 > w_1 > ... > w_m = {} obtained by repeatedly
 * removing the maximal black box. Every element is re-verified admissible
 * and every inclusion is certified both ways: containment of generators
 * plus a non-membership witness for strictness. m = black_count(w).
 */
std::vector<ChainLink> blackbox_chain(const PresentationTower& tower, const CauchonDiagram& w,
                                      int pair_cap = kDefaultPairCap);
std::vector<ChainLink> blackbox_chain(HSpecCache& cache, const CauchonDiagram& w);

/// Lattice-theoretic decomposition of an antisymmetric integer pairing:
/// kernel Z, a complementary sublattice W with Z + W of full rank and
/// Z ∩ W = 0, the index of Z ⊕ W, and nondegeneracy of the pairing on W.
struct CenterDecomposition {
    std::vector<IntVec> z_basis;
    std::vector<IntVec> w_basis;
    BigInt index_s = 1;
    bool radical_trivial = true;
    int rank_z = 0;
};
CenterDecomposition center_decomposition(const std::vector<std::vector<std::int64_t>>& torus_exp);

/// Dimension of the stratum attached to an admissible diagram: the rank of
/// the center lattice of the q-commuting pairing restricted to the white
/// indices.
int stratum_dimension(const PresentationTower& tower, const CauchonDiagram& w);

struct StratumReport {
    CauchonDiagram w;
    std::vector<int> white_indices;
    std::vector<std::vector<std::int64_t>> torus_exp; // restricted pairing
    CenterDecomposition cd;
    int stratum_dim = 0;
};
StratumReport stratum_report(const PresentationTower& tower, const CauchonDiagram& w);

struct PosetEdge {
    std::uint32_t from_mask = 0; // smaller ideal
    std::uint32_t to_mask = 0;   // covering larger ideal
};

struct PosetResult {
    std::vector<PosetEdge> cover_edges;
    bool grading_ok = false;
    std::string detail;
};

/// Containment order of the lifted ideals with covering edges, plus a
/// verification that every saturated chain below a node has length equal
/// to the node's height label.
PosetResult poset(const PresentationTower& tower, const std::vector<HPrimeRecord>& records,
                  int pair_cap = kDefaultPairCap);

struct TauvelRow {
    CauchonDiagram w;
    int black = 0;
    int white = 0;
    int chain_len = 0;
    int gk = 0;
    int stratum_dim = 0;
    bool saturation_flag = false;
    bool sum_ok = false;       // height + gk == n with height certified by the chain
    int prim_gk = 0;           // white - d
    int prim_height = 0;       // black + d
    bool prim_sum_ok = false;  // primitive-stratum accounting adds to n
    bool ok = false;
};

struct TauvelReport {
    int n = 0;
    int gk_total = 0; // equals n for a validated tower
    std::vector<TauvelRow> rows;
    int admissible_count = 0;
    bool all_ok = false;
};

/// One row per admissible diagram: the height/GK accounting, the certified
/// chain length, and the per-stratum primitive accounting.
TauvelReport tauvel_report(const PresentationTower& tower, int pair_cap = kDefaultPairCap,
                           int jobs = 1);

} // namespace qna
