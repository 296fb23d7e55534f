#ifndef BETACYL_CANTOR_HPP
#define BETACYL_CANTOR_HPP

#include <vector>

#include <gmpxx.h>

#include "betacyl/dyadic.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

// Parameters of the nested Cantor family in parameter space.  Each
// generation k picks a depth n_k, pads with b_k-zeros blocks, inserts a top
// digit N marker, draws free digits from {1,...,N-1}, and mirrors the
// leading block, giving words of length m_k = 2 n_k + 2 b_k + c_k - 1.
struct CantorConfig {
    mpq_class delta;          // in (1, 2]
    mpq_class zeta;           // in (0, (2-delta)/(2*delta))
    long N = 10;              // top digit, >= 3
    long growth = 4;          // schedule factor: n_k = max(growth*m_{k-1}, m_{k-1}+1)
    long n1_override = 0;     // nonzero forces n_1; later generations use the schedule
    long K = 1;               // generation horizon
    unsigned long long seed = 1;

    void validate() const;    // throws OutOfRangeError on a bad field
};

struct GenerationParams {
    long k = 0;
    long n = 0; // depth where the free block ends
    long a = 0; // free digits appended to the previous word
    long b = 0; // zero block length + 1
    long c = 0; // second free block length
    long m = 0; // total word length of this generation
};

// Params for generations 1..k (throws ScheduleTooSmallError when the
// schedule fails to grow past the previous word length).
std::vector<GenerationParams> generation_schedule(const CantorConfig& cfg, long k);
GenerationParams generation_params(const CantorConfig& cfg, long k);

// One seeded path through the construction; k = 0 gives (N, N).  The result
// has length m_k and is self-admissible.
DigitWord sample_word(const CantorConfig& cfg, long k);

// Mass carried by a depth-n cylinder around any path of the construction,
// as the exact rational (N-1)^(-e).  Depends only on n and the config.
long mass_exponent(const CantorConfig& cfg, long n);
mpq_class mass(const CantorConfig& cfg, long n);

// Whether the refined cover uses the depth-n cylinder itself or snaps to
// the enclosing marked depth.
enum class CylinderRole { UseOwn, SnapToPrev };
struct RefinedRole {
    CylinderRole role = CylinderRole::UseOwn;
    long depth = 0; // n itself for UseOwn, else the snap target
};
RefinedRole refined_cylinder_role(const CantorConfig& cfg, long n);

// Certified enclosures of r_n = log mu(I_n) / log |I_{n+1}| along the
// sampled path, for n = 2 .. m_{k_max}.  Lengths enter through the proven
// sandwich C (N+1)^(-n-D) <= |I_n| <= N^(-n+1) with C = (N-1)^2/N and
// D = tau_n - t_n when t_n > 0, so no root isolation is needed even at
// depths in the hundred-thousands.  bound_lo/bound_hi enclose the limit
// constant (log(N-1)/log(N+1)) ((2-delta)/delta - zeta).
struct LocalDimensionRow {
    long n = 0;
    Dyadic r_lo, r_hi;
};
struct LocalDimensionReport {
    std::vector<LocalDimensionRow> rows;
    Dyadic bound_lo, bound_hi;
};
LocalDimensionReport local_dimension_sequence(const CantorConfig& cfg, long k_max, long p = 0);

// log(number of generation-k words) / (-log max cylinder length at depth
// m_k), via the same certified length sandwich.  free_exponent is the
// exact count exponent: the generation has (N-1)^free_exponent words.
struct BoxDimensionEstimate {
    Dyadic lo, hi;
    long free_exponent = 0;
    long depth = 0;
};
BoxDimensionEstimate box_dimension_estimate(const CantorConfig& cfg, long k, long p = 0);

// Draws depths n where both the depth-n and depth-(n+1) refined cylinders
// are genuine, picks a radius r with |J_{n+1}| <= r < |J_n| certified from
// root enclosures, counts the sibling cylinders meeting the ball around a
// point of the deepest sampled cylinder, and checks the count against
// C1 (N+1)^n / N^n with C1 = 2N/C + 2.
struct BallCheckRow {
    long n = 0;
    mpz_class count;
    mpq_class bound;
    bool ok = true;
};
struct BallCheckReport {
    long samples = 0;
    long violations = 0;
    std::vector<BallCheckRow> rows;
};
BallCheckReport ball_mass_bound_check(const CantorConfig& cfg, long samples, long p = 0);

} // namespace betacyl

#endif
