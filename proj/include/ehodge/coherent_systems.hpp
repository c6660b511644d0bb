#ifndef EHODGE_COHERENT_SYSTEMS_HPP
#define EHODGE_COHERENT_SYSTEMS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ehodge/bipoly.hpp"

namespace ehodge {

// Hodge polynomials of moduli spaces of coherent systems (E, V) of rank n,
// degree d with k sections on an elliptic curve C, with x = uv throughout.
//
// The chamber polynomials for type (2+ad, d, 1) do not depend on a, so no
// Hodge-polynomial entry point takes a.

class PreconditionViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class OutOfScope : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Chamber just above alpha = 0.
struct SmallAlpha {};
/// Chamber i lies between the i-th and (i+1)-th critical values; 0 is 0+.
struct ChamberIndex {
    unsigned value = 0;
};
using Chamber = std::variant<SmallAlpha, ChamberIndex>;

unsigned chamber_index(const Chamber& c);

struct ModuliQuery {
    long n = 1;
    long d = 1;
    long k = 1;
    bool fixed_det = false;
    Chamber chamber = SmallAlpha{};
};

enum class Stratum { Generic = 1, Extension = 2, Split = 3 };

std::string to_string(Stratum s);

/// One wall alpha_i for type (2+ad, d, 1).
struct CriticalValue {
    unsigned index = 0;
    long d1 = 0;
    long d2 = 0;
    long n1 = 0;
    long n2 = 0;
    Rational alpha;
};

/// A wall found by exhaustive search together with every (n1, d1) that
/// produces it.
struct WallCandidate {
    Rational alpha;
    std::vector<std::pair<long, long>> decompositions;  // (n1, d1)
};

enum class FlipSide { Plus, Minus };

enum class Verdict { Isomorphic, NotIsomorphic, Undetermined };

struct Classification {
    Verdict verdict = Verdict::Undetermined;
    std::string reason;
};

std::string to_string(Verdict v);

struct BirationalType {
    enum class Kind {
        Rational,              // rational variety
        ProjBundleTimesCurve,  // birational to P^dim x C
        FibredOverSymProd,     // fibred over S^h C, general fibre unirational
        FibredOverProjSpace,   // fibred over P^{h-1}, general fibre unirational
    };
    Kind kind = Kind::Rational;
    long parameter = 0;  // dim for ProjBundleTimesCurve, h for the fibred kinds
    std::string reason;

    friend bool operator==(const BirationalType& a, const BirationalType& b) {
        return a.kind == b.kind && a.parameter == b.parameter;
    }
};

/// "rational", "birational to P^5 × C", ...
std::string describe(const BirationalType& t);

/// Expected dimension k(d-k)+1.
long beta(long d, long k);

/// Number of chambers past 0+, floor((d-1)/2).
unsigned chamber_count(long d);

// --- 0+ chamber -------------------------------------------------------------

/// gcd(n,d) = 1, 1 <= k <= d: Gr(k,d), times C for the full family.
BiPoly hodge_g0_coprime(const ModuliQuery& q);

/// One stratum of G_0(n,d,1) for gcd(n,d) = 2. The generic stratum is
/// computed along both routes and they are required to agree.
BiPoly hodge_stratum(const ModuliQuery& q, Stratum s);

/// Closed formula for a stratum; d even, d >= 2.
BiPoly hodge_stratum_formula(long d, bool fixed_det, Stratum s);

/// The same strata assembled from blocks: Z2 quotients for the generic
/// stratum, affine/projective fibrations and Grassmannians for the others.
BiPoly hodge_stratum_constructive(long d, bool fixed_det, Stratum s);

/// Closed form for the whole of G_0(n,d,1), gcd(n,d) = 2.
BiPoly hodge_g0_gcd2(const ModuliQuery& q);
BiPoly g0_gcd2_closed(long d, bool fixed_det);

// --- walls and chambers for type (2+ad, d, 1) -------------------------------

/// alpha_i = (d-2 d1)/(1 + a(d-d1)), d1 = floor((d-1)/2) - i + 1, ascending.
std::vector<CriticalValue> critical_values(long d, long a);

/// Exhaustive search over 0 < n1 < n, 0 < d1 < d for walls
/// alpha = (n1 d2 - n2 d1)/n2 in (0, d/(n-1)), sorted and deduplicated.
/// Returns an empty list when n < 2.
std::vector<WallCandidate> critical_values_bruteforce(long n, long d);
std::vector<Rational> alphas(const std::vector<WallCandidate>& walls);

/// Terminal chamber: a P^{d-1}-bundle over C (or P^{d-1} for fixed determinant).
BiPoly hodge_gL(long d, bool fixed_det);

/// Flip loci at the wall with sub-degree d1.
BiPoly hodge_flip(long d, long d1, FlipSide side, bool fixed_det);

/// Chamber i via downward recursion from the terminal chamber.
BiPoly hodge_gi_recursive(long d, unsigned i, bool fixed_det);

/// Chamber i via the closed form.
BiPoly hodge_gi_closed(long d, unsigned i, bool fixed_det);

// --- dispatch and classifiers -----------------------------------------------

/// Routes a query to the coprime, gcd-2 or chamber formula. Throws
/// PreconditionViolation or OutOfScope.
BiPoly hodge_polynomial(const ModuliQuery& q);

/// Requires gcd(n,d) = gcd(n2,d) = 1 and 1 <= k <= d.
Classification classify_isomorphism(long n, long n2, long d, long k);

/// Throws OutOfScope when none of the known cases applies.
BirationalType birational_type(long n, long d, long k, bool fixed_det);

/// Upper bound on the number of birational types for fixed d and k = 1:
/// the number of divisors of d.
long birational_type_count_bound(long d);

}  // namespace ehodge

#endif
