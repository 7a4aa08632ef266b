#pragma once
// Flower rosettes: one-vertex ribbon graphs whose petals (self-loops) are
// chain-interleaved so that consecutive petals alternate and no others do.
// This module builds them, classifies their face configuration in Z_3,
// evaluates the closed-form Bollobas-Riordan polynomials of the single-sign
// families, the periodic-flower face formulas, the recurrence that generates
// the same polynomials, and the value of a fully factorized terminal form.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "brg/bigint.hpp"
#include "brg/poly3.hpp"
#include "brg/ribbon_graph.hpp"

namespace brg::flowers {

// Petal signs follow the twist symbol: +1 twisted, -1 untwisted.
enum class PetalSign : int { Twisted = +1, Untwisted = -1 };

inline PetalSign flip(PetalSign s) {
    return s == PetalSign::Twisted ? PetalSign::Untwisted : PetalSign::Twisted;
}

struct Sector {
    int count = 0;
    PetalSign sign = PetalSign::Untwisted;
};

enum class Layout { Merged, Separate };

// A generalized flower: sectors of equal-sign petals, either merged into one
// chain or kept as separate chains on the same vertex. An empty sector list
// denotes the bare vertex.
struct FlowerSpec {
    std::vector<Sector> sectors;
    Layout layout = Layout::Merged;

    int total_petals() const;
    std::vector<PetalSign> signs() const;
    void validate() const;  // throws std::invalid_argument
};

// The face configuration of a flower, encoded in Z_3:
//   2 <-> one face, last-edge orientation +
//   1 <-> one face, last-edge orientation -   (also the bare vertex)
//   0 <-> two faces
struct FaceClass {
    int value = 1;

    int face_count() const { return value == 0 ? 2 : 1; }
    friend bool operator==(const FaceClass&, const FaceClass&) = default;
};

// Alternating flower (k1, s)(k2, -s)(k1, s)...: q sectors, odd-numbered ones
// of k1 petals with the starting sign, even-numbered ones of k2 petals with
// the opposite sign.
struct PeriodicSpec {
    int k1 = 1;
    int k2 = 1;
    int q = 1;
    PetalSign start = PetalSign::Untwisted;

    void validate() const;  // throws std::invalid_argument
    std::vector<PetalSign> expand() const;
};

// A fully factorized terminal form: bridges, trivial loops, and trivial
// single-sign flowers joined at vertices.
struct TerminalProfile {
    int bridges = 0;
    int untwisted_loops = 0;
    int twisted_loops = 0;
    std::vector<int> untwisted_flowers;  // petal counts, each >= 1
    std::vector<int> twisted_flowers;
};

// One-vertex graph whose rotation is the chain word
// e1 e2 e1 e3 e2 e4 e3 ... eN e(N-1) eN (merged), or the concatenation of
// per-sector chain words (separate). Empty spec gives the bare vertex.
RibbonGraph build_flower(const FlowerSpec& spec);

// Z_3 class of the merged flower with the given petal signs, by iterating
// x <- x*eps + 1 (mod 3) from x = 1 over the signs in petal order.
FaceClass face_class(std::span<const PetalSign> signs);

// Same class computed as 1 + sum over suffixes of (-1)^(untwisted petals in
// the suffix), mod 3.
FaceClass face_class_suffix_sum(std::span<const PetalSign> signs);

// Number of faces, always 1 or 2; equals boundary_components of the built
// merged flower.
int face_count(std::span<const PetalSign> signs);

// Z_3 class of a periodic flower from the per-case closed expressions
// (q parity x starting sign x k1 parity; q = 1 degenerates to the pure
// single-sign flower formulas).
FaceClass periodic_face_class(const PeriodicSpec& spec);

// Closed-form polynomial of the N-petal untwisted flower:
//   1 + sum_{n=1}^{N-1} Y^n sum_P binom(N-n+1, P) sum_I Z^(n-I) C_n(P, I)
//     + Y^N Z^(N - eps(N)),
// with C_n(P, I) counting compositions of n into P parts with I odd ones.
Poly3 closed_form_untwisted(int n_petals);

// Twisted analogue: parts counted in 3N+2 and top term Y^N Z^(N - eps3(N)).
Poly3 closed_form_twisted(int n_petals);

// Number of ways to place P packets with fixed ordered sizes into a chain of
// N petals so that n petals remain: binom(N - n + 1, P).
Count placement_count(int n_total, int n_kept, int packets);

enum class FlowerFamily { Untwisted, Twisted };

// R_0..R_max via R_N = sum_{n=0}^{N-1} Y^n Z^(n-eps(n)) R_(N-n-1)
//                      + Y^N Z^(N-eps(N)),
// with eps the parity indicator for the untwisted family and the 3N+2
// indicator for the twisted one.
std::vector<Poly3> recurrence_family(FlowerFamily family, int n_max);

// X^m (1+Y)^p (1+YZ)^q times the closed form of every listed flower.
Poly3 terminal_form_value(const TerminalProfile& profile);

// CLI spec grammar: "u5" / "t3" for pure flowers, "3+,2-;merged" or
// "3+,2-;separate" for sector lists (layout defaults to merged), and
// "periodic k1=1 k2=1 q=6 start=-" for periodic flowers.
using ParsedSpec = std::variant<FlowerSpec, PeriodicSpec>;
ParsedSpec parse_flower_spec(const std::string& text);

namespace detail {

// A(eta, xi, k) = sum_{l=eta}^{xi} (-1)^(l*k); empty ranges give 0.
long long alternating_sum(int eta, int xi, int k);

// The pre-simplification case expressions written with alternating_sum;
// agrees with periodic_face_class everywhere.
FaceClass periodic_face_class_nested(const PeriodicSpec& spec);

// Chain rotation word over 0-based petal ids; used by build_flower and by
// the reducer's flower recognition.
std::vector<int> chain_word(int n_petals);

// True when the cyclic word (2N entries over N loop ids) is the chain word
// up to rotation, reflection and relabeling.
bool is_chain_word(const std::vector<int>& word);

}  // namespace detail

}  // namespace brg::flowers
