#pragma once
// Sparse exact-integer polynomials in three variables.
//
// The first variable is either X itself or the shift x = X - 1; which one is
// meant is carried on the value as a basis flag, and arithmetic refuses to
// mix bases. Y and Z mean the same thing in both bases. Keeping sums in the
// shifted basis avoids binomial expansion while accumulating rank terms;
// conversion to X happens once, for display or interchange.

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "brg/bigint.hpp"

namespace brg {

using Coeff = BigInt;

enum class Basis { X, XMinusOne };

class Poly3 {
  public:
    // Exponents of (first variable, Y, Z).
    using Key = std::array<int, 3>;
    using TermMap = std::map<Key, Coeff>;

    explicit Poly3(Basis basis = Basis::X) : basis_(basis) {}

    static Poly3 zero(Basis basis = Basis::X) { return Poly3(basis); }
    static Poly3 constant(const Coeff& c, Basis basis = Basis::X);
    static Poly3 monomial(const Coeff& c, int a, int y, int z, Basis basis = Basis::X);

    Basis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates c into the (a, y, z) term; zero results are dropped so the
    // map never stores zero coefficients.
    void add_term(int a, int y, int z, const Coeff& c);
    Coeff coeff(int a, int y, int z) const;

    Poly3& operator+=(const Poly3& rhs);
    Poly3& operator*=(const Poly3& rhs);
    friend Poly3 operator+(Poly3 lhs, const Poly3& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Poly3 operator*(const Poly3& lhs, const Poly3& rhs);

    Poly3 scaled(const Coeff& c) const;
    Poly3 pow(int exponent) const;

    // Rewrites the polynomial over the other first-variable basis; exact, and
    // converting twice gives back the original.
    Poly3 to_basis(Basis target) const;

    bool operator==(const Poly3& rhs) const = default;

    // Paper-style rendering: terms ordered by descending Y degree, then
    // descending Z degree, e.g. "Y^3*Z^2 + 2*Y^2*Z^2 + Y^2 + 3*Y + 1".
    std::string to_text() const;

  private:
    Basis basis_;
    TermMap terms_;
};

// JSON interchange form. Serialization always converts to the X basis:
// {"basis":"X","terms":[{"coeff":1,"X":0,"Y":3,"Z":2}, ...]} with terms in
// descending lexicographic (X, Y, Z) order. Coefficients that do not fit in
// 64 bits are written as decimal strings.
std::string poly3_to_json(const Poly3& p);
Poly3 poly3_from_json(const std::string& text);

}  // namespace brg
