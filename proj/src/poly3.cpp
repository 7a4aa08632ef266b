#include "brg/poly3.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "brg/compositions.hpp"

namespace brg {

namespace {

void require_same_basis(const Poly3& a, const Poly3& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument("poly3: basis mismatch between operands");
}

}  // namespace

Poly3 Poly3::constant(const Coeff& c, Basis basis) {
    Poly3 p(basis);
    p.add_term(0, 0, 0, c);
    return p;
}

Poly3 Poly3::monomial(const Coeff& c, int a, int y, int z, Basis basis) {
    Poly3 p(basis);
    p.add_term(a, y, z, c);
    return p;
}

void Poly3::add_term(int a, int y, int z, const Coeff& c) {
    if (c == 0) return;
    Key key{a, y, z};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Coeff Poly3::coeff(int a, int y, int z) const {
    auto it = terms_.find(Key{a, y, z});
    return it == terms_.end() ? Coeff(0) : it->second;
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
    require_same_basis(*this, rhs);
    for (const auto& [key, c] : rhs.terms_) add_term(key[0], key[1], key[2], c);
    return *this;
}

Poly3 operator*(const Poly3& lhs, const Poly3& rhs) {
    require_same_basis(lhs, rhs);
    Poly3 out(lhs.basis());
    for (const auto& [ka, ca] : lhs.terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
    return out;
}

Poly3& Poly3::operator*=(const Poly3& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly3 Poly3::scaled(const Coeff& c) const {
    Poly3 out(basis_);
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

Poly3 Poly3::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("poly3: negative exponent");
    Poly3 out = Poly3::constant(1, basis_);
    for (int i = 0; i < exponent; ++i) out *= *this;
    return out;
}

Poly3 Poly3::to_basis(Basis target) const {
    if (target == basis_) return *this;
    Poly3 out(target);
    // x^a = sum_i binom(a,i) (-1)^(a-i) X^i   and   X^a = sum_i binom(a,i) x^i.
    const bool to_x_basis = (target == Basis::X);
    for (const auto& [key, c] : terms_) {
        const int a = key[0];
        for (int i = 0; i <= a; ++i) {
            Coeff w = compositions::binomial(a, i) * c;
            if (to_x_basis && ((a - i) % 2 != 0)) w = -w;
            out.add_term(i, key[1], key[2], w);
        }
    }
    return out;
}

std::string Poly3::to_text() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* lhs, const auto* rhs) {
        const auto& a = lhs->first;
        const auto& b = rhs->first;
        if (a[1] != b[1]) return a[1] > b[1];  // Y degree first
        if (a[2] != b[2]) return a[2] > b[2];  // then Z
        return a[0] > b[0];
    });

    const char* first_var = (basis_ == Basis::X) ? "X" : "x";
    std::ostringstream os;
    bool first = true;
    for (const auto* term : order) {
        const auto& [key, c] = *term;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        auto var = [&](const char* name, int e) {
            if (e == 1)
                factors.push_back(name);
            else if (e > 1)
                factors.push_back(std::string(name) + "^" + std::to_string(e));
        };
        var(first_var, key[0]);
        var("Y", key[1]);
        var("Z", key[2]);
        if (factors.empty()) {
            os << mag.str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag.str();
            need_star = true;
        }
        for (const auto& f : factors) {
            if (need_star) os << "*";
            os << f;
            need_star = true;
        }
    }
    return os.str();
}

std::string poly3_to_json(const Poly3& p) {
    const Poly3 q = p.to_basis(Basis::X);
    nlohmann::json terms = nlohmann::json::array();
    const auto& map = q.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it) {
        const auto& [key, c] = *it;
        nlohmann::json term;
        term["X"] = key[0];
        term["Y"] = key[1];
        term["Z"] = key[2];
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            term["coeff"] = static_cast<std::int64_t>(c);
        } else {
            term["coeff"] = c.str();
        }
        terms.push_back(std::move(term));
    }
    nlohmann::json doc;
    doc["basis"] = "X";
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Poly3 poly3_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("poly3 json: ") + e.what());
    }
    const std::string basis_name = doc.at("basis").get<std::string>();
    Basis basis;
    if (basis_name == "X")
        basis = Basis::X;
    else if (basis_name == "x")
        basis = Basis::XMinusOne;
    else
        throw std::invalid_argument("poly3 json: unknown basis '" + basis_name + "'");
    Poly3 p(basis);
    for (const auto& term : doc.at("terms")) {
        Coeff c;
        const auto& raw = term.at("coeff");
        if (raw.is_string())
            c = Coeff(raw.get<std::string>());
        else
            c = Coeff(raw.get<std::int64_t>());
        p.add_term(term.at("X").get<int>(), term.at("Y").get<int>(), term.at("Z").get<int>(), c);
    }
    return p;
}

}  // namespace brg
