#include "brg/flowers.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "brg/compositions.hpp"
#include "brg/errors.hpp"

namespace brg::flowers {

namespace {

using compositions::IndicatorKind;

int mod3(long long v) {
    return static_cast<int>((v % 3 + 3) % 3);
}

int sign_pow(long long l) {
    return l % 2 == 0 ? 1 : -1;
}

Poly3 closed_form(int n_petals, IndicatorKind kind) {
    if (n_petals < 0) throw std::invalid_argument("closed form: petal count must be >= 0");
    Poly3 p(Basis::X);
    p.add_term(0, 0, 0, 1);
    if (n_petals == 0) return p;
    const int N = n_petals;
    p.add_term(0, N, N - compositions::indicator(kind, N), 1);
    for (int n = 1; n <= N - 1; ++n) {
        for (int P = 1; P <= n; ++P) {
            const Count places = placement_count(N, n, P);
            if (places == 0) continue;
            for (int I = 0; I <= P; ++I) {
                const Count c = kind == IndicatorKind::Parity
                                    ? compositions::count_odd(n, P, I)
                                    : compositions::count_residue(n, P, I, 3, 2);
                if (c == 0) continue;
                p.add_term(0, n, n - I, places * c);
            }
        }
    }
    return p;
}

}  // namespace

int FlowerSpec::total_petals() const {
    int n = 0;
    for (const Sector& s : sectors) n += s.count;
    return n;
}

std::vector<PetalSign> FlowerSpec::signs() const {
    std::vector<PetalSign> out;
    out.reserve(static_cast<std::size_t>(total_petals()));
    for (const Sector& s : sectors) out.insert(out.end(), static_cast<std::size_t>(s.count), s.sign);
    return out;
}

void FlowerSpec::validate() const {
    for (const Sector& s : sectors)
        if (s.count < 1) throw std::invalid_argument("flower spec: sector counts must be >= 1");
}

void PeriodicSpec::validate() const {
    if (k1 < 1 || k2 < 1 || q < 1)
        throw std::invalid_argument("periodic spec: need k1 >= 1, k2 >= 1, q >= 1");
}

std::vector<PetalSign> PeriodicSpec::expand() const {
    validate();
    std::vector<PetalSign> out;
    for (int i = 1; i <= q; ++i) {
        const int count = i % 2 == 1 ? k1 : k2;
        const PetalSign sign = i % 2 == 1 ? start : flip(start);
        out.insert(out.end(), static_cast<std::size_t>(count), sign);
    }
    return out;
}

namespace detail {

std::vector<int> chain_word(int n_petals) {
    std::vector<int> w;
    if (n_petals <= 0) return w;
    w.reserve(static_cast<std::size_t>(2 * n_petals));
    w.push_back(0);
    for (int i = 1; i < n_petals; ++i) {
        w.push_back(i);
        w.push_back(i - 1);
    }
    w.push_back(n_petals - 1);
    return w;
}

namespace {

std::vector<int> relabel_first_occurrence(const std::vector<int>& w) {
    std::map<int, int> renum;
    std::vector<int> out;
    out.reserve(w.size());
    for (int id : w)
        out.push_back(renum.emplace(id, static_cast<int>(renum.size())).first->second);
    return out;
}

std::vector<int> canonical_cyclic(const std::vector<int>& w) {
    std::vector<int> best;
    std::vector<int> rotated(w.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> base = w;
        if (dir == 1) std::reverse(base.begin(), base.end());
        for (std::size_t shift = 0; shift < base.size(); ++shift) {
            for (std::size_t i = 0; i < base.size(); ++i)
                rotated[i] = base[(shift + i) % base.size()];
            std::vector<int> labeled = relabel_first_occurrence(rotated);
            if (best.empty() || labeled < best) best = std::move(labeled);
        }
    }
    return best;
}

}  // namespace

bool is_chain_word(const std::vector<int>& word) {
    if (word.empty() || word.size() % 2 != 0) return false;
    const int n = static_cast<int>(word.size() / 2);
    return canonical_cyclic(word) == canonical_cyclic(chain_word(n));
}

long long alternating_sum(int eta, int xi, int k) {
    long long s = 0;
    for (int l = eta; l <= xi; ++l) s += sign_pow(static_cast<long long>(l) * k);
    return s;
}

FaceClass periodic_face_class_nested(const PeriodicSpec& spec) {
    spec.validate();
    const int l = spec.q / 2;
    const long long k1 = spec.k1, k2 = spec.k2;
    const long long s1 = k1 % 2 == 0 ? 0 : -1;  // sum of (-1)^a, a = 1..k1
    long long v;
    if (spec.q == 1) {
        v = spec.start == PetalSign::Twisted ? 1 + k1 : 1 + s1;
    } else if (spec.q % 2 == 0) {
        if (spec.start == PetalSign::Untwisted)
            v = 1 + alternating_sum(0, l - 1, spec.k1) * s1 + alternating_sum(1, l, spec.k1) * k2;
        else
            v = 1 + alternating_sum(0, l - 1, spec.k1) * s1 +
                alternating_sum(0, l - 1, spec.k1) * k2;
    } else {
        if (spec.start == PetalSign::Untwisted)
            v = 1 + alternating_sum(0, l, spec.k1) * s1 + alternating_sum(1, l, spec.k1) * k2;
        else
            v = 1 + alternating_sum(0, l - 1, spec.k1) * s1 + alternating_sum(0, l, spec.k1) * k2;
    }
    return FaceClass{mod3(v)};
}

}  // namespace detail

RibbonGraph build_flower(const FlowerSpec& spec) {
    spec.validate();
    RibbonGraph g;
    g.add_vertex("v");
    const std::vector<PetalSign> petal_signs = spec.signs();
    const int total = static_cast<int>(petal_signs.size());
    for (int i = 0; i < total; ++i)
        g.add_edge("e" + std::to_string(i + 1), petal_signs[static_cast<std::size_t>(i)] ==
                                                    PetalSign::Twisted);

    std::vector<int> word;
    if (spec.layout == Layout::Merged) {
        word = detail::chain_word(total);
    } else {
        int base = 0;
        for (const Sector& s : spec.sectors) {
            for (int id : detail::chain_word(s.count)) word.push_back(base + id);
            base += s.count;
        }
    }

    std::vector<int> seen(static_cast<std::size_t>(total), 0);
    for (int id : word) {
        const int occurrence = seen[static_cast<std::size_t>(id)]++;
        g.vertices[0].rotation.push_back(EndRef{id, occurrence == 0 ? EndTag::A : EndTag::B});
    }
    return g;
}

FaceClass face_class(std::span<const PetalSign> signs) {
    int x = 1;
    for (PetalSign s : signs) x = mod3(x * static_cast<int>(s) + 1);
    return FaceClass{x};
}

FaceClass face_class_suffix_sum(std::span<const PetalSign> signs) {
    long long acc = 1;
    int untwisted = 0;
    for (std::size_t l = signs.size(); l-- > 0;) {
        if (signs[l] == PetalSign::Untwisted) ++untwisted;
        acc += sign_pow(untwisted);
    }
    return FaceClass{mod3(acc)};
}

int face_count(std::span<const PetalSign> signs) {
    return face_class(signs).face_count();
}

FaceClass periodic_face_class(const PeriodicSpec& spec) {
    spec.validate();
    const long long l = spec.q / 2;
    const long long k1 = spec.k1, k2 = spec.k2;
    const bool k1_even = spec.k1 % 2 == 0;
    long long v;
    if (spec.q == 1) {
        // Pure single-sign flower: (1 + (-1)^N)/2 untwisted, 1 + N twisted.
        v = spec.start == PetalSign::Twisted ? 1 + k1 : (1 + sign_pow(k1)) / 2;
    } else if (spec.q % 2 == 0) {
        if (spec.start == PetalSign::Untwisted)
            v = k1_even ? 1 + l * k2 : 1 + (sign_pow(l) - 1) / 2 * (1 + k2);
        else
            v = k1_even ? 1 + l * k2 : 1 + (sign_pow(l) - 1) / 2 * (1 - k2);
    } else {
        if (spec.start == PetalSign::Untwisted)
            v = k1_even ? 1 + l * k2 : (1 - sign_pow(l)) / 2 * (1 - k2);
        else
            v = k1_even ? 1 + (l + 1) * k2 : (1 + sign_pow(l)) / 2 * (1 + k2);
    }
    return FaceClass{mod3(v)};
}

Poly3 closed_form_untwisted(int n_petals) {
    return closed_form(n_petals, IndicatorKind::Parity);
}

Poly3 closed_form_twisted(int n_petals) {
    return closed_form(n_petals, IndicatorKind::Mod3);
}

Count placement_count(int n_total, int n_kept, int packets) {
    return compositions::binomial(n_total - n_kept + 1, packets);
}

std::vector<Poly3> recurrence_family(FlowerFamily family, int n_max) {
    if (n_max < 0) throw std::invalid_argument("recurrence_family: n_max must be >= 0");
    const IndicatorKind kind =
        family == FlowerFamily::Untwisted ? IndicatorKind::Parity : IndicatorKind::Mod3;
    std::vector<Poly3> r;
    r.push_back(Poly3::constant(1, Basis::X));
    for (int N = 1; N <= n_max; ++N) {
        Poly3 acc(Basis::X);
        for (int n = 0; n <= N - 1; ++n) {
            const Poly3 weight =
                Poly3::monomial(1, 0, n, n - compositions::indicator(kind, n), Basis::X);
            acc += weight * r[static_cast<std::size_t>(N - n - 1)];
        }
        acc.add_term(0, N, N - compositions::indicator(kind, N), 1);
        r.push_back(std::move(acc));
    }
    return r;
}

Poly3 terminal_form_value(const TerminalProfile& profile) {
    if (profile.bridges < 0 || profile.untwisted_loops < 0 || profile.twisted_loops < 0)
        throw std::invalid_argument("terminal profile: counts must be >= 0");
    Poly3 result = Poly3::constant(1, Basis::X);
    result *= Poly3::monomial(1, 1, 0, 0, Basis::X).pow(profile.bridges);

    Poly3 untw(Basis::X);
    untw.add_term(0, 0, 0, 1);
    untw.add_term(0, 1, 0, 1);
    result *= untw.pow(profile.untwisted_loops);

    Poly3 tw(Basis::X);
    tw.add_term(0, 0, 0, 1);
    tw.add_term(0, 1, 1, 1);
    result *= tw.pow(profile.twisted_loops);

    for (int n : profile.untwisted_flowers) {
        if (n < 1) throw std::invalid_argument("terminal profile: flower sizes must be >= 1");
        result *= closed_form_untwisted(n);
    }
    for (int n : profile.twisted_flowers) {
        if (n < 1) throw std::invalid_argument("terminal profile: flower sizes must be >= 1");
        result *= closed_form_twisted(n);
    }
    return result;
}

ParsedSpec parse_flower_spec(const std::string& text) {
    std::string s = text;
    // trim
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    if (s.empty()) throw ParseError("empty flower spec");

    static const std::regex pure_re(R"(^([ut])(\d+)$)");
    static const std::regex sector_re(R"(^(\d+)([+-])$)");
    static const std::regex kv_re(R"(^(k1|k2|q|start)=(\S+)$)");

    std::smatch m;
    if (std::regex_match(s, m, pure_re)) {
        FlowerSpec spec;
        const int n = std::stoi(m[2]);
        if (n < 1) throw ParseError("flower spec: petal count must be >= 1 in '" + s + "'");
        spec.sectors.push_back(
            Sector{n, m[1] == "t" ? PetalSign::Twisted : PetalSign::Untwisted});
        return spec;
    }

    if (s.rfind("periodic", 0) == 0) {
        PeriodicSpec spec;
        bool got_k1 = false, got_k2 = false, got_q = false, got_start = false;
        std::istringstream is(s.substr(8));
        std::string tok;
        while (is >> tok) {
            if (!std::regex_match(tok, m, kv_re))
                throw ParseError("periodic spec: bad token '" + tok + "'");
            const std::string key = m[1], value = m[2];
            if (key == "start") {
                if (value == "+")
                    spec.start = PetalSign::Twisted;
                else if (value == "-")
                    spec.start = PetalSign::Untwisted;
                else
                    throw ParseError("periodic spec: start must be + or -, got '" + value + "'");
                got_start = true;
                continue;
            }
            int parsed;
            try {
                parsed = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("periodic spec: bad integer in token '" + tok + "'");
            }
            if (key == "k1") spec.k1 = parsed, got_k1 = true;
            if (key == "k2") spec.k2 = parsed, got_k2 = true;
            if (key == "q") spec.q = parsed, got_q = true;
        }
        if (!got_k1 || !got_k2 || !got_q || !got_start)
            throw ParseError("periodic spec: need k1=, k2=, q= and start=");
        try {
            spec.validate();
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what());
        }
        return spec;
    }

    FlowerSpec spec;
    std::string sector_part = s;
    if (auto semi = s.find(';'); semi != std::string::npos) {
        const std::string layout = s.substr(semi + 1);
        sector_part = s.substr(0, semi);
        if (layout == "merged")
            spec.layout = Layout::Merged;
        else if (layout == "separate")
            spec.layout = Layout::Separate;
        else
            throw ParseError("flower spec: layout must be merged or separate, got '" + layout +
                             "'");
    }
    std::istringstream is(sector_part);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!std::regex_match(tok, m, sector_re))
            throw ParseError("flower spec: bad sector token '" + tok + "'");
        const int n = std::stoi(m[1]);
        if (n < 1) throw ParseError("flower spec: sector size must be >= 1 in '" + tok + "'");
        spec.sectors.push_back(
            Sector{n, m[2] == "+" ? PetalSign::Twisted : PetalSign::Untwisted});
    }
    if (spec.sectors.empty()) throw ParseError("flower spec: no sectors in '" + s + "'");
    return spec;
}

}  // namespace brg::flowers
