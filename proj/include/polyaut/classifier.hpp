#ifndef POLYAUT_CLASSIFIER_HPP
#define POLYAUT_CLASSIFIER_HPP

#include <polyaut/poly_map.hpp>
#include <polyaut/polynomial.hpp>
#include <polyaut/semigroup.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polyaut {

using DegreeTriple = std::array<std::int64_t, 3>;

enum class TameStatus { Tame, NotTame, Unknown };

enum class Rule { R1, R2, R3, R4, R5, None };

inline std::string_view to_string(TameStatus s) {
    switch (s) {
    case TameStatus::Tame: return "TAME";
    case TameStatus::NotTame: return "NOT_TAME";
    case TameStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

inline std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::None: return "NONE";
    }
    return "NONE";
}

inline std::string_view citation(Rule r) {
    switch (r) {
    case Rule::R1:
        return "sum-of-multiples construction: if d2 in d1*N or d3 in d1*N + d2*N, "
               "a composition of elementary maps has multidegree (d1,d2,d3)";
    case Rule::R2:
        return "odd coprime theorem: for 3 <= d1 < d2 <= d3 with d1, d2 odd and "
               "gcd(d1,d2) = 1, (d1,d2,d3) is a tame multidegree iff d3 in d1*N + d2*N";
    case Rule::R3:
        return "known result (secondary source): for 3 <= d2 <= d3, (3,d2,d3) is a tame "
               "multidegree iff 3 | d2 or d3 in 3*N + d2*N";
    case Rule::R4:
        return "known result (secondary source): for primes 3 <= d1 < d2 <= d3, "
               "(d1,d2,d3) is a tame multidegree iff d3 in d1*N + d2*N";
    case Rule::R5:
        return "known result (secondary source): (3,4,5), (3,5,7), (4,5,7), (4,5,11) "
               "are not tame multidegrees";
    case Rule::None:
        return "no applicable rule";
    }
    return "no applicable rule";
}

/// d2 = k * d1.
struct MultipleOfFirst {
    std::int64_t k;
};

/// d3 = k1 * d1 + k2 * d2.
struct SemigroupSum {
    std::int64_t k1;
    std::int64_t k2;
};

using WitnessEvidence = std::variant<MultipleOfFirst, SemigroupSum>;

/// A tame map together with the elementary steps (in application order) that build it.
struct Witness {
    PolyMap map;
    std::vector<ElementaryStep> steps;
};

struct Verdict {
    TameStatus status = TameStatus::Unknown;
    Rule rule = Rule::None;
    std::string citation;
    std::optional<Witness> witness;
    DegreeTriple sorted_input{};
};

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

inline DegreeTriple sorted_triple(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    if (d1 < 1 || d2 < 1 || d3 < 1) {
        throw std::invalid_argument("multidegree entries must be >= 1");
    }
    DegreeTriple t{d1, d2, d3};
    std::sort(t.begin(), t.end());
    return t;
}

inline Polynomial xyz_monomial(std::int64_t ex, std::int64_t ey, std::int64_t ez) {
    return Polynomial::monomial(
        {static_cast<unsigned>(ex), static_cast<unsigned>(ey), static_cast<unsigned>(ez)}, 1);
}

} // namespace detail

/// Evidence that the sorted triple is reachable by the sum-of-multiples construction.
inline std::optional<WitnessEvidence> sum_of_multiples_evidence(const DegreeTriple& d) {
    if (d[1] % d[0] == 0) {
        return MultipleOfFirst{d[1] / d[0]};
    }
    if (const auto rep = is_member(d[2], d[0], d[1])) {
        return SemigroupSum{rep->k1, rep->k2};
    }
    return std::nullopt;
}

/*
 * Explicit tame map with multidegree exactly (d1, d2, d3), d1 <= d2 <= d3.
 *
 *   d3 = k1 d1 + k2 d2:  (x + z^d1, y + z^d2, z + (x + z^d1)^k1 (y + z^d2)^k2)
 *                        from x += z^d1, then y += z^d2, then z += x^k1 y^k2
 *   d2 = k d1:           (x + y^d1, y + (x + y^d1)^k, z + x^d3)
 *                        from z += x^d3, then x += y^d1, then y += x^k
 */
inline Witness construct_witness(const DegreeTriple& d, const WitnessEvidence& evidence) {
    if (d[0] < 1 || d[0] > d[1] || d[1] > d[2]) {
        throw std::invalid_argument("witness needs a sorted triple of positive degrees");
    }
    constexpr std::int64_t max_degree = 1 << 20;
    if (d[2] > max_degree) {
        throw std::invalid_argument("degree too large for an explicit witness");
    }
    std::vector<ElementaryStep> steps;
    if (const auto* sum = std::get_if<SemigroupSum>(&evidence)) {
        if (sum->k1 < 0 || sum->k2 < 0 || sum->k1 * d[0] + sum->k2 * d[1] != d[2]) {
            throw std::invalid_argument("evidence does not satisfy d3 = k1*d1 + k2*d2");
        }
        steps = {{0, detail::xyz_monomial(0, 0, d[0])},
                 {1, detail::xyz_monomial(0, 0, d[1])},
                 {2, detail::xyz_monomial(sum->k1, sum->k2, 0)}};
    } else {
        const auto& mult = std::get<MultipleOfFirst>(evidence);
        if (mult.k < 1 || mult.k * d[0] != d[1]) {
            throw std::invalid_argument("evidence does not satisfy d2 = k*d1");
        }
        steps = {{2, detail::xyz_monomial(d[2], 0, 0)},
                 {0, detail::xyz_monomial(0, d[0], 0)},
                 {1, detail::xyz_monomial(mult.k, 0, 0)}};
    }
    PolyMap map = compose_steps(3, steps);
    const Multidegree expected{{d[0], d[1], d[2]}};
    if (multidegree(map) != expected) {
        throw std::logic_error("witness multidegree " + multidegree(map).to_string() +
                               " does not match the requested triple");
    }
    return Witness{std::move(map), std::move(steps)};
}

/// Convenience overload that derives the evidence itself.
inline Witness construct_witness(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    const DegreeTriple d = detail::sorted_triple(d1, d2, d3);
    const auto evidence = sum_of_multiples_evidence(d);
    if (!evidence) {
        throw std::invalid_argument("triple is not reachable by the sum-of-multiples construction");
    }
    return construct_witness(d, *evidence);
}

/*
 * Decides membership of (d1, d2, d3) in the set of tame multidegrees where a
 * known rule applies. The input is sorted first; the first matching rule wins.
 */
inline Verdict classify(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    Verdict v;
    const DegreeTriple d = detail::sorted_triple(d1, d2, d3);
    v.sorted_input = d;
    const auto [a, b, c] = d;
    const auto decide = [&v](TameStatus s, Rule r) {
        v.status = s;
        v.rule = r;
        v.citation = std::string(citation(r));
        return v;
    };

    if (const auto evidence = sum_of_multiples_evidence(d)) {
        v.witness = construct_witness(d, *evidence);
        return decide(TameStatus::Tame, Rule::R1);
    }
    // From here on c is not in a*N + b*N.
    if (a >= 3 && a < b && a % 2 == 1 && b % 2 == 1 && std::gcd(a, b) == 1) {
        return decide(TameStatus::NotTame, Rule::R2);
    }
    if (a == 3 && b % 3 != 0) {
        return decide(TameStatus::NotTame, Rule::R3);
    }
    if (a >= 3 && a < b && detail::is_prime(a) && detail::is_prime(b)) {
        return decide(TameStatus::NotTame, Rule::R4);
    }
    static constexpr DegreeTriple listed[] = {{3, 4, 5}, {3, 5, 7}, {4, 5, 7}, {4, 5, 11}};
    if (std::find(std::begin(listed), std::end(listed), d) != std::end(listed)) {
        return decide(TameStatus::NotTame, Rule::R5);
    }
    return decide(TameStatus::Unknown, Rule::None);
}

} // namespace polyaut

#endif // POLYAUT_CLASSIFIER_HPP
