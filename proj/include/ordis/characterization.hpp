#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordis/enumerate.hpp"
#include "ordis/eval.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

/// Solid interpretations assign T* to no literal.
inline bool is_solid(const Interpretation4& interp) {
    for (TruthValue4 v : interp.values)
        if (v == TruthValue4::Tstar) return false;
    return true;
}

namespace detail {

inline Interpretation4 decode4(const SigmaPtr& sigma, std::uint64_t code) {
    Interpretation4 interp(sigma);
    std::uint64_t c = code;
    for (std::size_t i = sigma->size(); i-- > 0;) {
        interp.values[i] = value_at<TruthValue4>(static_cast<int>(c % 4));
        c /= 4;
    }
    return interp;
}

}  // namespace detail

/// All four-valued models of the program, by enumeration over 4^|sigma|
/// interpretations; scan order as in enumerate_answer_sets (higher values
/// first over the sigma order).
inline std::vector<Interpretation4> four_valued_models(const Program& program,
                                                       const SearchLimits& limits = {}) {
    std::uint64_t cap = limits.candidate_cap ? limits.candidate_cap : kDefaultFourValuedCap;
    std::uint64_t count = detail::candidate_count(4, program.sigma->size(), cap);
    auto codes = detail::filter_codes_desc(count, limits.threads, [&](std::uint64_t code) {
        return is_model(detail::decode4(program.sigma, code), program);
    });
    std::vector<Interpretation4> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(detail::decode4(program.sigma, code));
    return out;
}

/// Reduct-free characterization of the answer sets: among all four-valued
/// models keep the consistent ones that no other model lies strictly below in
/// the minimality order, then keep the solid ones and read them back as
/// three-valued. Minimality is checked against every four-valued model, solid
/// or not.
inline std::vector<Interpretation3> answer_sets_oracle(const Program& program,
                                                       const SearchLimits& limits = {}) {
    std::vector<Interpretation4> models = four_valued_models(program, limits);
    std::vector<Interpretation3> out;
    for (const Interpretation4& m : models) {
        if (!is_solid(m) || !is_consistent(m)) continue;
        bool minimal = true;
        // Scanning from the low end of the model list kills non-minimal
        // candidates early (small models defeat most interpretations).
        for (auto it = models.rbegin(); it != models.rend(); ++it) {
            if (interp_prec(*it, m)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(narrow(m));
    }
    return out;
}

}  // namespace ordis
