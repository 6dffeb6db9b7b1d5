#pragma once

#include "plyalg/ply.hpp"

#include <string>
#include <string_view>

namespace testutil {

using namespace plyalg;

inline const Alphabet& abc()
{
    static const Alphabet a = Alphabet::standard(3);
    return a;
}

// Value in the natural basis of an expression over a, b, c.
inline LBhat alg(std::string_view text, const Alphabet& a = abc()) { return eval_algebra(parse(text, a)); }

inline LT tval(std::string_view text, const Alphabet& a = abc()) { return to_T(alg(text, a)); }

inline LShat sval(std::string_view text, const Alphabet& a = abc()) { return to_shat(alg(text, a)); }

// The single basis element denoted by text (which must be one).
inline Bhat bhat(std::string_view text, const Alphabet& a = abc())
{
    LBhat v = alg(text, a);
    return v.size() == 1 && v.begin()->second == 1 ? v.begin()->first : Bhat{};
}

inline TElem telem(std::string_view text, const Alphabet& a = abc())
{
    LT v = tval(text, a);
    return v.size() == 1 && v.begin()->second == 1 ? v.begin()->first : TElem{};
}

inline Shat shat(std::string_view text, const Alphabet& a = abc())
{
    LShat v = sval(text, a);
    return v.size() == 1 && v.begin()->second == 1 ? v.begin()->first : Shat{};
}

inline std::string nf(std::string_view text, const Alphabet& a = abc())
{
    return print(normal_form(tval(text, a)), a);
}

} // namespace testutil
