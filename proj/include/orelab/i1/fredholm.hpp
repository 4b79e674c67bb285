#pragma once

#include <optional>
#include <string>

#include "orelab/i1/element.hpp"

namespace orelab::i1 {

/// Kernel and cokernel of a as a linear map of Q[x]. Empty optionals mean
/// "infinite" (dims) or "undefined" (index); this happens exactly on F.
struct FredholmData {
    std::optional<long> kernel_dim, cokernel_dim, index;
    long window = 0;  // kernel vectors are supported on v_0..v_window

    bool bijective() const { return kernel_dim == 0 && cokernel_dim == 0; }
};

std::string to_string(const FredholmData& f);

/// Highest degree whose component has a nonzero polynomial part; nullopt on F.
std::optional<int> top_degree(const I1Element& a);
/// Kernel support bound: beyond it the top component's diagonal entries
/// are nonzero and no e(i,j) column occurs.
long kernel_bound(const I1Element& a);
/// Nullity of a restricted to span{v_0..v_cols}.
long kernel_dim_at(const I1Element& a, long cols);
/// dim of {y in Q^N | y a = 0} (sequences annihilating the image), which
/// is dim Q[x] / a Q[x].
long cokernel_dim_transpose(const I1Element& a);
/// (t+1) - dim(image of a meeting span{v_0..v_t}); equals the cokernel
/// for t large.
long cokernel_dim_by_image(const I1Element& a, long t);

FredholmData fredholm(const I1Element& a);

enum class LargestSet { s0, sl0, sr0 };
std::optional<LargestSet> parse_largest_set(std::string_view s);

/// S_r0: bijective on Q[x]; S_l0: a* in S_r0; S_0: in K[H]+F and bijective.
bool s_membership(const I1Element& a, LargestSet which);
/// Independent check for K[H]+F elements: the square window covering all
/// e(i,j) and the Cauchy root bound of the diagonal polynomial is invertible.
bool window_invertible(const I1Element& a);

struct MFactor {
    I1Element v;  // in D_1 = K[H] + sum K e(i,i), bijective
    I1Element w;  // in 1 + F, invertible
};
/// u = v w for u in S_0. Throws PreconditionError otherwise.
MFactor m_factor(const I1Element& u);

}  // namespace orelab::i1
