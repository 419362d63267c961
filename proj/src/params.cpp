#include "okmat/params.hpp"

#include <stdexcept>

namespace okmat {

ParamSet::ParamSet(GaussianRational q_, int eps_, std::vector<GaussianRational> s_,
                   const GaussianRational* norm_s_override)
    : q(std::move(q_)), eps(eps_), s_list(std::move(s_)) {
    if (eps != 1 && eps != -1) throw std::domain_error("ParamSet: eps must be +1 or -1");
    if (!q.is_real()) throw std::domain_error("ParamSet: q must be rational");
    if (q.is_zero() || q == GaussianRational(1) || q == GaussianRational(-1))
        throw std::domain_error("ParamSet: q must avoid {0, 1, -1}");
    if (s_list.empty()) throw std::domain_error("ParamSet: empty site list");
    for (const auto& s : s_list)
        if (s.is_zero()) throw std::domain_error("ParamSet: site parameter must be nonzero");
    p = -i_eps() / q;
    norm_s = norm_s_override ? *norm_s_override : s_list.front();
}

ParamSet ParamSet::homogeneous(const GaussianRational& q, int eps, const GaussianRational& s, int n) {
    return ParamSet(q, eps, std::vector<GaussianRational>(static_cast<size_t>(n), s));
}

bool ParamSet::is_homogeneous() const {
    for (const auto& s : s_list)
        if (!(s == s_list.front())) return false;
    return true;
}

ParamSet ParamSet::with_sites(std::vector<GaussianRational> s_) const {
    ParamSet out = *this;
    out.s_list = std::move(s_);
    for (const auto& s : out.s_list)
        if (s.is_zero()) throw std::domain_error("ParamSet: site parameter must be nonzero");
    return out;
}

} // namespace okmat
