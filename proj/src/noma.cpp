// Copyright 2026 The crnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "crnoma/noma.hpp"

#include <stdexcept>

namespace crnoma
{

PowerSplit::PowerSplit(double b) : b_(b)
{
    if (!(b >= 0.0 && b < 1.0))
        throw std::invalid_argument("PowerSplit: b must lie in [0, 1)");
}

PowerSplit optimal_b(const LinkState &link, double gamma_p_th)
{
    return PowerSplit(optimal_b_value(link.h, link.g, link.rho, gamma_p_th));
}

double sinr_pu(const LinkState &link, const PowerSplit &split)
{
    return split.a() * link.h / (split.b() * link.h + 1.0 / link.rho);
}

double sinr_su_decode_pu(const LinkState &link, const PowerSplit &split)
{
    return split.a() * link.g / (split.b() * link.g + 1.0 / link.rho);
}

double snr_su(const LinkState &link, const PowerSplit &split)
{
    return split.b() * link.g * link.rho;
}

double achievable_gamma_s(const LinkState &link, double gamma_p_th)
{
    return achievable_gamma_s(link.h, link.g, link.rho, gamma_p_th);
}

} // namespace crnoma
