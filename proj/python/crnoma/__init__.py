# Copyright 2026 The crnoma Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
"""Joint antenna selection for MIMO cognitive-radio NOMA."""

from ._crnoma import (
    AntennaTriple,
    ConfigError,
    OutageEstimate,
    Scheme,
    SelectionOutcome,
    SystemConfig,
    achievable_gamma_s,
    cdf_beta,
    cdf_row_max_g,
    cdf_row_max_h,
    db_to_linear,
    diversity_order,
    es_as,
    evaluate_triple,
    linear_to_db,
    load_scenario,
    loglog_slope,
    maxmin_as,
    optimal_b,
    p_outage_asymptotic,
    p_outage_high_snr,
    p_outage_o1,
    parse_scenario,
    q1_term,
    q2_term,
    row_maxima,
    run_plan,
    sample_channels,
    sj_as,
    transmit_snr,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
