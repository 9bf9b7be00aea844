"""Link-level comparison of antenna selection and spatial modulation for
single-RF-chain MIMO transmitters."""

from .channel import ChannelMatrix, NoiseVector, RngStream, column_gain, draw_channel, draw_noise
from .constellation import Constellation, Scheme, build_constellation, demap, map_bits
from .efficiency import (
    EfficiencyParams,
    gamma_as,
    gamma_as_switching,
    gamma_sm,
    gamma_sm_switching,
    nt_scenario1,
    nt_scenario2,
)
from .harness import (
    BerCurve,
    BerEstimate,
    LinkConfig,
    LinkScheme,
    find_crossover,
    run_point,
    run_sweep,
    run_trial,
    sigma2_from_ebn0,
)
from .pulse import (
    FilterTaps,
    SpectralMask,
    SpectrumCurve,
    default_mask,
    mask_margin,
    psd,
    rate_reduction,
    rrc_taps,
    slepian_taps,
)
from .transceiver import (
    SelectionVector,
    SmCodeword,
    detect_as,
    detect_sm,
    select_antenna,
    sm_encode,
)

__version__ = "0.1.0"
