"""Exact plethystic Murnaghan-Nakayama rules for Schur Q-functions and Hall-Littlewood functions."""
from .exact import ONE, T, ZERO, TPoly, TRational
from .hall_littlewood import (
    expand_in_h,
    hl_function,
    pleth_expand_hl,
    pleth_ps_qkt,
    q_t,
    straighten,
)
from .oracles import oracle_hl, oracle_q
from .partitions import enumerate_partitions, residues, weak_compositions
from .pfaffian import AntisymMatrix, pfaffian
from .schurq import expand_in_q_basis, normalize_q_word, q_one_row, schur_q
from .spin_mn import (
    StripCertificate,
    coeff_pfaffian,
    is_strip,
    pleth_expand_comb,
    pleth_expand_pf,
    strip_certificate,
)
from .symfunc import PSeries, inner_spin, inner_t, pleth_ps, tpleth_ps
from .verify import SweepConfig, VerifyReport, run_suite

__version__ = "0.1.0"
