"""Construction and verification toolkit for the 2^s-ary Tang-Ding cyclic
codes: digit-parity defining sets, the derived dual / complement / even-like
/ extended codes, progression-based distance bounds, and desk-scale distance
oracles."""

__version__ = "0.1.0"
