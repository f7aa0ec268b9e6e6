"""Quasi-degrees and weighted bounds for a few rational triple points."""
from lojax.catalog import load_entry
from lojax.errors import NotQuasiHomogeneous
from lojax.weighted import haraux_bounds

for name in ("RTP-A:1,2,3", "RTP-D:2", "RTP-F:1", "RTP-H3k:2", "RTP-C:1,2", "E7,0"):
    e = load_entry(name)
    try:
        hb = haraux_bounds(e.equations, e.weights, 2)
    except NotQuasiHomogeneous as exc:
        print(f"{name:12s} weights {tuple(map(int, e.weights.weights))}: not quasi-homogeneous ({exc})")
        continue
    print(f"{name:12s} weights {tuple(map(int, e.weights.weights))} min d {hb.min_degree} max d {hb.max_degree}"
          f"  {hb.lower} <= L0 <= {hb.upper}")
