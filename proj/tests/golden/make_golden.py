"""Writes the byte-level reference files for the io tests with Python's struct module."""

import struct
from pathlib import Path

here = Path(__file__).parent

nx, ny = 3, 2
x0, y0, h = -1.5, 0.25, 0.125
values = [0.5 * i - 1.0 for i in range(nx * ny)]
values[4] = 1.0 / 3.0
with open(here / "small.fld", "wb") as f:
    f.write(b"IFLD0001")
    f.write(struct.pack("<IIddd", nx, ny, x0, y0, h))
    f.write(struct.pack("<%dd" % len(values), *values))

with open(here / "small.u8", "wb") as f:
    f.write(bytes([0, 1, 2, 2, 1, 0]))

header = "h,N,M,Nx,Ny,R,b,err_linf,err_l2_rel,gmres_iters_annular,bie_iters,t_setup_s,t_solve_s"
rows = [
    (0.05, 166, 5, 56, 56, 0.134948979592201, 6, 3.3824e-05, 1.0 / 7.0, 12, 0, 0.25, 0.125),
    (0.025, 330, 9, 104, 104, 0.134948979592201, 11, 2.08e-07, 1e-300, 14, 0, 1.5, 0.0),
]
g = lambda v: "%.17g" % v if isinstance(v, float) else str(v)
with open(here / "results.csv", "w") as f:
    f.write(header + "\n")
    for r in rows:
        f.write(",".join(g(v) for v in r) + "\n")
