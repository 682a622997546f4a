"""Regenerates oracles.inc: independent high-precision reference values for the unit tests.

Run from this directory: python3 generate.py > oracles.inc
"""
import mpmath as mp

mp.mp.dps = 40

A, D = mp.mpf("0.15"), 5


def star(t):
    w = 1 + A * mp.cos(D * t)
    return mp.matrix([w * mp.cos(t), w * mp.sin(t)])


def star_d(t):
    w, ws = 1 + A * mp.cos(D * t), -A * D * mp.sin(D * t)
    return mp.matrix([ws * mp.cos(t) - w * mp.sin(t), ws * mp.sin(t) + w * mp.cos(t)])


def curvature_fd(t, n=10**6):
    # fourth-order central differences of the analytic parametrization at step 2pi/n
    e = 2 * mp.pi / n
    p = [star(t + k * e) for k in (-2, -1, 1, 2)]
    c = star(t)
    d1 = (p[0] - 8 * p[1] + 8 * p[2] - p[3]) / (12 * e)
    d2 = (-p[0] + 16 * p[1] - 30 * c + 16 * p[2] - p[3]) / (12 * e**2)
    return (d1[0] * d2[1] - d1[1] * d2[0]) / mp.sqrt(d1[0] ** 2 + d1[1] ** 2) ** 3



def rmax_star():
    # dense sampling, then local refinement of the curvature maximum
    n = 20000
    best = max(range(n), key=lambda k: curvature_fd(2 * mp.pi * k / n, 10**5))
    t0 = 2 * mp.pi * best / n
    tm = mp.findroot(lambda s: mp.diff(lambda u: curvature_fd(u, 10**6), s), t0)
    return 1 / curvature_fd(tm)


def layer_values(N, js, sigma, kind):
    out = []
    for j in js:
        s0 = 2 * mp.pi * j / N
        x = star(s0)

        def f(t):
            y, ys = star(t), star_d(t)
            r = x - y
            r2 = r[0] ** 2 + r[1] ** 2
            sp = mp.sqrt(ys[0] ** 2 + ys[1] ** 2)
            if kind == "S":
                return -mp.log(r2) / (4 * mp.pi) * sigma(t) * sp
            ny = mp.matrix([ys[1] / sp, -ys[0] / sp])
            return (r[0] * ny[0] + r[1] * ny[1]) / (2 * mp.pi * r2) * sigma(t) * sp

        if kind == "S":
            # log singularity at the endpoints
            out.append(mp.quad(f, [s0, s0 + mp.pi / 4, s0 + mp.pi, s0 + 7 * mp.pi / 4, s0 + 2 * mp.pi]))
        else:
            # smooth kernel; keep s0 away from the endpoints where (x-y).n / r^2 cancels
            out.append(mp.quad(f, [s0 - mp.pi, s0 - mp.mpf("0.7"), s0 + mp.mpf("0.5"), s0 + mp.pi]))
    return out


def close_values(targets, sigma, gamma):
    # (S sigma - D gamma)(x) by adaptive quadrature, with the curve split near the closest point
    out = []
    for s0, d in targets:
        y0, ys0 = star(s0), star_d(s0)
        sp0 = mp.sqrt(ys0[0] ** 2 + ys0[1] ** 2)
        x = y0 + d * mp.matrix([ys0[1] / sp0, -ys0[0] / sp0])

        def f(t):
            y, ys = star(t), star_d(t)
            r = x - y
            r2 = r[0] ** 2 + r[1] ** 2
            sp = mp.sqrt(ys[0] ** 2 + ys[1] ** 2)
            ny = mp.matrix([ys[1] / sp, -ys[0] / sp])
            s = -mp.log(r2) / (4 * mp.pi) * sigma(t)
            dl = (r[0] * ny[0] + r[1] * ny[1]) / (2 * mp.pi * r2) * gamma(t)
            return (s - dl) * sp

        w = [mp.mpf(10) ** (-k) for k in range(1, 7)]
        pts = sorted(set([s0 - mp.pi] + [s0 - v for v in w] + [s0] + [s0 + v for v in w] + [s0 + mp.pi]))
        out.append((x, mp.quad(f, pts)))
    return out


def emit(name, vals):
    print(f"inline constexpr double {name}[] = {{")
    for v in vals:
        print(f"    {mp.nstr(v, 20, min_fixed=-1, max_fixed=-1)},")
    print("};")


print("// Generated by generate.py; do not edit.")
print("#pragma once")
print("namespace oracle {")
kt = [mp.mpf(0), mp.mpf("0.3"), mp.mpf("1.1"), mp.pi / 5]
emit("kStarCurvatureS", kt)
emit("kStarCurvature", [curvature_fd(t) for t in kt])
print(f"inline constexpr double kStarRmax = {mp.nstr(rmax_star(), 20)};")

# 100 radii, log-uniform on [1e-3, 60] from a fixed LCG
radii, state = [], 12345
for _ in range(100):
    state = (1103515245 * state + 12345) % 2**31
    radii.append(mp.mpf("1e-3") * mp.power(60000, mp.mpf(state) / 2**31))
emit("kBesselZ", radii)
emit("kBesselK0", [mp.besselk(0, z) for z in radii])
emit("kBesselK1", [mp.besselk(1, z) for z in radii])

js = [0, 20, 51, 97]
emit("kLayerNodes", js)
sig = lambda t: mp.exp(mp.cos(t))
emit("kStarSingleExpCos", layer_values(128, js, sig, "S"))
emit("kStarDoubleExpCos", layer_values(128, js, sig, "D"))

tg = [(mp.mpf("0.3"), mp.mpf("-0.001")), (mp.mpf("2.0"), mp.mpf("-0.004")), (mp.mpf("0.3"), mp.mpf("0.001")),
      (mp.mpf("4.4"), mp.mpf("0.002"))]
cv = close_values(tg, sig, lambda t: mp.sin(2 * t))
emit("kCloseX", [c[0][0] for c in cv])
emit("kCloseY", [c[0][1] for c in cv])
emit("kCloseValue", [c[1] for c in cv])
print("}  // namespace oracle")
