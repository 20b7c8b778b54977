"""Independent reference values frozen into the C++ unit tests.

Uses mpmath at 50 digits; shares no code with the library. Run with
`python3 compute_oracles.py` to regenerate the printed constants.
"""
from mpmath import mp, mpf, log10, sqrt, asin, cos, pi, degrees, power

mp.dps = 50


def fspl(d, f=2):
    return 20 * log10(d) + 20 * log10(f) + mpf("32.4")


def link(uav, user, xb, yb):
    dx, dy, dz = (mpf(user[i]) - mpf(uav[i]) for i in range(3))
    d3 = sqrt(dx * dx + dy * dy + dz * dz)
    theta = degrees(asin(abs(dz) / d3))
    h = sqrt(dx * dx + dy * dy)
    ux, uy = mpf(uav[0]), mpf(uav[1])
    if 0 <= ux <= xb and 0 <= uy <= yb:
        return d3, theta, h
    t = mpf(0)
    for a, da, hi in ((ux, dx, xb), (uy, dy, yb)):
        if da != 0:
            t = max(t, min((0 - a) / da, (hi - a) / da))
    return d3, theta, (1 - t) * h


def loss(d3, theta, d2):
    c = cos(theta * pi / 180)
    return fspl(d3) + 14 + 15 * (1 - c) ** 2 + mpf("0.5") * d2


def symmetric_users(xb, yb, zb, nx=4, ny=5, fh=5):
    out = []
    for f in range(int(zb / fh)):
        for i in range(nx):
            for j in range(ny):
                out.append(((mpf(i) + mpf("0.5")) * xb / nx,
                            (mpf(j) + mpf("0.5")) * yb / ny,
                            f * fh + mpf(fh) / 2))
    return out


print("fspl(1,2GHz)      ", mp.nstr(fspl(1), 17))
print("fspl(100,2GHz)    ", mp.nstr(fspl(100), 17))
l40 = loss(40, 0, 10)
print("fspl(40)          ", mp.nstr(fspl(40), 17))
print("loss(40,0,10)     ", mp.nstr(l40, 17))
print("minpower(l40)     ", mp.nstr(mpf("1e-13") * power(10, l40 / 10), 17))

phi = mpf("4.1")
chi = 2 / abs(2 - phi - sqrt(phi * phi - 4 * phi))
print("chi               ", mp.nstr(chi, 17))
print("c1                ", mp.nstr(chi * mpf("2.05"), 17))

uav = ("-24.7967", "25", "100")
d3, th, d2 = link(uav, ("17.5", "45", "197.5"), 20, 50)
print("link d3/theta/d2  ", mp.nstr(d3, 17), mp.nstr(th, 17), mp.nstr(d2, 17))

users = symmetric_users(20, 50, 200)
losses = [loss(*link(uav, u, 20, 50)) for u in users]
total = sum(losses)
print("sym200 total dB   ", mp.nstr(total, 17))
# B = 20 MHz, v = 100 kbit/s, M = 800 -> vM/B = 4; N = 1e-13 W
factor = power(2, mpf(4)) - 1
power_total = sum(factor * mpf("1e-13") * power(10, l / 10) for l in losses)
print("sym200 power W    ", mp.nstr(power_total, 17))
