"""Independent reference values frozen into the C++ test suites.

Run with `python3 tests/oracles/oracles.py`; none of this code shares a path
with the C++ implementation.
"""
import numpy as np
from scipy import integrate, special

# Cosine-transform multipliers on the circle: (1/2pi) int |cos t| cos(k t) dt.
def circ_mult(k):
    f = lambda t: abs(np.cos(t)) * np.cos(k * t)
    pts = [np.pi / 2, 3 * np.pi / 2]
    return integrate.quad(f, 0, 2 * np.pi, points=pts, limit=400, epsabs=1e-14)[0] / (2 * np.pi)

for k in (0, 2, 4, 6):
    print(f"circle multiplier k={k}: {circ_mult(k):.17g}")

# Sphere multipliers: (1/2) int_{-1}^{1} |t| P_l(t) dt.
def sph_mult(l):
    f = lambda t: abs(t) * special.eval_legendre(l, t)
    return 0.5 * integrate.quad(f, -1, 1, points=[0], epsabs=1e-15)[0]

for l in (0, 2, 4, 6):
    print(f"sphere multiplier l={l}: {sph_mult(l):.17g}")

# Perimeter of the ellipse with semi-axes 2, 1 (= 2 V(E, B) in the plane).
a, b = 2.0, 1.0
per = integrate.quad(lambda t: np.hypot(a * np.sin(t), b * np.cos(t)), 0, 2 * np.pi, epsabs=1e-14)[0]
print(f"ellipse(2,1) perimeter: {per:.17g}")

# Mixed area V(E, B) for E = ellipse semi-axes (2,1), B unit disk = per/2.
print(f"V(E(2,1), B): {per/2:.17g}")

# Mixed area of two ellipses via (1/2) int h_A (h_B + h_B'') dt, brute-force
# with finite differences on a fine grid (independent of the implementation's
# polarization route).
def h(Q, t):
    u = np.array([np.cos(t), np.sin(t)])
    return np.sqrt(u @ Q @ u)

def mixed_area(QA, QB, N=20000):
    t = np.linspace(0, 2 * np.pi, N, endpoint=False)
    dt = t[1] - t[0]
    hA = np.array([h(QA, s) for s in t])
    hB = np.array([h(QB, s) for s in t])
    hBpp = (np.roll(hB, -1) - 2 * hB + np.roll(hB, 1)) / dt**2
    return 0.5 * np.sum(hA * (hB + hBpp)) * dt

QA = np.diag([4.0, 1.0]); QB = np.array([[2.0, 0.5], [0.5, 1.0]])
print(f"V(diag(4,1), [[2,.5],[.5,1]]): {mixed_area(QA, QB):.12g}")

# Projection of ellipsoid diag(4,9,1) onto e1,e2: pi*2*3.
print(f"proj diag(4,9,1): {6*np.pi:.17g}")

# Haar-2 rhs for diag(4,1,1), D = span(e1, e2): 2 * area(pi*2*1).
print(f"haar2 rhs: {4*np.pi:.17g}")

# Width-density product, (disk + segment[v=(1,0)]) x disk on the unit square:
# 2 (V(B,B) + V(S,B)) with V(S,B) = 2|v|.
print(f"(disk+seg) x disk: {2*(np.pi + 2):.17g}")

# Omega for n=2, m=(2,2) and unit square: 1/pi^2.
print(f"1/pi^2: {1/np.pi**2:.17g}")

# Brute-force MC check of E|<a,w>| for w uniform on S^1 (= 2/pi).
rng = np.random.default_rng(1)
ang = rng.uniform(0, 2 * np.pi, 2_000_000)
print(f"E|cos| MC: {np.mean(np.abs(np.cos(ang))):.6f} vs {2/np.pi:.6f}")

# Diagonal Crofton check, n=2 on S^2 tangent plane embedded diagonally in
# T(+)T with m=(2,2): Omega(e1,e2) should equal 2/sigma_2 = 1/(2 pi).
w1 = rng.normal(size=(2_000_000, 2)); w1 /= np.linalg.norm(w1, axis=1)[:, None]
w2 = rng.normal(size=(2_000_000, 2)); w2 /= np.linalg.norm(w2, axis=1)[:, None]
# theta_1 = (e1, e1), theta_2 = (e2, e2); A_ij = <theta_ij, w_j>
det = w1[:, 0] * w2[:, 1] - w1[:, 1] * w2[:, 0]
print(f"diagonal Omega MC: {0.25*np.mean(np.abs(det)):.6f} vs {1/(2*np.pi):.6f}")
