"""Regenerates tests/support/frozen_values.hpp.

Reference numbers for the C++ tests, computed with numpy/scipy along an
independent route:
  * drift matrices come from the complex right-hand side of the fluctuation
    equations applied to quadrature basis vectors (no closed-form map),
  * steady states use scipy's Bartels-Stewart Lyapunov solver,
  * time evolution uses V(t) = Vss + e^{At} (V0 - Vss) e^{A^T t}.

Run: python3 tests/support/generate_oracles.py > tests/support/frozen_values.hpp
"""

import numpy as np
import scipy.linalg as sl

TP = 2 * np.pi
HBAR = 1.054571817e-34
KB = 1.380649e-23


def cooling():
    wm = TP * 200e3
    return dict(wm=wm, gm=wm / 1e7, ni=1e5, k=TP * 1e6, Dc=wm, G=TP * 200e3, g=TP * 100e3,
                N=1e8, ga=TP * 3e6, gc=TP * 1e3, Om=TP * 300e6, d=wm, D=None)


def mapping():
    p = cooling()
    p.update(Om=TP * 100e6, G=TP * 500e3)
    return p


def entanglement():
    p = cooling()
    p.update(N=1e4, Om=TP * 1.2e6, Dc=-12 * p['k'], G=TP * 1e6, d=-p['wm'])
    return p


def one_photon(p):
    return p['d'] if p['D'] is None else p['D']


def rates(p):
    gN = p['g'] * np.sqrt(p['N'])
    C = gN ** 2 / (p['k'] * p['ga'])
    GO = p['G'] ** 2 / p['k']
    GE = p['Om'] ** 2 / p['ga']
    gO, gE = GO / (1 + C), GE / (1 + C)
    ke = p['gc'] + p['k'] * p['Om'] ** 2 / gN ** 2
    gfar = p['Om'] * gN * p['G'] / np.sqrt(gN ** 4 + p['ga'] ** 2 * p['Dc'] ** 2)
    return dict(C=C, Gamma_O=GO, Gamma_E=GE, gamma_O=gO, gamma_E=gE, kappa_eit=ke,
                g_eff=np.sqrt(C * gE * gO), g_far=gfar)


# Fluctuation equations, complex amplitudes o = (c2, c3, a, b).
def rhs_full(p, o):
    c2, c3, a, b = o
    gN = p['g'] * np.sqrt(p['N'])
    return np.array([
        -(p['gc'] + 1j * p['d']) * c2 + 1j * p['Om'] * c3,
        -(p['ga'] + 1j * one_photon(p)) * c3 + 1j * gN * a + 1j * p['Om'] * c2,
        -(p['k'] + 1j * p['Dc']) * a + 1j * gN * c3 + 1j * p['G'] * (b + np.conj(b)),
        -(p['gm'] + 1j * p['wm']) * b + p['gm'] * np.conj(b) + 1j * p['G'] * (a + np.conj(a)),
    ])


def rhs_bare(p, o):
    a, b = o
    return np.array([
        -(p['k'] + 1j * p['Dc']) * a + 1j * p['G'] * (b + np.conj(b)),
        -(p['gm'] + 1j * p['wm']) * b + p['gm'] * np.conj(b) + 1j * p['G'] * (a + np.conj(a)),
    ])


def rhs_rwa(p, o, stokes=False):
    c, b = o
    r = rates(p)
    g = r['g_eff']
    if stokes:
        return np.array([-(p['gc'] + r['gamma_E']) * c - 1j * g * np.conj(b),
                         -(p['gm'] + r['gamma_O']) * b - 1j * g * np.conj(c)])
    return np.array([-(p['gc'] + r['gamma_E']) * c - 1j * g * b,
                     -(p['gm'] + r['gamma_O']) * b - 1j * g * c])


def drift(rhs, n):
    """Quadrature drift by linearity: column j = image of the j-th basis vector."""
    A = np.zeros((2 * n, 2 * n))
    for j in range(2 * n):
        xi = np.zeros(2 * n)
        xi[j] = 1.0
        o = (xi[0::2] + 1j * xi[1::2]) / np.sqrt(2)
        f = rhs(o)
        A[0::2, j] = np.sqrt(2) * f.real
        A[1::2, j] = np.sqrt(2) * f.imag
    return A


def diffusion(pairs):
    """pairs: (anti-normal, normal) noise strengths per mode."""
    return np.diag(np.repeat([0.5 * (an + nn) for an, nn in pairs], 2))


def full_model(p):
    A = drift(lambda o: rhs_full(p, o), 4)
    D = diffusion([(2 * p['gc'], 0), (2 * p['ga'], 0), (2 * p['k'], 0),
                   (2 * p['gm'] * (p['ni'] + 1), 2 * p['gm'] * p['ni'])])
    return A, D


def bare_model(p):
    A = drift(lambda o: rhs_bare(p, o), 2)
    D = diffusion([(2 * p['k'], 0), (2 * p['gm'] * (p['ni'] + 1), 2 * p['gm'] * p['ni'])])
    return A, D


def rwa_model(p, stokes=False):
    r = rates(p)
    A = drift(lambda o: rhs_rwa(p, o, stokes), 2)
    D = diffusion([(2 * (r['gamma_E'] + p['gc']), 0),
                   (2 * (r['gamma_O'] + p['gm'] * (p['ni'] + 1)), 2 * p['gm'] * p['ni'])])
    return A, D


def steady(A, D):
    assert max(np.linalg.eigvals(A).real) < 0
    return sl.solve_continuous_lyapunov(A, -D)


def stable(A):
    return max(np.linalg.eigvals(A).real) < 0


def occ(V, i):
    return (V[2 * i, 2 * i] + V[2 * i + 1, 2 * i + 1] - 1) / 2


def log_neg(V, i, j):
    idx = [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]
    W = V[np.ix_(idx, idx)]
    a, b, c = W[:2, :2], W[2:, 2:], W[:2, 2:]
    S = np.linalg.det(a) + np.linalg.det(b) - 2 * np.linalg.det(c)
    nu = np.sqrt((S - np.sqrt(S * S - 4 * np.linalg.det(W))) / 2)
    return max(0.0, -np.log(2 * nu))


def fidelity(V1, V2):
    # zero means; Uhlmann fidelity of single-mode Gaussians, vacuum variance 1/2
    delta = np.linalg.det(V1 + V2)
    lam = max(0.0, 4 * (np.linalg.det(V1) - 0.25) * (np.linalg.det(V2) - 0.25))
    return 1.0 / (np.sqrt(delta + lam) - np.sqrt(lam))


def chi(p, w):
    gN = p['g'] * np.sqrt(p['N'])
    return 1j * gN ** 2 / (p['ga'] + 1j * (one_photon(p) - w) + p['Om'] ** 2 / (p['gc'] + 1j * (p['d'] - w)))


def halfwidth(p):
    w = np.linspace(p['d'] - 5 * p['k'], p['d'] + 5 * p['k'], 2001)
    T = np.abs(p['k'] / (p['k'] + 1j * (p['Dc'] - w) - 1j * chi(p, w))) ** 2
    i = int(np.argmax(T))
    h = T[i] / 2
    j = i
    while T[j] > h:
        j += 1
    right = w[j - 1] + (h - T[j - 1]) * (w[j] - w[j - 1]) / (T[j] - T[j - 1])
    j = i
    while T[j] > h:
        j -= 1
    left = w[j] + (h - T[j]) * (w[j + 1] - w[j]) / (T[j + 1] - T[j])
    return 0.5 * (right - left)


def main():
    out = {}
    pc = cooling()
    for k, v in rates(pc).items():
        out[f'cooling_{k}'] = v
    for k, v in rates(mapping()).items():
        out[f'mapping_{k}'] = v
    for k, v in rates(entanglement()).items():
        out[f'entanglement_{k}'] = v

    out['thermal_1K'] = 1 / np.expm1(HBAR * pc['wm'] / (KB * 1.0))
    out['thermal_20K'] = 1 / np.expm1(HBAR * pc['wm'] / (KB * 20.0))

    c = chi(pc, 0.0)
    out['chi_cooling_re'], out['chi_cooling_im'] = c.real, c.imag
    out['halfwidth_cooling'] = halfwidth(pc)

    out['nf_full_cooling'] = occ(steady(*full_model(pc)), 3)
    for G in (20e3, 50e3, 100e3):
        q = dict(pc, G=TP * G)
        out[f'nf_full_G{int(G / 1e3)}k'] = occ(steady(*full_model(q)), 3)
    for G in (20e3, 50e3, 100e3, 200e3):
        q = dict(pc, G=TP * G)
        out[f'nf_rwa_G{int(G / 1e3)}k'] = occ(steady(*rwa_model(q)), 1)
    for G in (10e3, 50e3, 100e3, 200e3):
        q = dict(pc, G=TP * G, Dc=pc['k'] / 2)
        out[f'nf_bare_G{int(G / 1e3)}k'] = occ(steady(*bare_model(q)), 1)

    # default cooling sweep: delta/omega_m log grid [0.2, 3], 200 points, Delta = delta
    grid = np.geomspace(0.2, 3, 200)
    nf = []
    for x in grid:
        A, D = full_model(dict(pc, d=x * pc['wm']))
        nf.append(occ(steady(A, D), 3) if stable(A) else np.inf)
    i = int(np.argmin(nf))
    out['cool_sweep_argmin_index'] = i
    out['cool_sweep_argmin'] = grid[i]
    out['cool_sweep_min'] = nf[i]
    out['cool_sweep_index_of_one'] = int(np.argmin(np.abs(grid - 1)))

    pe = entanglement()
    grid = np.linspace(-3, -0.2, 200)
    en = []
    for x in grid:
        A, D = full_model(dict(pe, d=x * pe['wm']))
        en.append(log_neg(steady(A, D), 0, 3) if stable(A) else -1.0)
    i = int(np.argmax(en))
    out['ent_sweep_argmax_index'] = i
    out['ent_sweep_argmax'] = grid[i]
    out['ent_sweep_max'] = en[i]
    out['ent_sweep_first_unstable'] = grid[next(k for k in range(200) if en[k] < 0 and k > i)]
    out['ent_sweep_index_of_minus_one'] = int(np.argmin(np.abs(grid + 1)))

    q = dict(pe, d=-1.32 * pe['wm'])
    out['en_132_ni1e5'] = log_neg(steady(*full_model(q)), 0, 3)
    out['en_132_ni20K'] = log_neg(steady(*full_model(dict(q, ni=out['thermal_20K']))), 0, 3)
    grid = np.geomspace(1e3, 1e7, 100)
    zero = next(x for x in grid if log_neg(steady(*full_model(dict(q, ni=x))), 0, 3) == 0.0)
    out['en_132_first_zero'] = zero

    # mapping, reduced beamsplitter model
    pm = mapping()
    A, D = rwa_model(pm)
    Vss = steady(A, D)
    r = np.exp(-2.0)
    V0 = np.diag([r / 2, 1 / (2 * r), 2.5, 2.5])
    geff = rates(pm)['g_eff']
    for tag, t in (('half', np.pi / (2 * geff)), ('full', np.pi / geff)):
        E = sl.expm(A * t)
        V = Vss + E @ (V0 - Vss) @ E.T
        vb = V[2:, 2:]
        out[f'map_{tag}_fidelity'] = fidelity(vb, V0[:2, :2])
        out[f'map_{tag}_min_variance'] = np.linalg.eigvalsh(vb).min()
        out[f'map_{tag}_n_mirror'] = occ(V, 1)

    print('#pragma once')
    print()
    print('// Generated by tests/support/generate_oracles.py. Do not edit by hand.')
    print('// Rates are angular (rad/s).')
    print()
    print('namespace frozen {')
    print()
    for k, v in out.items():
        if isinstance(v, int):
            print(f'inline constexpr int {k} = {v};')
        else:
            print(f'inline constexpr double {k} = {float(v):.17g};')
    print()
    print('}  // namespace frozen')


if __name__ == '__main__':
    main()
