"""Regenerates catalog.json with an independent dense-matrix evaluation.

Each invariant is computed as psi^T (s_a x s_b x s_c x s_d) psi with explicit
Kronecker products, so the pinned values do not depend on the Rust code.

    python3 generate_catalog.py > catalog.json
"""

import json
from functools import reduce

import numpy as np

SIGMA = [
    np.eye(2),
    np.array([[0, 1], [1, 0]]),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]]),
]
METRIC = [-1, 1, 0, 1]
CONTRACTED = (0, 1, 3)


def form(psi, idx):
    m = reduce(np.kron, (SIGMA[k] for k in idx))
    return psi @ m @ psi


def pair(psi, q1, q2):
    total = 0
    for mu in CONTRACTED:
        for nu in CONTRACTED:
            idx = [2] * 4
            idx[q1], idx[q2] = mu, nu
            total += METRIC[mu] * METRIC[nu] * form(psi, idx) ** 2
    return total


def invariants(psi):
    a = form(psi, (2, 2, 2, 2))
    b1, b2, b3 = pair(psi, 0, 1), pair(psi, 0, 2), pair(psi, 0, 3)
    c = 0
    for mu in CONTRACTED:
        for nu in CONTRACTED:
            for la in CONTRACTED:
                c += (
                    METRIC[mu] * METRIC[nu] * METRIC[la]
                    * form(psi, (mu, nu, 2, 2))
                    * form(psi, (mu, 2, la, 2))
                    * form(psi, (2, nu, la, 2))
                )
    l, m, n = (b2 - b3) / 48, (b3 - b1) / 48, (b1 - b2) / 48
    x = (c + a**3) ** 2 - 128 * a * a * (l * l + m * m + n * n)
    return dict(A=a, B1=b1, B2=b2, B3=b3, C=c, D=c + 5 / 9 * a**3, L=l, M=m, N=n, X=x)


def ket(terms):
    v = np.zeros(16, complex)
    for label, coeff in terms.items():
        v[int(label, 2)] += coeff
    return v


def kron(*vs):
    return reduce(np.kron, [np.asarray(v, complex) for v in vs])


def dicke(k):
    labels = [format(i, "04b") for i in range(16) if bin(i).count("1") == k]
    return ket({s: 1 / np.sqrt(len(labels)) for s in labels})


Z, O = (1, 0), (0, 1)
GHZ = ket({"0000": 1, "1111": 1})

# name -> (family, origin, params, state)
ENTRIES = [
    ("sym-D4", "D_{4}", "closed-form", {}, dicke(0)),
    ("sym-D31", "D_{3,1}", "closed-form", {}, dicke(1)),
    ("sym-D22", "D_{2,2}", "closed-form", {}, dicke(2)),
    ("sym-D211", "D_{2,1,1}", "closed-form", {}, dicke(0) + dicke(2)),
    ("sym-D1111", "D_{1,1,1,1}", "closed-form", {"mu": "0.5"}, GHZ + 0.5 * dicke(2)),
    ("W000_0kPsi_b", "W_{000,0_kPsi} b)", "closed-form", {}, ket({"0000": 1, "1101": 1, "1110": 1})),
    ("W4", "W_{000,W}", "closed-form", {}, ket({"0001": 1, "0010": 1, "0100": 1, "1000": 1})),
    ("GHZ", "W_{000,000}", "closed-form", {}, GHZ),
    ("W000_0kPsi_a", "W_{000,0_kPsi} a)", "closed-form", {}, ket({"0000": 1, "1100": 1, "1111": 1})),
    (
        "W000_GHZ", "W_{000,GHZ}", "closed-form",
        {"varphi": "1,1", "phi": "2,1", "psi": "1,-1"},
        kron(Z, (1, 1), (2, 1), (1, -1)) + ket({"1000": 1, "1111": 1}),
    ),
    (
        "W0kPsi_0jPsi_a", "W_{0_kPsi,0_jPsi} a)", "closed-form",
        {"phi": "1,2", "psi": "1,1"},
        kron(Z, (1, 2), Z, Z) + kron(Z, (1, 2), O, (1, 1)) + ket({"1000": 1, "1101": 1}),
    ),
    (
        "W0kPsi_0jPsi_b", "W_{0_kPsi,0_jPsi} b)", "closed-form",
        {"phi": "1,2", "psi": "1,1"},
        kron(Z, (1, 2), Z, (1, 1)) + kron(Z, (1, 2), O, Z) + ket({"1000": 1, "1101": 1}),
    ),
    (
        "W0kPsi_0kPsi_a", "W_{0_kPsi,0_kPsi} a)", "snapshot",
        {"lambda1": "1", "lambda2": "2"},
        ket({"0000": 1, "1100": 1, "0011": 1, "1111": 2}),
    ),
    (
        "W0kPsi_0kPsi_b", "W_{0_kPsi,0_kPsi} b)", "closed-form",
        {"lambda1": "1", "lambda2": "2"},
        ket({"0000": 1, "1100": 1, "0001": 1, "0010": 1, "1101": 2, "1110": 2}),
    ),
    (
        "W0kPsi_GHZ", "W_{0_kPsi,GHZ}", "snapshot",
        {"varphi": "1,1", "phi": "1,0", "psi": "1,2", "phibar": "0,1", "psibar": "1,-1"},
        kron(Z, (1, 1), (1, 0), (1, 2)) + kron(Z, (1, 1), (0, 1), (1, -1)) + ket({"1000": 1, "1111": 1}),
    ),
    (
        "WGHZ_W", "W_{GHZ,W}", "snapshot",
        {"varphi": "1,0", "phi": "1,1", "psi": "0,1", "varphibar": "1,2", "phibar": "1,-1", "psibar": "2,1"},
        ket({"0001": 1, "0010": 1, "0100": 1}) + kron(O, (1, 0), (1, 1), (0, 1)) + kron(O, (1, 2), (1, -1), (2, 1)),
    ),
    (
        "X4", "X", "snapshot", {},
        ket({"0001": 1, "0010": 1, "0100": 1, "1000": 1, "1111": np.sqrt(2)}),
    ),
    ("cluster", "cluster", "snapshot", {}, ket({"0000": 1, "1100": 1, "0011": 1, "1111": -1})),
    (
        "G_ab00", "G_abcd (b = c = 0)", "closed-form", {"a": "1", "d": "2"},
        ket({"0000": 1.5, "1111": 1.5, "0011": -0.5, "1100": -0.5}),
    ),
    ("D4", "Dicke", "closed-form", {"k": "2"}, dicke(2)),
]


def pinned(z):
    z = complex(z)
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def main():
    out = []
    for name, family, origin, params, psi in ENTRIES:
        inv = invariants(psi)
        out.append(
            {
                "name": name,
                "family": family,
                "origin": origin,
                "params": params,
                "expected": {k: pinned(v) for k, v in inv.items()},
            }
        )
    print(json.dumps(out, indent=2, ensure_ascii=False))


if __name__ == "__main__":
    main()
