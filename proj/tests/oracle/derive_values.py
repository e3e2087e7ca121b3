# Copyright 2026 The lfising Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy oracle for the frozen values in tests/frozen_values.hpp.

Builds every operator from explicit Kronecker products of 2x2 matrices, so it shares
no code with the C++ library. Run: python3 derive_values.py > ../frozen_values.hpp
"""

import itertools
from functools import reduce

import numpy as np

# |0> is empty and the -1 eigenstate of Z; qubit 0 is the leading tensor factor.
I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([-1.0, 1.0]).astype(complex)
Y = 1j * X @ Z
LOWER = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}


def kron_all(ops):
    return reduce(np.kron, ops)


def site_op(op, j, n):
    return kron_all([op if i == j else I2 for i in range(n)])


def annihilator(j, n):
    # string of Z on earlier sites, as in the site-space Jordan-Wigner map
    return kron_all([Z] * j + [LOWER] + [I2] * (n - j - 1))


def fermion_hamiltonian(n, lam, wrap):
    """Twice the printed nearest-neighbour fermion form; wrap = 0 open, +1 periodic, -1 antiperiodic."""
    c = [annihilator(j, n) for j in range(n)]
    h = np.zeros((2**n, 2**n), dtype=complex)
    for j in range(n):
        h += lam * (2 * c[j].conj().T @ c[j] - np.eye(2**n))
    for j in range(n - 1 if wrap == 0 else n):
        nxt = c[j + 1] if j + 1 < n else wrap * c[0]
        h -= (c[j].conj().T - c[j]) @ (nxt.conj().T + nxt)
    return h


def spin_hamiltonian(n, lam, closed):
    h = np.zeros((2**n, 2**n), dtype=complex)
    for j in range(n):
        h -= 0.5 * lam * site_op(Z, j, n)
    for j in range(n if closed else n - 1):
        h -= 0.5 * site_op(X, j, n) @ site_op(X, (j + 1) % n, n)
    return h


def lattice_omega(k, lam, a=1.0):
    return np.hypot(lam - np.cos(k * a), np.sin(k * a))


def sre(psi, q=2):
    n = int(np.log2(len(psi)))
    total = 0.0
    for word in itertools.product("IXYZ", repeat=n):
        p = kron_all([PAULI[w] for w in word])
        total += np.real(np.vdot(psi, p @ psi)) ** (2 * q)
    return np.log(total / 2**n) / (1 - q)


def block_state(phi):
    return np.array([np.cos(phi), 0, 0, -1j * np.sin(phi)])


def ground_state_m2(n, m, a=1.0):
    ks = [np.pi * (2 * j + 1) / (n * a) for j in range(n // 2)]
    phis = [0.5 * np.arctan2(k, m) for k in ks]
    return sre(kron_all([block_state(p) for p in phis])), ks


def main():
    out = {}
    for n, lam in [(4, 0.0), (4, 0.5), (6, 0.3), (6, 1.5), (8, 0.5)]:
        h = fermion_hamiltonian(n, lam, -1)
        e0 = np.linalg.eigvalsh(h)[0]
        ks = [np.pi * (2 * j + 1) / n for j in range(n // 2)]
        assert abs(e0 + sum(2 * lattice_omega(k, lam) for k in ks)) < 1e-10
        out[f"kApbcGround_N{n}_L{str(lam).replace('.', 'p')}"] = e0

    # the closed spin chain ground state lives in the even sector
    out["kSpinClosedGround_N8_L0p5"] = np.linalg.eigvalsh(spin_hamiltonian(8, 0.5, True))[0]
    assert abs(out["kSpinClosedGround_N8_L0p5"] - 0.5 * out["kApbcGround_N8_L0p5"]) < 1e-10

    periodic = [2 * np.pi * j / 4 for j in range(-2, 2)]
    out["kPeriodicGridEnergy_N4_L2"] = -sum(lattice_omega(k, 2.0) for k in periodic)

    rng_state = np.array([1, 2j, 3, -1, 0.5 - 1j, 0, 2, 1j])
    rng_state = rng_state / np.linalg.norm(rng_state)
    out["kSreFixedState3_q2"] = sre(rng_state, 2)
    out["kSreFixedState3_q3"] = sre(rng_state, 3)
    t_state = np.array([1, np.exp(1j * np.pi / 4)]) / np.sqrt(2)
    out["kSreTState"] = sre(t_state)

    phi = np.pi / 8
    v = block_state(phi).reshape(2, 2)
    rho = v @ v.conj().T
    ev = np.linalg.eigvalsh(rho)
    out["kPairEntropyPiOver8"] = -sum(x * np.log(x) for x in ev if x > 1e-15)
    out["kBlockSrePiOver8"] = sre(block_state(phi))
    for w in ["IZ", "XY", "YX", "ZZ"]:
        out[f"kBlockTablePiOver8_{w}"] = np.real(np.vdot(block_state(phi), kron_all([PAULI[c] for c in w]) @ block_state(phi)))

    out["kGroundM2_N4_m1"] = ground_state_m2(4, 1.0)[0]
    out["kGroundM2_N6_m0p5"] = ground_state_m2(6, 0.5)[0]
    m2_analytic = sum(-np.log(1 - (np.sin(2 * p) * np.cos(2 * p)) ** 2)
                      for p in [0.5 * np.arctan2(k, 1.0) for k in ground_state_m2(4, 1.0)[1]])
    assert abs(m2_analytic - out["kGroundM2_N4_m1"]) < 1e-10

    print("// Generated by tests/oracle/derive_values.py (numpy, independent of the library).")
    print("#ifndef LFISING_TESTS_FROZEN_VALUES_HPP\n#define LFISING_TESTS_FROZEN_VALUES_HPP\n")
    print("namespace frozen {\n")
    for name, value in out.items():
        print(f"inline constexpr double {name} = {float(np.real(value))!r};")
    print("\n}  // namespace frozen\n\n#endif")


if __name__ == "__main__":
    main()
