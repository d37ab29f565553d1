"""Independent numpy computation of absolutization reference values.

Prints the coherent decoupling residual of the classical-kind protocol on
(|00>+|11>)/sqrt(2), and checks which V_x intertwines the coherent copy map
with the Weyl operators.
"""
import itertools
import numpy as np


def ket(d, i):
    v = np.zeros(d, dtype=complex)
    v[i] = 1
    return v


def trace_norm(m):
    return np.abs(np.linalg.eigvalsh((m + m.conj().T) / 2)).sum()


def classical_residual(d):
    # registers: X (shared randomness, one copy suffices since X_A = X_B), R, B, D (dephasing env), E (channel env)
    psi0 = (np.kron(ket(d, 0), ket(d, 0)) + np.kron(ket(d, 1), ket(d, 1))) / np.sqrt(2)
    dims = [d, d, d, d, d]
    total = np.zeros((d ** 5, d ** 5), dtype=complex)
    for x in range(d):
        vec = np.zeros(d ** 4, dtype=complex)
        for r, a in itertools.product(range(d), repeat=2):
            amp = psi0[r * d + a]
            if amp == 0:
                continue
            shifted = (a + x) % d
            # channel output B=shifted, env copy E=shifted; Bob undoes the shift on B
            b = (shifted - x) % d
            idx = ((r * d + b) * d + a) * d + shifted
            vec[idx] += amp
        full = np.kron(ket(d, x), vec)
        total += np.outer(full, full.conj()) / d
    t = total.reshape(d, d ** 4, d, d ** 4)
    sx = np.einsum('iaja->ij', t)
    sq = np.einsum('iaib->ab', t)
    return trace_norm(total - np.kron(sx, sq))


def weyl(d, a, b):
    w = np.exp(2j * np.pi / d)
    X = np.roll(np.eye(d), 1, axis=0)
    Z = np.diag([w ** k for k in range(d)])
    return np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, b)


def copy_iso(d):
    V = np.zeros((d * d, d), dtype=complex)
    for k in range(d):
        V[k * d + k, k] = 1
    return V


if __name__ == "__main__":
    for d in (2, 3):
        print(f"classical residual d={d}: {classical_residual(d):.12f}  expected {2 * (1 - 1 / d):.12f}")
    for d in (2, 3):
        D = copy_iso(d)
        worst = 0.0
        for a, b in itertools.product(range(d), repeat=2):
            U = weyl(d, a, b)
            V = np.linalg.matrix_power(np.roll(np.eye(d), 1, axis=0), a)
            worst = max(worst, np.abs(D @ U - np.kron(V, U) @ D).max())
        print(f"V_x = X^a intertwiner residual d={d}: {worst:.3e}")
