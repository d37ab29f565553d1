"""Independent numpy reference values for the trade-off checks.

Each value comes from a direct eigensolve on a small explicit state; none of
the C++ code is involved.
"""
import numpy as np


def entropy(m):
    ev = np.linalg.eigvalsh((m + m.conj().T) / 2)
    ev = ev[ev > 1e-12]
    return float(-(ev * np.log2(ev)).sum())


def ptrace(rho, dims, keep):
    n = len(dims)
    t = rho.reshape(dims + dims)
    drop = [i for i in range(n) if i not in keep]
    for k, i in enumerate(sorted(drop, reverse=True)):
        cur = t.ndim // 2
        t = np.trace(t, axis1=i, axis2=i + cur)
    d = int(np.prod([dims[i] for i in keep]))
    return t.reshape(d, d)


def h2(p):
    return float(-(p * np.log2(p) + (1 - p) * np.log2(1 - p)))


def choi_like(kraus):
    # (id_A (x) N)(Phi_2) together with the channel environment: pure state on A B E.
    phi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    nk = len(kraus)
    psi = np.zeros(2 * 2 * nk, dtype=complex)
    for a in range(2):
        for k, K in enumerate(kraus):
            out = K @ np.array([phi[a * 2 + 0], phi[a * 2 + 1]])
            for b in range(2):
                psi[(a * 2 + b) * nk + k] += out[b]
    return np.outer(psi, psi.conj()), [2, 2, nk]


X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1, -1]).astype(complex)
I = np.eye(2, dtype=complex)


def depolarizing(p):
    return [np.sqrt(1 - 3 * p / 4) * I, np.sqrt(p / 4) * X, np.sqrt(p / 4) * Y, np.sqrt(p / 4) * Z]


def dephasing(p):
    return [np.sqrt(1 - p) * I, np.sqrt(p) * Z]


def info(kraus):
    rho, dims = choi_like(kraus)
    hA, hB, hE = (entropy(ptrace(rho, dims, [i])) for i in range(3))
    hAB = entropy(ptrace(rho, dims, [0, 1]))
    return {"I(A;B)": hA + hB - hAB, "Icoh(A>B)": hB - hAB, "I(A;E)": hA + hE - entropy(ptrace(rho, dims, [0, 2]))}


if __name__ == "__main__":
    for name, th in (("pi/8", np.pi / 8), ("pi/6", np.pi / 6)):
        print(f"mother pure theta={name}: E(Q=0) = H2(cos^2) = {h2(np.cos(th) ** 2):.12f}")
    for p in (0.1, 0.25):
        print(f"depolarizing {p}: I(A;B) = {info(depolarizing(p))['I(A;B)']:.12f}")
    f = info(dephasing(0.2))
    print(f"dephasing 0.2: Icoh = {f['Icoh(A>B)']:.12f}  I(A;B)/2 = {f['I(A;B)'] / 2:.12f}  I(A;E)/2 = {f['I(A;E)'] / 2:.12f}")
    print(f"dephasing 0.2: bounds meet at E = {f['I(A;B)'] / 2 - f['Icoh(A>B)']:.12f}")
    # Isotropic 0.8 Phi_2 + 0.2 tau_4: coherent information of the trivial witness.
    phi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    rho = 0.8 * np.outer(phi, phi.conj()) + 0.2 * np.eye(4) / 4
    print(f"isotropic 0.8: Icoh(A>B) = {entropy(ptrace(rho, [2, 2], [1])) - entropy(rho):.12f}")
