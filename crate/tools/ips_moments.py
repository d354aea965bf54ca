"""Simulates the null moments of the ADF t-statistic used by the IPS W-t-bar test.

For each series length T and lag order p, y is a driftless Gaussian random
walk and the ADF regression is

    dy_t = rho*y_{t-1} + sum_{j=1..p} g_j*dy_{t-j} + [trend] + const + e_t

over t = p+1 .. T-1 (0-based positions in y). The t-ratio on rho is recorded
and its mean and variance over REPS replications form one table cell. Cells
with fewer than 3 residual degrees of freedom are left empty.

Output: Rust source for crates/core/src/unitroot/ips_table.rs on stdout.
"""
import sys

import numpy as np

REPS = 50_000
CHUNK = 5_000
T_GRID = [6, 7, 8, 9, 10, 15, 20, 25, 30, 40, 50, 60, 70, 100]
MAX_P = 12
SEED = 20_240_611


def tstats(rng, T, p, trend):
    out = []
    d = 2 if trend else 1
    for _ in range(REPS // CHUNK):
        y = np.cumsum(rng.standard_normal((CHUNK, T)), axis=1)
        dy = np.diff(y, axis=1)  # dy[:, t-1] = y_t - y_{t-1}
        rows = np.arange(p + 1, T)
        cols = [y[:, rows - 1]]
        for j in range(1, p + 1):
            cols.append(dy[:, rows - 1 - j])
        if trend:
            cols.append(np.broadcast_to(rows.astype(float), (CHUNK, len(rows))))
        cols.append(np.ones((CHUNK, len(rows))))
        X = np.stack(cols, axis=2)
        z = dy[:, rows - 1]
        n, k = len(rows), 1 + p + d
        q, r = np.linalg.qr(X)
        qty = np.einsum("bnk,bn->bk", q, z)
        beta = np.linalg.solve(r, qty[..., None])[..., 0]
        resid = z - np.einsum("bnk,bk->bn", X, beta)
        s2 = (resid ** 2).sum(axis=1) / (n - k)
        rinv = np.linalg.inv(r)
        v00 = (rinv[:, 0, :] ** 2).sum(axis=1)
        out.append(beta[:, 0] / np.sqrt(s2 * v00))
    return np.concatenate(out)


def main():
    rng = np.random.default_rng(SEED)
    tables = {}
    for trend in (False, True):
        d = 2 if trend else 1
        rows = []
        for T in T_GRID:
            cells = []
            for p in range(MAX_P + 1):
                dof = (T - 1 - p) - (1 + p + d)
                if dof < 3:
                    cells.append(None)
                    continue
                t = tstats(rng, T, p, trend)
                cells.append((t.mean(), t.var(ddof=1)))
                print(f"trend={trend} T={T} p={p}: {cells[-1]}", file=sys.stderr)
            rows.append((T, cells))
        tables[trend] = rows

    print("// Generated by tools/ips_moments.py; do not edit by hand.")
    print(f"// {REPS} replications per cell, seed {SEED}.")
    print()
    print(f"pub(crate) const IPS_T_GRID: [usize; {len(T_GRID)}] = {T_GRID!r};")
    print(f"pub(crate) const IPS_MAX_LAG: usize = {MAX_P};")
    print()
    for trend, name in ((False, "IPS_CONSTANT"), (True, "IPS_TREND")):
        print("/// `(mean, variance)` of the ADF t-ratio, indexed `[t_index][lag]`.")
        print(f"pub(crate) const {name}: [[Option<(f64, f64)>; {MAX_P + 1}]; {len(T_GRID)}] = [")
        for T, cells in tables[trend]:
            body = ", ".join("None" if c is None else f"Some(({c[0]:.4f}, {c[1]:.4f}))" for c in cells)
            print(f"    // T = {T}")
            print(f"    [{body}],")
        print("];")
        print()


if __name__ == "__main__":
    main()
