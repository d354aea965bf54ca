"""Brute-force reference computation for the bundled EU-28 snapshot.

Independent of the Rust implementation: normal equations, explicit loops,
scipy distributions. Writes fixtures/eu28_expected.json.
"""
import csv
import json
import math
import pathlib
import sys

import numpy as np
from scipy import stats

ROOT = pathlib.Path(__file__).resolve().parent.parent
DEP = "povertyrate"
REGS = ["inworkpovertyrate", "socialexp", "neetsrate"]


def load():
    data = {}
    with (ROOT / "fixtures" / "eu28_2010_2016.csv").open() as fh:
        for row in csv.DictReader(fh):
            data.setdefault(row["variable"], {})[(row["geo"], int(row["time"]))] = float(row["value"])
    units = sorted({g for g, _ in data[DEP]})
    years = sorted({t for _, t in data[DEP]})
    mats = {v: np.array([[data[v][(g, t)] for t in years] for g in units]) for v in data}
    return units, years, mats


def normal_eq(y, X):
    xtx = np.zeros((X.shape[1], X.shape[1]))
    for r in range(X.shape[0]):
        xtx += np.outer(X[r], X[r])
    xty = X.T @ y
    inv = np.linalg.inv(xtx)
    return inv @ xty, inv


def stat_block(y, X, beta, inv, const_col):
    n, k = X.shape
    e = y - X @ beta
    ssr = float(e @ e)
    c = X[:, const_col]
    tss = float(y @ y - (c @ y) ** 2 / (c @ c))
    r2 = 1 - ssr / tss
    adj = 1 - (1 - r2) * (n - 1) / (n - k)
    f = (r2 / (k - 1)) / ((1 - r2) / (n - k))
    ll = -n / 2 * (1 + math.log(2 * math.pi) + math.log(ssr / n))
    dw = sum((e[i] - e[i - 1]) ** 2 for i in range(1, n)) / ssr
    return dict(
        r_squared=r2,
        adj_r_squared=adj,
        se_regression=math.sqrt(ssr / (n - k)),
        ssr=ssr,
        log_likelihood=ll,
        f_stat=f,
        f_prob=float(stats.f.sf(f, k - 1, n - k)),
        durbin_watson=dw,
        mean_dep=float(y.mean()),
        sd_dep=float(y.std(ddof=1)),
        aic=(-2 * ll + 2 * k) / n,
        sic=(-2 * ll + k * math.log(n)) / n,
        hq=(-2 * ll + 2 * k * math.log(math.log(n))) / n,
        centered_r_squared=1 - ssr / float(((y - y.mean()) ** 2).sum()),
    ), e


def main():
    units, years, m = load()
    N, T = len(units), len(years)
    n, k = N * T, len(REGS) + 1
    y = m[DEP].reshape(-1)
    X = np.column_stack([m[v].reshape(-1) for v in REGS] + [np.ones(n)])

    b1, _ = normal_eq(y, X)
    e1 = (y - X @ b1).reshape(N, T)
    sigma = np.zeros((T, T))
    for t in range(T):
        for s in range(T):
            sigma[t, s] = sum(e1[i, t] * e1[i, s] for i in range(N)) / N
    L = np.linalg.cholesky(sigma)
    Linv = np.linalg.inv(L)
    yt = np.concatenate([Linv @ y[i * T:(i + 1) * T] for i in range(N)])
    Xt = np.vstack([Linv @ X[i * T:(i + 1) * T] for i in range(N)])
    b2, inv2 = normal_eq(yt, Xt)
    wstats, et = stat_block(yt, Xt, b2, inv2, k - 1)
    E = et.reshape(N, T)
    omega = np.zeros((T, T))
    for t in range(T):
        for s in range(T):
            omega[t, s] = sum(E[i, t] * E[i, s] for i in range(N)) / N
    meat = np.zeros((k, k))
    for i in range(N):
        Xi = Xt[i * T:(i + 1) * T]
        for t in range(T):
            for s in range(T):
                meat += omega[t, s] * np.outer(Xi[t], Xi[s])
    V = inv2 @ meat @ inv2 * n / (n - k)
    se = np.sqrt(np.diag(V))
    tstat = b2 / se
    tprob = 2 * stats.t.sf(np.abs(tstat), n - k)

    eu = y - X @ b2
    ussr = float(eu @ eu)
    unweighted = dict(
        r_squared=1 - ussr / float(((y - y.mean()) ** 2).sum()),
        ssr=ussr,
        durbin_watson=sum((eu[i] - eu[i - 1]) ** 2 for i in range(1, n)) / ussr,
        mean_dep=float(y.mean()),
    )

    # diagnostics on weighted residuals
    d = et - et.mean()
    m2 = (d ** 2).mean()
    skew = (d ** 3).mean() / m2 ** 1.5
    kurt = (d ** 4).mean() / m2 ** 2
    jb = n * (skew ** 2 / 6 + (kurt - 3) ** 2 / 24)

    def bpg(res):
        r2 = res ** 2
        b, inv = normal_eq(r2, X)
        st, _ = stat_block(r2, X, b, inv, k - 1)
        lm = n * st["r_squared"]
        return dict(lm_stat=lm, dof=k - 1, prob=float(stats.chi2.sf(lm, k - 1)),
                    aux_coefficients=list(b), aux_stats=st)

    def csd(res):
        R = res.reshape(N, T)
        R = R - R.mean(axis=1, keepdims=True)
        lm = 0.0
        sc = 0.0
        cd = 0.0
        for i in range(N):
            for j in range(i + 1, N):
                rho = (R[i] @ R[j]) / math.sqrt((R[i] @ R[i]) * (R[j] @ R[j]))
                lm += T * rho ** 2
                sc += T * rho ** 2 - 1
                cd += rho
        sc *= math.sqrt(1 / (N * (N - 1)))
        cd *= math.sqrt(2 * T / (N * (N - 1)))
        dof = N * (N - 1) // 2
        return dict(bp_lm=lm, bp_dof=dof, bp_prob=float(stats.chi2.sf(lm, dof)),
                    scaled_lm=sc, scaled_prob=float(2 * stats.norm.sf(abs(sc))),
                    cd=cd, cd_prob=float(2 * stats.norm.sf(abs(cd))))

    names = [DEP] + REGS
    corr = {}
    for a in names:
        for b in names:
            xa, xb = m[a].reshape(-1), m[b].reshape(-1)
            corr[f"{a}|{b}"] = float(np.corrcoef(xa, xb)[0, 1])

    out = dict(
        n=n, k=k, units=units, years=years,
        stage1_coefficients=list(b1),
        period_covariance=sigma.tolist(),
        coefficients=list(b2),
        pcse_std_errors=list(se),
        t_stats=list(tstat),
        t_probs=list(tprob),
        pcse_covariance=V.tolist(),
        weighted_stats=wstats,
        unweighted_stats=unweighted,
        jarque_bera=dict(stat=jb, prob=float(stats.chi2.sf(jb, 2))),
        bpg_weighted=bpg(et),
        bpg_unweighted=bpg(eu),
        csd_weighted=csd(et),
        csd_unweighted=csd(eu),
        correlations=corr,
    )
    json.dump(out, sys.stdout if "--stdout" in sys.argv else (ROOT / "fixtures" / "eu28_expected.json").open("w"), indent=2)


if __name__ == "__main__":
    main()
