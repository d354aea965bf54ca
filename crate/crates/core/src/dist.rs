//! Tail probabilities of the sampling distributions used by the test statistics.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::{beta_pq, gamma_pq};

fn check_stat<T: Scalar>(x: T, what: &str) -> Result<()> {
    if x.is_nan() || x < T::zero() {
        return Err(Error::Domain(format!("{what} statistic must be non-negative, got {x}")));
    }
    Ok(())
}

fn check_dof(dof: usize) -> Result<()> {
    if dof == 0 {
        return Err(Error::Domain("degrees of freedom must be at least 1".into()));
    }
    Ok(())
}

/// `P(χ²_dof > x)`, the spreadsheet `CHISQ.DIST.RT`.
pub fn chi_sq_upper_tail<T: Scalar>(x: T, dof: usize) -> Result<T> {
    check_stat(x, "chi-square")?;
    check_dof(dof)?;
    if x.is_infinite() {
        return Ok(T::zero());
    }
    let half = T::lit(0.5);
    Ok(gamma_pq(T::count(dof) * half, x * half).1)
}

/// `P(F_{d1,d2} > x)`.
pub fn f_upper_tail<T: Scalar>(x: T, d1: usize, d2: usize) -> Result<T> {
    check_stat(x, "F")?;
    check_dof(d1)?;
    check_dof(d2)?;
    if x.is_infinite() {
        return Ok(T::zero());
    }
    let (d1, d2) = (T::count(d1), T::count(d2));
    let half = T::lit(0.5);
    // P(F > x) = I_{d2/(d2 + d1 x)}(d2/2, d1/2)
    Ok(beta_pq(d2 * half, d1 * half, d2 / (d2 + d1 * x)).0)
}

/// Two-sided Student-t probability `2·P(T_dof > |t|)`.
pub fn t_two_tailed_prob<T: Scalar>(t: T, dof: usize) -> Result<T> {
    check_dof(dof)?;
    if t.is_nan() {
        return Err(Error::Domain("t statistic is NaN".into()));
    }
    if t.is_infinite() {
        return Ok(T::zero());
    }
    let nu = T::count(dof);
    let half = T::lit(0.5);
    Ok(beta_pq(nu * half, half, nu / (nu + t * t)).0)
}

/// Standard normal CDF `Φ(z)`.
pub fn normal_cdf<T: Scalar>(z: T) -> T {
    if z.is_nan() {
        return z;
    }
    if z.is_infinite() {
        return if z > T::zero() { T::one() } else { T::zero() };
    }
    let half = T::lit(0.5);
    let tail = half * gamma_pq(half, half * z * z).1;
    if z < T::zero() {
        tail
    } else {
        T::one() - tail
    }
}

/// Two-sided standard normal probability `2·(1 − Φ(|z|))`.
pub fn normal_two_tailed_prob<T: Scalar>(z: T) -> T {
    if z.is_infinite() {
        return T::zero();
    }
    let half = T::lit(0.5);
    gamma_pq(half, half * z * z).1
}
