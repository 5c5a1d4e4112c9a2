//! Exact integer and rational helpers shared by the formula evaluators and
//! the constructions.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational used for every bound and average degree.
pub type Rational = Ratio<i128>;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        // acc * (n - j) is divisible by (j + 1) after the multiplication.
        acc = acc
            .checked_mul((n - j) as i128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (j as i128 + 1);
    }
    Ok(acc)
}

/// `C(n, k)` for a possibly negative top argument, using the combinatorial
/// convention that it vanishes whenever `n < k` (including `n < 0`).
pub fn binom_signed(n: i128, k: u64) -> Result<i128> {
    if n < 0 {
        return Ok(0);
    }
    binom(u64::try_from(n).map_err(|_| Error::Overflow("binomial coefficient"))?, k)
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// `p/q` string, `p` alone for integers.
pub fn fraction_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Floor of a rational, exact.
pub fn floor(r: &Rational) -> i128 {
    r.floor().to_integer()
}

/// Ceiling division for non-negative numerators and positive divisors.
pub fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    num_integer::Integer::div_ceil(&a, &b)
}

/// Compare `a/b` with `c/d` exactly by cross-multiplication (`b, d > 0`).
pub fn cmp_fractions(a: i128, b: i128, c: i128, d: i128) -> std::cmp::Ordering {
    (a * d).cmp(&(c * b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 3).unwrap(), 4);
        assert_eq!(binom(6, 3).unwrap(), 20);
        assert_eq!(binom(3, 5).unwrap(), 0);
        assert_eq!(binom(0, 0).unwrap(), 1);
        assert_eq!(binom(60, 30).unwrap(), 118264581564861424);
        assert_eq!(binom_signed(-1, 2).unwrap(), 0);
        assert!(binom(200, 100).is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(floor(&frac(7, 2)), 3);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(6, 2), 3);
        assert_eq!(ceil_div(0, 3), 0);
        assert_eq!(fraction_string(&frac(10, 4)), "5/2");
        assert_eq!(fraction_string(&int(3)), "3");
    }
}
