//! Exact integer and rational sequences: factorials, binomials, Bernoulli and
//! Euler numbers, harmonic numbers and alternating power sums.

use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

use crate::error::{Error, Result};

fn factorial_cache() -> &'static Mutex<Vec<Integer>> {
    static CACHE: OnceLock<Mutex<Vec<Integer>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Integer::from(1)]))
}

/// n! as an exact integer (memoized).
pub fn factorial(n: u32) -> Integer {
    let mut cache = factorial_cache().lock().unwrap();
    while cache.len() <= n as usize {
        let k = cache.len() as u32;
        let next = Integer::from(&cache[k as usize - 1] * k);
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

/// Central binomial coefficient C(2n, n).
pub fn central_binomial(n: u32) -> Integer {
    binomial(2 * n, n)
}

/// 2^e as an exact rational (e may be negative).
pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from(Integer::from(1) << e as u32)
    } else {
        Rational::from((Integer::from(1), Integer::from(1) << (-e) as u32))
    }
}

struct NumberCache {
    tangent: Vec<Integer>,
    secant: Vec<Integer>,
}

fn number_cache() -> &'static Mutex<NumberCache> {
    static CACHE: OnceLock<Mutex<NumberCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(NumberCache {
            tangent: Vec::new(),
            secant: Vec::new(),
        })
    })
}

// Tangent numbers T_1..T_n by the in-place boustrophedon of Brent and Harvey.
fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t = vec![Integer::new(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = Integer::from(1);
    for k in 2..=n {
        t[k] = Integer::from(&t[k - 1] * (k as u32 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = Integer::from(&t[j - 1] * (j - k) as u32);
            let b = Integer::from(&t[j] * (j - k + 2) as u32);
            t[j] = a + b;
        }
    }
    t
}

// Secant numbers S_0..S_n, S_k = |E_{2k}|.
fn secant_numbers(n: usize) -> Vec<Integer> {
    let mut s = vec![Integer::new(); n + 1];
    s[0] = Integer::from(1);
    for k in 1..=n {
        s[k] = Integer::from(&s[k - 1] * k as u32);
    }
    for k in 1..=n {
        for j in k + 1..=n {
            let a = Integer::from(&s[j - 1] * (j - k) as u32);
            let b = Integer::from(&s[j] * (j - k + 1) as u32);
            s[j] = a + b;
        }
    }
    s
}

fn ensure_tangent(k: usize) -> Integer {
    let mut cache = number_cache().lock().unwrap();
    if cache.tangent.len() <= k {
        let target = (k + 1).max(2 * cache.tangent.len());
        cache.tangent = tangent_numbers(target);
    }
    cache.tangent[k].clone()
}

fn ensure_secant(k: usize) -> Integer {
    let mut cache = number_cache().lock().unwrap();
    if cache.secant.len() <= k {
        let target = (k + 1).max(2 * cache.secant.len());
        cache.secant = secant_numbers(target);
    }
    cache.secant[k].clone()
}

/// Bernoulli number B_n with the convention B_1 = -1/2.
pub fn bernoulli(n: u32) -> Rational {
    match n {
        0 => Rational::from(1),
        1 => Rational::from((-1, 2)),
        _ if n % 2 == 1 => Rational::new(),
        _ => {
            let k = (n / 2) as usize;
            let t = ensure_tangent(k);
            let num = Integer::from(&t * n);
            let p = Integer::from(1) << n;
            let den = Integer::from(&p * &p) - &p;
            let mut b = Rational::from((num, den));
            if k % 2 == 0 {
                b = -b;
            }
            b
        }
    }
}

/// Bernoulli polynomial B_n(z) = Σ C(n,k) B_k z^{n-k} at a rational point.
pub fn bernoulli_poly(n: u32, z: &Rational) -> Rational {
    let mut acc = Rational::new();
    let mut zp = Rational::from(1);
    for k in (0..=n).rev() {
        let term = Rational::from(binomial(n, k)) * bernoulli(k) * &zp;
        acc += term;
        zp *= z;
    }
    acc
}

/// Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5, odd indices vanish).
pub fn euler_number(n: u32) -> Integer {
    if n % 2 == 1 {
        return Integer::new();
    }
    let k = (n / 2) as usize;
    let s = ensure_secant(k);
    if k % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Harmonic number H_n = Σ_{j=1}^n 1/j (H_0 = 0).
pub fn harmonic(n: u32) -> Rational {
    let mut acc = Rational::new();
    for j in 1..=n {
        acc += Rational::from((1, j));
    }
    acc
}

/// Σ_{j=1}^k (-1)^j j^m from the closed forms, m ≤ 4.
pub fn alt_power_sum(m: u32, k: u64) -> Result<Integer> {
    let kk = Rational::from(Integer::from(k));
    let sgn = if k % 2 == 0 { Rational::from(1) } else { Rational::from(-1) };
    // ½(1 + (-1)^k), the parity indicator of k
    let even = if k % 2 == 0 { Rational::from(1) } else { Rational::new() };
    let half = Rational::from((1, 2));
    let v: Rational = match m {
        0 => even - 1u32,
        1 => sgn * half * (kk.clone() + 1u32 - even),
        2 => sgn * half * kk.clone() * (kk + 1u32),
        3 => {
            let k2 = Rational::from(&kk * &kk);
            let k3 = Rational::from(&k2 * &kk);
            sgn * (half * k3 + Rational::from((3, 4)) * k2)
                + Rational::from((1, 4)) * (Rational::from(1) - even)
        }
        4 => {
            let k2 = Rational::from(&kk * &kk);
            let k3 = Rational::from(&k2 * &kk);
            let k4 = Rational::from(&k3 * &kk);
            sgn * (half.clone() * k4 + k3 - half * kk)
        }
        _ => return Err(Error::UnsupportedDegree(m)),
    };
    debug_assert_eq!(*v.denom(), 1);
    Ok(v.into_numer_denom().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    // Oracle: the defining recurrence Σ_{k=0}^{n} C(n+1,k) B_k = 0.
    fn bernoulli_recurrence(n: u32) -> Vec<Rational> {
        let mut b = vec![Rational::from(1)];
        for m in 1..=n {
            let mut s = Rational::new();
            for k in 0..m {
                s += Rational::from(binomial(m + 1, k)) * &b[k as usize];
            }
            b.push(-s / Rational::from(m + 1));
        }
        b
    }

    // Oracle: Σ_{k=0}^{n} C(2n,2k) E_{2k} = 0 for n ≥ 1.
    fn euler_recurrence(n: u32) -> Vec<Integer> {
        let mut e = vec![Integer::from(1)];
        for m in 1..=n {
            let mut s = Integer::new();
            for k in 0..m {
                s += binomial(2 * m, 2 * k) * &e[k as usize];
            }
            e.push(-s);
        }
        e
    }

    #[test]
    fn bernoulli_matches_recurrence() {
        let oracle = bernoulli_recurrence(60);
        for (n, b) in oracle.iter().enumerate() {
            assert_eq!(bernoulli(n as u32), *b, "B_{n}");
        }
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn euler_matches_recurrence() {
        let oracle = euler_recurrence(25);
        for (k, e) in oracle.iter().enumerate() {
            assert_eq!(euler_number(2 * k as u32), *e, "E_{}", 2 * k);
        }
        assert_eq!(euler_number(2), -1);
        assert_eq!(euler_number(3), 0);
    }

    #[test]
    fn bernoulli_polynomial_values() {
        assert_eq!(bernoulli_poly(3, &Rational::from((1, 4))), Rational::from((3, 64)));
        assert_eq!(bernoulli_poly(2, &Rational::from(1)), Rational::from((1, 6)));
        // B_n(1) = B_n for n ≥ 2
        for n in 2..12 {
            assert_eq!(bernoulli_poly(n, &Rational::from(1)), bernoulli(n));
        }
    }

    #[test]
    fn harmonic_small() {
        assert_eq!(harmonic(0), 0);
        assert_eq!(harmonic(4), Rational::from((25, 12)));
    }

    #[test]
    fn factorial_binomial() {
        assert_eq!(factorial(10), 3628800);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(central_binomial(4), 70);
        assert_eq!(pow2(-3), Rational::from((1, 8)));
    }

    fn brute(m: u32, k: u64) -> Integer {
        let mut acc = Integer::new();
        for j in 1..=k {
            let t = Integer::from(j).pow(m);
            if j % 2 == 1 {
                acc -= t;
            } else {
                acc += t;
            }
        }
        acc
    }

    #[test]
    fn alt_power_sum_brute_force() {
        for m in 0..=4 {
            for k in 0..=200 {
                assert_eq!(alt_power_sum(m, k).unwrap(), brute(m, k), "m={m} k={k}");
            }
        }
        assert_eq!(alt_power_sum(0, 3).unwrap(), -1);
        assert_eq!(alt_power_sum(2, 4).unwrap(), 10);
        assert_eq!(alt_power_sum(5, 3), Err(Error::UnsupportedDegree(5)));
    }
}
