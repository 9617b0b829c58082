//! Integer factorization, primitive prime divisors and exact checks of the
//! elementary inequalities used by the probabilistic estimates.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

const TRIAL_DIVISION_LIMIT: u128 = 1_000_000;

/// Below this bound Miller–Rabin with the first 13 prime bases is exact.
const MR_DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    value: u128,
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u128 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// |π(n)|, the number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn reassemble(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * p.pow(e))
    }
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

pub(crate) fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut r = 0;
    while b > 0 {
        if b & 1 == 1 {
            r = add_mod(r, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    r
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    if m > u64::MAX as u128 && m & 1 == 1 {
        let mont = Montgomery::new(m);
        let mut result = mont.to_mont(1);
        let mut b = mont.to_mont(base);
        while exp > 0 {
            if exp & 1 == 1 {
                result = mont.mul(result, b);
            }
            b = mont.mul(b, b);
            exp >>= 1;
        }
        return mont.from_mont(result);
    }
    let mut result = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    result
}

fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let mask = u64::MAX as u128;
    let (a0, a1) = (a & mask, a >> 64);
    let (b0, b1) = (b & mask, b >> 64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    let lo = (p00 & mask) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Montgomery form modulo an odd `n`, with R = 2^128.
struct Montgomery {
    n: u128,
    n_inv: u128,
    r2: u128,
}

impl Montgomery {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1);
        // Newton iteration for n^-1 mod 2^128
        let mut inv: u128 = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let r1 = 0u128.wrapping_sub(n) % n;
        let r2 = mul_mod(r1, r1, n);
        Montgomery { n, n_inv: inv, r2 }
    }

    #[inline]
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.n_inv);
        let (mh, _) = mul_wide(m, self.n);
        if hi >= mh {
            hi - mh
        } else {
            hi.wrapping_sub(mh).wrapping_add(self.n)
        }
    }

    #[inline]
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    fn from_mont(&self, a: u128) -> u128 {
        self.redc(0, a)
    }
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn miller_rabin(n: u128, base: u128) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn jacobi(mut a: u128, mut n: u128) -> i32 {
    a %= n;
    let mut t = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

fn is_square(n: u128) -> bool {
    let r = n.isqrt();
    r * r == n
}

fn half_mod(x: u128, n: u128) -> u128 {
    if x.is_multiple_of(2) {
        x / 2
    } else {
        x / 2 + n / 2 + 1
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: u128) -> bool {
    if is_square(n) {
        return false;
    }
    let mut d: i128 = 5;
    loop {
        let dm = if d < 0 {
            n - ((-d) as u128 % n)
        } else {
            d as u128 % n
        };
        match jacobi(dm, n) {
            -1 => break,
            0 if (d.unsigned_abs()) != n => return false,
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let dm = if d < 0 {
        n - ((-d) as u128 % n)
    } else {
        d as u128 % n
    };
    // P = 1, Q = (1 - D) / 4
    let q_signed = (1 - d) / 4;
    let qm = if q_signed < 0 {
        n - ((-q_signed) as u128 % n)
    } else {
        q_signed as u128 % n
    };
    let np1 = n + 1;
    let s = np1.trailing_zeros();
    let k = np1 >> s;

    let sub = |a: u128, b: u128| if a >= b { a - b } else { n - (b - a) };
    let (mut u, mut v, mut qk) = (1u128, 1u128, qm);
    let bits = 128 - k.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = mul_mod(u, v, n);
        v = sub(mul_mod(v, v, n), add_mod(qk, qk, n));
        qk = mul_mod(qk, qk, n);
        if (k >> i) & 1 == 1 {
            let nu = half_mod(add_mod(u, v, n), n);
            let nv = half_mod(add_mod(mul_mod(dm, u, n), v, n), n);
            u = nu;
            v = nv;
            qk = mul_mod(qk, qm, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub(mul_mod(v, v, n), add_mod(qk, qk, n));
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Deterministic primality test: exact Miller–Rabin below 3.3·10²⁴,
/// Baillie–PSW above.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    if n < MR_DETERMINISTIC_BOUND {
        MR_BASES.iter().all(|&a| miller_rabin(n, a))
    } else {
        miller_rabin(n, 2) && strong_lucas(n)
    }
}

/// Brent's variant of Pollard rho with `x² + c`, starting at `c = 1`.
fn pollard_brent(n: u128) -> u128 {
    if n.is_multiple_of(2) {
        return 2;
    }
    if n > u64::MAX as u128 {
        let mont = Montgomery::new(n);
        return brent_cycle(n, |x, c| add_mod(mont.mul(x, x), c, n));
    }
    brent_cycle(n, |x, c| add_mod(mul_mod(x, x, n), c, n))
}

fn brent_cycle(n: u128, step: impl Fn(u128, u128) -> u128) -> u128 {
    let diff = |a: u128, b: u128| a.max(b) - a.min(b);
    // Montgomery residues differ from plain ones by a unit factor, so gcds
    // with n are unaffected.
    let mul = |a: u128, b: u128| mul_mod(a, b, n);
    let mont = (n > u64::MAX as u128).then(|| Montgomery::new(n));
    for c in 1u128.. {
        let f = |x: u128| step(x, c);
        let (mut y, mut r, mut q, mut g) = (2u128, 1u64, 1u128, 1u128);
        let (mut x, mut ys) = (0u128, 0u128);
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = match &mont {
                        Some(m) => m.mul(q, diff(x, y)),
                        None => mul(q, diff(x, y)),
                    };
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(diff(x, ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Factor `n ≥ 2`: trial division to 10⁶, then Pollard rho.
pub fn factorize(n: u128) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("cannot factor {n}")));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    while rest.is_multiple_of(2) {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3u128;
    while d <= TRIAL_DIVISION_LIMIT && d * d <= rest {
        if rest <= u64::MAX as u128 {
            let (mut r, d64) = (rest as u64, d as u64);
            while r % d64 == 0 {
                primes.push(d);
                r /= d64;
            }
            rest = r as u128;
        } else {
            while rest.is_multiple_of(d) {
                primes.push(d);
                rest /= d;
            }
        }
        d += 2;
    }
    split_into(rest, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { value: n, factors })
}

/// Multiplicative order of `a` modulo the prime `r`, given that `a^m ≡ 1`.
fn order_dividing(a: u128, r: u128, m: u128) -> Result<u128> {
    let mut ord = m;
    if ord > 1 {
        for l in factorize(m)?.primes() {
            while ord.is_multiple_of(l) && pow_mod(a, ord / l, r) == 1 {
                ord /= l;
            }
        }
    }
    Ok(ord)
}

pub fn checked_pow(a: u128, m: u32) -> Result<u128> {
    a.checked_pow(m)
        .ok_or_else(|| Error::ValueTooLarge(format!("{a}^{m} exceeds 128 bits")))
}

/// The primitive prime divisors of `(a, m)`: primes `r` with `a` of order
/// exactly `m` modulo `r`. Sorted ascending; may be empty.
pub fn ppd(a: u64, m: u32) -> Result<Vec<u128>> {
    if a < 2 || m < 1 {
        return Err(Error::InvalidInput(format!(
            "ppd needs a >= 2 and m >= 1, got ({a},{m})"
        )));
    }
    let n = checked_pow(a as u128, m)? - 1;
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for r in factorize(n)?.primes() {
        if order_dividing(a as u128, r, m as u128)? == m as u128 {
            out.push(r);
        }
    }
    Ok(out)
}

/// All `(a, m)` with `2 ≤ a ≤ a_max`, `3 ≤ m ≤ m_max` and empty ppd.
pub fn zsigmondy_scan(a_max: u64, m_max: u32) -> Result<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    for a in 2..=a_max {
        for m in 3..=m_max {
            if ppd(a, m)?.is_empty() {
                out.push((a, m));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma8Row {
    pub n: u64,
    /// `((n+2)!)^8 < 2^(2n²−n+64)`
    pub base2: bool,
    /// `((n+2)!)^8 < 3^(2n²−5n+32)`
    pub base3: bool,
}

impl Lemma8Row {
    pub fn passed(&self) -> bool {
        self.base2 && self.base3
    }
}

pub const LEMMA8_MAX_N: u64 = 20_000;

/// Checks `(n+2)! < min(2^(n²/4−n/8+8), 3^(n²/4−5n/8+4))` for `7 ≤ n ≤ n_max`.
///
/// Both sides are raised to the 8th power so every exponent is an integer
/// and the comparison is carried out on exact big integers.
pub fn verify_lemma8(n_max: u64) -> Result<Vec<Lemma8Row>> {
    if n_max < 7 {
        return Err(Error::InvalidInput(format!(
            "n_max must be >= 7, got {n_max}"
        )));
    }
    if n_max > LEMMA8_MAX_N {
        return Err(Error::CapExceeded {
            what: "n_max",
            value: n_max as u128,
            cap: LEMMA8_MAX_N as u128,
        });
    }
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    let mut fact: BigUint = (1..=8u32).product::<u32>().into();
    let mut rows = Vec::with_capacity((n_max - 6) as usize);
    for n in 7..=n_max {
        fact *= n + 2;
        let lhs = fact.pow(8);
        let e2 = 2 * n * n - n + 64;
        let e3 = 2 * n * n - 5 * n + 32;
        let base2 = lhs < two.pow(e2 as u32);
        let base3 = lhs < three.pow(e3 as u32);
        rows.push(Lemma8Row { n, base2, base3 });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma10Row {
    pub n: u64,
    pub distinct_primes: usize,
    pub log2_n: f64,
    pub passed: bool,
}

/// Checks `|π(n)| ≤ log₂ n` for `2 ≤ n ≤ n_max` as `2^|π(n)| ≤ n`.
pub fn verify_lemma10(n_max: u64) -> Result<Vec<Lemma10Row>> {
    if n_max < 2 {
        return Err(Error::InvalidInput(format!(
            "n_max must be >= 2, got {n_max}"
        )));
    }
    (2..=n_max)
        .map(|n| {
            let k = factorize(n as u128)?.distinct_primes();
            Ok(Lemma10Row {
                n,
                distinct_primes: k,
                log2_n: (n as f64).log2(),
                passed: 1u128.checked_shl(k as u32).is_some_and(|b| b <= n as u128),
            })
        })
        .collect()
}

/// Returns `(p, f)` when `q = p^f` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fac = factorize(q as u128).ok()?;
    match fac.factors() {
        [(p, f)] => Some((*p as u64, *f)),
        _ => None,
    }
}

fn bit_length(x: &BigUint) -> u64 {
    x.bits()
}

/// Decides `n^(log₂ n) < q^(s·n)` for a positive rational `s = num/den`.
///
/// Equivalent to `den·(log₂ n)² < num·n·log₂ q`. Exact when `n` and `q` are
/// powers of two; otherwise both logarithms are bracketed by rationals
/// derived from the bit lengths of `n^K` and `q^K`, doubling `K` until the
/// brackets separate.
fn lemma9_compare(num: u64, den: u64, q: u64, n: u64) -> Result<bool> {
    if n == 1 {
        return Ok(true);
    }
    let (num_b, den_b) = (BigUint::from(num), BigUint::from(den));
    let nb = BigUint::from(n);
    let qb = BigUint::from(q);
    if n.is_power_of_two() && q.is_power_of_two() {
        let k = n.trailing_zeros() as u64;
        let f = q.trailing_zeros() as u64;
        let lhs = den_b * BigUint::from(k * k);
        let rhs = num_b * BigUint::from(n) * BigUint::from(f);
        return Ok(lhs < rhs);
    }
    let mut kk: u32 = 1;
    while kk <= 1 << 14 {
        // floor(K log2 n) = bits(n^K) - 1, and likewise for q.
        let m1 = bit_length(&nb.pow(kk)) - 1;
        let m2 = bit_length(&qb.pow(kk)) - 1;
        let (m1, m2, k) = (BigUint::from(m1), BigUint::from(m2), BigUint::from(kk));
        // lhs in [den m1², den (m1+1)²) / K², rhs in [num n m2 K, num n (m2+1) K) / K²
        let lhs_lo = &den_b * &m1 * &m1;
        let lhs_hi = &den_b * (&m1 + 1u32) * (&m1 + 1u32);
        let nk = &num_b * &nb * &k;
        let rhs_lo = &nk * &m2;
        let rhs_hi = &nk * (&m2 + 1u32);
        let lhs_exact = n.is_power_of_two();
        let rhs_exact = q.is_power_of_two();
        let lhs_upper = if lhs_exact { lhs_lo.clone() } else { lhs_hi };
        let rhs_lower = rhs_lo.clone();
        if lhs_upper < rhs_lower || (lhs_exact && !rhs_exact && lhs_upper <= rhs_lower) {
            return Ok(true);
        }
        let rhs_upper = if rhs_exact { rhs_lo } else { rhs_hi };
        if lhs_lo >= rhs_upper {
            return Ok(false);
        }
        kk *= 2;
    }
    Err(Error::Undecided)
}

/// Evaluates `n^(log₂ n) < q^(s·n)` for each `(q, n)` with `s = num/den`.
pub fn lemma9_probe(num: u64, den: u64, pairs: &[(u64, u64)]) -> Result<Vec<bool>> {
    if num == 0 || den == 0 {
        return Err(Error::InvalidInput("s must be a positive rational".into()));
    }
    pairs
        .iter()
        .map(|&(q, n)| {
            if prime_power(q).is_none() {
                return Err(Error::InvalidInput(format!("{q} is not a prime power")));
            }
            if n == 0 {
                return Err(Error::InvalidInput("n must be positive".into()));
            }
            // Fast path: clear separation in floating point.
            let lhs = den as f64 * (n as f64).log2().powi(2);
            let rhs = num as f64 * n as f64 * (q as f64).log2();
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            if (lhs - rhs).abs() > 1e-9 * scale {
                Ok(lhs < rhs)
            } else {
                lemma9_compare(num, den, q, n)
            }
        })
        .collect()
}

/// Smallest `k` with `target | k!`; a lower bound for the degree of any
/// faithful permutation representation of a group of order `target`.
pub fn min_factorial_multiple(target: &BigUint) -> u64 {
    let mut acc = BigUint::one();
    let mut k = 1u64;
    while !(&acc % target).is_zero() {
        k += 1;
        acc *= k;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_factor(mut n: u128) -> Vec<(u128, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factorize(15).unwrap().factors(), &[(3, 1), (5, 1)]);
        assert_eq!(factorize(48).unwrap().factors(), &[(2, 4), (3, 1)]);
        assert_eq!(
            factorize(4095).unwrap().factors(),
            trial_factor(4095).as_slice()
        );
        assert_eq!(
            factorize(4095).unwrap().factors(),
            &[(3, 2), (5, 1), (7, 1), (13, 1)]
        );
        assert!(factorize(1).is_err());
    }

    #[test]
    fn montgomery_matches_plain_multiplication() {
        let n = (1u128 << 127) - 1;
        let mont = Montgomery::new(n);
        for &(a, b) in &[(3u128, 5u128), (n - 1, n - 1), (1 << 100, (1 << 90) + 7)] {
            let m = mont.from_mont(mont.mul(mont.to_mont(a), mont.to_mont(b)));
            assert_eq!(m, mul_mod(a, b, n));
        }
    }

    #[test]
    fn factor_large_semiprimes() {
        let p = 1_000_000_007u128;
        let q = 998_244_353u128;
        assert_eq!(factorize(p * q).unwrap().factors(), &[(q, 1), (p, 1)]);
        // Mersenne numbers past the u64 range.
        let m127 = (1u128 << 127) - 1;
        assert!(is_prime(m127));
        let f = factorize((1u128 << 101) - 1).unwrap();
        assert_eq!(f.reassemble(), (1u128 << 101) - 1);
        assert_eq!(f.factors(), &[(7432339208719, 1), (341117531003194129, 1)]);
        let big = (1u128 << 64) + 13; // 2^64 + 13 is prime
        assert!(is_prime(big));
        assert_eq!(factorize(big * 3).unwrap().factors(), &[(3, 1), (big, 1)]);
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        for n in 0u128..20_000 {
            let brute = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), brute, "n = {n}");
        }
        // strong pseudoprimes to several bases
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(!is_prime(318_665_857_834_031_151_167_461));
    }

    #[test]
    fn lucas_path_rejects_composites_and_accepts_primes() {
        let p = (1u128 << 89) - 1; // prime
        let q = (1u128 << 61) - 1; // prime
        assert!(p > MR_DETERMINISTIC_BOUND);
        assert!(is_prime(p));
        assert!(!is_prime(p * 3));
        assert!(!is_prime(q * q));
        assert!(strong_lucas(p));
    }

    #[test]
    fn ppd_examples() {
        assert_eq!(ppd(2, 4).unwrap(), vec![5]);
        assert!(ppd(2, 6).unwrap().is_empty());
        assert_eq!(ppd(5, 2).unwrap(), vec![3]);
        assert!(ppd(7, 2).unwrap().is_empty());
        assert!(ppd(2, 1).unwrap().is_empty());
        assert_eq!(ppd(3, 1).unwrap(), vec![2]);
        assert!(ppd(1, 3).is_err());
        assert!(matches!(ppd(10, 60), Err(Error::ValueTooLarge(_))));
    }

    #[test]
    fn zsigmondy_examples() {
        assert_eq!(zsigmondy_scan(10, 10).unwrap(), vec![(2, 6)]);
        assert!(zsigmondy_scan(2, 3).unwrap().is_empty());
        assert!(zsigmondy_scan(3, 4).unwrap().is_empty());
    }

    #[test]
    fn lemma8_small_cases() {
        let rows = verify_lemma8(64).unwrap();
        assert!(rows.iter().all(Lemma8Row::passed));
        // n = 7: 9! = 362880 against 2^(155/8) and 3^(95/8)
        assert_eq!(rows[0].n, 7);
        let nine_fact = BigUint::from(362_880u32);
        assert!(nine_fact.pow(8) < BigUint::from(2u32).pow(155));
        assert!(nine_fact.pow(8) < BigUint::from(3u32).pow(95));
        assert!(verify_lemma8(6).is_err());
    }

    #[test]
    fn lemma10_examples() {
        let rows = verify_lemma10(210).unwrap();
        assert!(rows.iter().all(|r| r.passed));
        let get = |n: u64| rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!(get(2).distinct_primes, 1);
        assert_eq!(get(12).distinct_primes, 2);
        assert_eq!(get(210).distinct_primes, 4);
    }

    #[test]
    fn lemma9_examples() {
        let res = lemma9_probe(1, 2, &[(2, 1), (2, 4), (2, 64)]).unwrap();
        assert_eq!(res, vec![true, false, false]);
        // n = 16, q = 2, s = 1: 16^4 = 2^16 vs 2^16 -> equal, so not strictly less
        assert_eq!(lemma9_probe(1, 1, &[(2, 16)]).unwrap(), vec![false]);
        assert_eq!(lemma9_probe(17, 16, &[(2, 16)]).unwrap(), vec![true]);
        assert!(lemma9_probe(1, 2, &[(6, 3)]).is_err());
    }

    #[test]
    fn lemma9_exact_path_matches_float_when_separated() {
        for &(q, n) in &[(3u64, 5u64), (5, 7), (9, 10), (2, 3), (7, 100), (3, 1000)] {
            for &(a, b) in &[(1u64, 2u64), (1, 10), (3, 1)] {
                let exact = lemma9_compare(a, b, q, n).unwrap();
                let f = (b as f64) * (n as f64).log2().powi(2)
                    < (a as f64) * n as f64 * (q as f64).log2();
                assert_eq!(exact, f, "s={a}/{b} q={q} n={n}");
            }
        }
    }

    #[test]
    fn factorial_multiple() {
        assert_eq!(min_factorial_multiple(&BigUint::from(168u32)), 7);
        assert_eq!(min_factorial_multiple(&BigUint::from(660u32)), 11);
        assert_eq!(min_factorial_multiple(&BigUint::from(20160u32)), 8);
    }
}
