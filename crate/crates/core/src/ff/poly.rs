//! Dense univariate polynomials over any [`FieldArith`], little-endian
//! coefficient vectors with no trailing zeros (the zero polynomial is empty).

use super::FieldArith;

pub type Poly<E> = Vec<E>;

pub fn trim<F: FieldArith>(field: &F, p: &mut Poly<F::Elem>) {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
}

pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn sub<F: FieldArith>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
        out.push(field.sub(&x, &y));
    }
    trim(field, &mut out);
    out
}

pub fn mul<F: FieldArith>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &t);
        }
    }
    trim(field, &mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem<F: FieldArith>(field: &F, a: &[F::Elem], m: &[F::Elem]) -> Poly<F::Elem> {
    let dm = degree(m).expect("division by the zero polynomial");
    let mut r: Poly<F::Elem> = a.to_vec();
    trim(field, &mut r);
    let lead_inv = field.inv(&m[dm]).expect("nonzero leading coefficient");
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = field.mul(&r[dr], &lead_inv);
        let shift = dr - dm;
        for (i, mc) in m.iter().enumerate() {
            let t = field.mul(&c, mc);
            r[shift + i] = field.sub(&r[shift + i], &t);
        }
        trim(field, &mut r);
    }
    r
}

pub fn mul_mod<F: FieldArith>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Poly<F::Elem> {
    rem(field, &mul(field, a, b), m)
}

pub fn pow_mod<F: FieldArith>(
    field: &F,
    base: &[F::Elem],
    mut exp: u128,
    m: &[F::Elem],
) -> Poly<F::Elem> {
    let mut result = rem(field, &[field.one()], m);
    let mut b = rem(field, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(field, &result, &b, m);
        }
        exp >>= 1;
        if exp > 0 {
            b = mul_mod(field, &b, &b, m);
        }
    }
    result
}

pub fn gcd<F: FieldArith>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(field, &mut x);
    trim(field, &mut y);
    while !y.is_empty() {
        let r = rem(field, &x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        let inv = field.inv(&lead).expect("nonzero");
        for c in x.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
    x
}

/// Rabin-style test: a polynomial of degree `d` is irreducible iff it has no
/// common factor with `x^(q^i) − x` for `1 ≤ i ≤ d/2`.
pub fn is_irreducible<F: FieldArith>(field: &F, f: &[F::Elem]) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly<F::Elem> = vec![field.zero(), field.one()];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = pow_mod(field, &h, field.size(), f);
        let g = gcd(field, f, &sub(field, &h, &x));
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The lexicographically least monic irreducible polynomial of degree `d`:
/// candidates are ordered by the integer whose base-q digits are the lower
/// coefficients, constant term least significant.
pub fn find_irreducible<F: FieldArith>(field: &F, d: usize) -> Poly<F::Elem> {
    assert!(d >= 1);
    let q = field.size();
    let mut idx: u128 = 0;
    loop {
        let mut cand = Vec::with_capacity(d + 1);
        let mut rest = idx;
        for _ in 0..d {
            cand.push(field.from_index(rest % q));
            rest /= q;
        }
        cand.push(field.one());
        if is_irreducible(field, &cand) {
            return cand;
        }
        idx += 1;
    }
}
