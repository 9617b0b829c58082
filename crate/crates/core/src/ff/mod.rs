//! Finite fields GF(p^f) in a polynomial basis.
//!
//! [`Field`] is the general representation (dense coefficient vectors, any
//! size up to [`FIELD_CAP`]). [`Gf`] is a table-driven copy of a small field
//! with `u32` element codes, used by the matrix and permutation code.

mod gf;
pub mod poly;

pub use gf::{Gf, GF_TABLE_CAP};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numthy::{factorize, is_prime};

/// Largest field size accepted by [`Field::new`].
pub const FIELD_CAP: u128 = 1 << 100;

/// Minimal field interface shared by the prime field, [`Field`] and [`Gf`].
///
/// `from_index` enumerates the elements in the canonical order: the index is
/// the integer whose base-p digits are the polynomial-basis coefficients.
pub trait FieldArith {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn size(&self) -> u128;
    fn from_index(&self, i: u128) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// Z/p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p as u128) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl FieldArith for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if (*a).is_multiple_of(self.p) {
            return None;
        }
        Some(crate::numthy::pow_mod(*a as u128, self.p as u128 - 2, self.p as u128) as u64)
    }
    fn size(&self) -> u128 {
        self.p as u128
    }
    fn from_index(&self, i: u128) -> u64 {
        (i % self.p as u128) as u64
    }
}

/// An element of GF(p^f): `f` coefficients over Z/p, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }
}

/// GF(p^f) with a fixed monic irreducible modulus of degree `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    prime: PrimeField,
    f: u32,
    q: u128,
    modulus: Vec<u64>,
}

impl Field {
    /// Builds GF(p^f) with the lexicographically least irreducible modulus.
    /// For `f = 1` the modulus is `t` and arithmetic is that of Z/p.
    pub fn new(p: u64, f: u32) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if f == 0 {
            return Err(Error::InvalidInput("field degree must be >= 1".into()));
        }
        let q = (p as u128)
            .checked_pow(f)
            .filter(|&q| q <= FIELD_CAP)
            .ok_or(Error::CapExceeded {
                what: "field size",
                value: u128::MAX,
                cap: FIELD_CAP,
            })?;
        let modulus = find_irreducible(p, f as usize)?;
        Ok(Field {
            prime,
            f,
            q,
            modulus,
        })
    }

    pub fn p(&self) -> u64 {
        self.prime.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u128 {
        self.q
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        self.prime
    }

    fn pad(&self, mut c: Vec<u64>) -> FieldElement {
        c.resize(self.f as usize, 0);
        FieldElement { coeffs: c }
    }

    pub fn element(&self, index: u128) -> FieldElement {
        let p = self.prime.p as u128;
        let mut rest = index % self.q;
        let coeffs = (0..self.f)
            .map(|_| {
                let d = (rest % p) as u64;
                rest /= p;
                d
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn index(&self, x: &FieldElement) -> u128 {
        let p = self.prime.p as u128;
        x.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * p + c as u128)
    }

    /// The class of `t`; equal to the constant 0 when `f = 1`.
    pub fn t(&self) -> FieldElement {
        let reduced = poly::rem(&self.prime, &[0, 1], &self.modulus);
        self.pad(reduced)
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        let c = x.coeffs.iter().map(|c| self.prime.sub(&0, c)).collect();
        FieldElement { coeffs: c }
    }

    pub fn inverse(&self, x: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.q - 2))
    }

    pub fn pow(&self, x: &FieldElement, e: u128) -> FieldElement {
        let mut base = x.coeffs.clone();
        poly::trim(&self.prime, &mut base);
        self.pad(poly::pow_mod(&self.prime, &base, e, &self.modulus))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: &FieldElement) -> Result<u128> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        if n == 1 {
            return Ok(1);
        }
        let mut ord = n;
        for l in factorize(n)?.primes() {
            while ord.is_multiple_of(l) && self.pow(x, ord / l) == self.one() {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// The first element, in index order, whose multiplicative order is q−1.
    pub fn multiplicative_generator(&self) -> FieldElement {
        let n = self.q - 1;
        let primes: Vec<u128> = if n > 1 {
            factorize(n).expect("n >= 2").primes().collect()
        } else {
            Vec::new()
        };
        let one = self.one();
        (1..self.q)
            .map(|i| self.element(i))
            .find(|x| primes.iter().all(|&l| self.pow(x, n / l) != one))
            .expect("finite fields have cyclic unit groups")
    }
}

impl FieldArith for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.f as usize],
        }
    }
    fn one(&self) -> FieldElement {
        self.pad(vec![1])
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let c = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| self.prime.add(x, y))
            .collect();
        FieldElement { coeffs: c }
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let c = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| self.prime.sub(x, y))
            .collect();
        FieldElement { coeffs: c }
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.pad(poly::mul_mod(
            &self.prime,
            &a.coeffs,
            &b.coeffs,
            &self.modulus,
        ))
    }
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        self.inverse(a).ok()
    }
    fn size(&self) -> u128 {
        self.q
    }
    fn from_index(&self, i: u128) -> FieldElement {
        self.element(i)
    }
}

/// Least monic irreducible polynomial of degree `d` over Z/p.
pub fn find_irreducible(p: u64, d: usize) -> Result<Vec<u64>> {
    if d == 0 {
        return Err(Error::InvalidInput("degree must be >= 1".into()));
    }
    let prime = PrimeField::new(p)?;
    Ok(poly::find_irreducible(&prime, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn moduli() {
        assert_eq!(Field::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(find_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(find_irreducible(5, 1).unwrap(), vec![0, 1]);
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 0).is_err());
        assert!(Field::new(2, 101).is_err());
    }

    #[test]
    fn gf4_arithmetic() {
        let f = Field::new(2, 2).unwrap();
        let t = f.t();
        let t_plus_1 = f.add(&t, &f.one());
        assert_eq!(f.mul(&t, &t), t_plus_1);
        assert_eq!(f.inverse(&t).unwrap(), t_plus_1);
        assert_eq!(f.inverse(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn generators() {
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(gf4.multiplicative_generator(), gf4.t());
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(gf2.multiplicative_generator(), gf2.one());
        let gf9 = Field::new(3, 2).unwrap();
        let g = gf9.multiplicative_generator();
        assert_eq!(g, gf9.add(&gf9.t(), &gf9.one()));
        // exhaustive order check over the 8 units
        let orders: Vec<u128> = (1..9)
            .map(|i| gf9.element_order(&gf9.element(i)).unwrap())
            .collect();
        assert_eq!(orders.iter().filter(|&&o| o == 8).count(), 4);
        assert_eq!(gf9.element_order(&g).unwrap(), 8);
        for &(p, f) in &[(2u64, 8u32), (3, 5), (5, 3), (7, 2), (13, 1), (2, 20)] {
            let field = Field::new(p, f).unwrap();
            let g = field.multiplicative_generator();
            assert_eq!(field.element_order(&g).unwrap(), field.order() - 1);
        }
    }

    #[test]
    fn big_field_lagrange() {
        let f = Field::new(1_000_003, 3).unwrap();
        let x = f.element(123_456_789_012);
        assert_eq!(f.pow(&x, f.order() - 1), f.one());
    }

    fn field_strategy() -> impl Strategy<Value = (Field, u128, u128, u128)> {
        prop_oneof![
            Just((2u64, 1u32)),
            Just((2, 4)),
            Just((3, 3)),
            Just((5, 2)),
            Just((7, 1)),
            Just((2, 9)),
        ]
        .prop_flat_map(|(p, f)| {
            let field = Field::new(p, f).unwrap();
            let q = field.order();
            (Just(field), 0..q, 0..q, 0..q)
        })
    }

    proptest! {
        #[test]
        fn field_axioms((f, a, b, c) in field_strategy()) {
            let (a, b, c) = (f.element(a), f.element(b), f.element(c));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            if !f.is_zero(&a) {
                prop_assert_eq!(f.mul(&a, &f.inverse(&a).unwrap()), f.one());
                prop_assert_eq!(f.pow(&a, f.order() - 1), f.one());
            }
            // Frobenius is a ring homomorphism
            let p = f.p() as u128;
            prop_assert_eq!(f.pow(&f.add(&a, &b), p), f.add(&f.pow(&a, p), &f.pow(&b, p)));
            prop_assert_eq!(f.pow(&f.mul(&a, &b), p), f.mul(&f.pow(&a, p), &f.pow(&b, p)));
            prop_assert_eq!(f.element(f.index(&a)), a);
        }
    }
}
