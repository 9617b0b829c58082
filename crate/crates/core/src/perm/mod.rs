//! Permutation groups: the projective action of the classical groups,
//! Schreier–Sims, random elements and exhaustive oracles.

mod bsgs;
mod group;
mod oracle;
mod projective;
mod random;

pub use bsgs::{schreier_sims, Bsgs, SchreierSimsOptions};
pub use group::{Caps, InvolutionMode, PermGroup, PPD_RETRY_BUDGET};
pub use oracle::{
    count_involutions, normalizer_order_bruteforce, symmetric_normalizer, Enumeration,
    SYMMETRIC_SCAN_DEGREE,
};
pub use projective::{projective_action, ProjectiveSpace};
pub use random::{derive_seed, ProductReplacement, RngState};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported action degree.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A permutation of `{0, …, d-1}` stored by images. Products compose left
/// to right: `a * b` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE);
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d > MAX_DEGREE {
            return Err(Error::CapExceeded {
                what: "permutation degree",
                value: d as u128,
                cap: MAX_DEGREE as u128,
            });
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput("images are not a bijection".into()));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        Permutation { images }
    }

    /// Build from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidInput(format!("point {a} out of range")));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// In-place `self = self * other`.
    #[inline]
    pub fn mul_assign(&mut self, other: &Permutation) {
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result.mul_assign(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lcm = 1u64;
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lcm = num_integer::lcm(lcm, len);
        }
        lcm
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &v)| self.images[v as usize] as usize == i)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation on 0-based points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        Permutation::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orders_and_cycles() {
        assert_eq!(Permutation::identity(5).order(), 1);
        let seven = Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(seven.order(), 7);
        let six = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(six.order(), 6);
        assert_eq!(six.to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(six.pow(3).is_involution());
        assert!(six.pow(6).is_identity());
    }

    #[test]
    fn products_apply_left_factor_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    fn perm_strategy(d: usize) -> impl Strategy<Value = Permutation> {
        Just((0..d).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
            prop_assert!(a.pow(a.order()).is_identity());
        }
    }
}
