use std::sync::Arc;

use super::{Permutation, MAX_DEGREE};
use crate::classical::{Matrix, MatrixRep};
use crate::error::{Error, Result};
use crate::ff::Gf;

/// The 1-spaces of `GF(Q)^n`. Each point is stored with its first nonzero
/// coordinate equal to 1; points are numbered in lexicographic order of
/// these normalized coordinate vectors.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    gf: Arc<Gf>,
    n: usize,
    degree: usize,
    /// `offsets[i]` counts the points whose leading coordinate is after `i`.
    offsets: Vec<usize>,
    powers: Vec<usize>,
    coords: Vec<u32>,
}

impl ProjectiveSpace {
    pub fn new(gf: Arc<Gf>, n: usize, degree_cap: usize) -> Result<Self> {
        let qq = gf.q() as u128;
        let total = (0..n as u32).try_fold(1u128, |acc, _| acc.checked_mul(qq));
        let degree = total.map(|t| (t - 1) / (qq - 1));
        let cap = degree_cap.min(MAX_DEGREE);
        let degree = match degree {
            Some(d) if d <= cap as u128 => d as usize,
            other => {
                return Err(Error::CapExceeded {
                    what: "action degree",
                    value: other.unwrap_or(u128::MAX),
                    cap: cap as u128,
                })
            }
        };
        let q = gf.q() as usize;
        let powers: Vec<usize> = (0..n).map(|k| q.pow(k as u32)).collect();
        let offsets: Vec<usize> = (0..n).map(|i| (powers[n - 1 - i] - 1) / (q - 1)).collect();
        let mut space = ProjectiveSpace {
            gf,
            n,
            degree,
            offsets,
            powers,
            coords: Vec::new(),
        };
        let mut coords = Vec::with_capacity(degree * n);
        for idx in 0..degree {
            coords.extend(space.unrank(idx));
        }
        space.coords = coords;
        Ok(space)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.gf
    }

    /// Normalized coordinates of point `idx`.
    pub fn point(&self, idx: usize) -> &[u32] {
        &self.coords[idx * self.n..(idx + 1) * self.n]
    }

    fn unrank(&self, idx: usize) -> Vec<u32> {
        let n = self.n;
        let lead = (0..n)
            .rev()
            .find(|&i| idx < self.offsets[i] + self.powers[n - 1 - i])
            .expect("index below degree");
        let mut v = vec![0u32; n];
        v[lead] = 1;
        let mut rest = idx - self.offsets[lead];
        let q = self.gf.q() as usize;
        for k in (lead + 1..n).rev() {
            v[k] = (rest % q) as u32;
            rest /= q;
        }
        v
    }

    /// Index of the 1-space spanned by a nonzero vector.
    pub fn rank(&self, v: &[u32]) -> usize {
        let lead = v.iter().position(|&c| c != 0).expect("nonzero vector");
        let gf = &self.gf;
        let s = gf.inv(v[lead]).expect("nonzero");
        let q = gf.q() as usize;
        let mut acc = 0usize;
        for &c in &v[lead + 1..] {
            acc = acc * q + gf.mul(c, s) as usize;
        }
        self.offsets[lead] + acc
    }

    /// The permutation induced on points by `v ↦ vM`.
    pub fn act(&self, m: &Matrix) -> Permutation {
        let mut images = Vec::with_capacity(self.degree);
        let mut buf = vec![0u32; self.n];
        for idx in 0..self.degree {
            m.apply_into(self.point(idx), &self.gf, &mut buf);
            images.push(self.rank(&buf) as u16);
        }
        Permutation::from_raw(images)
    }
}

/// The generators of `rep` acting on the 1-spaces of the natural module.
pub fn projective_action(
    rep: &MatrixRep,
    degree_cap: usize,
) -> Result<(ProjectiveSpace, Vec<Permutation>)> {
    let space = ProjectiveSpace::new(rep.field().clone(), rep.n(), degree_cap)?;
    let gens = rep.generators().iter().map(|m| space.act(m)).collect();
    Ok((space, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{standard_generators, Family, GroupSpec};

    #[test]
    fn degrees() {
        let cases = [
            (Family::Psl, 2, 7, 8),
            (Family::Psp, 4, 3, 40),
            (Family::Psu, 3, 3, 91),
            (Family::Psl, 12, 2, 4095),
        ];
        for (f, n, q, d) in cases {
            let spec = GroupSpec::new(f, n, q).unwrap();
            let rep = standard_generators(&spec).unwrap();
            let (space, gens) = projective_action(&rep, 10_000).unwrap();
            assert_eq!(space.degree(), d);
            assert!(gens.iter().all(|g| g.degree() == d));
        }
    }

    #[test]
    fn rank_inverts_unrank_and_order_is_lexicographic() {
        let gf = Arc::new(Gf::new(3, 1).unwrap());
        let space = ProjectiveSpace::new(gf.clone(), 3, 100).unwrap();
        assert_eq!(space.degree(), 13);
        let pts: Vec<Vec<u32>> = (0..13).map(|i| space.point(i).to_vec()).collect();
        assert_eq!(pts[0], vec![0, 0, 1]);
        assert_eq!(pts[1], vec![0, 1, 0]);
        assert_eq!(pts[12], vec![1, 2, 2]);
        for w in pts.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(space.rank(p), i);
            let scaled: Vec<u32> = p.iter().map(|&c| gf.mul(c, 2)).collect();
            assert_eq!(space.rank(&scaled), i);
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let gf = Arc::new(Gf::new(2, 1).unwrap());
        assert!(matches!(
            ProjectiveSpace::new(gf, 15, 10_000),
            Err(Error::CapExceeded { .. })
        ));
    }
}
