use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::oracle::Enumeration;
use super::{
    projective_action, schreier_sims, Bsgs, Permutation, ProjectiveSpace, RngState,
    SchreierSimsOptions,
};
use crate::classical::{standard_generators, Family, GroupSpec, MatrixRep};
use crate::error::{Error, Result};

/// Draws allowed when searching for an element of a given order.
pub const PPD_RETRY_BUDGET: usize = 10_000;

/// Size limits for exhaustive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order that may be enumerated element by element.
    pub enumeration: u128,
    /// Largest permutation degree for the projective action.
    pub degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 200_000,
            degree: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionMode {
    /// Uniform over the full list of involutions (enumerable groups only).
    Uniform,
    /// `g^{|g|/2}` for a uniformly random `g` of even order. Not uniform
    /// over involutions: each class is weighted by how often it arises as
    /// such a power.
    Power,
}

impl InvolutionMode {
    pub fn id(self) -> &'static str {
        match self {
            InvolutionMode::Uniform => "uniform",
            InvolutionMode::Power => "power",
        }
    }
}

impl FromStr for InvolutionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(InvolutionMode::Uniform),
            "power" => Ok(InvolutionMode::Power),
            _ => Err(Error::InvalidInput(format!(
                "unknown involution mode '{s}'"
            ))),
        }
    }
}

/// A simple classical group realised as a permutation group on the
/// 1-spaces of its natural module.
#[derive(Debug)]
pub struct PermGroup {
    spec: GroupSpec,
    rep: MatrixRep,
    space: ProjectiveSpace,
    gens: Vec<Permutation>,
    bsgs: Bsgs,
    order: BigUint,
    orbit_count: usize,
    caps: Caps,
    enumeration: OnceLock<std::result::Result<Arc<Enumeration>, Error>>,
    involutions: OnceLock<std::result::Result<Arc<Vec<usize>>, Error>>,
}

impl PermGroup {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        Self::with_caps(spec, Caps::default())
    }

    pub fn with_caps(spec: &GroupSpec, caps: Caps) -> Result<Self> {
        let rep = standard_generators(spec)?;
        let (space, raw) = projective_action(&rep, caps.degree)?;
        let mut gens: Vec<Permutation> = Vec::new();
        for g in raw {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let expected = spec.group_order();
        let opts = SchreierSimsOptions {
            known_order: Some(expected.clone()),
            ..Default::default()
        };
        let bsgs = schreier_sims(&gens, &opts);
        let order = bsgs.order();
        if order != expected {
            return Err(Error::InvalidSpec(format!(
                "generators of {spec} produce a group of order {order}, expected {expected}"
            )));
        }
        let orbit_count = count_orbits(space.degree(), &gens);
        Ok(PermGroup {
            spec: *spec,
            rep,
            space,
            gens,
            bsgs,
            order,
            orbit_count,
            caps,
            enumeration: OnceLock::new(),
            involutions: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    pub fn rep(&self) -> &MatrixRep {
        &self.rep
    }
    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }
    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }
    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }
    pub fn order(&self) -> &BigUint {
        &self.order
    }
    pub fn degree(&self) -> usize {
        self.space.degree()
    }
    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.bsgs.contains(g)
    }

    pub fn is_enumerable(&self) -> bool {
        self.order <= BigUint::from(self.caps.enumeration)
    }

    /// Uniformly random element.
    pub fn random_element(&self, rng: &mut RngState) -> Permutation {
        self.bsgs.random_element(rng)
    }

    /// All elements, in breadth-first order from the identity over the
    /// standard generators. Computed once and cached.
    pub fn enumerate(&self) -> Result<Arc<Enumeration>> {
        self.enumeration
            .get_or_init(|| {
                if !self.is_enumerable() {
                    return Err(Error::CapExceeded {
                        what: "enumeration size",
                        value: u128::try_from(&self.order).unwrap_or(u128::MAX),
                        cap: self.caps.enumeration,
                    });
                }
                Enumeration::closure(&self.gens, self.degree(), self.caps.enumeration).map(Arc::new)
            })
            .clone()
    }

    /// Indices (into the enumeration) of all involutions.
    pub fn involutions(&self) -> Result<Arc<Vec<usize>>> {
        self.involutions
            .get_or_init(|| {
                let all = self.enumerate()?;
                Ok(Arc::new(
                    all.elements()
                        .iter()
                        .enumerate()
                        .filter(|(_, g)| g.is_involution())
                        .map(|(i, _)| i)
                        .collect(),
                ))
            })
            .clone()
    }

    /// An element of order exactly `r`, for `r` a prime dividing `|G|`.
    /// Linear groups use a conjugated power of a Singer-cycle element; the
    /// other families search random elements.
    pub fn find_ppd_element(&self, r: u128, rng: &mut RngState) -> Result<Permutation> {
        let r64 = u64::try_from(r).map_err(|_| Error::ValueTooLarge(r.to_string()))?;
        if self.spec.family() == Family::Psl {
            if let Ok(m) = self.rep.singer_element(r) {
                let s = self.space.act(&m);
                if s.order() == r64 {
                    let k = 1 + rng.below(r64 as usize - 1) as u64;
                    let g = self.random_element(rng);
                    return Ok(s.pow(k).conjugate_by(&g));
                }
            }
        }
        for _ in 0..PPD_RETRY_BUDGET {
            let g = self.random_element(rng);
            let o = g.order();
            if o.is_multiple_of(r64) {
                return Ok(g.pow(o / r64));
            }
        }
        Err(Error::RetryBudgetExhausted(PPD_RETRY_BUDGET))
    }

    pub fn sample_involution(
        &self,
        mode: InvolutionMode,
        rng: &mut RngState,
    ) -> Result<Permutation> {
        match mode {
            InvolutionMode::Uniform => {
                let inv = self.involutions()?;
                let all = self.enumerate()?;
                Ok(all.elements()[inv[rng.below(inv.len())]].clone())
            }
            InvolutionMode::Power => {
                for _ in 0..PPD_RETRY_BUDGET {
                    let g = self.random_element(rng);
                    let o = g.order();
                    if o.is_multiple_of(2) {
                        return Ok(g.pow(o / 2));
                    }
                }
                Err(Error::RetryBudgetExhausted(PPD_RETRY_BUDGET))
            }
        }
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[Permutation]) -> bool {
        if gens.iter().all(|g| g.is_identity()) {
            return self.order == BigUint::from(1u32);
        }
        if count_orbits(self.degree(), gens) != self.orbit_count {
            return false;
        }
        let opts = SchreierSimsOptions {
            known_order: Some(self.order.clone()),
            ..Default::default()
        };
        schreier_sims(gens, &opts).order() == self.order
    }

    /// `G = ⟨x, y⟩`.
    pub fn generation_test(&self, x: &Permutation, y: &Permutation) -> bool {
        self.generates(&[x.clone(), y.clone()])
    }
}

fn count_orbits(degree: usize, gens: &[Permutation]) -> usize {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut count = degree;
    for g in gens {
        for p in 0..degree {
            let (a, b) = (find(&mut parent, p), find(&mut parent, g.apply(p)));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::Family;

    fn group(f: Family, n: u32, q: u64) -> PermGroup {
        PermGroup::new(&GroupSpec::new(f, n, q).unwrap()).unwrap()
    }

    #[test]
    fn ppd_elements_have_prime_order() {
        let mut rng = RngState::new(5);
        for (f, n, q, r) in [
            (Family::Psl, 2, 4, 5),
            (Family::Psl, 3, 3, 13),
            (Family::Psp, 4, 3, 5),
            (Family::Psu, 3, 3, 7),
        ] {
            let g = group(f, n, q);
            for _ in 0..5 {
                let x = g.find_ppd_element(r, &mut rng).unwrap();
                assert_eq!(x.order(), r as u64);
                assert!(g.contains(&x));
            }
        }
    }

    #[test]
    fn involution_sampling() {
        let g = group(Family::Psl, 2, 7);
        let mut rng = RngState::new(9);
        for mode in [InvolutionMode::Uniform, InvolutionMode::Power] {
            for _ in 0..20 {
                let y = g.sample_involution(mode, &mut rng).unwrap();
                assert!(y.is_involution());
                assert!(g.contains(&y));
            }
        }
        let a = g.sample_involution(InvolutionMode::Uniform, &mut RngState::new(3));
        let b = g.sample_involution(InvolutionMode::Uniform, &mut RngState::new(3));
        assert_eq!(a.unwrap(), b.unwrap());
    }

    #[test]
    fn generation() {
        let g = group(Family::Psl, 2, 7);
        let mut rng = RngState::new(1);
        let x = g.find_ppd_element(7, &mut rng).unwrap();
        assert!(!g.generation_test(&x, &x));
        let mut found = false;
        for _ in 0..50 {
            let y = g
                .sample_involution(InvolutionMode::Uniform, &mut rng)
                .unwrap();
            found |= g.generation_test(&x, &y);
        }
        assert!(found);
    }
}
