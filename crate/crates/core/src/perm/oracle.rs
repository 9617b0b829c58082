use std::collections::HashSet;

use indexmap::IndexSet;

use super::Permutation;
use crate::error::{Error, Result};

/// Every element of a permutation group, in breadth-first order from the
/// identity.
#[derive(Debug, Clone)]
pub struct Enumeration {
    elements: IndexSet<Permutation>,
}

impl Enumeration {
    /// Closure of `gens` under right multiplication; fails once more than
    /// `cap` elements have been found.
    pub fn closure(gens: &[Permutation], degree: usize, cap: u128) -> Result<Self> {
        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        let mut k = 0;
        while k < elements.len() {
            for s in gens {
                let h = elements[k].mul(s);
                elements.insert(h);
            }
            if elements.len() as u128 > cap {
                return Err(Error::CapExceeded {
                    what: "enumeration size",
                    value: elements.len() as u128,
                    cap,
                });
            }
            k += 1;
        }
        Ok(Enumeration { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &IndexSet<Permutation> {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.get_index_of(g)
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }
}

/// Number of elements of order 2.
pub fn count_involutions(all: &Enumeration) -> usize {
    all.elements.iter().filter(|g| g.is_involution()).count()
}

/// `|N_G(⟨x⟩)|` by testing `g⁻¹⟨x⟩g = ⟨x⟩` for every `g`.
pub fn normalizer_order_bruteforce(all: &Enumeration, x: &Permutation) -> usize {
    let mut cyclic: HashSet<Permutation> = HashSet::new();
    let mut p = Permutation::identity(x.degree());
    loop {
        p = p.mul(x);
        if !cyclic.insert(p.clone()) {
            break;
        }
    }
    all.elements
        .iter()
        .filter(|g| cyclic.contains(&x.conjugate_by(g)))
        .count()
}

/// Largest degree for which [`symmetric_normalizer`] walks all of `S_d`.
pub const SYMMETRIC_SCAN_DEGREE: usize = 9;

/// Every `σ ∈ S_d` with `σ⁻¹gσ` in the group for each generator `g`, found
/// by scanning all `d!` permutations. When every automorphism of the group
/// is induced from `S_d` (as for `A₅` on 5 points and `PSL₂(7)` on 8), this
/// lists the automorphism group, up to the centralizer.
pub fn symmetric_normalizer(
    gens: &[Permutation],
    contains: impl Fn(&Permutation) -> bool,
) -> Result<Vec<Permutation>> {
    let d = gens.first().map_or(0, |g| g.degree());
    if d > SYMMETRIC_SCAN_DEGREE {
        return Err(Error::CapExceeded {
            what: "symmetric scan degree",
            value: d as u128,
            cap: SYMMETRIC_SCAN_DEGREE as u128,
        });
    }
    let mut images: Vec<u16> = (0..d as u16).collect();
    let mut out = Vec::new();
    loop {
        let sigma = Permutation::from_raw(images.clone());
        if gens.iter().all(|g| contains(&g.conjugate_by(&sigma))) {
            out.push(sigma);
        }
        // next permutation in lexicographic order
        let Some(i) = (1..d).rev().find(|&i| images[i - 1] < images[i]) else {
            break;
        };
        let j = (i..d).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
    }
    Ok(out)
}
