//! Cubic Cayley graphs `Cay(G, {x, x⁻¹, y})`, their vertex stabilizers,
//! and the generation / `Aut(G, S)` criterion for being a GRR.

pub mod automorphism;
mod cayley;
mod extension;

pub use cayley::{build_cayley, Connection, CubicCayleyGraph};
pub use extension::{
    aut_gs_trivial, extends_by_diagonal, extends_by_enumeration, extends_to_automorphism,
    DIAGONAL_IDLE_SIFTS,
};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::GroupSpec;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Order of the stabilizer of vertex 0 (the identity) in `Aut(Γ)`.
pub fn aut_stabilizer_order(graph: &CubicCayleyGraph) -> Result<u128> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(automorphism::vertex_stabilizer_order(graph.adjacency(), 0))
}

/// Vertex stabilizer of a possibly disconnected Cayley graph. Its `c`
/// components are isomorphic copies of one component `Γ₀`, so
/// `|Aut(Γ)| = |Aut(Γ₀)|^c · c!`.
fn stabilizer_with_components(graph: &CubicCayleyGraph) -> BigUint {
    let h = graph.component_sizes()[0];
    let c = graph.component_count();
    let component = &graph.adjacency()[..h];
    let s = BigUint::from(automorphism::vertex_stabilizer_order(component, 0));
    let aut_component = &s * BigUint::from(h);
    let mut total = s * aut_component.pow(c as u32 - 1);
    for k in 2..c {
        total *= BigUint::from(k);
    }
    total
}

/// Outcome of the GRR test for one connection set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrrVerdict {
    pub connected: bool,
    /// Number of components, when the graph was built.
    pub components: Option<u64>,
    #[serde(with = "crate::decimal::option")]
    pub aut_order: Option<BigUint>,
    #[serde(with = "crate::decimal::option")]
    pub stabilizer_order: Option<BigUint>,
    /// `None` when the group is too large to build the graph.
    pub is_grr: Option<bool>,
    /// `G = ⟨x, y⟩`.
    pub k_holds: bool,
    /// `Aut(G, S) = 1`; only evaluated when `k_holds`.
    pub l_holds: Option<bool>,
    /// No proper subgroup of index at most 47, so that `k ∧ l` decides GRR.
    pub godsil_applicable: bool,
}

impl GrrVerdict {
    pub fn k_and_l(&self) -> bool {
        self.k_holds && self.l_holds == Some(true)
    }

    /// `is_grr ⇒ k ∧ l`, and `¬k ⇒` disconnected.
    pub fn necessity_holds(&self) -> bool {
        (self.is_grr != Some(true) || self.k_and_l()) && (self.k_holds || !self.connected)
    }
}

pub fn grr_verdict(group: &PermGroup, x: &Permutation, y: &Permutation) -> Result<GrrVerdict> {
    cayley::check_connection_set(x, y)?;
    let k_holds = group.generation_test(x, y);
    let l_holds = if k_holds {
        Some(aut_gs_trivial(group, x, y)?)
    } else {
        None
    };
    let godsil_applicable = group.spec().godsil_hypothesis().unwrap_or(false);
    if !group.is_enumerable() {
        return Ok(GrrVerdict {
            connected: k_holds,
            components: None,
            aut_order: None,
            stabilizer_order: None,
            is_grr: None,
            k_holds,
            l_holds,
            godsil_applicable,
        });
    }
    let graph = build_cayley(group, x, y)?;
    let stabilizer = if graph.is_connected() {
        BigUint::from(aut_stabilizer_order(&graph)?)
    } else {
        stabilizer_with_components(&graph)
    };
    Ok(GrrVerdict {
        connected: graph.is_connected(),
        components: Some(graph.component_count() as u64),
        aut_order: Some(group.order() * &stabilizer),
        is_grr: Some(stabilizer.is_one()),
        stabilizer_order: Some(stabilizer),
        k_holds,
        l_holds,
        godsil_applicable,
    })
}

#[derive(Debug, Clone, Default)]
pub struct ExhaustOptions {
    /// Restrict `x` to these orders; all orders above 2 when `None`.
    pub x_orders: Option<Vec<u64>>,
    /// Take one `x` per class of `{x, x⁻¹}` under conjugation instead of
    /// every element. Conjugating `S` does not change the graph up to
    /// isomorphism, so the verdicts are the same.
    pub representatives: bool,
}

/// Aggregate over all pairs with a given order of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustRow {
    pub x_order: u64,
    pub x_count: usize,
    pub pairs: usize,
    pub generating: usize,
    pub grr: usize,
    pub k_and_l: usize,
    pub min_stabilizer: Option<u128>,
    pub max_stabilizer: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustReport {
    pub spec: GroupSpec,
    pub representatives: bool,
    pub involutions: usize,
    pub rows: Vec<ExhaustRow>,
    /// Pairs breaking `is_grr ⇒ k ∧ l` or `¬k ⇒ disconnected`.
    pub necessity_violations: usize,
    pub godsil_applicable: bool,
}

impl ExhaustReport {
    pub fn grr_count(&self) -> usize {
        self.rows.iter().map(|r| r.grr).sum()
    }
}

fn choose_x(group: &PermGroup, opts: &ExhaustOptions) -> Result<Vec<Permutation>> {
    let all = group.enumerate()?;
    let wanted = |g: &Permutation| {
        let o = g.order();
        o > 2 && opts.x_orders.as_ref().is_none_or(|v| v.contains(&o))
    };
    if !opts.representatives {
        return Ok(all
            .elements()
            .iter()
            .filter(|g| wanted(g))
            .cloned()
            .collect());
    }
    let mut covered = vec![false; all.len()];
    let mut reps = Vec::new();
    for (i, x) in all.elements().iter().enumerate() {
        if covered[i] || !wanted(x) {
            continue;
        }
        let xi = x.inverse();
        for t in all.elements() {
            for z in [x.conjugate_by(t), xi.conjugate_by(t)] {
                if let Some(j) = all.index_of(&z) {
                    covered[j] = true;
                }
            }
        }
        reps.push(x.clone());
    }
    Ok(reps)
}

/// Verdicts for every pair `(x, y)` with `y` an involution.
pub fn exhaust(group: &PermGroup, opts: &ExhaustOptions) -> Result<ExhaustReport> {
    let all = group.enumerate()?;
    let involutions: Vec<Permutation> = group
        .involutions()?
        .iter()
        .map(|&i| all.get(i).clone())
        .collect();
    let xs = choose_x(group, opts)?;
    let verdicts: Vec<(u64, Vec<GrrVerdict>)> = xs
        .par_iter()
        .map(|x| {
            let v = involutions
                .iter()
                .map(|y| grr_verdict(group, x, y))
                .collect::<Result<Vec<_>>>()?;
            Ok((x.order(), v))
        })
        .collect::<Result<_>>()?;
    let mut rows: BTreeMap<u64, ExhaustRow> = BTreeMap::new();
    let mut violations = 0;
    for (order, vs) in &verdicts {
        let row = rows.entry(*order).or_insert_with(|| ExhaustRow {
            x_order: *order,
            x_count: 0,
            pairs: 0,
            generating: 0,
            grr: 0,
            k_and_l: 0,
            min_stabilizer: None,
            max_stabilizer: None,
        });
        row.x_count += 1;
        for v in vs {
            row.pairs += 1;
            violations += usize::from(!v.necessity_holds());
            if !v.k_holds {
                continue;
            }
            row.generating += 1;
            row.grr += usize::from(v.is_grr == Some(true));
            row.k_and_l += usize::from(v.k_and_l());
            if let Some(s) = v
                .stabilizer_order
                .as_ref()
                .and_then(|s| u128::try_from(s).ok())
            {
                row.min_stabilizer = Some(row.min_stabilizer.map_or(s, |m| m.min(s)));
                row.max_stabilizer = Some(row.max_stabilizer.map_or(s, |m| m.max(s)));
            }
        }
    }
    Ok(ExhaustReport {
        spec: *group.spec(),
        representatives: opts.representatives,
        involutions: involutions.len(),
        rows: rows.into_values().collect(),
        necessity_violations: violations,
        godsil_applicable: group.spec().godsil_hypothesis().unwrap_or(false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::Family;
    use crate::perm::{InvolutionMode, RngState};

    #[test]
    fn psl27_has_no_grr_with_one_involution() {
        let g = PermGroup::new(&GroupSpec::new(Family::Psl, 2, 7).unwrap()).unwrap();
        let report = exhaust(
            &g,
            &ExhaustOptions {
                representatives: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report.involutions, 21);
        assert_eq!(report.grr_count(), 0);
        assert_eq!(report.necessity_violations, 0);
        assert!(!report.godsil_applicable);
        let orders: Vec<u64> = report.rows.iter().map(|r| r.x_order).collect();
        assert_eq!(orders, vec![3, 4, 7]);
        assert!(report
            .rows
            .iter()
            .all(|r| r.min_stabilizer.unwrap_or(2) > 1));
    }

    #[test]
    fn verdict_invariants() {
        let g = PermGroup::new(&GroupSpec::new(Family::Psl, 3, 3).unwrap()).unwrap();
        let mut rng = RngState::new(23);
        for _ in 0..10 {
            let x = g.find_ppd_element(13, &mut rng).unwrap();
            let y = g
                .sample_involution(InvolutionMode::Uniform, &mut rng)
                .unwrap();
            let v = grr_verdict(&g, &x, &y).unwrap();
            assert_eq!(
                v.aut_order.clone().unwrap(),
                g.order() * v.stabilizer_order.clone().unwrap()
            );
            assert_eq!(
                v.is_grr,
                Some(v.stabilizer_order.as_ref().unwrap().is_one())
            );
            assert_eq!(v.connected, v.k_holds);
            assert!(v.necessity_holds());
            if v.k_holds && v.l_holds == Some(false) {
                assert_ne!(v.is_grr, Some(true));
            }
        }
    }

    #[test]
    fn disconnected_stabilizer_counts_components() {
        let g = PermGroup::new(&GroupSpec::new(Family::Psl, 2, 4).unwrap()).unwrap();
        let mut rng = RngState::new(2);
        let x = g.find_ppd_element(5, &mut rng).unwrap();
        // y inverting x generates D₁₀, whose Cayley graph is a pentagonal prism
        let all = g.enumerate().unwrap();
        let y = g
            .involutions()
            .unwrap()
            .iter()
            .map(|&i| all.get(i).clone())
            .find(|y| x.conjugate_by(y) == x.inverse())
            .unwrap();
        let v = grr_verdict(&g, &x, &y).unwrap();
        assert!(!v.k_holds && !v.connected);
        assert_eq!(v.components, Some(6));
        // the pentagonal prism has 20 automorphisms, stabilizer 2
        let expected = BigUint::from(2u32) * BigUint::from(20u32).pow(5) * BigUint::from(120u32);
        assert_eq!(v.stabilizer_order.unwrap(), expected);
    }
}
