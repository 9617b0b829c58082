use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::{schreier_sims, Enumeration, PermGroup, Permutation, SchreierSimsOptions};

/// Cheap invariants any automorphism carrying `(x, y)` to `(x2, y2)` keeps.
fn orders_match(x: &Permutation, y: &Permutation, x2: &Permutation, y2: &Permutation) -> bool {
    x.order() == x2.order()
        && y.order() == y2.order()
        && x.mul(y).order() == x2.mul(y2).order()
        && x.mul(&y.inverse()).order() == x2.mul(&y2.inverse()).order()
}

/// Breadth-first over the enumerated group, setting `φ(g·s) = φ(g)·s'` and
/// failing on the first clash; then checks that `φ` is a bijection.
pub fn extends_by_enumeration(
    all: &Enumeration,
    (x, y): (&Permutation, &Permutation),
    (x2, y2): (&Permutation, &Permutation),
) -> bool {
    let n = all.len();
    let steps = [
        (x.clone(), x2.clone()),
        (x.inverse(), x2.inverse()),
        (y.clone(), y2.clone()),
    ];
    let Some(root) = all.index_of(&Permutation::identity(x.degree())) else {
        return false;
    };
    let mut phi = vec![u32::MAX; n];
    phi[root] = root as u32;
    let mut queue = vec![root];
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        let g = all.get(i);
        let image = all.get(phi[i] as usize);
        for (s, t) in &steps {
            let Some(j) = all.index_of(&g.mul(s)) else {
                return false;
            };
            let Some(k) = all.index_of(&image.mul(t)) else {
                return false;
            };
            if phi[j] == u32::MAX {
                phi[j] = k as u32;
                queue.push(j);
            } else if phi[j] != k as u32 {
                return false;
            }
        }
    }
    if queue.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    phi.iter()
        .all(|&k| !std::mem::replace(&mut hit[k as usize], true))
}

/// Random sifts without a change before the diagonal route accepts `|D| = |G|`
/// when not verifying exhaustively.
pub const DIAGONAL_IDLE_SIFTS: usize = 64;

/// The subgroup `D = ⟨(x, x2), (y, y2)⟩ ≤ G × G` has order `|G|` exactly
/// when `x ↦ x2, y ↦ y2` is a well-defined homomorphism; it is then an
/// automorphism iff `x2, y2` generate `G`.
///
/// A `false` answer is always certified (`|D| > |G|`). With `exact` off, a
/// `true` answer rests on [`DIAGONAL_IDLE_SIFTS`] random elements of `D`
/// sifting through a chain of order `|G|`.
pub fn extends_by_diagonal(
    group: &PermGroup,
    (x, y): (&Permutation, &Permutation),
    (x2, y2): (&Permutation, &Permutation),
    exact: bool,
) -> bool {
    let d = x.degree();
    let pair = |a: &Permutation, b: &Permutation| {
        let mut images: Vec<usize> = a.images().iter().map(|&i| i as usize).collect();
        images.extend(b.images().iter().map(|&i| d + i as usize));
        Permutation::from_images(images)
    };
    let (Ok(gx), Ok(gy)) = (pair(x, x2), pair(y, y2)) else {
        return false;
    };
    let order: &BigUint = group.order();
    let opts = SchreierSimsOptions {
        stop_above: Some(order.clone()),
        base_prefix: group.bsgs().base(),
        verify: exact,
        max_idle: if exact { 24 } else { DIAGONAL_IDLE_SIFTS },
        ..Default::default()
    };
    let diag = schreier_sims(&[gx, gy], &opts);
    diag.is_complete() && &diag.order() == order && group.generation_test(x2, y2)
}

/// Whether `x ↦ x2, y ↦ y2` extends to an automorphism of `G = ⟨x, y⟩`.
/// Enumerable groups use the breadth-first route, larger ones the diagonal
/// subgroup order without exhaustive verification.
pub fn extends_to_automorphism(
    group: &PermGroup,
    (x, y): (&Permutation, &Permutation),
    (x2, y2): (&Permutation, &Permutation),
) -> Result<bool> {
    if !group.generation_test(x, y) {
        return Err(Error::NotGenerating);
    }
    if !group.contains(x2) || !group.contains(y2) {
        return Err(Error::InvalidInput(
            "target images are not in the group".into(),
        ));
    }
    if !orders_match(x, y, x2, y2) {
        return Ok(false);
    }
    if group.is_enumerable() {
        let all = group.enumerate()?;
        Ok(extends_by_enumeration(&all, (x, y), (x2, y2)))
    } else {
        Ok(extends_by_diagonal(group, (x, y), (x2, y2), false))
    }
}

/// `Aut(G, {x, x⁻¹, y}) = 1`. With `x` of order above 2 and `y` the only
/// involution in the set, a nontrivial member must fix `y` and invert `x`.
pub fn aut_gs_trivial(group: &PermGroup, x: &Permutation, y: &Permutation) -> Result<bool> {
    super::cayley::check_connection_set(x, y)?;
    Ok(!extends_to_automorphism(group, (x, y), (&x.inverse(), y))?)
}
