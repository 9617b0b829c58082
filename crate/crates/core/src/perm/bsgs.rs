use num_bigint::BigUint;
use num_traits::One;

use super::{Permutation, ProductReplacement, RngState};

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Indices into the strong generating set of the generators fixing all
    /// earlier base points.
    gens: Vec<usize>,
    /// Schreier vector: for each orbit point, the generator whose image
    /// first reached it (or `ROOT` at the base point).
    tree: Vec<u32>,
    orbit: Vec<u16>,
}

#[derive(Debug, Clone)]
pub struct SchreierSimsOptions {
    /// An upper bound on the group order; the computation stops, with an
    /// exact result, as soon as the lower bound reaches it.
    pub known_order: Option<BigUint>,
    /// Stop (with an incomplete structure) once the order is known to
    /// exceed this value.
    pub stop_above: Option<BigUint>,
    pub seed: u64,
    /// Consecutive random elements sifting to the identity before the
    /// random phase ends and Schreier generators are checked exhaustively.
    pub max_idle: usize,
    /// Points preferred, in order, when a new base point is needed.
    pub base_prefix: Vec<usize>,
    /// Run the exhaustive Schreier-generator check after the random phase.
    /// Without it the result is a subgroup chain whose order is a lower
    /// bound, wrong only if `max_idle` random elements all sifted through
    /// a proper subgroup.
    pub verify: bool,
}

impl Default for SchreierSimsOptions {
    fn default() -> Self {
        SchreierSimsOptions {
            known_order: None,
            stop_above: None,
            seed: 0,
            max_idle: 24,
            base_prefix: Vec::new(),
            verify: true,
        }
    }
}

/// Base and strong generating set with Schreier-vector transversals.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
    complete: bool,
    prefix_rank: Vec<u32>,
}

impl Bsgs {
    fn empty(degree: usize, base_prefix: &[usize]) -> Self {
        let mut prefix_rank = vec![u32::MAX; degree];
        for (k, &p) in base_prefix.iter().enumerate() {
            if p < degree && prefix_rank[p] == u32::MAX {
                prefix_rank[p] = k as u32;
            }
        }
        Bsgs {
            degree,
            strong: Vec::new(),
            strong_inv: Vec::new(),
            levels: Vec::new(),
            complete: true,
            prefix_rank,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Basic orbit at `level`, in breadth-first order.
    pub fn orbit(&self, level: usize) -> Vec<usize> {
        self.levels[level]
            .orbit
            .iter()
            .map(|&p| p as usize)
            .collect()
    }

    /// Whether the structure is a full BSGS. Incomplete structures arise
    /// only when `stop_above` cut the computation short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Product of the basic orbit lengths: the group order for a complete
    /// structure and a lower bound otherwise.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    fn recompute(&mut self, level: usize) {
        let d = self.degree;
        let lvl = &mut self.levels[level];
        lvl.tree.clear();
        lvl.tree.resize(d, NOT_IN_ORBIT);
        lvl.tree[lvl.point] = ROOT;
        lvl.orbit.clear();
        lvl.orbit.push(lvl.point as u16);
        let mut k = 0;
        while k < lvl.orbit.len() {
            let beta = lvl.orbit[k] as usize;
            for &g in &lvl.gens {
                let gamma = self.strong[g].apply(beta);
                if lvl.tree[gamma] == NOT_IN_ORBIT {
                    lvl.tree[gamma] = g as u32;
                    lvl.orbit.push(gamma as u16);
                }
            }
            k += 1;
        }
    }

    fn new_base_point(&self, h: &Permutation) -> usize {
        let base = self.base();
        let moved = (0..self.degree).filter(|&p| h.apply(p) != p && !base.contains(&p));
        moved
            .min_by_key(|&p| (self.prefix_rank[p], p))
            .expect("a nontrivial residue moves a point outside the base")
    }

    fn add_strong(&mut self, h: Permutation, level: usize) {
        if level == self.levels.len() {
            let point = self.new_base_point(&h);
            self.levels.push(Level {
                point,
                gens: Vec::new(),
                tree: Vec::new(),
                orbit: Vec::new(),
            });
        }
        let idx = self.strong.len();
        self.strong_inv.push(h.inverse());
        self.strong.push(h);
        for l in 0..=level {
            self.levels[l].gens.push(idx);
            self.recompute(l);
        }
    }

    /// Sift `h` in place starting at `start`; returns the level at which
    /// it left the basic orbits (`levels.len()` if it passed them all).
    fn sift_from(&self, h: &mut Permutation, start: usize) -> usize {
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let mut beta = h.apply(lvl.point);
            if lvl.tree[beta] == NOT_IN_ORBIT {
                return i;
            }
            while beta != lvl.point {
                let s = lvl.tree[beta] as usize;
                let inv = &self.strong_inv[s];
                h.mul_assign(inv);
                beta = inv.apply(beta);
            }
        }
        self.levels.len()
    }

    /// The residue of `g` after sifting and the level where sifting stopped.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        let level = self.sift_from(&mut h, 0);
        (h, level)
    }

    /// Exact membership (for complete structures).
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, level) = self.sift(g);
        level == self.levels.len() && h.is_identity()
    }

    /// Coset representative `u` with `point^u = beta` at `level`.
    pub fn transversal(&self, level: usize, beta: usize) -> Permutation {
        let lvl = &self.levels[level];
        assert_ne!(lvl.tree[beta], NOT_IN_ORBIT, "point not in basic orbit");
        let mut path = Vec::new();
        let mut b = beta;
        while b != lvl.point {
            let s = lvl.tree[b] as usize;
            path.push(s);
            b = self.strong_inv[s].apply(b);
        }
        let mut u = Permutation::identity(self.degree);
        for &s in path.iter().rev() {
            u.mul_assign(&self.strong[s]);
        }
        u
    }

    /// A uniformly distributed element (for complete structures).
    pub fn random_element(&self, rng: &mut RngState) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in (0..self.levels.len()).rev() {
            let orbit = &self.levels[level].orbit;
            let beta = orbit[rng.below(orbit.len())] as usize;
            g.mul_assign(&self.transversal(level, beta));
        }
        g
    }

    fn should_stop(&mut self, opts: &SchreierSimsOptions) -> bool {
        if opts.known_order.is_none() && opts.stop_above.is_none() {
            return false;
        }
        let order = self.order();
        if let Some(target) = &opts.known_order {
            if &order >= target {
                self.complete = true;
                return true;
            }
        }
        if let Some(limit) = &opts.stop_above {
            if &order > limit {
                self.complete = false;
                return true;
            }
        }
        false
    }

    /// Check every Schreier generator, adding residues until all sift to
    /// the identity.
    fn complete_deterministically(&mut self, opts: &SchreierSimsOptions) -> bool {
        let mut i = self.levels.len();
        while i > 0 {
            i -= 1;
            let mut added = None;
            let orbit = self.levels[i].orbit.clone();
            let gens = self.levels[i].gens.clone();
            'scan: for &beta in &orbit {
                let beta = beta as usize;
                let u = self.transversal(i, beta);
                for &s in &gens {
                    let image = self.strong[s].apply(beta);
                    if self.levels[i].tree[image] == s as u32 {
                        // u_β·s is itself the transversal element for β^s
                        continue;
                    }
                    let mut g = u.mul(&self.strong[s]);
                    let j = self.sift_from(&mut g, i);
                    if !g.is_identity() {
                        self.add_strong(g, j);
                        added = Some(j);
                        break 'scan;
                    }
                }
            }
            if let Some(j) = added {
                if self.should_stop(opts) {
                    return true;
                }
                i = j + 1;
            }
        }
        false
    }
}

/// Schreier–Sims: a random phase driven by product replacement, finished
/// either by reaching a known order or by an exhaustive Schreier-generator
/// check, so the result is exact unless `stop_above` fires or `verify`
/// is off.
pub fn schreier_sims(gens: &[Permutation], opts: &SchreierSimsOptions) -> Bsgs {
    let degree = gens.first().map_or(0, |g| g.degree());
    let mut bsgs = Bsgs::empty(degree, &opts.base_prefix);
    let mut nontrivial: Vec<Permutation> = Vec::new();
    for g in gens {
        if !g.is_identity() && !nontrivial.contains(g) {
            nontrivial.push(g.clone());
        }
    }
    if nontrivial.is_empty() {
        return bsgs;
    }
    for g in &nontrivial {
        let (h, j) = bsgs.sift(g);
        if !h.is_identity() {
            bsgs.add_strong(h, j);
        }
    }
    if bsgs.should_stop(opts) {
        return bsgs;
    }
    let mut pr = ProductReplacement::new(&nontrivial, RngState::new(opts.seed));
    let mut idle = 0;
    while idle < opts.max_idle {
        let g = pr.next_element();
        let (h, j) = bsgs.sift(&g);
        if h.is_identity() {
            idle += 1;
            continue;
        }
        idle = 0;
        bsgs.add_strong(h, j);
        if bsgs.should_stop(opts) {
            return bsgs;
        }
    }
    if opts.verify && bsgs.complete_deterministically(opts) {
        return bsgs;
    }
    bsgs.complete = true;
    bsgs
}
