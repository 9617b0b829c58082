//! Vertex stabilizers of cubic graphs by individualization and colour
//! refinement, counting orbits with the automorphisms found on the way.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

pub type Adjacency = [[u32; 3]];

#[derive(Debug, Clone)]
struct Coloring {
    colors: Vec<u32>,
    cells: usize,
    trace: u64,
}

impl Coloring {
    fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    /// Smallest colour whose cell has more than one vertex, and its members.
    fn target_cell(&self) -> (u32, Vec<usize>) {
        let mut sizes = vec![0u32; self.cells];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        let c = sizes.iter().position(|&s| s > 1).expect("not discrete") as u32;
        let members = (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect();
        (c, members)
    }
}

fn rank_keys(keys: &[u128], trace: &mut DefaultHasher) -> (Vec<u32>, usize) {
    let mut order: Vec<u32> = (0..keys.len() as u32).collect();
    order.sort_unstable_by_key(|&v| keys[v as usize]);
    let mut colors = vec![0u32; keys.len()];
    let mut cells = 0usize;
    let mut prev: Option<u128> = None;
    let mut run = 0u64;
    for &v in &order {
        let k = keys[v as usize];
        if prev != Some(k) {
            if let Some(p) = prev {
                (p, run).hash(trace);
            }
            cells += 1;
            prev = Some(k);
            run = 0;
        }
        run += 1;
        colors[v as usize] = cells as u32 - 1;
    }
    if let Some(p) = prev {
        (p, run).hash(trace);
    }
    (colors, cells)
}

/// Refine to the coarsest equitable colouring finer than `colors`.
fn refine(adj: &Adjacency, colors: Vec<u32>, cells: usize, trace: u64) -> Coloring {
    let mut colors = colors;
    let mut cells = cells;
    let mut hasher = DefaultHasher::new();
    trace.hash(&mut hasher);
    loop {
        let keys: Vec<u128> = (0..colors.len())
            .map(|v| {
                let mut nb = [
                    colors[adj[v][0] as usize],
                    colors[adj[v][1] as usize],
                    colors[adj[v][2] as usize],
                ];
                nb.sort_unstable();
                ((colors[v] as u128) << 96)
                    | ((nb[0] as u128) << 64)
                    | ((nb[1] as u128) << 32)
                    | nb[2] as u128
            })
            .collect();
        let (next, next_cells) = rank_keys(&keys, &mut hasher);
        let stable = next_cells == cells;
        colors = next;
        cells = next_cells;
        if stable {
            break;
        }
    }
    cells.hash(&mut hasher);
    Coloring {
        colors,
        cells,
        trace: hasher.finish(),
    }
}

fn individualize(adj: &Adjacency, base: &Coloring, v: usize) -> Coloring {
    let keys: Vec<u128> = (0..base.colors.len())
        .map(|u| ((base.colors[u] as u128) << 1) | u128::from(u != v))
        .collect();
    let mut hasher = DefaultHasher::new();
    base.trace.hash(&mut hasher);
    let (colors, cells) = rank_keys(&keys, &mut hasher);
    refine(adj, colors, cells, hasher.finish())
}

fn unit_coloring(adj: &Adjacency) -> Coloring {
    refine(adj, vec![0; adj.len()], 1, 0)
}

fn is_automorphism(adj: &Adjacency, map: &[u32]) -> bool {
    (0..adj.len()).all(|u| {
        let mut image = [
            map[adj[u][0] as usize],
            map[adj[u][1] as usize],
            map[adj[u][2] as usize],
        ];
        let img = map[u] as usize;
        let mut target = adj[img];
        image.sort_unstable();
        target.sort_unstable();
        image == target
    })
}

/// An automorphism carrying the colouring `left` to `right`, if any.
fn find_isomorphism(adj: &Adjacency, left: &Coloring, right: &Coloring) -> Option<Vec<u32>> {
    if left.trace != right.trace || left.cells != right.cells {
        return None;
    }
    if left.is_discrete() {
        let mut by_color = vec![0u32; adj.len()];
        for (v, &c) in right.colors.iter().enumerate() {
            by_color[c as usize] = v as u32;
        }
        let map: Vec<u32> = left.colors.iter().map(|&c| by_color[c as usize]).collect();
        return is_automorphism(adj, &map).then_some(map);
    }
    let (c, members) = left.target_cell();
    let w = members[0];
    let left_next = individualize(adj, left, w);
    for v in (0..adj.len()).filter(|&v| right.colors[v] == c) {
        let right_next = individualize(adj, right, v);
        if let Some(map) = find_isomorphism(adj, &left_next, &right_next) {
            return Some(map);
        }
    }
    None
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let p = self.0[x] as usize;
            self.0[x] = self.0[p];
            x = p;
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb) as u32;
        }
    }
}

fn stabilizer_of_coloring(adj: &Adjacency, coloring: &Coloring) -> u128 {
    if coloring.is_discrete() {
        return 1;
    }
    let (_, cell) = coloring.target_cell();
    let w = cell[0];
    let fixed = individualize(adj, coloring, w);
    let mut uf = UnionFind::new(adj.len());
    for &v in &cell[1..] {
        if uf.find(v) == uf.find(w) {
            continue;
        }
        let candidate = individualize(adj, coloring, v);
        if let Some(map) = find_isomorphism(adj, &fixed, &candidate) {
            for (u, &m) in map.iter().enumerate() {
                uf.union(u, m as usize);
            }
        }
    }
    let root = uf.find(w);
    let orbit = cell.iter().filter(|&&v| uf.find(v) == root).count() as u128;
    orbit * stabilizer_of_coloring(adj, &fixed)
}

/// Order of the stabilizer of `vertex` in the automorphism group of a
/// cubic graph given by its neighbour lists.
pub fn vertex_stabilizer_order(adj: &Adjacency, vertex: usize) -> u128 {
    let start = individualize(adj, &unit_coloring(adj), vertex);
    stabilizer_of_coloring(adj, &start)
}

/// Order of the full automorphism group.
pub fn automorphism_group_order(adj: &Adjacency) -> u128 {
    stabilizer_of_coloring(adj, &unit_coloring(adj))
}

/// Reference implementation: count automorphisms fixing `vertex` by
/// backtracking over all vertex assignments. Only for small graphs.
pub fn naive_vertex_stabilizer_order(adj: &Adjacency, vertex: usize) -> u128 {
    let n = adj.len();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    fn extend(adj: &Adjacency, k: usize, map: &mut [u32], used: &mut [bool]) -> u128 {
        let n = adj.len();
        if k == n {
            return u128::from(is_automorphism(adj, map));
        }
        if map[k] != u32::MAX {
            return extend(adj, k + 1, map, used);
        }
        let mut total = 0;
        for t in 0..n {
            if used[t] {
                continue;
            }
            // adjacency to already-mapped vertices must be preserved
            let consistent = (0..n).filter(|&u| map[u] != u32::MAX).all(|u| {
                let a = adj[k].contains(&(u as u32));
                let b = adj[t].contains(&map[u]);
                a == b
            });
            if !consistent {
                continue;
            }
            map[k] = t as u32;
            used[t] = true;
            total += extend(adj, k + 1, map, used);
            map[k] = u32::MAX;
            used[t] = false;
        }
        total
    }
    map[vertex] = vertex as u32;
    used[vertex] = true;
    extend(adj, 0, &mut map, &mut used)
}
